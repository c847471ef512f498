// Copyright 2026 The scriptid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCRIPTID_UTF8_H_
#define SCRIPTID_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "scriptid/errors.h"

namespace scriptid {

enum class BadUtf8Policy {
  kReplace,  // each ill-formed byte becomes U+FFFD
  kFail,     // throw DecodeError
};

class DecodeError : public Error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& message)
      : Error(message + " at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Decodes UTF-8 into scalar values. Overlong forms, surrogates and values
// past U+10FFFF are ill-formed. Under kReplace, a truncated or invalid
// sequence yields one U+FFFD for its lead byte and decoding resumes at the
// next byte.
std::u32string decode_utf8(std::string_view bytes,
                           BadUtf8Policy policy = BadUtf8Policy::kReplace);

// Appends the decoded scalars to `out` instead of returning a new string.
void decode_utf8_into(std::string_view bytes, std::u32string& out,
                      BadUtf8Policy policy = BadUtf8Policy::kReplace);

std::string encode_utf8(std::u32string_view text);

// True when `bytes` is well-formed UTF-8.
bool valid_utf8(std::string_view bytes);

}  // namespace scriptid

#endif  // SCRIPTID_UTF8_H_

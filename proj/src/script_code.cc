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

#include "scriptid/script_code.h"

#include <ostream>
#include <stdexcept>

namespace scriptid {

std::optional<ScriptCode> ScriptCode::parse(std::string_view text) {
  if (!well_formed(text)) return std::nullopt;
  return ScriptCode(text[0], text[1], text[2], text[3]);
}

ScriptCode ScriptCode::from_string(std::string_view text) {
  if (auto code = parse(text)) return *code;
  throw std::invalid_argument("not an ISO 15924 code: \"" + std::string(text) +
                              "\"");
}

std::ostream& operator<<(std::ostream& os, const ScriptCode& code) {
  return os << code.view();
}

}  // namespace scriptid

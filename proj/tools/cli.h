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

#ifndef SCRIPTID_TOOLS_CLI_H_
#define SCRIPTID_TOOLS_CLI_H_

#include <iosfwd>

namespace scriptid::cli {

inline constexpr const char* kVersion = "1.0.0";

// Runs one command line. Data goes to `out`, diagnostics to `err`. Returns
// the process exit status: 0 on success, 1 on runtime errors (I/O, parse,
// schema), 2 on usage errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace scriptid::cli

#endif  // SCRIPTID_TOOLS_CLI_H_

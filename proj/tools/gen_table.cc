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

// Build-time generator: compiles Scripts.txt + PropertyValueAliases.txt into
// the serialized table and wraps it as a C++ raw string literal.
//
//   scriptid_gen_table Scripts.txt PropertyValueAliases.txt out.inc

#include <fstream>
#include <iostream>
#include <sstream>

#include "scriptid/errors.h"
#include "scriptid/script_table.h"
#include "scriptid/ucd.h"

namespace {

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: " << argv[0]
              << " Scripts.txt PropertyValueAliases.txt out.inc\n";
    return 2;
  }
  try {
    std::string scripts = slurp(argv[1]);
    std::string aliases = slurp(argv[2]);
    auto table = scriptid::ScriptRangeTable::build(
        scriptid::parse_scripts_file(scripts, argv[1]),
        scriptid::parse_aliases_file(aliases, argv[2]), {},
        scriptid::ucd_version_from_header(scripts).value_or(""));
    std::ofstream out(argv[3], std::ios::binary);
    out << "R\"SCRIPTIDTABLE(" << table.serialize() << ")SCRIPTIDTABLE\"\n";
    if (!out) throw std::runtime_error(std::string("cannot write ") + argv[3]);
  } catch (const std::exception& e) {
    std::cerr << "scriptid_gen_table: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

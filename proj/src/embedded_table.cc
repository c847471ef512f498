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

#include "scriptid/script_table.h"

namespace scriptid {
namespace {

// Generated at build time from data/ucd by scriptid_gen_table.
constexpr std::string_view kEmbeddedTable =
#include "embedded_table_data.inc"
    ;

}  // namespace

std::string_view embedded_table_text() { return kEmbeddedTable; }

const ScriptRangeTable& embedded_table() {
  static const ScriptRangeTable table =
      ScriptRangeTable::deserialize(kEmbeddedTable, "<embedded table>");
  return table;
}

}  // namespace scriptid

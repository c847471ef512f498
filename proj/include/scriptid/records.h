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

#ifndef SCRIPTID_RECORDS_H_
#define SCRIPTID_RECORDS_H_

// JSON encodings of the result types, used for the CLI's record-per-line
// output and read back by the tests. Ratios are rounded to 4 decimal places
// on output; counts are exact, so readers rebuild ratios from counts.

#include <string>
#include <string_view>

#include <json.hpp>

#include "scriptid/audit.h"
#include "scriptid/identifier.h"
#include "scriptid/metadata.h"
#include "scriptid/vocab.h"

namespace scriptid {

using Json = nlohmann::json;

// Rounds to 4 decimal places, half away from zero.
double round4(double value);

Json to_record(const IdentificationResult& result);
IdentificationResult identification_from_record(const Json& record);

Json to_record(const AgreementStats& stats);
AgreementStats agreement_from_record(const Json& record);

Json to_record(const AuditReport& report);
AuditReport audit_from_record(const Json& record);

Json to_record(const VocabScriptProfile& profile);
VocabScriptProfile vocab_profile_from_record(const Json& record);

Json to_record(const TokenizationStats& stats);
TokenizationStats tokenization_from_record(const Json& record);

// Human-readable tables for --pretty.
std::string format_audit_table(const AuditReport& report);
std::string format_vocab_table(const VocabScriptProfile& profile);
std::string format_tokenization_table(
    std::span<const TokenizationStats> stats);

}  // namespace scriptid

#endif  // SCRIPTID_RECORDS_H_

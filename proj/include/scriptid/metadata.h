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

#ifndef SCRIPTID_METADATA_H_
#define SCRIPTID_METADATA_H_

// Language -> writing system metadata: source tables, pairwise agreement,
// and compilation into a resource with CORE and AUXILIARY script sets.

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "scriptid/script_code.h"

namespace scriptid {

// A three-letter ISO 639 code. Validation is syntactic only: exactly three
// lowercase ASCII letters. Collective codes such as "ber" are accepted.
class LanguageCode {
 public:
  // "und", the ISO 639 code for an undetermined language.
  constexpr LanguageCode() : chars_{'u', 'n', 'd'} {}

  static std::optional<LanguageCode> parse(std::string_view text);
  // Throws std::invalid_argument.
  static LanguageCode from_string(std::string_view text);

  std::string_view view() const { return {chars_.data(), chars_.size()}; }
  std::string str() const { return std::string(view()); }

  friend auto operator<=>(const LanguageCode&, const LanguageCode&) = default;
  friend bool operator==(const LanguageCode&, const LanguageCode&) = default;

 private:
  std::array<char, 3> chars_;
};

std::ostream& operator<<(std::ostream& os, const LanguageCode& code);

using ScriptSet = std::set<ScriptCode>;
using LanguageScripts = std::map<LanguageCode, ScriptSet>;

enum class SourceId {
  kLangTag,
  kScriptSource,
  kLrec2800,
  kWikipedia,
  kSil,  // LangTag and ScriptSource after consolidation
};

std::string_view to_string(SourceId id);
std::optional<SourceId> parse_source_id(std::string_view text);

struct SourceTable {
  SourceId source = SourceId::kLangTag;
  LanguageScripts entries;  // every listed language has a non-empty set

  const ScriptSet* find(const LanguageCode& lang) const {
    auto it = entries.find(lang);
    return it == entries.end() ? nullptr : &it->second;
  }
};

// |a ∩ b| / |a ∪ b|. Throws std::invalid_argument when both sets are empty.
double jaccard(const ScriptSet& a, const ScriptSet& b);

struct AgreementStats {
  std::size_t common_languages = 0;  // languages listed by both tables
  std::size_t complete = 0;          // J = 1
  std::size_t partial = 0;           // 0 < J < 1
  std::size_t none = 0;              // J = 0

  friend bool operator==(const AgreementStats&,
                         const AgreementStats&) = default;
};

AgreementStats agreement(const SourceTable& a, const SourceTable& b);

struct SilConsolidation {
  SourceTable sil{SourceId::kSil, {}};
  // Scripts on which LangTag and ScriptSource disagree and that neither
  // Wikipedia nor LREC_2800 attests.
  LanguageScripts sil2_aux;
};

// Merges the two SIL tables. Where both list a language, the result keeps
// their intersection plus every disputed script that Wikipedia or LREC_2800
// also lists; the remaining disputed scripts go to sil2_aux. A language
// whose whole listing is disputed and unattested gets no SIL entry. A
// language listed by only one of the two passes through unchanged.
SilConsolidation consolidate_sil(const SourceTable& langtag,
                                 const SourceTable& scriptsource,
                                 const SourceTable& wikipedia,
                                 const SourceTable& lrec);

enum class AuxBucket { kWiki, kLrec2800, kSil, kSil2 };

std::string_view to_string(AuxBucket bucket);
std::optional<AuxBucket> parse_aux_bucket(std::string_view text);

struct WritingSystemRecord {
  ScriptSet core;
  std::map<AuxBucket, ScriptSet> aux;  // no empty buckets
  // Exactly one of SIL, LREC_2800 and Wikipedia lists the language, so the
  // core set rests on that source alone.
  bool single_source = false;
  // Sources listing each script (core or aux). SIL2-aux scripts list
  // whichever of LangTag/ScriptSource gave them.
  std::map<ScriptCode, std::set<SourceId>> provenance;

  ScriptSet all_aux() const;

  friend bool operator==(const WritingSystemRecord&,
                         const WritingSystemRecord&) = default;
};

struct WritingSystemResource {
  std::map<LanguageCode, WritingSystemRecord> records;

  const WritingSystemRecord* find(const LanguageCode& lang) const {
    auto it = records.find(lang);
    return it == records.end() ? nullptr : &it->second;
  }

  friend bool operator==(const WritingSystemResource&,
                         const WritingSystemResource&) = default;
};

// Per language, a script is CORE when at least two of SIL, LREC_2800 and
// Wikipedia list it, or when only one of the three lists the language at
// all. Otherwise a script listed by one source lands in that source's aux
// bucket. sil2_aux entries become SIL2-aux and never reach CORE.
//
// `langtag` and `scriptsource` are optional; when given, SIL2-aux provenance
// names whichever of them listed the script, otherwise it is tagged SIL.
WritingSystemResource compile_resource(
    const SourceTable& sil, const LanguageScripts& sil2_aux,
    const SourceTable& lrec, const SourceTable& wikipedia,
    const SourceTable* langtag = nullptr,
    const SourceTable* scriptsource = nullptr);

// Core scripts of `lang`, plus every aux bucket when `include_aux`. Unknown
// languages give an empty set.
ScriptSet admissible_scripts(const WritingSystemResource& resource,
                             const LanguageCode& lang, bool include_aux);

// Source table file: `source_id<TAB>lang<TAB>Code,Code,...` per line. Blank
// lines and lines starting with '#' are skipped. All data lines must carry
// the same source_id; repeated languages are unioned. Throws ParseError.
SourceTable parse_source_table(std::string_view text,
                               std::string source_name = {});
std::string format_source_table(const SourceTable& table);

// Resource file: JSON, keys in sorted order. See docs/formats.md.
std::string write_resource(const WritingSystemResource& resource);
WritingSystemResource read_resource(std::string_view text,
                                    std::string source_name = {});

}  // namespace scriptid

#endif  // SCRIPTID_METADATA_H_

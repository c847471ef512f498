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

#include "scriptid/metadata.h"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "scriptid/errors.h"
#include "text_util.h"

namespace scriptid {
namespace {

constexpr std::string_view kResourceFormat = "scriptid-resource";
constexpr int kResourceVersion = 1;

ScriptSet set_union(const ScriptSet& a, const ScriptSet& b) {
  ScriptSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

ScriptSet set_intersection(const ScriptSet& a, const ScriptSet& b) {
  ScriptSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

bool contains(const ScriptSet* set, ScriptCode code) {
  return set != nullptr && set->contains(code);
}

AuxBucket bucket_for(SourceId id) {
  switch (id) {
    case SourceId::kWikipedia:
      return AuxBucket::kWiki;
    case SourceId::kLrec2800:
      return AuxBucket::kLrec2800;
    default:
      return AuxBucket::kSil;
  }
}

}  // namespace

std::optional<LanguageCode> LanguageCode::parse(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  LanguageCode code;
  for (std::size_t i = 0; i < 3; ++i) {
    if (text[i] < 'a' || text[i] > 'z') return std::nullopt;
    code.chars_[i] = text[i];
  }
  return code;
}

LanguageCode LanguageCode::from_string(std::string_view text) {
  if (auto code = parse(text)) return *code;
  throw std::invalid_argument("not a three-letter ISO 639 code: \"" +
                              std::string(text) + "\"");
}

std::ostream& operator<<(std::ostream& os, const LanguageCode& code) {
  return os << code.view();
}

std::string_view to_string(SourceId id) {
  switch (id) {
    case SourceId::kLangTag:
      return "LangTag";
    case SourceId::kScriptSource:
      return "ScriptSource";
    case SourceId::kLrec2800:
      return "LREC_2800";
    case SourceId::kWikipedia:
      return "Wikipedia";
    case SourceId::kSil:
      return "SIL";
  }
  return "?";
}

std::optional<SourceId> parse_source_id(std::string_view text) {
  for (SourceId id : {SourceId::kLangTag, SourceId::kScriptSource,
                      SourceId::kLrec2800, SourceId::kWikipedia,
                      SourceId::kSil}) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::string_view to_string(AuxBucket bucket) {
  switch (bucket) {
    case AuxBucket::kWiki:
      return "Wiki-aux";
    case AuxBucket::kLrec2800:
      return "LREC2800-aux";
    case AuxBucket::kSil:
      return "SIL-aux";
    case AuxBucket::kSil2:
      return "SIL2-aux";
  }
  return "?";
}

std::optional<AuxBucket> parse_aux_bucket(std::string_view text) {
  for (AuxBucket b : {AuxBucket::kWiki, AuxBucket::kLrec2800, AuxBucket::kSil,
                      AuxBucket::kSil2}) {
    if (to_string(b) == text) return b;
  }
  return std::nullopt;
}

double jaccard(const ScriptSet& a, const ScriptSet& b) {
  if (a.empty() && b.empty()) {
    throw std::invalid_argument("jaccard: both script sets are empty");
  }
  const std::size_t inter = set_intersection(a, b).size();
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

AgreementStats agreement(const SourceTable& a, const SourceTable& b) {
  AgreementStats stats;
  for (const auto& [lang, scripts_a] : a.entries) {
    const ScriptSet* scripts_b = b.find(lang);
    if (scripts_b == nullptr) continue;
    ++stats.common_languages;
    // Classify on the integer counts so J = 1 and J = 0 are exact.
    const std::size_t inter = set_intersection(scripts_a, *scripts_b).size();
    const std::size_t uni = scripts_a.size() + scripts_b->size() - inter;
    if (inter == uni) {
      ++stats.complete;
    } else if (inter == 0) {
      ++stats.none;
    } else {
      ++stats.partial;
    }
  }
  return stats;
}

SilConsolidation consolidate_sil(const SourceTable& langtag,
                                 const SourceTable& scriptsource,
                                 const SourceTable& wikipedia,
                                 const SourceTable& lrec) {
  SilConsolidation out;
  std::set<LanguageCode> langs;
  for (const auto& [lang, _] : langtag.entries) langs.insert(lang);
  for (const auto& [lang, _] : scriptsource.entries) langs.insert(lang);

  for (const auto& lang : langs) {
    const ScriptSet* lt = langtag.find(lang);
    const ScriptSet* ss = scriptsource.find(lang);
    if (lt == nullptr || ss == nullptr) {
      out.sil.entries.emplace(lang, lt != nullptr ? *lt : *ss);
      continue;
    }
    ScriptSet merged = set_intersection(*lt, *ss);
    ScriptSet unresolved;
    for (ScriptCode code : set_union(*lt, *ss)) {
      if (merged.contains(code)) continue;
      if (contains(wikipedia.find(lang), code) ||
          contains(lrec.find(lang), code)) {
        merged.insert(code);
      } else {
        unresolved.insert(code);
      }
    }
    if (!merged.empty()) out.sil.entries.emplace(lang, std::move(merged));
    if (!unresolved.empty()) {
      out.sil2_aux.emplace(lang, std::move(unresolved));
    }
  }
  return out;
}

ScriptSet WritingSystemRecord::all_aux() const {
  ScriptSet out;
  for (const auto& [_, scripts] : aux) out.insert(scripts.begin(), scripts.end());
  return out;
}

WritingSystemResource compile_resource(const SourceTable& sil,
                                       const LanguageScripts& sil2_aux,
                                       const SourceTable& lrec,
                                       const SourceTable& wikipedia,
                                       const SourceTable* langtag,
                                       const SourceTable* scriptsource) {
  std::set<LanguageCode> langs;
  for (const auto* table : {&sil, &lrec, &wikipedia}) {
    for (const auto& [lang, _] : table->entries) langs.insert(lang);
  }
  for (const auto& [lang, _] : sil2_aux) langs.insert(lang);

  WritingSystemResource resource;
  for (const auto& lang : langs) {
    WritingSystemRecord record;
    std::vector<std::pair<SourceId, const ScriptSet*>> informing;
    for (const auto* table : {&sil, &lrec, &wikipedia}) {
      if (const ScriptSet* scripts = table->find(lang)) {
        informing.emplace_back(table->source, scripts);
      }
    }
    for (const auto& [source, scripts] : informing) {
      for (ScriptCode code : *scripts) record.provenance[code].insert(source);
    }

    if (informing.size() == 1) {
      record.single_source = true;
      record.core = *informing.front().second;
    } else {
      for (const auto& [code, sources] : record.provenance) {
        if (sources.size() >= 2) {
          record.core.insert(code);
        } else {
          record.aux[bucket_for(*sources.begin())].insert(code);
        }
      }
    }

    if (auto it = sil2_aux.find(lang); it != sil2_aux.end()) {
      for (ScriptCode code : it->second) {
        if (record.core.contains(code)) continue;
        record.aux[AuxBucket::kSil2].insert(code);
        auto& sources = record.provenance[code];
        if (contains(langtag ? langtag->find(lang) : nullptr, code)) {
          sources.insert(SourceId::kLangTag);
        }
        if (contains(scriptsource ? scriptsource->find(lang) : nullptr,
                     code)) {
          sources.insert(SourceId::kScriptSource);
        }
        if (sources.empty()) sources.insert(SourceId::kSil);
      }
    }
    resource.records.emplace(lang, std::move(record));
  }
  return resource;
}

ScriptSet admissible_scripts(const WritingSystemResource& resource,
                             const LanguageCode& lang, bool include_aux) {
  const WritingSystemRecord* record = resource.find(lang);
  if (record == nullptr) return {};
  ScriptSet out = record->core;
  if (include_aux) {
    for (const auto& [_, scripts] : record->aux) {
      out.insert(scripts.begin(), scripts.end());
    }
  }
  return out;
}

SourceTable parse_source_table(std::string_view text,
                               std::string source_name) {
  SourceTable table;
  std::optional<SourceId> source;
  std::size_t line_no = 0;
  for_each_line(text, [&](std::string_view line) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') return;
    auto fields = split_raw(line, '\t');
    if (fields.size() != 3) {
      throw ParseError(source_name, line_no,
                       "expected 3 tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    auto id = parse_source_id(trim(fields[0]));
    if (!id) {
      throw ParseError(source_name, line_no,
                       "unknown source id \"" + std::string(fields[0]) + "\"");
    }
    if (source && *source != *id) {
      throw ParseError(source_name, line_no,
                       "mixed source ids in one file: " +
                           std::string(to_string(*source)) + " and " +
                           std::string(to_string(*id)));
    }
    source = id;
    auto lang = LanguageCode::parse(trim(fields[1]));
    if (!lang) {
      throw ParseError(source_name, line_no,
                       "not a three-letter ISO 639 code: \"" +
                           std::string(fields[1]) + "\"");
    }
    ScriptSet scripts;
    for (auto field : split_fields(fields[2], ',')) {
      if (field.empty()) continue;
      auto code = ScriptCode::parse(field);
      if (!code) {
        throw ParseError(source_name, line_no,
                         "not an ISO 15924 code: \"" + std::string(field) +
                             "\"");
      }
      scripts.insert(*code);
    }
    if (scripts.empty()) {
      throw ParseError(source_name, line_no,
                       "no scripts listed for " + lang->str());
    }
    table.entries[*lang].insert(scripts.begin(), scripts.end());
  });
  if (!source) throw ParseError(source_name, 0, "no data lines");
  table.source = *source;
  return table;
}

std::string format_source_table(const SourceTable& table) {
  std::string out;
  for (const auto& [lang, scripts] : table.entries) {
    out += to_string(table.source);
    out += '\t';
    out += lang.view();
    out += '\t';
    bool first = true;
    for (ScriptCode code : scripts) {
      if (!first) out += ',';
      out += code.view();
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string write_resource(const WritingSystemResource& resource) {
  using nlohmann::json;
  auto codes = [](const ScriptSet& set) {
    json arr = json::array();
    for (ScriptCode code : set) arr.push_back(code.str());
    return arr;
  };
  json languages = json::object();
  for (const auto& [lang, record] : resource.records) {
    json aux = json::object();
    for (const auto& [bucket, scripts] : record.aux) {
      if (!scripts.empty()) aux[std::string(to_string(bucket))] = codes(scripts);
    }
    json provenance = json::object();
    for (const auto& [code, sources] : record.provenance) {
      json arr = json::array();
      for (SourceId id : sources) arr.push_back(std::string(to_string(id)));
      provenance[code.str()] = std::move(arr);
    }
    languages[lang.str()] = {{"core", codes(record.core)},
                             {"aux", std::move(aux)},
                             {"single_source", record.single_source},
                             {"provenance", std::move(provenance)}};
  }
  json doc = {{"format", kResourceFormat},
              {"version", kResourceVersion},
              {"languages", std::move(languages)}};
  return doc.dump(2) + "\n";
}

WritingSystemResource read_resource(std::string_view text,
                                    std::string source_name) {
  using nlohmann::json;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(source_name, 0, msg);
  };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kResourceFormat) {
    fail("not a scriptid resource file");
  }
  if (doc.value("version", 0) != kResourceVersion) {
    fail("unsupported resource version");
  }
  auto read_codes = [&](const json& arr, const std::string& where) {
    ScriptSet set;
    if (!arr.is_array()) fail(where + ": expected an array of script codes");
    for (const auto& item : arr) {
      auto code = item.is_string() ? ScriptCode::parse(item.get<std::string>())
                                   : std::nullopt;
      if (!code) fail(where + ": bad script code " + item.dump());
      set.insert(*code);
    }
    return set;
  };

  WritingSystemResource resource;
  const json& languages = doc.contains("languages") ? doc["languages"] : json();
  if (!languages.is_object()) fail("missing \"languages\" object");
  for (const auto& [key, entry] : languages.items()) {
    auto lang = LanguageCode::parse(key);
    if (!lang) fail("bad language code \"" + key + "\"");
    if (!entry.is_object()) fail(key + ": expected an object");
    WritingSystemRecord record;
    record.core = read_codes(entry.value("core", json::array()), key + ".core");
    const json aux = entry.value("aux", json::object());
    if (!aux.is_object()) fail(key + ".aux: expected an object");
    for (const auto& [bucket_name, arr] : aux.items()) {
      auto bucket = parse_aux_bucket(bucket_name);
      if (!bucket) fail(key + ": unknown aux bucket \"" + bucket_name + "\"");
      auto scripts = read_codes(arr, key + "." + bucket_name);
      if (!scripts.empty()) record.aux[*bucket] = std::move(scripts);
    }
    record.single_source = entry.value("single_source", false);
    const json provenance = entry.value("provenance", json::object());
    if (!provenance.is_object()) fail(key + ".provenance: expected an object");
    for (const auto& [code_name, arr] : provenance.items()) {
      auto code = ScriptCode::parse(code_name);
      if (!code || !arr.is_array()) fail(key + ": bad provenance entry");
      auto& sources = record.provenance[*code];
      for (const auto& item : arr) {
        auto id = item.is_string() ? parse_source_id(item.get<std::string>())
                                   : std::nullopt;
        if (!id) fail(key + ": unknown source " + item.dump());
        sources.insert(*id);
      }
    }
    for (ScriptCode code : record.core) {
      if (record.all_aux().contains(code)) {
        fail(key + ": " + code.str() + " is both core and auxiliary");
      }
    }
    resource.records.emplace(*lang, std::move(record));
  }
  return resource;
}

}  // namespace scriptid

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

#include "scriptid/records.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "scriptid/errors.h"

namespace scriptid {
namespace {

constexpr std::string_view kAuditFormat = "scriptid-audit";
constexpr int kAuditVersion = 1;

template <typename Fn>
auto guarded(std::string_view what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError("", 0, std::string(what) + " record: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError("", 0, std::string(what) + " record: " + e.what());
  }
}

CorpusKey key_from_string(const std::string& s) {
  LabelMap identity;
  auto key = parse_label(s, identity);
  if (!key) throw std::invalid_argument("bad corpus key \"" + s + "\"");
  return *key;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

double round4(double value) { return std::round(value * 1e4) / 1e4; }

Json to_record(const IdentificationResult& result) {
  Json dist = Json::object();
  for (const auto& [code, n] : result.distribution.entries()) {
    dist[code.str()] = n;
  }
  return Json{
      {"main_script", result.main_script ? Json(result.main_script->str())
                                         : Json(nullptr)},
      {"main_percentage", round4(result.main_fraction())},
      {"total", result.distribution.total()},
      {"distribution", std::move(dist)},
  };
}

IdentificationResult identification_from_record(const Json& record) {
  return guarded("identification", [&] {
    IdentificationResult result;
    for (const auto& [code, n] : record.at("distribution").items()) {
      result.distribution.add(ScriptCode::from_string(code),
                              n.get<std::uint64_t>());
    }
    if (result.distribution.total() != record.at("total").get<std::uint64_t>()) {
      throw std::invalid_argument("total does not match distribution");
    }
    const Json& main = record.at("main_script");
    if (!main.is_null()) {
      result.main_script = ScriptCode::from_string(main.get<std::string>());
      result.main_count = result.distribution.count(*result.main_script);
    }
    return result;
  });
}

Json to_record(const AgreementStats& stats) {
  return Json{{"common_languages", stats.common_languages},
              {"complete", stats.complete},
              {"partial", stats.partial},
              {"none", stats.none}};
}

AgreementStats agreement_from_record(const Json& record) {
  return guarded("agreement", [&] {
    AgreementStats stats;
    stats.common_languages = record.at("common_languages").get<std::size_t>();
    stats.complete = record.at("complete").get<std::size_t>();
    stats.partial = record.at("partial").get<std::size_t>();
    stats.none = record.at("none").get<std::size_t>();
    return stats;
  });
}

Json to_record(const AuditReport& report) {
  Json languages = Json::array();
  for (const auto& lang : report.languages) {
    Json tally = Json::object();
    for (const auto& [code, n] : lang.script_tally) tally[code.str()] = n;
    Json filtered = Json::array();
    for (const auto& f : lang.length_filtered) {
      filtered.push_back({{"fraction", f.fraction},
                          {"kept", f.kept},
                          {"matches", f.matches},
                          {"acc", round4(f.accuracy())}});
    }
    languages.push_back({{"key", lang.key.str()},
                         {"available", lang.available},
                         {"sampled", lang.sampled},
                         {"matches", lang.matches},
                         {"unmatchable", lang.unmatchable},
                         {"acc", round4(lang.accuracy())},
                         {"length_filtered", std::move(filtered)},
                         {"script_tally", std::move(tally)}});
  }
  Json excluded = Json::object();
  for (const auto& [key, available] : report.excluded) {
    excluded[key.str()] = {{"available", available},
                           {"reason", "fewer sentences than sample size"}};
  }
  const auto& o = report.options;
  return Json{{"format", kAuditFormat},
              {"version", kAuditVersion},
              {"options",
               {{"sample_size", o.sample_size},
                {"seed", o.seed},
                {"include_aux", o.include_aux},
                {"length_fractions", o.length_fractions}}},
              {"languages", std::move(languages)},
              {"excluded", std::move(excluded)},
              {"skipped_rows", report.skipped_rows}};
}

AuditReport audit_from_record(const Json& record) {
  return guarded("audit", [&] {
    if (record.at("format") != kAuditFormat ||
        record.at("version") != kAuditVersion) {
      throw std::invalid_argument("not a scriptid audit report");
    }
    AuditReport report;
    const Json& o = record.at("options");
    report.options.sample_size = o.at("sample_size").get<std::size_t>();
    report.options.seed = o.at("seed").get<std::uint64_t>();
    report.options.include_aux = o.at("include_aux").get<bool>();
    report.options.length_fractions =
        o.at("length_fractions").get<std::vector<double>>();
    for (const Json& j : record.at("languages")) {
      LanguageAudit lang;
      lang.key = key_from_string(j.at("key").get<std::string>());
      lang.available = j.at("available").get<std::size_t>();
      lang.sampled = j.at("sampled").get<std::size_t>();
      lang.matches = j.at("matches").get<std::size_t>();
      lang.unmatchable = j.at("unmatchable").get<std::size_t>();
      for (const auto& [code, n] : j.at("script_tally").items()) {
        lang.script_tally[ScriptCode::from_string(code)] =
            n.get<std::size_t>();
      }
      for (const Json& f : j.at("length_filtered")) {
        lang.length_filtered.push_back({f.at("fraction").get<double>(),
                                        f.at("kept").get<std::size_t>(),
                                        f.at("matches").get<std::size_t>()});
      }
      report.languages.push_back(std::move(lang));
    }
    for (const auto& [key, j] : record.at("excluded").items()) {
      report.excluded[key_from_string(key)] =
          j.at("available").get<std::size_t>();
    }
    report.skipped_rows = record.at("skipped_rows").get<std::size_t>();
    return report;
  });
}

Json to_record(const VocabScriptProfile& profile) {
  Json scripts = Json::object();
  for (const auto& [code, n] : profile.counts) {
    scripts[code.str()] = {{"tokens", n},
                           {"percentage", round4(profile.fraction(code))}};
  }
  return Json{{"vocab_size", profile.vocab_size},
              {"scripts_present", profile.scripts_present()},
              {"scripts", std::move(scripts)}};
}

VocabScriptProfile vocab_profile_from_record(const Json& record) {
  return guarded("vocab profile", [&] {
    VocabScriptProfile profile;
    profile.vocab_size = record.at("vocab_size").get<std::size_t>();
    for (const auto& [code, j] : record.at("scripts").items()) {
      profile.counts[ScriptCode::from_string(code)] =
          j.at("tokens").get<std::size_t>();
    }
    return profile;
  });
}

Json to_record(const TokenizationStats& stats) {
  return Json{{"doc_id", stats.doc_id},
              {"token_count", stats.token_count},
              {"unk_count", stats.unk_count},
              {"unk_fraction", round4(stats.unk_fraction())},
              {"excluded", stats.excluded()}};
}

TokenizationStats tokenization_from_record(const Json& record) {
  return guarded("tokenization", [&] {
    TokenizationStats stats;
    stats.doc_id = record.at("doc_id").get<std::string>();
    stats.token_count = record.at("token_count").get<std::size_t>();
    stats.unk_count = record.at("unk_count").get<std::size_t>();
    return stats;
  });
}

std::string format_audit_table(const AuditReport& report) {
  std::ostringstream out;
  out << "Corpus key\tSampled\tScripts\tACC";
  std::vector<double> fractions = report.options.length_fractions;
  for (double f : fractions) {
    out << "\tACC" << static_cast<int>(std::lround(f * 100));
  }
  out << "\n";
  for (const auto& lang : report.languages) {
    std::vector<std::pair<ScriptCode, std::size_t>> tally(
        lang.script_tally.begin(), lang.script_tally.end());
    std::stable_sort(tally.begin(), tally.end(), [](auto& a, auto& b) {
      return a.second > b.second;
    });
    out << lang.key.str() << "\t" << lang.sampled << "\t";
    for (std::size_t i = 0; i < tally.size(); ++i) {
      if (i > 0) out << ", ";
      out << tally[i].first << ":" << tally[i].second;
    }
    out << "\t" << fixed4(lang.accuracy());
    for (const auto& f : lang.length_filtered) out << "\t" << fixed4(f.accuracy());
    out << "\n";
  }
  for (const auto& [key, available] : report.excluded) {
    out << "# excluded " << key.str() << ": " << available
        << " sentences available\n";
  }
  if (report.skipped_rows > 0) {
    out << "# skipped rows with unparseable labels: " << report.skipped_rows
        << "\n";
  }
  return out.str();
}

std::string format_vocab_table(const VocabScriptProfile& profile) {
  std::vector<std::pair<ScriptCode, std::size_t>> rows(profile.counts.begin(),
                                                       profile.counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](auto& a, auto& b) { return a.second > b.second; });
  std::ostringstream out;
  out << "Script\tTokens\tPercentage\n";
  for (const auto& [code, n] : rows) {
    out << code << "\t" << n << "\t" << fixed4(profile.fraction(code) * 100)
        << "\n";
  }
  out << "# vocabulary size " << profile.vocab_size << ", scripts present "
      << profile.scripts_present() << "\n";
  return out.str();
}

std::string format_tokenization_table(
    std::span<const TokenizationStats> stats) {
  std::ostringstream out;
  out << "Document\tTokens\tUNK\tUNK%\tExcluded\n";
  for (const auto& s : stats) {
    out << s.doc_id << "\t" << s.token_count << "\t" << s.unk_count << "\t"
        << fixed4(s.unk_fraction() * 100) << "\t"
        << (s.excluded() ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace scriptid

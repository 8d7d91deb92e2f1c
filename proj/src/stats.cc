// Copyright 2026 The biored-kit Authors.
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

#include "biored/stats.h"

#include <ostream>

#include "biored/parallel.h"
#include "biored/text.h"
#include "json.hpp"

namespace biored {
namespace {

struct StatsRow {
  std::string split;
  std::string metric;
  std::string entity_or_pair;
  std::string label;
  int64_t value;
};

std::vector<StatsRow> Rows(const StatsTable& table) {
  std::vector<StatsRow> rows;
  for (const auto& s : table.splits) {
    rows.push_back({s.name, "abstracts", "", "", s.abstracts});
    for (CoreEntityType t : kCoreEntityTypes) {
      const std::string type(CoreEntityTypeName(t));
      rows.push_back({s.name, "mentions", type, "", s.Mentions(t)});
      rows.push_back({s.name, "unique_mentions", type, "", s.Unique(t)});
    }
    rows.push_back({s.name, "relations", "", "", s.relations});
    for (const auto& [key, count] : s.relation_types) {
      rows.push_back({s.name, "relation_type",
                      std::string(PairTypeName(key.first)), key.second,
                      count});
    }
  }
  return rows;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int64_t SplitStats::RelationCell(PairType pair, const std::string& label) const {
  const auto it = relation_types.find({pair, label});
  return it == relation_types.end() ? 0 : it->second;
}

void SplitStats::Merge(const SplitStats& other) {
  abstracts += other.abstracts;
  for (size_t i = 0; i < mentions.size(); ++i) {
    mentions[i] += other.mentions[i];
    surfaces[i].insert(other.surfaces[i].begin(), other.surfaces[i].end());
  }
  relations += other.relations;
  for (const auto& [key, count] : other.relation_types) {
    relation_types[key] += count;
  }
}

const SplitStats* StatsTable::Find(const std::string& name) const {
  for (const auto& s : splits) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void AccumulateDocument(const Document& doc, const StatsOptions& options,
                        SplitStats* stats) {
  ++stats->abstracts;
  std::map<std::string, CoreEntityType, std::less<>> concept_types;
  for (const auto& m : doc.mentions()) {
    if (!m.core_type) continue;
    const auto idx = static_cast<size_t>(*m.core_type);
    ++stats->mentions[idx];
    stats->surfaces[idx].insert(options.case_insensitive_unique
                                    ? AsciiLower(m.surface)
                                    : m.surface);
    for (const auto& c : m.LinkedConcepts()) {
      concept_types.emplace(c, *m.core_type);
    }
  }
  auto type_of = [&](const std::string& c) -> std::optional<CoreEntityType> {
    const auto it = concept_types.find(c);
    if (it == concept_types.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& r : doc.relations()) {
    ++stats->relations;
    const PairType pair = PairTypeOf(type_of(r.concept_a), type_of(r.concept_b));
    ++stats->relation_types[{pair, r.raw_label}];
  }
}

SplitStats ComputeSplitStats(const Corpus& corpus, const std::string& name,
                             const StatsOptions& options) {
  SplitStats total;
  total.name = name;
  const auto n = static_cast<int64_t>(corpus.documents.size());
#pragma omp parallel num_threads(ResolveJobs(options.jobs))
  {
    SplitStats local;
#pragma omp for schedule(dynamic, 8) nowait
    for (int64_t i = 0; i < n; ++i) {
      AccumulateDocument(corpus.documents[static_cast<size_t>(i)], options,
                         &local);
    }
#pragma omp critical(biored_stats_merge)
    total.Merge(local);
  }
  return total;
}

namespace serial {

SplitStats ComputeSplitStats(const Corpus& corpus, const std::string& name,
                             const StatsOptions& options) {
  SplitStats stats;
  stats.name = name;
  for (const auto& doc : corpus.documents) {
    AccumulateDocument(doc, options, &stats);
  }
  return stats;
}

}  // namespace serial

StatsTable CorpusStats(
    const std::vector<std::pair<std::string, const Corpus*>>& corpora,
    const StatsOptions& options) {
  StatsTable table;
  SplitStats total;
  total.name = "total";
  for (const auto& [name, corpus] : corpora) {
    table.splits.push_back(ComputeSplitStats(*corpus, name, options));
    total.Merge(table.splits.back());
  }
  if (corpora.size() > 1) table.splits.push_back(std::move(total));
  return table;
}

void WriteStatsCsv(const StatsTable& table, std::ostream& out) {
  out << "split,metric,entity_or_pair,label,value\n";
  for (const auto& r : Rows(table)) {
    out << CsvField(r.split) << ',' << r.metric << ',' << r.entity_or_pair
        << ',' << CsvField(r.label) << ',' << r.value << '\n';
  }
}

void WriteStatsJson(const StatsTable& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : Rows(table)) {
    rows.push_back({{"split", r.split},
                    {"metric", r.metric},
                    {"entity_or_pair", r.entity_or_pair},
                    {"label", r.label},
                    {"value", r.value}});
  }
  out << rows.dump(2) << '\n';
}

void WriteStatsMarkdown(const StatsTable& table, std::ostream& out) {
  out << "| Set | Abstracts | Gene | Variant | Disease | Chemical | Relations "
         "|\n";
  out << "|---|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& s : table.splits) {
    out << "| " << s.name << " | " << s.abstracts;
    for (CoreEntityType t : kCoreEntityTypes) {
      out << " | " << s.Mentions(t) << " (" << s.Unique(t) << ")";
    }
    out << " | " << s.relations << " |\n";
  }

  std::set<std::string> labels;
  for (const auto& s : table.splits) {
    for (const auto& [key, count] : s.relation_types) labels.insert(key.second);
  }
  const SplitStats& all = table.splits.empty() ? SplitStats{}
                                               : table.splits.back();
  out << "\n| Relation type (" << all.name << ")";
  for (PairType p : kPairTypes) out << " | " << PairTypeName(p);
  out << " |\n|---";
  for (size_t i = 0; i < kPairTypes.size(); ++i) out << "|---:";
  out << "|\n";
  for (const auto& label : labels) {
    out << "| " << label;
    for (PairType p : kPairTypes) {
      const int64_t v = all.RelationCell(p, label);
      out << " | ";
      if (v > 0) out << v;
    }
    out << " |\n";
  }
}

}  // namespace biored

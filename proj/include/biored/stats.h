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

// Corpus statistics: abstracts, mentions per core type (total and unique
// surface strings), relations, and relation counts per (pair type, label).

#ifndef BIORED_STATS_H_
#define BIORED_STATS_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "biored/corpus.h"
#include "biored/pubtator.h"

namespace biored {

struct StatsOptions {
  // Unique mentions are counted by exact surface string per type; this
  // switches to ASCII case-insensitive comparison.
  bool case_insensitive_unique = false;
  int jobs = 0;
};

struct SplitStats {
  std::string name;
  int64_t abstracts = 0;
  std::array<int64_t, 4> mentions{};
  std::array<std::set<std::string>, 4> surfaces;
  int64_t relations = 0;
  // (pair type, raw relation label) -> count.
  std::map<std::pair<PairType, std::string>, int64_t> relation_types;

  int64_t Mentions(CoreEntityType t) const {
    return mentions[static_cast<size_t>(t)];
  }
  int64_t Unique(CoreEntityType t) const {
    return static_cast<int64_t>(surfaces[static_cast<size_t>(t)].size());
  }
  int64_t RelationCell(PairType pair, const std::string& label) const;

  // Associative and commutative; unique sets are unioned.
  void Merge(const SplitStats& other);

  friend bool operator==(const SplitStats&, const SplitStats&) = default;
};

struct StatsTable {
  std::vector<SplitStats> splits;  // one per input, then "total" if > 1

  const SplitStats* Find(const std::string& name) const;
};

void AccumulateDocument(const Document& doc, const StatsOptions& options,
                        SplitStats* stats);

// OpenMP over documents with per-thread partials.
SplitStats ComputeSplitStats(const Corpus& corpus, const std::string& name,
                             const StatsOptions& options = {});

StatsTable CorpusStats(
    const std::vector<std::pair<std::string, const Corpus*>>& corpora,
    const StatsOptions& options = {});

namespace serial {
SplitStats ComputeSplitStats(const Corpus& corpus, const std::string& name,
                             const StatsOptions& options = {});
}  // namespace serial

// CSV columns: split,metric,entity_or_pair,label,value.
void WriteStatsCsv(const StatsTable& table, std::ostream& out);
void WriteStatsJson(const StatsTable& table, std::ostream& out);
// Entity table (count and unique count) followed by the relation-type table.
void WriteStatsMarkdown(const StatsTable& table, std::ostream& out);

}  // namespace biored

#endif  // BIORED_STATS_H_

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

// Knowledge synthesis: predicted relations become human-readable findings,
// which are checked against a curated reference table of entity-pair
// statements.

#ifndef BIORED_SYNTHESIS_H_
#define BIORED_SYNTHESIS_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biored/eval.h"
#include "biored/preprocess.h"
#include "biored/pubtator.h"

namespace biored {

enum class SourceKind { kPaper, kAbstract };

std::string_view SourceKindCode(SourceKind kind);  // "P" / "A"
// Accepts P, A, Paper, Abstract (case-insensitive).
std::optional<SourceKind> ParseSourceKind(std::string_view s);

struct Finding {
  std::string entity_a_name;
  std::string entity_b_name;  // may be a composite such as "A + B"
  std::vector<std::string> entity_ids;
  std::string source_id;
  SourceKind source_kind = SourceKind::kPaper;
  std::optional<CoreRelationLabel> label;
};

struct ReferenceRow {
  int index = 0;
  std::string finding;  // as written in the table
  std::string entity_a;
  std::string entity_b;
  SourceKind source_kind = SourceKind::kPaper;
  std::string source_id;  // empty: any source matches
};

// Splits a finding statement into its entity pair: on the rightmost
// " and ", or, failing that, on the first " + " of a composite.
// Returns nullopt when neither separator is present.
std::optional<std::pair<std::string, std::string>> SplitFinding(
    std::string_view finding);

class ReferenceTable {
 public:
  std::vector<ReferenceRow> rows;

  // Lowercase, trim, collapse whitespace, then apply the synonym map.
  // Idempotent.
  std::string Canon(std::string_view s) const;

  // Sorted canonical components of a " + " composite (one element for a
  // plain entity).
  std::vector<std::string> Components(std::string_view s) const;

  // Whole-string or component-set equality after canonicalization.
  bool SameEntity(std::string_view reference, std::string_view found) const;

  // Adds alias -> canonical; chains are resolved. Throws on cycles.
  void AddSynonym(std::string_view alias, std::string_view canonical);
  const std::map<std::string, std::string>& synonyms() const {
    return synonyms_;
  }

 private:
  std::map<std::string, std::string> synonyms_;  // canonical forms
};

class LoadError : public std::runtime_error {
 public:
  LoadError(int row, const std::string& what);
  int row() const { return row_; }

 private:
  int row_;
};

// Minimal RFC 4180 reader; unquoted fields are trimmed.
std::vector<std::vector<std::string>> ReadCsv(std::istream& in);

// Reference CSV columns: index, finding, source_kind[, source_id].
// Synonyms CSV columns: alias, canonical. Row numbers in errors are 1-based
// file lines counting the header.
ReferenceTable LoadReferenceTable(std::istream& table,
                                  std::istream* synonyms = nullptr);

// Findings CSV columns: entity_a, entity_b, source_kind, source_id[, label].
std::vector<Finding> LoadFindingsCsv(std::istream& in);

// concept_id,name CSV.
std::map<std::string, std::string> LoadNameMap(std::istream& in);

// One finding per predicted relation. Names come from `name_map`, else the
// longest mention surface of the concept in its document, else the id.
// Duplicates (same unordered canonical name pair and source) collapse.
std::vector<Finding> AggregateFindings(
    std::span<const Corpus> predictions,
    const std::map<std::string, std::string>& name_map,
    SourceKind kind = SourceKind::kPaper);

// Same from relation keys; `documents` supplies mention surfaces.
std::vector<Finding> AggregateFindings(
    std::span<const RelationKey> relations, const Corpus* documents,
    const std::map<std::string, std::string>& name_map,
    SourceKind kind = SourceKind::kPaper);

struct RowCoverage {
  ReferenceRow row;
  std::optional<Finding> match;
};

struct CoverageReport {
  std::vector<RowCoverage> rows;
  int matched = 0;
  int total = 0;

  double coverage() const {
    return total == 0 ? 0.0 : static_cast<double>(matched) / total;
  }
};

// A row matches a finding whose unordered name pair equals the row's pair
// entity by entity (ReferenceTable::SameEntity), with equal source ids when
// both sides have one. The first matching finding is recorded.
CoverageReport MatchFindings(const ReferenceTable& reference,
                             std::span<const Finding> findings);

void WriteCoverageMarkdown(const CoverageReport& report, std::ostream& out);
void WriteCoverageJson(const CoverageReport& report, std::ostream& out);
void WriteCoverageCsv(const CoverageReport& report, std::ostream& out);

}  // namespace biored

#endif  // BIORED_SYNTHESIS_H_

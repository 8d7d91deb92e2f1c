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

#include "biored/synthesis.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "biored/text.h"
#include "json.hpp"

namespace biored {
namespace {

constexpr std::string_view kAnd = " and ";
constexpr std::string_view kPlus = " + ";

std::string Normalize(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : AsciiLower(Trim(s))) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::vector<std::string> SplitOn(std::string_view s, std::string_view sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    const size_t at = s.find(sep, pos);
    if (at == std::string_view::npos) {
      parts.emplace_back(Trim(s.substr(pos)));
      break;
    }
    parts.emplace_back(Trim(s.substr(pos, at - pos)));
    pos = at + sep.size();
  }
  return parts;
}

// Column name -> index from a header row; names compared normalized.
std::map<std::string, size_t> HeaderIndex(const std::vector<std::string>& h) {
  std::map<std::string, size_t> idx;
  for (size_t i = 0; i < h.size(); ++i) idx.emplace(Normalize(h[i]), i);
  return idx;
}

size_t Require(const std::map<std::string, size_t>& header,
               const std::string& name) {
  const auto it = header.find(name);
  if (it == header.end()) throw LoadError(1, "missing column '" + name + "'");
  return it->second;
}

std::string Field(const std::vector<std::string>& row, size_t i) {
  return i < row.size() ? row[i] : std::string();
}

bool SameSource(const std::string& a, const std::string& b) {
  return a.empty() || b.empty() || a == b;
}

}  // namespace

std::string_view SourceKindCode(SourceKind kind) {
  return kind == SourceKind::kPaper ? "P" : "A";
}

std::optional<SourceKind> ParseSourceKind(std::string_view s) {
  const std::string k = Normalize(s);
  if (k == "p" || k == "paper") return SourceKind::kPaper;
  if (k == "a" || k == "abstract") return SourceKind::kAbstract;
  return std::nullopt;
}

std::optional<std::pair<std::string, std::string>> SplitFinding(
    std::string_view finding) {
  const size_t at = finding.rfind(kAnd);
  if (at != std::string_view::npos) {
    return std::pair{std::string(Trim(finding.substr(0, at))),
                     std::string(Trim(finding.substr(at + kAnd.size())))};
  }
  const size_t plus = finding.find(kPlus);
  if (plus != std::string_view::npos) {
    return std::pair{std::string(Trim(finding.substr(0, plus))),
                     std::string(Trim(finding.substr(plus + kPlus.size())))};
  }
  return std::nullopt;
}

std::string ReferenceTable::Canon(std::string_view s) const {
  std::string n = Normalize(s);
  const auto it = synonyms_.find(n);
  return it == synonyms_.end() ? n : it->second;
}

std::vector<std::string> ReferenceTable::Components(std::string_view s) const {
  std::vector<std::string> parts;
  for (const auto& p : SplitOn(Normalize(s), kPlus)) parts.push_back(Canon(p));
  std::sort(parts.begin(), parts.end());
  return parts;
}

bool ReferenceTable::SameEntity(std::string_view reference,
                                std::string_view found) const {
  return Canon(reference) == Canon(found) ||
         Components(reference) == Components(found);
}

void ReferenceTable::AddSynonym(std::string_view alias,
                                std::string_view canonical) {
  const std::string a = Normalize(alias);
  std::string c = Normalize(canonical);
  if (a == c) return;
  // Resolve the target through existing entries.
  std::set<std::string> seen{a};
  while (true) {
    const auto it = synonyms_.find(c);
    if (it == synonyms_.end()) break;
    if (!seen.insert(c).second || it->second == a) {
      throw std::invalid_argument("synonym cycle through '" + a + "'");
    }
    c = it->second;
  }
  if (c == a) throw std::invalid_argument("synonym cycle through '" + a + "'");
  synonyms_[a] = c;
  // Entries that pointed at the new alias now point at its target.
  for (auto& [k, v] : synonyms_) {
    if (v == a) v = c;
  }
}

LoadError::LoadError(int row, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ": " + what),
      row_(row) {}

std::vector<std::vector<std::string>> ReadCsv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  bool any = false;
  auto end_field = [&]() {
    row.push_back(was_quoted ? field : std::string(Trim(field)));
    field.clear();
    was_quoted = false;
  };
  auto end_row = [&]() {
    end_field();
    const bool blank = row.size() == 1 && row[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
    any = false;
  };
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && Trim(field).empty()) {
      field.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any || !field.empty() || !row.empty()) end_row();
  return rows;
}

ReferenceTable LoadReferenceTable(std::istream& table, std::istream* synonyms) {
  ReferenceTable ref;
  if (synonyms) {
    const auto rows = ReadCsv(*synonyms);
    if (rows.empty()) throw LoadError(1, "synonym file has no header row");
    const auto header = HeaderIndex(rows[0]);
    const size_t alias = Require(header, "alias");
    const size_t canonical = Require(header, "canonical");
    for (size_t i = 1; i < rows.size(); ++i) {
      const int line = static_cast<int>(i) + 1;
      const std::string a = Field(rows[i], alias);
      const std::string c = Field(rows[i], canonical);
      if (a.empty() || c.empty()) throw LoadError(line, "empty synonym field");
      try {
        ref.AddSynonym(a, c);
      } catch (const std::invalid_argument& e) {
        throw LoadError(line, e.what());
      }
    }
  }

  const auto rows = ReadCsv(table);
  if (rows.empty()) throw LoadError(1, "reference table has no header row");
  const auto header = HeaderIndex(rows[0]);
  const size_t index_col = Require(header, "index");
  const size_t finding_col = Require(header, "finding");
  const size_t kind_col = Require(header, "source_kind");
  const auto source_it = header.find("source_id");

  std::set<int> seen;
  for (size_t i = 1; i < rows.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const auto& r = rows[i];
    ReferenceRow row;
    const std::string index = Field(r, index_col);
    if (!IsDigits(index)) throw LoadError(line, "bad index '" + index + "'");
    row.index = std::stoi(index);
    if (!seen.insert(row.index).second) {
      throw LoadError(line, "duplicate index " + index);
    }
    row.finding = Field(r, finding_col);
    if (row.finding.empty()) throw LoadError(line, "empty finding");
    const auto pair = SplitFinding(row.finding);
    if (pair) {
      row.entity_a = pair->first;
      row.entity_b = pair->second;
    } else {
      row.entity_a = row.finding;
    }
    const auto kind = ParseSourceKind(Field(r, kind_col));
    if (!kind) {
      throw LoadError(line, "bad source_kind '" + Field(r, kind_col) + "'");
    }
    row.source_kind = *kind;
    if (source_it != header.end()) row.source_id = Field(r, source_it->second);
    ref.rows.push_back(std::move(row));
  }
  std::sort(ref.rows.begin(), ref.rows.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  for (size_t i = 0; i < ref.rows.size(); ++i) {
    if (ref.rows[i].index != static_cast<int>(i) + 1) {
      throw LoadError(static_cast<int>(i) + 2,
                      "indices must be contiguous from 1; missing " +
                          std::to_string(i + 1));
    }
  }
  return ref;
}

std::vector<Finding> LoadFindingsCsv(std::istream& in) {
  const auto rows = ReadCsv(in);
  std::vector<Finding> out;
  if (rows.empty()) return out;
  const auto header = HeaderIndex(rows[0]);
  const size_t a = Require(header, "entity_a");
  const size_t b = Require(header, "entity_b");
  const size_t kind = Require(header, "source_kind");
  const size_t source = Require(header, "source_id");
  const auto label_it = header.find("label");
  for (size_t i = 1; i < rows.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    Finding f;
    f.entity_a_name = Field(rows[i], a);
    f.entity_b_name = Field(rows[i], b);
    if (f.entity_a_name.empty() || f.entity_b_name.empty()) {
      throw LoadError(line, "empty entity name");
    }
    const auto k = ParseSourceKind(Field(rows[i], kind));
    if (!k) throw LoadError(line, "bad source_kind");
    f.source_kind = *k;
    f.source_id = Field(rows[i], source);
    if (label_it != header.end()) {
      const std::string l = Field(rows[i], label_it->second);
      if (!l.empty()) f.label = NormalizeRelationLabel(l);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::map<std::string, std::string> LoadNameMap(std::istream& in) {
  const auto rows = ReadCsv(in);
  std::map<std::string, std::string> out;
  if (rows.empty()) return out;
  const auto header = HeaderIndex(rows[0]);
  const size_t id = Require(header, "concept_id");
  const size_t name = Require(header, "name");
  for (size_t i = 1; i < rows.size(); ++i) {
    const std::string k = Field(rows[i], id);
    if (k.empty()) throw LoadError(static_cast<int>(i) + 1, "empty concept_id");
    out[k] = Field(rows[i], name);
  }
  return out;
}

std::vector<Finding> AggregateFindings(
    std::span<const RelationKey> relations, const Corpus* documents,
    const std::map<std::string, std::string>& name_map, SourceKind kind) {
  auto resolve = [&](const std::string& doc_id, const std::string& id) {
    const auto it = name_map.find(id);
    if (it != name_map.end()) return it->second;
    std::string best;
    if (const Document* doc = documents ? documents->Find(doc_id) : nullptr) {
      for (const auto& m : doc->mentions()) {
        if (m.HasConcept(id) && CodepointLength(m.surface) >
                                    CodepointLength(best)) {
          best = m.surface;
        }
      }
    }
    return best.empty() ? id : best;
  };
  const ReferenceTable plain;  // canonicalization without synonyms
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::vector<Finding> out;
  for (const auto& r : relations) {
    Finding f;
    f.entity_a_name = resolve(r.doc_id, r.concept_a);
    f.entity_b_name = resolve(r.doc_id, r.concept_b);
    f.entity_ids = {r.concept_a, r.concept_b};
    f.source_id = r.doc_id;
    f.source_kind = kind;
    f.label = r.label;
    auto x = plain.Canon(f.entity_a_name);
    auto y = plain.Canon(f.entity_b_name);
    if (y < x) std::swap(x, y);
    if (!seen.emplace(x, y, f.source_id).second) continue;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> AggregateFindings(
    std::span<const Corpus> predictions,
    const std::map<std::string, std::string>& name_map, SourceKind kind) {
  std::vector<Finding> out;
  for (const auto& corpus : predictions) {
    std::vector<RelationKey> keys;
    for (const auto& doc : corpus.documents) {
      for (const auto& r : doc.relations()) {
        keys.push_back(RelationKey::Make(
            doc.id(), r.concept_a, r.concept_b,
            NormalizeRelationLabel(r.raw_label),
            PairTypeOf(doc.ConceptType(r.concept_a),
                       doc.ConceptType(r.concept_b))));
        // Keep the annotated orientation for display.
        keys.back().concept_a = r.concept_a;
        keys.back().concept_b = r.concept_b;
      }
    }
    auto part = AggregateFindings(keys, &corpus, name_map, kind);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

CoverageReport MatchFindings(const ReferenceTable& reference,
                             std::span<const Finding> findings) {
  CoverageReport report;
  report.total = static_cast<int>(reference.rows.size());
  for (const auto& row : reference.rows) {
    RowCoverage rc{row, std::nullopt};
    for (const auto& f : findings) {
      if (!SameSource(row.source_id, f.source_id)) continue;
      bool hit;
      if (row.entity_b.empty()) {
        // Single-entity statement: match either side of the finding.
        hit = reference.SameEntity(row.entity_a, f.entity_a_name) ||
              reference.SameEntity(row.entity_a, f.entity_b_name);
      } else {
        hit = (reference.SameEntity(row.entity_a, f.entity_a_name) &&
               reference.SameEntity(row.entity_b, f.entity_b_name)) ||
              (reference.SameEntity(row.entity_a, f.entity_b_name) &&
               reference.SameEntity(row.entity_b, f.entity_a_name));
      }
      if (hit) {
        rc.match = f;
        break;
      }
    }
    if (rc.match) ++report.matched;
    report.rows.push_back(std::move(rc));
  }
  return report;
}

void WriteCoverageMarkdown(const CoverageReport& report, std::ostream& out) {
  out << "| A/A | Finding | Source | Found |\n";
  out << "|---:|---|---|:---:|\n";
  for (const auto& r : report.rows) {
    out << "| " << r.row.index << " | " << r.row.finding << " | "
        << SourceKindCode(r.row.source_kind) << " | "
        << (r.match ? "✓" : "") << " |\n";
  }
  out << "\nMatched " << report.matched << "/" << report.total
      << " (coverage " << FormatRatio(report.matched, report.total) << ")\n";
}

void WriteCoverageJson(const CoverageReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["matched"] = report.matched;
  j["total"] = report.total;
  j["coverage"] = FormatRatio(report.matched, report.total);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["index"] = r.row.index;
    row["finding"] = r.row.finding;
    row["source_kind"] = std::string(SourceKindCode(r.row.source_kind));
    row["source_id"] = r.row.source_id;
    row["matched"] = r.match.has_value();
    if (r.match) {
      row["matched_by"] = {{"entity_a", r.match->entity_a_name},
                           {"entity_b", r.match->entity_b_name},
                           {"source_id", r.match->source_id}};
    }
    j["rows"].push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
}

void WriteCoverageCsv(const CoverageReport& report, std::ostream& out) {
  out << "index,finding,source_kind,source_id,matched\n";
  for (const auto& r : report.rows) {
    std::string finding = r.row.finding;
    if (finding.find_first_of(",\"") != std::string::npos) {
      std::string q = "\"";
      for (char c : finding) {
        if (c == '"') q += '"';
        q += c;
      }
      finding = q + "\"";
    }
    out << r.row.index << ',' << finding << ','
        << SourceKindCode(r.row.source_kind) << ',' << r.row.source_id << ','
        << (r.match ? 1 : 0) << '\n';
  }
}

}  // namespace biored

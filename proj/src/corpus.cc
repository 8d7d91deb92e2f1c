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

#include "biored/corpus.h"

#include <algorithm>
#include <istream>
#include <set>
#include <stdexcept>
#include <tuple>

#include "biored/text.h"

namespace biored {

std::string_view CoreEntityTypeName(CoreEntityType type) {
  switch (type) {
    case CoreEntityType::kGene:
      return "Gene";
    case CoreEntityType::kVariant:
      return "Variant";
    case CoreEntityType::kDisease:
      return "Disease";
    case CoreEntityType::kChemical:
      return "Chemical";
  }
  return "Gene";
}

std::optional<CoreEntityType> ParseCoreEntityType(std::string_view name) {
  const std::string lower = AsciiLower(name);
  for (CoreEntityType t : kCoreEntityTypes) {
    if (lower == AsciiLower(CoreEntityTypeName(t))) return t;
  }
  return std::nullopt;
}

std::string_view DefaultRawType(CoreEntityType type) {
  switch (type) {
    case CoreEntityType::kGene:
      return "GeneOrGeneProduct";
    case CoreEntityType::kVariant:
      return "SequenceVariant";
    case CoreEntityType::kDisease:
      return "DiseaseOrPhenotypicFeature";
    case CoreEntityType::kChemical:
      return "ChemicalEntity";
  }
  return "GeneOrGeneProduct";
}

std::string_view PairTypeName(PairType type) {
  switch (type) {
    case PairType::kGD:
      return "G-D";
    case PairType::kGG:
      return "G-G";
    case PairType::kGC:
      return "G-C";
    case PairType::kDV:
      return "D-V";
    case PairType::kCD:
      return "C-D";
    case PairType::kCV:
      return "C-V";
    case PairType::kCC:
      return "C-C";
    case PairType::kOther:
      return "other";
  }
  return "other";
}

std::optional<PairType> ParsePairType(std::string_view name) {
  for (PairType t : kPairTypes) {
    if (PairTypeName(t) == name) return t;
  }
  return std::nullopt;
}

PairType PairTypeOf(std::optional<CoreEntityType> a,
                    std::optional<CoreEntityType> b) {
  if (!a || !b) return PairType::kOther;
  using T = CoreEntityType;
  auto is = [&](T x, T y) {
    return (*a == x && *b == y) || (*a == y && *b == x);
  };
  if (is(T::kGene, T::kDisease)) return PairType::kGD;
  if (is(T::kGene, T::kGene)) return PairType::kGG;
  if (is(T::kGene, T::kChemical)) return PairType::kGC;
  if (is(T::kDisease, T::kVariant)) return PairType::kDV;
  if (is(T::kChemical, T::kDisease)) return PairType::kCD;
  if (is(T::kChemical, T::kVariant)) return PairType::kCV;
  if (is(T::kChemical, T::kChemical)) return PairType::kCC;
  return PairType::kOther;
}

std::vector<std::string> Mention::LinkedConcepts() const {
  std::vector<std::string> out;
  for (const auto& id : concept_ids) {
    if (!id.empty() && id != kNoConcept) out.push_back(id);
  }
  return out;
}

bool Mention::HasConcept(std::string_view id) const {
  if (id.empty() || id == kNoConcept) return false;
  return std::find(concept_ids.begin(), concept_ids.end(), id) !=
         concept_ids.end();
}

bool RelationAnnotation::Joins(std::string_view x, std::string_view y) const {
  return (concept_a == x && concept_b == y) ||
         (concept_a == y && concept_b == x);
}

bool RelationAnnotation::SameRelation(const RelationAnnotation& other) const {
  return raw_label == other.raw_label &&
         Joins(other.concept_a, other.concept_b);
}

std::vector<RelationAnnotation> DedupRelations(
    const std::vector<RelationAnnotation>& relations) {
  std::vector<RelationAnnotation> out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& r : relations) {
    auto a = r.concept_a;
    auto b = r.concept_b;
    if (b < a) std::swap(a, b);
    if (seen.emplace(a, b, r.raw_label).second) out.push_back(r);
  }
  return out;
}

EntityTypeMap EntityTypeMap::Default() {
  EntityTypeMap m;
  m.Set("GeneOrGeneProduct", CoreEntityType::kGene);
  m.Set("SequenceVariant", CoreEntityType::kVariant);
  m.Set("DiseaseOrPhenotypicFeature", CoreEntityType::kDisease);
  m.Set("ChemicalEntity", CoreEntityType::kChemical);
  m.Set("OrganismTaxon", std::nullopt);
  m.Set("CellLine", std::nullopt);
  return m;
}

EntityTypeMap EntityTypeMap::FromTsv(std::istream& in) {
  EntityTypeMap m = Default();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const size_t tab = trimmed.find('\t');
    if (tab == std::string_view::npos) {
      throw std::runtime_error("type map line " + std::to_string(line_no) +
                               ": expected raw_label<TAB>core_type");
    }
    const std::string raw(Trim(trimmed.substr(0, tab)));
    const std::string_view core = Trim(trimmed.substr(tab + 1));
    if (core == "-" || AsciiLower(core) == "filtered") {
      m.Set(raw, std::nullopt);
      continue;
    }
    const auto parsed = ParseCoreEntityType(core);
    if (!parsed) {
      throw std::runtime_error("type map line " + std::to_string(line_no) +
                               ": unknown core type '" + std::string(core) +
                               "'");
    }
    m.Set(raw, parsed);
  }
  return m;
}

void EntityTypeMap::Set(std::string raw_type,
                        std::optional<CoreEntityType> core) {
  table_[std::move(raw_type)] = core;
}

std::optional<CoreEntityType> EntityTypeMap::Map(
    std::string_view raw_type) const {
  const auto it = table_.find(raw_type);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool EntityTypeMap::IsKnown(std::string_view raw_type) const {
  return table_.find(raw_type) != table_.end();
}

std::optional<CoreEntityType> MapEntityType(std::string_view raw_type) {
  static const EntityTypeMap kDefault = EntityTypeMap::Default();
  return kDefault.Map(raw_type);
}

Document::Document(std::string doc_id, std::string title, std::string abstract,
                   std::vector<Mention> mentions,
                   std::vector<RelationAnnotation> relations)
    : id_(std::move(doc_id)),
      title_(std::move(title)),
      abstract_(std::move(abstract)),
      mentions_(std::move(mentions)),
      relations_(std::move(relations)) {
  std::stable_sort(mentions_.begin(), mentions_.end(),
                   [](const Mention& a, const Mention& b) {
                     return std::tie(a.start, a.end) <
                            std::tie(b.start, b.end);
                   });
  full_text_ = title_ + " " + abstract_;
  codepoints_ = DecodeUtf8(full_text_);
  title_length_ = CodepointLength(title_);
}

std::string Document::Slice(int64_t start, int64_t end) const {
  const auto n = static_cast<int64_t>(codepoints_.size());
  start = std::clamp<int64_t>(start, 0, n);
  end = std::clamp<int64_t>(end, start, n);
  return EncodeUtf8(std::u32string_view(codepoints_).substr(
      static_cast<size_t>(start), static_cast<size_t>(end - start)));
}

Document Document::WithMentions(std::vector<Mention> mentions) const {
  return Document(id_, title_, abstract_, std::move(mentions), relations_);
}

Document Document::WithRelations(
    std::vector<RelationAnnotation> relations) const {
  return Document(id_, title_, abstract_, mentions_, std::move(relations));
}

Document Document::WithTypeMap(const EntityTypeMap& map) const {
  std::vector<Mention> mentions = mentions_;
  for (auto& m : mentions) m.core_type = map.Map(m.raw_type);
  return WithMentions(std::move(mentions));
}

std::vector<Mention> Document::CoreMentions() const {
  std::vector<Mention> out;
  for (const auto& m : mentions_) {
    if (m.core_type) out.push_back(m);
  }
  return out;
}

std::optional<CoreEntityType> Document::ConceptType(
    std::string_view concept_id) const {
  for (const auto& m : mentions_) {
    if (m.core_type && m.HasConcept(concept_id)) return m.core_type;
  }
  return std::nullopt;
}

std::string FullText(const Document& doc) { return doc.full_text(); }

ValidationReport ValidateDocument(const Document& doc, bool strict,
                                  const EntityTypeMap& types) {
  ValidationReport report;
  report.doc_id = doc.id();
  auto error = [&](std::string code, std::string msg, int64_t off,
                   int64_t idx) {
    report.errors.push_back({std::move(code), std::move(msg), off, idx});
  };
  auto warn = [&](std::string code, std::string msg, int64_t off,
                  int64_t idx) {
    report.warnings.push_back({std::move(code), std::move(msg), off, idx});
  };

  if (doc.id().empty()) {
    error("empty doc id", "document has an empty id", -1, -1);
  } else if (!IsDigits(doc.id())) {
    warn("non-numeric doc id", "doc id '" + doc.id() + "' is not a PMID", -1,
         -1);
  }
  if (doc.abstract().empty()) {
    warn("empty abstract", "document has an empty abstract", -1, -1);
  }

  const auto text_len = static_cast<int64_t>(doc.codepoints().size());
  std::set<std::tuple<int64_t, int64_t, std::string>> seen;
  std::set<std::string, std::less<>> concepts;
  for (size_t i = 0; i < doc.mentions().size(); ++i) {
    const Mention& m = doc.mentions()[i];
    const auto idx = static_cast<int64_t>(i);
    for (const auto& c : m.LinkedConcepts()) concepts.insert(c);
    if (m.start < 0 || m.start >= m.end || m.end > text_len) {
      error("span out of bounds",
            "mention '" + m.surface + "' span [" + std::to_string(m.start) +
                "," + std::to_string(m.end) + ") outside text of length " +
                std::to_string(text_len),
            m.start, idx);
    } else {
      const std::string actual = doc.Slice(m.start, m.end);
      if (actual != m.surface) {
        std::string msg = "mention '" + m.surface + "' at [" +
                          std::to_string(m.start) + "," +
                          std::to_string(m.end) + ") covers '" + actual + "'";
        if (strict) {
          error("surface mismatch", std::move(msg), m.start, idx);
        } else {
          warn("surface mismatch", std::move(msg), m.start, idx);
        }
      }
    }
    if (!seen.emplace(m.start, m.end, m.raw_type).second) {
      warn("duplicate mention",
           "mention '" + m.surface + "' at [" + std::to_string(m.start) +
               "," + std::to_string(m.end) + ") repeated",
           m.start, idx);
    }
    if (!types.IsKnown(m.raw_type)) {
      warn("unknown entity type", "raw type '" + m.raw_type + "' is unknown",
           m.start, idx);
    }
  }
  for (size_t i = 0; i < doc.relations().size(); ++i) {
    const RelationAnnotation& r = doc.relations()[i];
    const auto idx = static_cast<int64_t>(i);
    if (r.raw_label.empty()) {
      error("empty relation label", "relation has an empty label", -1, idx);
    }
    for (const auto* c : {&r.concept_a, &r.concept_b}) {
      if (concepts.find(*c) == concepts.end()) {
        warn("dangling relation",
             "relation " + r.raw_label + " references concept '" + *c +
                 "' with no mention",
             -1, idx);
      }
    }
  }
  return report;
}

}  // namespace biored

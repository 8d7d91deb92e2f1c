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

// In-memory model for annotated abstracts: documents, typed mentions with
// code-point offsets into "title + ' ' + abstract", and document-level
// relations between concept ids.

#ifndef BIORED_CORPUS_H_
#define BIORED_CORPUS_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace biored {

enum class CoreEntityType { kGene, kVariant, kDisease, kChemical };

inline constexpr std::array<CoreEntityType, 4> kCoreEntityTypes = {
    CoreEntityType::kGene, CoreEntityType::kVariant, CoreEntityType::kDisease,
    CoreEntityType::kChemical};

// "Gene", "Variant", "Disease", "Chemical".
std::string_view CoreEntityTypeName(CoreEntityType type);

// Case-insensitive inverse of CoreEntityTypeName.
std::optional<CoreEntityType> ParseCoreEntityType(std::string_view name);

// The corpus label emitted for predictions of a core type
// (e.g. Gene -> "GeneOrGeneProduct").
std::string_view DefaultRawType(CoreEntityType type);

// Entity-pair category of a relation, unordered:
// G-D, G-G, G-C, D-V, C-D, C-V, C-C; every other combination is "other".
enum class PairType { kGD, kGG, kGC, kDV, kCD, kCV, kCC, kOther };

inline constexpr std::array<PairType, 8> kPairTypes = {
    PairType::kGD, PairType::kGG, PairType::kGC, PairType::kDV,
    PairType::kCD, PairType::kCV, PairType::kCC, PairType::kOther};

std::string_view PairTypeName(PairType type);
std::optional<PairType> ParsePairType(std::string_view name);
PairType PairTypeOf(std::optional<CoreEntityType> a,
                    std::optional<CoreEntityType> b);

// Marker used in id fields for "no normalized concept".
inline constexpr std::string_view kNoConcept = "-";

struct Mention {
  int64_t start = 0;  // code points, inclusive
  int64_t end = 0;    // code points, exclusive
  std::string surface;
  std::string raw_type;
  std::optional<CoreEntityType> core_type;
  std::vector<std::string> concept_ids;
  // Distinguishes a 5-field annotation line from one with an empty id field.
  bool has_id_field = false;
  std::vector<std::string> extras;

  // Concept ids excluding the "-" placeholder.
  std::vector<std::string> LinkedConcepts() const;
  bool HasConcept(std::string_view id) const;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct RelationAnnotation {
  std::string concept_a;
  std::string concept_b;
  std::string raw_label;
  std::vector<std::string> extras;

  // Unordered-pair equality on (concepts, label); extras are ignored.
  bool SameRelation(const RelationAnnotation& other) const;
  bool Joins(std::string_view x, std::string_view y) const;

  friend bool operator==(const RelationAnnotation&,
                         const RelationAnnotation&) = default;
};

// Keeps the first of every group of relations that are SameRelation.
std::vector<RelationAnnotation> DedupRelations(
    const std::vector<RelationAnnotation>& relations);

// Raw corpus label -> core type, or nullopt for filtered labels.
class EntityTypeMap {
 public:
  // GeneOrGeneProduct, SequenceVariant, DiseaseOrPhenotypicFeature and
  // ChemicalEntity map to the four core types; OrganismTaxon and CellLine
  // are known but filtered.
  static EntityTypeMap Default();

  // Reads "raw_label<TAB>core_type" lines; a core type of "-" or "filtered"
  // marks a known-but-filtered label. Blank lines and '#' comments skipped.
  // Entries override the defaults. Throws std::runtime_error on bad lines.
  static EntityTypeMap FromTsv(std::istream& in);

  void Set(std::string raw_type, std::optional<CoreEntityType> core);

  std::optional<CoreEntityType> Map(std::string_view raw_type) const;
  bool IsKnown(std::string_view raw_type) const;

 private:
  std::map<std::string, std::optional<CoreEntityType>, std::less<>> table_;
};

std::optional<CoreEntityType> MapEntityType(std::string_view raw_type);

// One PubMed record. Immutable once built; mentions are kept sorted by
// (start, end), ties in input order.
class Document {
 public:
  Document() = default;
  Document(std::string doc_id, std::string title, std::string abstract,
           std::vector<Mention> mentions = {},
           std::vector<RelationAnnotation> relations = {});

  const std::string& id() const { return id_; }
  const std::string& title() const { return title_; }
  const std::string& abstract() const { return abstract_; }
  const std::vector<Mention>& mentions() const { return mentions_; }
  const std::vector<RelationAnnotation>& relations() const {
    return relations_;
  }

  // title + " " + abstract, UTF-8 and decoded.
  const std::string& full_text() const { return full_text_; }
  const std::u32string& codepoints() const { return codepoints_; }
  // Code-point length of the title; the abstract starts one past this.
  size_t title_length() const { return title_length_; }

  // UTF-8 text of code-point range [start, end), clipped to the text.
  std::string Slice(int64_t start, int64_t end) const;

  Document WithMentions(std::vector<Mention> mentions) const;
  Document WithRelations(std::vector<RelationAnnotation> relations) const;
  // Recomputes every mention's core_type from its raw_type.
  Document WithTypeMap(const EntityTypeMap& map) const;

  // Mentions that have a core type.
  std::vector<Mention> CoreMentions() const;

  // Core type of the first core mention carrying `concept_id`.
  std::optional<CoreEntityType> ConceptType(std::string_view concept_id) const;

  friend bool operator==(const Document& a, const Document& b) {
    return a.id_ == b.id_ && a.title_ == b.title_ &&
           a.abstract_ == b.abstract_ && a.mentions_ == b.mentions_ &&
           a.relations_ == b.relations_;
  }

 private:
  std::string id_;
  std::string title_;
  std::string abstract_;
  std::vector<Mention> mentions_;
  std::vector<RelationAnnotation> relations_;
  std::string full_text_;
  std::u32string codepoints_;
  size_t title_length_ = 0;
};

std::string FullText(const Document& doc);

struct ValidationIssue {
  std::string code;  // e.g. "span out of bounds"
  std::string message;
  int64_t offset = -1;  // text offset when applicable
  int64_t index = -1;   // mention or relation index when applicable
};

struct ValidationReport {
  std::string doc_id;
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
};

// Reports span bounds, surface/text disagreement, duplicate mentions,
// dangling relations and unknown entity types. `strict` promotes surface
// mismatches to errors. Never throws.
ValidationReport ValidateDocument(
    const Document& doc, bool strict,
    const EntityTypeMap& types = EntityTypeMap::Default());

}  // namespace biored

#endif  // BIORED_CORPUS_H_

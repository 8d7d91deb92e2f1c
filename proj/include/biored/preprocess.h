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

// Model-input generation: sentence segmentation, offset-preserving
// tokenization, BIO tagging, relation-label collapsing, entity-marker RE
// instances and few-shot NER prompts.

#ifndef BIORED_PREPROCESS_H_
#define BIORED_PREPROCESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biored/corpus.h"
#include "biored/pubtator.h"

namespace biored {

// ---------------------------------------------------------------------------
// Tokens and sentences. All offsets are code points.

struct Token {
  std::string surface;
  int64_t start = 0;
  int64_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct SentenceSpan {
  int index = 0;
  int64_t start = 0;
  int64_t end = 0;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

enum class TokenizeMode {
  kWhitespace,        // maximal runs of non-whitespace
  kSplitPunctuation,  // additionally peel leading/trailing ASCII punctuation
};

std::vector<Token> TokenizeCodepoints(std::u32string_view text,
                                      TokenizeMode mode = TokenizeMode::kWhitespace);
std::vector<Token> Tokenize(std::string_view utf8,
                            TokenizeMode mode = TokenizeMode::kWhitespace);

struct SegmenterOptions {
  // A terminator that ends one of these strings never splits. Matching is
  // ASCII case-insensitive and requires a non-alphanumeric character (or
  // text start) before the abbreviation.
  std::vector<std::string> abbreviations = DefaultAbbreviations();

  static std::vector<std::string> DefaultAbbreviations();
};

// Splits at [.?!] followed by whitespace and then an uppercase letter or a
// digit, unless the terminator closes a guarded abbreviation.
std::vector<SentenceSpan> SegmentText(std::u32string_view text,
                                      const SegmenterOptions& options = {});
std::vector<SentenceSpan> SegmentText(std::string_view utf8,
                                      const SegmenterOptions& options = {});

// The title is always sentence 0; the abstract is split with SegmentText.
std::vector<SentenceSpan> SegmentDocument(const Document& doc,
                                          const SegmenterOptions& options = {});

// Index of the sentence containing `offset` (or the nearest one before it).
int SentenceOf(const std::vector<SentenceSpan>& sentences, int64_t offset);

// ---------------------------------------------------------------------------
// BIO tagging.

struct BioSequence {
  std::string doc_id;
  std::vector<Token> tokens;
  std::vector<std::string> tags;  // "O", "B-Gene", "I-Disease", ...

  friend bool operator==(const BioSequence&, const BioSequence&) = default;
};

struct BioResult {
  BioSequence sequence;
  std::vector<std::string> warnings;  // dropped overlapping mentions
};

// Core-type mentions only. A contested token goes to the earliest-starting,
// then longest mention; mentions that lose any token are dropped entirely.
BioResult EmitBio(const Document& doc,
                  TokenizeMode mode = TokenizeMode::kWhitespace);

struct DecodeResult {
  std::vector<Mention> mentions;
  std::vector<std::string> warnings;  // repaired or unknown tags
};

// B/I runs become mentions spanning first token start to last token end.
// Orphan I-T tags are repaired to B-T. The surface is rebuilt from token
// text with the inter-token gaps filled by spaces; raw_type is the default
// corpus label of the core type.
DecodeResult DecodeBio(const BioSequence& seq);

// ---------------------------------------------------------------------------
// Relations.

enum class CoreRelationLabel {
  kAssociation,
  kNegativeCorrelation,
  kPositiveCorrelation,
};

// "Association", "Negative_Correlation", "Positive_Correlation".
std::string_view CoreRelationLabelName(CoreRelationLabel label);

// Negative/Positive_Correlation map to themselves (case, space, hyphen and
// underscore insensitive); every other label collapses to Association.
CoreRelationLabel NormalizeRelationLabel(std::string_view raw_label);

// Exact-name parse used when reading predictions; "None", "" and unknown
// names yield nullopt.
std::optional<CoreRelationLabel> ParseCoreRelationLabel(std::string_view name);

struct ReInstance {
  std::string doc_id;
  std::string concept_a;  // e1, the earlier mention
  std::string concept_b;  // e2
  CoreEntityType type_a = CoreEntityType::kGene;
  CoreEntityType type_b = CoreEntityType::kGene;
  std::string window_text;
  std::optional<CoreRelationLabel> label;
  int sent_lo = 0;
  int sent_hi = 0;

  friend bool operator==(const ReInstance&, const ReInstance&) = default;
};

struct ReOptions {
  // Maximum sentence distance between the two mentions of a pair.
  int pair_window = 1;
  // Sentences of context added on each side of the pair.
  int context = 1;
  // Fraction of unlabeled (None) instances kept; nullopt keeps all.
  std::optional<double> negative_keep_ratio;
  uint64_t seed = 42;
  SegmenterOptions segmenter;
};

inline constexpr std::string_view kE1Open = "<e1> ";
inline constexpr std::string_view kE1Close = " </e1>";
inline constexpr std::string_view kE2Open = "<e2> ";
inline constexpr std::string_view kE2Close = " </e2>";

// One instance per (mention pair, concept pair) with distinct concepts
// within the pair window. Mention pairs whose spans overlap are skipped.
std::vector<ReInstance> GenerateReInstances(const Document& doc,
                                            const ReOptions& options = {});

struct Reachability {
  int64_t gold_relations = 0;
  int64_t reachable = 0;

  double fraction() const {
    return gold_relations == 0
               ? 0.0
               : static_cast<double>(reachable) /
                     static_cast<double>(gold_relations);
  }
  void Merge(const Reachability& o) {
    gold_relations += o.gold_relations;
    reachable += o.reachable;
  }
};

// Counts deduplicated gold relations that have at least one non-overlapping
// mention pair within the pair window.
Reachability WindowReachability(const Document& doc,
                                const ReOptions& options = {});

// Per-document seed mixing the global seed with the document id.
uint64_t DocumentSeed(uint64_t global_seed, std::string_view doc_id);

// ---------------------------------------------------------------------------
// Corpus-level kernels (OpenMP over documents); results are in corpus order.

std::vector<BioResult> EmitBioCorpus(const Corpus& corpus, TokenizeMode mode,
                                     int jobs = 0);

struct ReCorpusResult {
  std::vector<std::vector<ReInstance>> instances;  // per document
  Reachability reachability;
};

ReCorpusResult GenerateReCorpus(const Corpus& corpus, const ReOptions& options,
                                int jobs = 0);

namespace serial {
std::vector<BioResult> EmitBioCorpus(const Corpus& corpus, TokenizeMode mode);
ReCorpusResult GenerateReCorpus(const Corpus& corpus, const ReOptions& options);
}  // namespace serial

// JSON-lines records:
//   {doc_id, tokens:[{text,start,end}], tags:[...]}
//   {doc_id, e1_id, e2_id, e1_type, e2_type, text, label, sent_lo, sent_hi}
// `label` is null for unlabeled instances.
std::string BioToJson(const BioSequence& seq);
std::string ReInstanceToJson(const ReInstance& instance);
// Throws std::runtime_error on malformed records.
ReInstance ReInstanceFromJson(std::string_view line);

// ---------------------------------------------------------------------------
// Few-shot NER prompt.

inline constexpr int kPromptExamples = 5;
inline constexpr int kMaxPromptQueries = 5;

struct PromptBundle {
  std::vector<Document> instruction_examples;
  std::vector<Document> question_docs;
  std::string rendered;
};

class PromptError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exactly 5 examples, each with at least one mention of every core type;
// 1-5 queries. Examples are rendered as PubTator blocks listing their
// core-type mentions (5 fields, no ids); queries as title/abstract lines.
PromptBundle BuildFewshotPrompt(std::span<const Document> examples,
                                std::span<const Document> queries);

// Documents containing all four core types, in corpus order.
std::vector<const Document*> DocumentsWithAllCoreTypes(const Corpus& corpus);

// Seeded choice of `count` documents from DocumentsWithAllCoreTypes.
// Throws PromptError when fewer are available.
std::vector<Document> SelectFewshotExamples(const Corpus& pool, uint64_t seed,
                                            int count = kPromptExamples);

}  // namespace biored

#endif  // BIORED_PREPROCESS_H_

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

// Scoring of predicted corpora against gold: strict/relaxed NER per entity
// type and document-level RE per entity-pair category. All metrics are
// micro-averaged; a zero denominator yields 0.

#ifndef BIORED_EVAL_H_
#define BIORED_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "biored/corpus.h"
#include "biored/preprocess.h"
#include "biored/pubtator.h"

namespace biored {

enum class MatchMode { kStrict, kRelaxed };

std::string_view MatchModeName(MatchMode mode);

struct MentionMatch {
  size_t gold = 0;
  size_t pred = 0;

  friend bool operator==(const MentionMatch&, const MentionMatch&) = default;
};

// Injective matching between two mention lists of one document. Strict:
// identical (start, end, core type). Relaxed: same core type and at least
// one shared token of `tokens`. Both modes scan gold in order and take the
// first unmatched prediction that qualifies. Mentions without a core type
// never match.
std::vector<MentionMatch> MatchMentions(std::span<const Mention> gold,
                                        std::span<const Mention> pred,
                                        MatchMode mode,
                                        std::span<const Token> tokens);

struct Counts {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;

  double precision() const;
  double recall() const;
  double f1() const;

  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const Counts&, const Counts&) = default;
};

// Per-category counts in a fixed category order, plus "overall" last.
class MetricReport {
 public:
  MetricReport() = default;
  explicit MetricReport(std::vector<std::string> categories);

  static MetricReport ForEntityTypes();
  static MetricReport ForPairTypes();

  // Adds to a category and to "overall".
  void Add(const std::string& category, const Counts& counts);
  void Merge(const MetricReport& other);

  const Counts* Find(const std::string& category) const;
  const Counts& overall() const;
  const std::vector<std::pair<std::string, Counts>>& rows() const {
    return rows_;
  }

  friend bool operator==(const MetricReport&, const MetricReport&) = default;

 private:
  std::vector<std::pair<std::string, Counts>> rows_;
};

class UnknownDocumentError : public std::runtime_error {
 public:
  explicit UnknownDocumentError(std::vector<std::string> ids);
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

struct NerOptions {
  MatchMode mode = MatchMode::kStrict;
  TokenizeMode tokenize = TokenizeMode::kWhitespace;
  int jobs = 0;
};

// Counts for one document; `pred` may be null (all gold mentions are fn).
MetricReport ScoreNerDocument(const Document& gold, const Document* pred,
                              const NerOptions& options);

// Throws UnknownDocumentError if pred has ids absent from gold.
MetricReport ScoreNer(const Corpus& gold, const Corpus& pred,
                      const NerOptions& options = {});

namespace serial {
MetricReport ScoreNer(const Corpus& gold, const Corpus& pred,
                      const NerOptions& options = {});
}  // namespace serial

// Document-level relation with an unordered concept pair, stored with
// concept_a <= concept_b.
struct RelationKey {
  std::string doc_id;
  std::string concept_a;
  std::string concept_b;
  CoreRelationLabel label = CoreRelationLabel::kAssociation;
  PairType pair_type = PairType::kOther;

  static RelationKey Make(std::string doc_id, std::string a, std::string b,
                          CoreRelationLabel label, PairType pair_type);

  // Identity ignores pair_type, which is derived data.
  friend bool operator==(const RelationKey& x, const RelationKey& y) {
    return x.doc_id == y.doc_id && x.concept_a == y.concept_a &&
           x.concept_b == y.concept_b && x.label == y.label;
  }
  friend bool operator<(const RelationKey& x, const RelationKey& y);
};

struct InstancePrediction {
  ReInstance instance;
  std::optional<CoreRelationLabel> label;  // nullopt = None
  double confidence = 1.0;
};

// Majority vote per (document, concept pair) over non-None predictions;
// count ties go to the higher mean confidence, then to the label order
// Association < Negative_Correlation < Positive_Correlation. Pairs with only
// None votes emit nothing. Output is sorted.
std::vector<RelationKey> AggregateInstancePredictions(
    std::span<const InstancePrediction> predictions);

// Gold relations with normalized labels; pair types from gold mention types.
std::vector<RelationKey> GoldRelationKeys(const Corpus& gold);

// Relations of a predicted corpus. Pair types come from the predicted
// mentions, falling back to `gold` for concepts the prediction never
// mentions.
std::vector<RelationKey> PredictedRelationKeys(const Corpus& pred,
                                               const Corpus* gold = nullptr);

struct ReScoreOptions {
  bool label_sensitive = true;
};

// Set comparison of relation keys, deduplicated on both sides. True
// positives and false negatives are filed under the gold pair type, false
// positives under the predicted one. Throws UnknownDocumentError.
MetricReport ScoreRe(const Corpus& gold,
                     std::span<const RelationKey> predictions,
                     const ReScoreOptions& options = {});

// Exact round-half-even decimal rendering of num/den (0 when den == 0).
std::string FormatRatio(int64_t num, int64_t den, int decimals = 4);

// CSV columns: category,tp,fp,fn,precision,recall,f1.
void WriteMetricsCsv(const MetricReport& report, std::ostream& out);
void WriteMetricsJson(const MetricReport& report, const std::string& title,
                      std::ostream& out);
void WriteMetricsMarkdown(const MetricReport& report, const std::string& title,
                          std::ostream& out);

}  // namespace biored

#endif  // BIORED_EVAL_H_

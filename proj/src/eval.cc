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

#include "biored/eval.h"

#include <algorithm>
#include <array>
#include <ostream>
#include <set>
#include <tuple>
#include <unordered_map>

#include "biored/parallel.h"
#include "json.hpp"

namespace biored {
namespace {

constexpr char kOverall[] = "overall";

// Half-open token index range overlapped by [start, end).
std::pair<size_t, size_t> TokenRange(std::span<const Token> tokens,
                                     int64_t start, int64_t end) {
  const auto first = static_cast<size_t>(
      std::upper_bound(tokens.begin(), tokens.end(), start,
                       [](int64_t s, const Token& t) { return s < t.end; }) -
      tokens.begin());
  size_t last = first;
  while (last < tokens.size() && tokens[last].start < end) ++last;
  return {first, last};
}

double Ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::unordered_map<std::string, const Document*> IndexById(
    const Corpus& corpus) {
  std::unordered_map<std::string, const Document*> index;
  for (const auto& d : corpus.documents) index.emplace(d.id(), &d);
  return index;
}

void CheckKnownIds(const Corpus& gold, const std::set<std::string>& ids) {
  const auto index = IndexById(gold);
  std::vector<std::string> unknown;
  for (const auto& id : ids) {
    if (index.find(id) == index.end()) unknown.push_back(id);
  }
  if (!unknown.empty()) throw UnknownDocumentError(std::move(unknown));
}

nlohmann::ordered_json RowJson(const std::string& category, const Counts& c) {
  return {{"category", category},
          {"tp", c.tp},
          {"fp", c.fp},
          {"fn", c.fn},
          {"precision", FormatRatio(c.tp, c.tp + c.fp)},
          {"recall", FormatRatio(c.tp, c.tp + c.fn)},
          {"f1", FormatRatio(2 * c.tp, 2 * c.tp + c.fp + c.fn)}};
}

}  // namespace

std::string_view MatchModeName(MatchMode mode) {
  return mode == MatchMode::kStrict ? "strict" : "relaxed";
}

std::vector<MentionMatch> MatchMentions(std::span<const Mention> gold,
                                        std::span<const Mention> pred,
                                        MatchMode mode,
                                        std::span<const Token> tokens) {
  std::vector<std::pair<size_t, size_t>> pred_ranges;
  if (mode == MatchMode::kRelaxed) {
    for (const auto& p : pred) {
      pred_ranges.push_back(TokenRange(tokens, p.start, p.end));
    }
  }
  std::vector<bool> used(pred.size(), false);
  std::vector<MentionMatch> matches;
  for (size_t g = 0; g < gold.size(); ++g) {
    const Mention& gm = gold[g];
    if (!gm.core_type) continue;
    const auto gr = mode == MatchMode::kRelaxed
                        ? TokenRange(tokens, gm.start, gm.end)
                        : std::pair<size_t, size_t>{0, 0};
    for (size_t p = 0; p < pred.size(); ++p) {
      if (used[p] || pred[p].core_type != gm.core_type) continue;
      bool ok;
      if (mode == MatchMode::kStrict) {
        ok = pred[p].start == gm.start && pred[p].end == gm.end;
      } else {
        const auto& pr = pred_ranges[p];
        ok = std::max(gr.first, pr.first) < std::min(gr.second, pr.second);
      }
      if (ok) {
        used[p] = true;
        matches.push_back({g, p});
        break;
      }
    }
  }
  return matches;
}

double Counts::precision() const { return Ratio(tp, tp + fp); }
double Counts::recall() const { return Ratio(tp, tp + fn); }
double Counts::f1() const { return Ratio(2 * tp, 2 * tp + fp + fn); }

MetricReport::MetricReport(std::vector<std::string> categories) {
  for (auto& c : categories) rows_.emplace_back(std::move(c), Counts{});
  rows_.emplace_back(kOverall, Counts{});
}

MetricReport MetricReport::ForEntityTypes() {
  std::vector<std::string> names;
  for (CoreEntityType t : kCoreEntityTypes) {
    names.emplace_back(CoreEntityTypeName(t));
  }
  return MetricReport(std::move(names));
}

MetricReport MetricReport::ForPairTypes() {
  std::vector<std::string> names;
  for (PairType t : kPairTypes) names.emplace_back(PairTypeName(t));
  return MetricReport(std::move(names));
}

void MetricReport::Add(const std::string& category, const Counts& counts) {
  auto it = std::find_if(rows_.begin(), rows_.end(),
                         [&](const auto& r) { return r.first == category; });
  if (it == rows_.end()) {
    it = rows_.insert(rows_.end() - 1, {category, Counts{}});
  }
  it->second += counts;
  rows_.back().second += counts;
}

void MetricReport::Merge(const MetricReport& other) {
  for (const auto& [category, counts] : other.rows_) {
    if (category == kOverall) continue;
    Add(category, counts);
  }
}

const Counts* MetricReport::Find(const std::string& category) const {
  for (const auto& r : rows_) {
    if (r.first == category) return &r.second;
  }
  return nullptr;
}

const Counts& MetricReport::overall() const {
  static const Counts kEmpty;
  return rows_.empty() ? kEmpty : rows_.back().second;
}

UnknownDocumentError::UnknownDocumentError(std::vector<std::string> ids)
    : std::runtime_error([&] {
        std::string msg = "predictions reference documents absent from gold:";
        for (const auto& id : ids) msg += " " + id;
        return msg;
      }()),
      ids_(std::move(ids)) {}

MetricReport ScoreNerDocument(const Document& gold, const Document* pred,
                              const NerOptions& options) {
  MetricReport report = MetricReport::ForEntityTypes();
  const std::vector<Mention> gm = gold.CoreMentions();
  const std::vector<Mention> pm =
      pred ? pred->CoreMentions() : std::vector<Mention>{};
  std::vector<Token> tokens;
  if (options.mode == MatchMode::kRelaxed) {
    tokens = TokenizeCodepoints(gold.codepoints(), options.tokenize);
  }
  const auto matches = MatchMentions(gm, pm, options.mode, tokens);
  std::vector<bool> gold_hit(gm.size(), false);
  std::vector<bool> pred_hit(pm.size(), false);
  for (const auto& m : matches) {
    gold_hit[m.gold] = true;
    pred_hit[m.pred] = true;
    report.Add(std::string(CoreEntityTypeName(*gm[m.gold].core_type)),
               {1, 0, 0});
  }
  for (size_t i = 0; i < gm.size(); ++i) {
    if (!gold_hit[i]) {
      report.Add(std::string(CoreEntityTypeName(*gm[i].core_type)), {0, 0, 1});
    }
  }
  for (size_t i = 0; i < pm.size(); ++i) {
    if (!pred_hit[i]) {
      report.Add(std::string(CoreEntityTypeName(*pm[i].core_type)), {0, 1, 0});
    }
  }
  return report;
}

MetricReport ScoreNer(const Corpus& gold, const Corpus& pred,
                      const NerOptions& options) {
  std::set<std::string> pred_ids;
  for (const auto& d : pred.documents) pred_ids.insert(d.id());
  CheckKnownIds(gold, pred_ids);
  const auto pred_index = IndexById(pred);

  // Per-document reports merged in document order keep the result
  // independent of scheduling.
  std::vector<MetricReport> partial(gold.documents.size());
  const auto n = static_cast<int64_t>(gold.documents.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(ResolveJobs(options.jobs))
  for (int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<size_t>(i);
    const Document& g = gold.documents[k];
    const auto it = pred_index.find(g.id());
    partial[k] = ScoreNerDocument(
        g, it == pred_index.end() ? nullptr : it->second, options);
  }
  MetricReport report = MetricReport::ForEntityTypes();
  for (const auto& p : partial) report.Merge(p);
  return report;
}

namespace serial {

MetricReport ScoreNer(const Corpus& gold, const Corpus& pred,
                      const NerOptions& options) {
  std::set<std::string> pred_ids;
  for (const auto& d : pred.documents) pred_ids.insert(d.id());
  CheckKnownIds(gold, pred_ids);
  MetricReport report = MetricReport::ForEntityTypes();
  for (const auto& g : gold.documents) {
    report.Merge(ScoreNerDocument(g, pred.Find(g.id()), options));
  }
  return report;
}

}  // namespace serial

RelationKey RelationKey::Make(std::string doc_id, std::string a, std::string b,
                              CoreRelationLabel label, PairType pair_type) {
  if (b < a) std::swap(a, b);
  return {std::move(doc_id), std::move(a), std::move(b), label, pair_type};
}

bool operator<(const RelationKey& x, const RelationKey& y) {
  return std::tie(x.doc_id, x.concept_a, x.concept_b, x.label) <
         std::tie(y.doc_id, y.concept_a, y.concept_b, y.label);
}

std::vector<RelationKey> AggregateInstancePredictions(
    std::span<const InstancePrediction> predictions) {
  struct Votes {
    PairType pair_type = PairType::kOther;
    std::array<int64_t, 3> count{};
    std::array<double, 3> confidence{};
  };
  std::map<std::tuple<std::string, std::string, std::string>, Votes> groups;
  for (const auto& p : predictions) {
    auto a = p.instance.concept_a;
    auto b = p.instance.concept_b;
    if (b < a) std::swap(a, b);
    Votes& v = groups[{p.instance.doc_id, a, b}];
    v.pair_type = PairTypeOf(p.instance.type_a, p.instance.type_b);
    if (!p.label) continue;
    const auto k = static_cast<size_t>(*p.label);
    ++v.count[k];
    v.confidence[k] += p.confidence;
  }
  std::vector<RelationKey> out;
  for (const auto& [key, v] : groups) {
    int best = -1;
    for (int k = 0; k < 3; ++k) {
      if (v.count[k] == 0) continue;
      if (best < 0 || v.count[k] > v.count[best]) {
        best = k;
        continue;
      }
      if (v.count[k] < v.count[best]) continue;
      const double mean_k = v.confidence[k] / static_cast<double>(v.count[k]);
      const double mean_b =
          v.confidence[best] / static_cast<double>(v.count[best]);
      if (mean_k > mean_b) best = k;
    }
    if (best < 0) continue;
    out.push_back(RelationKey::Make(std::get<0>(key), std::get<1>(key),
                                    std::get<2>(key),
                                    static_cast<CoreRelationLabel>(best),
                                    v.pair_type));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RelationKey> GoldRelationKeys(const Corpus& gold) {
  std::vector<RelationKey> keys;
  for (const auto& doc : gold.documents) {
    for (const auto& r : doc.relations()) {
      keys.push_back(RelationKey::Make(
          doc.id(), r.concept_a, r.concept_b,
          NormalizeRelationLabel(r.raw_label),
          PairTypeOf(doc.ConceptType(r.concept_a),
                     doc.ConceptType(r.concept_b))));
    }
  }
  return keys;
}

std::vector<RelationKey> PredictedRelationKeys(const Corpus& pred,
                                               const Corpus* gold) {
  std::vector<RelationKey> keys;
  for (const auto& doc : pred.documents) {
    const Document* g = gold ? gold->Find(doc.id()) : nullptr;
    auto type_of = [&](const std::string& c) {
      auto t = doc.ConceptType(c);
      if (!t && g) t = g->ConceptType(c);
      return t;
    };
    for (const auto& r : doc.relations()) {
      keys.push_back(RelationKey::Make(
          doc.id(), r.concept_a, r.concept_b,
          NormalizeRelationLabel(r.raw_label),
          PairTypeOf(type_of(r.concept_a), type_of(r.concept_b))));
    }
  }
  return keys;
}

MetricReport ScoreRe(const Corpus& gold,
                     std::span<const RelationKey> predictions,
                     const ReScoreOptions& options) {
  std::set<std::string> pred_ids;
  for (const auto& k : predictions) pred_ids.insert(k.doc_id);
  CheckKnownIds(gold, pred_ids);

  // Identity is (doc, pair) plus the label when label-sensitive; the first
  // key seen for an identity supplies its pair type.
  using Identity = std::tuple<std::string, std::string, std::string, int>;
  auto identity = [&](const RelationKey& k) -> Identity {
    return {k.doc_id, k.concept_a, k.concept_b,
            options.label_sensitive ? static_cast<int>(k.label) : -1};
  };
  std::map<Identity, PairType> gold_set;
  for (const auto& k : GoldRelationKeys(gold)) {
    gold_set.emplace(identity(k), k.pair_type);
  }
  std::map<Identity, PairType> pred_set;
  for (const auto& k : predictions) pred_set.emplace(identity(k), k.pair_type);

  MetricReport report = MetricReport::ForPairTypes();
  for (const auto& [id, pair] : pred_set) {
    const auto it = gold_set.find(id);
    if (it != gold_set.end()) {
      report.Add(std::string(PairTypeName(it->second)), {1, 0, 0});
    } else {
      report.Add(std::string(PairTypeName(pair)), {0, 1, 0});
    }
  }
  for (const auto& [id, pair] : gold_set) {
    if (pred_set.find(id) == pred_set.end()) {
      report.Add(std::string(PairTypeName(pair)), {0, 0, 1});
    }
  }
  return report;
}

std::string FormatRatio(int64_t num, int64_t den, int decimals) {
  int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  int64_t q = 0;
  if (den != 0) {
    const __int128 scaled = static_cast<__int128>(num) * scale;
    auto quot = static_cast<int64_t>(scaled / den);
    const auto rem = static_cast<int64_t>(scaled % den);
    if (2 * static_cast<__int128>(rem) > den ||
        (2 * static_cast<__int128>(rem) == den && (quot % 2) != 0)) {
      ++quot;
    }
    q = quot;
  }
  std::string out = std::to_string(q / scale);
  if (decimals > 0) {
    std::string frac = std::to_string(q % scale);
    frac.insert(0, static_cast<size_t>(decimals) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

void WriteMetricsCsv(const MetricReport& report, std::ostream& out) {
  out << "category,tp,fp,fn,precision,recall,f1\n";
  for (const auto& [category, c] : report.rows()) {
    out << category << ',' << c.tp << ',' << c.fp << ',' << c.fn << ','
        << FormatRatio(c.tp, c.tp + c.fp) << ','
        << FormatRatio(c.tp, c.tp + c.fn) << ','
        << FormatRatio(2 * c.tp, 2 * c.tp + c.fp + c.fn) << '\n';
  }
}

void WriteMetricsJson(const MetricReport& report, const std::string& title,
                      std::ostream& out) {
  nlohmann::ordered_json j;
  j["report"] = title;
  j["averaging"] = "micro";
  j["zero_denominator"] = "undefined->0";
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [category, c] : report.rows()) {
    j["rows"].push_back(RowJson(category, c));
  }
  out << j.dump(2) << '\n';
}

void WriteMetricsMarkdown(const MetricReport& report, const std::string& title,
                          std::ostream& out) {
  out << "### " << title << "\n\n";
  out << "| Category | TP | FP | FN | Precision | Recall | F1 |\n";
  out << "|---|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& [category, c] : report.rows()) {
    out << "| " << category << " | " << c.tp << " | " << c.fp << " | " << c.fn
        << " | " << FormatRatio(c.tp, c.tp + c.fp) << " | "
        << FormatRatio(c.tp, c.tp + c.fn) << " | "
        << FormatRatio(2 * c.tp, 2 * c.tp + c.fp + c.fn) << " |\n";
  }
  out << "\nZero denominators are reported as 0 (undefined->0).\n";
}

}  // namespace biored

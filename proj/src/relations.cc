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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "biored/parallel.h"
#include "biored/preprocess.h"
#include "biored/text.h"
#include "json.hpp"

namespace biored {
namespace {

using nlohmann::ordered_json;

// Mentions with a core type and at least one linked concept, in document
// order, each tagged with its sentence range.
struct PairableMention {
  const Mention* mention;
  std::vector<std::string> concepts;
  int sent_first;
  int sent_last;
};

std::vector<PairableMention> PairableMentions(
    const Document& doc, const std::vector<SentenceSpan>& sentences) {
  std::vector<PairableMention> out;
  for (const auto& m : doc.mentions()) {
    if (!m.core_type) continue;
    auto concepts = m.LinkedConcepts();
    if (concepts.empty()) continue;
    const int first = SentenceOf(sentences, m.start);
    const int last = SentenceOf(sentences, std::max(m.start, m.end - 1));
    out.push_back({&m, std::move(concepts), first, last});
  }
  return out;
}

bool Overlaps(const Mention& a, const Mention& b) {
  return a.start < b.end && b.start < a.end;
}

int SentenceDistance(const PairableMention& a, const PairableMention& b) {
  if (a.sent_last < b.sent_first) return b.sent_first - a.sent_last;
  if (b.sent_last < a.sent_first) return a.sent_first - b.sent_last;
  return 0;
}

std::optional<CoreRelationLabel> GoldLabel(const Document& doc,
                                           const std::string& a,
                                           const std::string& b) {
  for (const auto& r : doc.relations()) {
    if (r.Joins(a, b)) return NormalizeRelationLabel(r.raw_label);
  }
  return std::nullopt;
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double UnitDraw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string_view CoreRelationLabelName(CoreRelationLabel label) {
  switch (label) {
    case CoreRelationLabel::kAssociation:
      return "Association";
    case CoreRelationLabel::kNegativeCorrelation:
      return "Negative_Correlation";
    case CoreRelationLabel::kPositiveCorrelation:
      return "Positive_Correlation";
  }
  return "Association";
}

CoreRelationLabel NormalizeRelationLabel(std::string_view raw_label) {
  std::string key;
  for (char c : AsciiLower(raw_label)) {
    if (c != ' ' && c != '_' && c != '-') key += c;
  }
  if (key == "negativecorrelation") {
    return CoreRelationLabel::kNegativeCorrelation;
  }
  if (key == "positivecorrelation") {
    return CoreRelationLabel::kPositiveCorrelation;
  }
  return CoreRelationLabel::kAssociation;
}

std::optional<CoreRelationLabel> ParseCoreRelationLabel(std::string_view name) {
  for (auto l : {CoreRelationLabel::kAssociation,
                 CoreRelationLabel::kNegativeCorrelation,
                 CoreRelationLabel::kPositiveCorrelation}) {
    if (name == CoreRelationLabelName(l)) return l;
  }
  return std::nullopt;
}

uint64_t DocumentSeed(uint64_t global_seed, std::string_view doc_id) {
  // FNV-1a over the id, then a splitmix64 finalizer with the global seed.
  uint64_t h = 1469598103934665603ULL;
  for (char c : doc_id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  uint64_t z = h ^ (global_seed + 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<ReInstance> GenerateReInstances(const Document& doc,
                                            const ReOptions& options) {
  const auto sentences = SegmentDocument(doc, options.segmenter);
  const auto mentions = PairableMentions(doc, sentences);
  const int last_sentence =
      sentences.empty() ? 0 : static_cast<int>(sentences.size()) - 1;
  std::mt19937_64 rng(DocumentSeed(options.seed, doc.id()));

  std::vector<ReInstance> out;
  for (size_t i = 0; i < mentions.size(); ++i) {
    for (size_t j = i + 1; j < mentions.size(); ++j) {
      const PairableMention& p1 = mentions[i];
      const PairableMention& p2 = mentions[j];
      const Mention& m1 = *p1.mention;
      const Mention& m2 = *p2.mention;
      if (Overlaps(m1, m2)) continue;
      if (SentenceDistance(p1, p2) > options.pair_window) continue;

      const int lo = std::min(p1.sent_first, p2.sent_first);
      const int hi = std::max(p1.sent_last, p2.sent_last);
      const int win_lo = std::max(0, lo - options.context);
      const int win_hi = std::min(last_sentence, hi + options.context);
      int64_t ws = m1.start;
      int64_t we = m2.end;
      if (!sentences.empty()) {
        ws = std::min(ws, sentences[static_cast<size_t>(win_lo)].start);
        we = std::max(we, sentences[static_cast<size_t>(win_hi)].end);
      }
      std::string text = doc.Slice(ws, m1.start);
      text += kE1Open;
      text += doc.Slice(m1.start, m1.end);
      text += kE1Close;
      text += doc.Slice(m1.end, m2.start);
      text += kE2Open;
      text += doc.Slice(m2.start, m2.end);
      text += kE2Close;
      text += doc.Slice(m2.end, we);

      std::vector<std::pair<std::string, std::string>> emitted;
      for (const auto& c1 : p1.concepts) {
        for (const auto& c2 : p2.concepts) {
          if (c1 == c2) continue;
          auto key = c1 < c2 ? std::pair{c1, c2} : std::pair{c2, c1};
          if (std::find(emitted.begin(), emitted.end(), key) !=
              emitted.end()) {
            continue;
          }
          emitted.push_back(std::move(key));
          ReInstance inst;
          inst.doc_id = doc.id();
          inst.concept_a = c1;
          inst.concept_b = c2;
          inst.type_a = *m1.core_type;
          inst.type_b = *m2.core_type;
          inst.window_text = text;
          inst.label = GoldLabel(doc, c1, c2);
          inst.sent_lo = win_lo;
          inst.sent_hi = win_hi;
          if (!inst.label && options.negative_keep_ratio &&
              UnitDraw(rng) >= *options.negative_keep_ratio) {
            continue;
          }
          out.push_back(std::move(inst));
        }
      }
    }
  }
  return out;
}

Reachability WindowReachability(const Document& doc, const ReOptions& options) {
  const auto sentences = SegmentDocument(doc, options.segmenter);
  const auto mentions = PairableMentions(doc, sentences);
  Reachability r;
  for (const auto& rel : DedupRelations(doc.relations())) {
    ++r.gold_relations;
    bool found = false;
    for (size_t i = 0; i < mentions.size() && !found; ++i) {
      for (size_t j = 0; j < mentions.size() && !found; ++j) {
        if (i == j) continue;
        const auto& a = mentions[i];
        const auto& b = mentions[j];
        if (!a.mention->HasConcept(rel.concept_a) ||
            !b.mention->HasConcept(rel.concept_b) ||
            rel.concept_a == rel.concept_b) {
          continue;
        }
        found = !Overlaps(*a.mention, *b.mention) &&
                SentenceDistance(a, b) <= options.pair_window;
      }
    }
    if (found) ++r.reachable;
  }
  return r;
}

ReCorpusResult GenerateReCorpus(const Corpus& corpus, const ReOptions& options,
                                int jobs) {
  ReCorpusResult result;
  result.instances.resize(corpus.documents.size());
  std::vector<Reachability> reach(corpus.documents.size());
  const auto n = static_cast<int64_t>(corpus.documents.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(ResolveJobs(jobs))
  for (int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<size_t>(i);
    result.instances[k] = GenerateReInstances(corpus.documents[k], options);
    reach[k] = WindowReachability(corpus.documents[k], options);
  }
  for (const auto& r : reach) result.reachability.Merge(r);
  return result;
}

namespace serial {

ReCorpusResult GenerateReCorpus(const Corpus& corpus,
                                const ReOptions& options) {
  ReCorpusResult result;
  for (const auto& doc : corpus.documents) {
    result.instances.push_back(GenerateReInstances(doc, options));
    result.reachability.Merge(WindowReachability(doc, options));
  }
  return result;
}

}  // namespace serial

std::string BioToJson(const BioSequence& seq) {
  ordered_json tokens = ordered_json::array();
  for (const auto& t : seq.tokens) {
    tokens.push_back({{"text", t.surface}, {"start", t.start}, {"end", t.end}});
  }
  ordered_json j;
  j["doc_id"] = seq.doc_id;
  j["tokens"] = std::move(tokens);
  j["tags"] = seq.tags;
  return j.dump();
}

std::string ReInstanceToJson(const ReInstance& inst) {
  ordered_json j;
  j["doc_id"] = inst.doc_id;
  j["e1_id"] = inst.concept_a;
  j["e2_id"] = inst.concept_b;
  j["e1_type"] = std::string(CoreEntityTypeName(inst.type_a));
  j["e2_type"] = std::string(CoreEntityTypeName(inst.type_b));
  j["text"] = inst.window_text;
  if (inst.label) {
    j["label"] = std::string(CoreRelationLabelName(*inst.label));
  } else {
    j["label"] = nullptr;
  }
  j["sent_lo"] = inst.sent_lo;
  j["sent_hi"] = inst.sent_hi;
  return j.dump();
}

ReInstance ReInstanceFromJson(std::string_view line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::runtime_error("RE instance record is not a JSON object");
  }
  auto type = [&](const char* key) {
    const auto t = ParseCoreEntityType(j.at(key).get<std::string>());
    if (!t) throw std::runtime_error(std::string("bad entity type in ") + key);
    return *t;
  };
  try {
    ReInstance inst;
    inst.doc_id = j.at("doc_id").get<std::string>();
    inst.concept_a = j.at("e1_id").get<std::string>();
    inst.concept_b = j.at("e2_id").get<std::string>();
    inst.type_a = type("e1_type");
    inst.type_b = type("e2_type");
    inst.window_text = j.value("text", "");
    if (j.contains("label") && j["label"].is_string()) {
      inst.label = ParseCoreRelationLabel(j["label"].get<std::string>());
    }
    inst.sent_lo = j.value("sent_lo", 0);
    inst.sent_hi = j.value("sent_hi", 0);
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("RE instance record: ") + e.what());
  }
}

}  // namespace biored

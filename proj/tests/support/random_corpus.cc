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

#include "random_corpus.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "biored/text.h"

namespace biored::testing {
namespace {

const std::vector<std::string> kWords = {
    "kinase",  "binds",    "the",     "receptor", "in",      "mice",
    "tumor",   "growth",   "was",     "reduced",  "by",      "drug",
    "β-catenin", "naïve",  "cells",   "(ITD)",    "p.R513H", "ERK1/2",
    "levels",  "increased", "after",  "therapy",  "of",      "and",
    "Fig.",    "e.g.",     "α-synuclein", "IL-6", "with",    "patients"};

const std::vector<std::string> kRawTypes = {
    "GeneOrGeneProduct", "SequenceVariant", "DiseaseOrPhenotypicFeature",
    "ChemicalEntity"};
const std::vector<std::string> kExoticTypes = {"OrganismTaxon", "CellLine"};
const std::vector<std::string> kLabels = {
    "Association", "Positive_Correlation", "Negative_Correlation", "Bind",
    "Cotreatment", "Comparison", "Drug_Interaction", "Conversion"};

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <typename T>
const T& Pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[static_cast<size_t>(Uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

std::string Sentence(std::mt19937_64& rng) {
  std::string s;
  const int n = Uniform(rng, 3, 9);
  for (int i = 0; i < n; ++i) {
    std::string w = Pick(rng, kWords);
    if (i == 0 && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
    if (i > 0) s += ' ';
    s += w;
  }
  return s + ".";
}

struct WordSpan {
  int64_t start;
  int64_t end;
};

std::vector<WordSpan> Words(const std::u32string& text) {
  std::vector<WordSpan> out;
  int64_t i = 0;
  const auto n = static_cast<int64_t>(text.size());
  while (i < n) {
    while (i < n && IsSpace(text[static_cast<size_t>(i)])) ++i;
    if (i >= n) break;
    const int64_t s = i;
    while (i < n && !IsSpace(text[static_cast<size_t>(i)])) ++i;
    out.push_back({s, i});
  }
  return out;
}

}  // namespace

Corpus RandomCorpus(std::mt19937_64& rng, const RandomCorpusOptions& options) {
  Corpus corpus;
  corpus.source_name = "random";
  const int docs = Uniform(rng, 1, options.max_docs);
  std::set<int> used_ids;
  for (int d = 0; d < docs; ++d) {
    int id;
    do {
      id = Uniform(rng, 10000000, 39999999);
    } while (!used_ids.insert(id).second);

    const std::string title = Sentence(rng);
    std::string abstract;
    const int sentences = Uniform(rng, 0, options.max_sentences);
    for (int s = 0; s < sentences; ++s) {
      if (s > 0) abstract += ' ';
      abstract += Sentence(rng);
    }
    const Document text_only(std::to_string(id), title, abstract);
    const std::u32string& cps = text_only.codepoints();
    const auto words = Words(cps);

    std::vector<std::string> concept_pool;
    for (int i = 0; i < 4; ++i) {
      concept_pool.push_back((Coin(rng, 0.5) ? "D" : "") +
                             std::to_string(Uniform(rng, 1, 999)));
    }

    std::vector<Mention> mentions;
    const int n_mentions = Uniform(rng, 0, options.max_mentions);
    for (int m = 0; m < n_mentions && !words.empty(); ++m) {
      Mention mention;
      const int first = Uniform(rng, 0, static_cast<int>(words.size()) - 1);
      const int last = std::min<int>(static_cast<int>(words.size()) - 1,
                                     first + Uniform(rng, 0, 2));
      mention.start = words[static_cast<size_t>(first)].start;
      mention.end = words[static_cast<size_t>(last)].end;
      if (!options.word_aligned && Coin(rng, 0.3) &&
          mention.end - mention.start > 1) {
        mention.start += Uniform(rng, 0, 1);
      }
      mention.surface = text_only.Slice(mention.start, mention.end);
      const bool exotic_type = options.exotic && Coin(rng, 0.1);
      mention.raw_type = exotic_type ? Pick(rng, kExoticTypes)
                                     : Pick(rng, kRawTypes);
      mention.core_type = MapEntityType(mention.raw_type);
      if (options.exotic && Coin(rng, 0.1)) {
        mention.has_id_field = false;
      } else {
        mention.has_id_field = true;
        mention.concept_ids.push_back(
            options.exotic && Coin(rng, 0.05) ? std::string(kNoConcept)
                                              : Pick(rng, concept_pool));
        if (options.exotic && Coin(rng, 0.1)) {
          mention.concept_ids.push_back(Pick(rng, concept_pool));
        }
        if (options.exotic && Coin(rng, 0.05)) mention.extras.push_back("x");
      }
      mentions.push_back(std::move(mention));
    }

    std::vector<RelationAnnotation> relations;
    std::vector<std::string> linked;
    for (const auto& m : mentions) {
      for (const auto& c : m.LinkedConcepts()) linked.push_back(c);
    }
    std::sort(linked.begin(), linked.end());
    linked.erase(std::unique(linked.begin(), linked.end()), linked.end());
    if (linked.size() >= 2) {
      const int n_rel = Uniform(rng, 0, options.max_relations);
      for (int r = 0; r < n_rel; ++r) {
        RelationAnnotation rel;
        rel.concept_a = Pick(rng, linked);
        do {
          rel.concept_b = Pick(rng, linked);
        } while (rel.concept_b == rel.concept_a);
        rel.raw_label = Pick(rng, kLabels);
        if (options.exotic && Coin(rng, 0.5)) {
          rel.extras.push_back(Coin(rng, 0.5) ? "Novel" : "No");
        }
        relations.push_back(std::move(rel));
      }
    }
    corpus.documents.emplace_back(std::to_string(id), title, abstract,
                                  std::move(mentions), std::move(relations));
  }
  return corpus;
}

Corpus PerturbMentions(const Corpus& gold, std::mt19937_64& rng) {
  Corpus pred;
  pred.source_name = "perturbed";
  for (const auto& doc : gold.documents) {
    const auto words = Words(doc.codepoints());
    const auto len = static_cast<int64_t>(doc.codepoints().size());
    std::vector<Mention> out;
    for (const auto& g : doc.mentions()) {
      if (Coin(rng, 0.15)) continue;  // missed
      Mention m = g;
      if (Coin(rng, 0.25)) {
        m.start = std::clamp<int64_t>(m.start + Uniform(rng, -6, 6), 0, len - 1);
        m.end = std::clamp<int64_t>(m.end + Uniform(rng, -6, 6), m.start + 1,
                                    len);
        m.surface = doc.Slice(m.start, m.end);
      }
      if (Coin(rng, 0.1)) {
        m.raw_type = Pick(rng, kRawTypes);
        m.core_type = MapEntityType(m.raw_type);
      }
      out.push_back(std::move(m));
    }
    const int spurious = words.empty() ? 0 : Uniform(rng, 0, 2);
    for (int i = 0; i < spurious; ++i) {
      const auto& w = words[static_cast<size_t>(
          Uniform(rng, 0, static_cast<int>(words.size()) - 1))];
      Mention m;
      m.start = w.start;
      m.end = w.end;
      m.surface = doc.Slice(w.start, w.end);
      m.raw_type = Pick(rng, kRawTypes);
      m.core_type = MapEntityType(m.raw_type);
      out.push_back(std::move(m));
    }
    pred.documents.push_back(doc.WithMentions(std::move(out)));
  }
  return pred;
}

}  // namespace biored::testing

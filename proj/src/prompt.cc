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

#include <random>
#include <sstream>

#include "biored/preprocess.h"

namespace biored {
namespace {

constexpr std::string_view kInstructionHeader = "Instruction";
constexpr std::string_view kInstructionText =
    "Each of the following examples include the title, abstract, and "
    "annotations for PubMed records.";
constexpr std::string_view kQuestionHeader = "Question";
constexpr std::string_view kQuestionText =
    "Process the title and abstract of the new PubMed record and return the "
    "annotations in new lines.";

std::optional<CoreEntityType> MissingCoreType(const Document& doc) {
  for (CoreEntityType t : kCoreEntityTypes) {
    bool present = false;
    for (const auto& m : doc.mentions()) {
      if (m.core_type == t) {
        present = true;
        break;
      }
    }
    if (!present) return t;
  }
  return std::nullopt;
}

}  // namespace

PromptBundle BuildFewshotPrompt(std::span<const Document> examples,
                                std::span<const Document> queries) {
  if (examples.size() != kPromptExamples) {
    throw PromptError("expected " + std::to_string(kPromptExamples) +
                      " examples, got " + std::to_string(examples.size()));
  }
  if (queries.empty() || queries.size() > kMaxPromptQueries) {
    throw PromptError("expected 1-" + std::to_string(kMaxPromptQueries) +
                      " query documents, got " +
                      std::to_string(queries.size()));
  }
  for (size_t i = 0; i < examples.size(); ++i) {
    if (const auto missing = MissingCoreType(examples[i])) {
      throw PromptError("example " + std::to_string(i + 1) + " lacks " +
                        std::string(CoreEntityTypeName(*missing)));
    }
  }

  std::ostringstream out;
  out << kInstructionHeader << '\n' << kInstructionText << '\n';
  for (const auto& doc : examples) {
    out << '\n';
    out << doc.id() << "|t|" << doc.title() << '\n';
    out << doc.id() << "|a|" << doc.abstract() << '\n';
    for (const auto& m : doc.mentions()) {
      if (!m.core_type) continue;
      out << doc.id() << '\t' << m.start << '\t' << m.end << '\t' << m.surface
          << '\t' << m.raw_type << '\n';
    }
  }
  out << '\n' << kQuestionHeader << '\n' << kQuestionText << '\n';
  for (size_t i = 0; i < queries.size(); ++i) {
    if (i > 0) out << '\n';
    out << queries[i].id() << "|t|" << queries[i].title() << '\n';
    out << queries[i].id() << "|a|" << queries[i].abstract() << '\n';
  }

  PromptBundle bundle;
  bundle.instruction_examples.assign(examples.begin(), examples.end());
  bundle.question_docs.assign(queries.begin(), queries.end());
  bundle.rendered = out.str();
  return bundle;
}

std::vector<const Document*> DocumentsWithAllCoreTypes(const Corpus& corpus) {
  std::vector<const Document*> out;
  for (const auto& doc : corpus.documents) {
    if (!MissingCoreType(doc)) out.push_back(&doc);
  }
  return out;
}

std::vector<Document> SelectFewshotExamples(const Corpus& pool, uint64_t seed,
                                            int count) {
  auto eligible = DocumentsWithAllCoreTypes(pool);
  if (static_cast<int>(eligible.size()) < count) {
    throw PromptError("only " + std::to_string(eligible.size()) +
                      " documents contain all four entity types; need " +
                      std::to_string(count));
  }
  // Partial Fisher-Yates with modulo draws: reproducible across standard
  // libraries, which std::shuffle is not.
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < static_cast<size_t>(count); ++i) {
    const size_t j = i + static_cast<size_t>(rng() % (eligible.size() - i));
    std::swap(eligible[i], eligible[j]);
  }
  std::vector<Document> out;
  for (int i = 0; i < count; ++i) out.push_back(*eligible[static_cast<size_t>(i)]);
  return out;
}

}  // namespace biored

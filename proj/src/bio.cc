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

#include "biored/parallel.h"
#include "biored/preprocess.h"

namespace biored {
namespace {

// First token whose end is past `start`; tokens are sorted and disjoint.
size_t FirstOverlapping(const std::vector<Token>& tokens, int64_t start) {
  return static_cast<size_t>(
      std::upper_bound(tokens.begin(), tokens.end(), start,
                       [](int64_t s, const Token& t) { return s < t.end; }) -
      tokens.begin());
}

std::string Span(const Mention& m) {
  return "'" + m.surface + "' [" + std::to_string(m.start) + "," +
         std::to_string(m.end) + ")";
}

}  // namespace

BioResult EmitBio(const Document& doc, TokenizeMode mode) {
  BioResult result;
  BioSequence& seq = result.sequence;
  seq.doc_id = doc.id();
  seq.tokens = TokenizeCodepoints(doc.codepoints(), mode);
  seq.tags.assign(seq.tokens.size(), "O");

  std::vector<Mention> mentions = doc.CoreMentions();
  std::stable_sort(mentions.begin(), mentions.end(),
                   [](const Mention& a, const Mention& b) {
                     if (a.start != b.start) return a.start < b.start;
                     return a.end - a.start > b.end - b.start;
                   });

  std::vector<bool> claimed(seq.tokens.size(), false);
  for (const Mention& m : mentions) {
    size_t first = FirstOverlapping(seq.tokens, m.start);
    size_t last = first;
    while (last < seq.tokens.size() && seq.tokens[last].start < m.end) ++last;
    if (first == last) {
      result.warnings.push_back("mention " + Span(m) + " covers no token");
      continue;
    }
    const bool contested =
        std::any_of(claimed.begin() + static_cast<std::ptrdiff_t>(first),
                    claimed.begin() + static_cast<std::ptrdiff_t>(last),
                    [](bool b) { return b; });
    if (contested) {
      result.warnings.push_back("mention " + Span(m) +
                                " overlaps an earlier mention; dropped");
      continue;
    }
    const std::string type(CoreEntityTypeName(*m.core_type));
    for (size_t i = first; i < last; ++i) {
      claimed[i] = true;
      seq.tags[i] = (i == first ? "B-" : "I-") + type;
    }
  }
  return result;
}

DecodeResult DecodeBio(const BioSequence& seq) {
  DecodeResult result;
  std::optional<Mention> open;
  auto close = [&]() {
    if (open) {
      result.mentions.push_back(std::move(*open));
      open.reset();
    }
  };
  const size_t n = std::min(seq.tokens.size(), seq.tags.size());
  if (seq.tokens.size() != seq.tags.size()) {
    result.warnings.push_back("token/tag length mismatch; decoding " +
                              std::to_string(n) + " positions");
  }
  for (size_t i = 0; i < n; ++i) {
    const Token& tok = seq.tokens[i];
    const std::string& tag = seq.tags[i];
    if (tag == "O") {
      close();
      continue;
    }
    std::optional<CoreEntityType> type;
    char prefix = 0;
    if (tag.size() > 2 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-') {
      prefix = tag[0];
      type = ParseCoreEntityType(std::string_view(tag).substr(2));
    }
    if (!type) {
      result.warnings.push_back("position " + std::to_string(i) +
                                ": unknown tag '" + tag + "' read as O");
      close();
      continue;
    }
    if (prefix == 'I' && !(open && open->core_type == type)) {
      result.warnings.push_back("position " + std::to_string(i) +
                                ": orphan " + tag + " repaired to B-" +
                                std::string(CoreEntityTypeName(*type)));
      prefix = 'B';
    }
    if (prefix == 'B') {
      close();
      Mention m;
      m.start = tok.start;
      m.end = tok.end;
      m.surface = tok.surface;
      m.raw_type = std::string(DefaultRawType(*type));
      m.core_type = type;
      open = std::move(m);
    } else {
      open->surface.append(static_cast<size_t>(tok.start - open->end), ' ');
      open->surface += tok.surface;
      open->end = tok.end;
    }
  }
  close();
  return result;
}

std::vector<BioResult> EmitBioCorpus(const Corpus& corpus, TokenizeMode mode,
                                     int jobs) {
  std::vector<BioResult> out(corpus.documents.size());
  const auto n = static_cast<int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(ResolveJobs(jobs))
  for (int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<size_t>(i);
    out[k] = EmitBio(corpus.documents[k], mode);
  }
  return out;
}

namespace serial {

std::vector<BioResult> EmitBioCorpus(const Corpus& corpus, TokenizeMode mode) {
  std::vector<BioResult> out;
  out.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents) out.push_back(EmitBio(doc, mode));
  return out;
}

}  // namespace serial
}  // namespace biored

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

#include "biored/preprocess.h"
#include "biored/text.h"

namespace biored {
namespace {

char32_t FoldAscii(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c - U'A' + U'a' : c;
}

bool IsAlnum(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
      (c >= U'0' && c <= U'9')) {
    return true;
  }
  return c >= 0x80 && !IsSpace(c);
}

void PushToken(std::u32string_view text, int64_t start, int64_t end,
               std::vector<Token>* out) {
  out->push_back({EncodeUtf8(text.substr(static_cast<size_t>(start),
                                         static_cast<size_t>(end - start))),
                  start, end});
}

void SplitPunctuation(std::u32string_view text, int64_t start, int64_t end,
                      std::vector<Token>* out) {
  int64_t b = start;
  int64_t e = end;
  while (b < e && IsAsciiPunct(text[static_cast<size_t>(b)])) {
    PushToken(text, b, b + 1, out);
    ++b;
  }
  std::vector<Token> trailing;
  while (e > b && IsAsciiPunct(text[static_cast<size_t>(e - 1)])) {
    PushToken(text, e - 1, e, &trailing);
    --e;
  }
  if (b < e) PushToken(text, b, e, out);
  out->insert(out->end(), trailing.rbegin(), trailing.rend());
}

class Segmenter {
 public:
  Segmenter(std::u32string_view text, const SegmenterOptions& options)
      : text_(text) {
    for (const auto& a : options.abbreviations) {
      abbreviations_.push_back(DecodeUtf8(a));
    }
  }

  // Appends sentences found in [begin, end).
  void Split(int64_t begin, int64_t end, std::vector<SentenceSpan>* out) const {
    int64_t pos = SkipSpace(begin, end);
    int64_t start = pos;
    while (pos < end) {
      const char32_t c = At(pos);
      if ((c == U'.' || c == U'?' || c == U'!') && pos + 1 < end &&
          IsSpace(At(pos + 1))) {
        const int64_t next = SkipSpace(pos + 1, end);
        if (next < end && IsUpperOrDigit(At(next)) && !Guarded(pos)) {
          Emit(start, pos + 1, out);
          start = next;
          pos = next;
          continue;
        }
      }
      ++pos;
    }
    if (start < end) {
      int64_t last = end;
      while (last > start && IsSpace(At(last - 1))) --last;
      if (last > start) Emit(start, last, out);
    }
  }

 private:
  char32_t At(int64_t i) const { return text_[static_cast<size_t>(i)]; }

  int64_t SkipSpace(int64_t pos, int64_t end) const {
    while (pos < end && IsSpace(At(pos))) ++pos;
    return pos;
  }

  static void Emit(int64_t start, int64_t end,
                   std::vector<SentenceSpan>* out) {
    out->push_back({static_cast<int>(out->size()), start, end});
  }

  // True if the terminator at `pos` closes a guarded abbreviation.
  bool Guarded(int64_t pos) const {
    for (const auto& a : abbreviations_) {
      const auto len = static_cast<int64_t>(a.size());
      const int64_t from = pos + 1 - len;
      if (len == 0 || from < 0) continue;
      bool same = true;
      for (int64_t k = 0; k < len && same; ++k) {
        same = FoldAscii(At(from + k)) == FoldAscii(a[static_cast<size_t>(k)]);
      }
      if (same && (from == 0 || !IsAlnum(At(from - 1)))) return true;
    }
    return false;
  }

  std::u32string_view text_;
  std::vector<std::u32string> abbreviations_;
};

}  // namespace

std::vector<Token> TokenizeCodepoints(std::u32string_view text,
                                      TokenizeMode mode) {
  std::vector<Token> tokens;
  const auto n = static_cast<int64_t>(text.size());
  int64_t i = 0;
  while (i < n) {
    while (i < n && IsSpace(text[static_cast<size_t>(i)])) ++i;
    if (i >= n) break;
    int64_t j = i;
    while (j < n && !IsSpace(text[static_cast<size_t>(j)])) ++j;
    if (mode == TokenizeMode::kWhitespace) {
      PushToken(text, i, j, &tokens);
    } else {
      SplitPunctuation(text, i, j, &tokens);
    }
    i = j;
  }
  return tokens;
}

std::vector<Token> Tokenize(std::string_view utf8, TokenizeMode mode) {
  return TokenizeCodepoints(DecodeUtf8(utf8), mode);
}

std::vector<std::string> SegmenterOptions::DefaultAbbreviations() {
  return {"Fig.",  "Figs.", "et al.", "e.g.", "i.e.", "ca.",  "cf.",
          "vs.",   "approx.", "Dr.",  "Drs.", "No.",  "Nos.", "resp.",
          "Ref.",  "Refs.", "Eq.",    "Eqs.", "sp.",  "spp.", "var.",
          "Inc.",  "Ltd.",  "Co.",    "al."};
}

std::vector<SentenceSpan> SegmentText(std::u32string_view text,
                                      const SegmenterOptions& options) {
  std::vector<SentenceSpan> out;
  Segmenter(text, options).Split(0, static_cast<int64_t>(text.size()), &out);
  return out;
}

std::vector<SentenceSpan> SegmentText(std::string_view utf8,
                                      const SegmenterOptions& options) {
  return SegmentText(std::u32string_view(DecodeUtf8(utf8)), options);
}

std::vector<SentenceSpan> SegmentDocument(const Document& doc,
                                          const SegmenterOptions& options) {
  const std::u32string& text = doc.codepoints();
  const auto title_end = static_cast<int64_t>(doc.title_length());
  const auto n = static_cast<int64_t>(text.size());
  std::vector<SentenceSpan> out;
  int64_t b = 0;
  while (b < title_end && IsSpace(text[static_cast<size_t>(b)])) ++b;
  int64_t e = title_end;
  while (e > b && IsSpace(text[static_cast<size_t>(e - 1)])) --e;
  if (e > b) out.push_back({0, b, e});
  Segmenter(text, options).Split(title_end, n, &out);
  return out;
}

int SentenceOf(const std::vector<SentenceSpan>& sentences, int64_t offset) {
  if (sentences.empty()) return 0;
  const auto it = std::upper_bound(
      sentences.begin(), sentences.end(), offset,
      [](int64_t off, const SentenceSpan& s) { return off < s.start; });
  if (it == sentences.begin()) return 0;
  return std::prev(it)->index;
}

}  // namespace biored

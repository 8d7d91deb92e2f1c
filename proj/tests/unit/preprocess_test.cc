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

#include "biored/preprocess.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "biored/text.h"
#include "random_corpus.h"

namespace biored {
namespace {

constexpr const char* kItd = "Iodide transport defect (ITD) is a rare disorder";
constexpr const char* kCrocin =
    "Crocin improves lipid dysregulation in subacute diazinon exposure "
    "through ERK1/2 pathways";

Mention Make(int64_t start, int64_t end, const Document& text,
             CoreEntityType type, std::vector<std::string> ids = {}) {
  Mention m;
  m.start = start;
  m.end = end;
  m.surface = text.Slice(start, end);
  m.raw_type = std::string(DefaultRawType(type));
  m.core_type = type;
  m.has_id_field = !ids.empty();
  m.concept_ids = std::move(ids);
  return m;
}

Corpus Load(const std::string& name) {
  return LoadPubtatorFile(std::string(BIORED_TEST_DATA) + "/" + name);
}

std::string StripMarkers(std::string s) {
  for (std::string_view marker : {kE1Open, kE1Close, kE2Open, kE2Close}) {
    const size_t at = s.find(marker);
    if (at != std::string::npos) s.erase(at, marker.size());
  }
  return s;
}

size_t Count(const std::string& hay, std::string_view needle) {
  size_t n = 0;
  for (size_t p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1)) {
    ++n;
  }
  return n;
}

// ------------------------------------------------------------- tokenize

TEST(Tokenize, ItdSentenceHasEightTokens) {
  const auto tokens = Tokenize(kItd);
  ASSERT_EQ(tokens.size(), 8u);
  EXPECT_EQ(tokens[3].surface, "(ITD)");
  EXPECT_EQ(tokens[3].start, 24);
  EXPECT_EQ(tokens[3].end, 29);
}

TEST(Tokenize, EmptyAndBlank) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("  \t\n").empty());
}

TEST(Tokenize, PunctuationModeSplitsParentheses) {
  const auto tokens = Tokenize(kItd, TokenizeMode::kSplitPunctuation);
  ASSERT_EQ(tokens.size(), 10u);
  EXPECT_EQ(tokens[3], (Token{"(", 24, 25}));
  EXPECT_EQ(tokens[4], (Token{"ITD", 25, 28}));
  EXPECT_EQ(tokens[5], (Token{")", 28, 29}));
}

TEST(Tokenize, OffsetsIndexCodePoints) {
  const std::string text = "β-catenin  and naïve";
  const auto cps = DecodeUtf8(text);
  for (auto mode : {TokenizeMode::kWhitespace, TokenizeMode::kSplitPunctuation}) {
    int64_t prev_end = 0;
    for (const auto& t : Tokenize(text, mode)) {
      EXPECT_LT(t.start, t.end);
      EXPECT_GE(t.start, prev_end);
      prev_end = t.end;
      EXPECT_EQ(EncodeUtf8(std::u32string_view(cps).substr(
                    static_cast<size_t>(t.start),
                    static_cast<size_t>(t.end - t.start))),
                t.surface);
    }
  }
  EXPECT_EQ(Tokenize(text)[2], (Token{"naïve", 15, 20}));
}

// -------------------------------------------------------------- segment

TEST(Segment, TitleIsSentenceZero) {
  const Document doc("1", "Abc.", "Def ghi.");
  const auto s = SegmentDocument(doc);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (SentenceSpan{0, 0, 4}));
  EXPECT_EQ(s[1], (SentenceSpan{1, 5, 13}));
}

TEST(Segment, TitleIsNeverSplit) {
  const Document doc("1", "One. Two words", "Three. Four.");
  const auto s = SegmentDocument(doc);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].end, 14);
  EXPECT_EQ(s[1].start, 15);
}

TEST(Segment, AbbreviationGuard) {
  EXPECT_EQ(SegmentText("Values (ca. 3.5) rose. Then fell.").size(), 2u);
  EXPECT_EQ(SegmentText("See Fig. 2 for data. Results follow.").size(), 2u);
  EXPECT_EQ(SegmentText("Smith et al. Reported it. Done.").size(), 2u);
  // "ca." inside a word is not guarded.
  EXPECT_EQ(SegmentText("It was Africa. Then").size(), 2u);
}

TEST(Segment, SplitRules) {
  EXPECT_EQ(SegmentText("no terminal punctuation here").size(), 1u);
  EXPECT_EQ(SegmentText("lower. case next").size(), 1u);
  EXPECT_EQ(SegmentText("Why? Because! 42 cases.").size(), 3u);
  EXPECT_EQ(SegmentText("Greek. Δ rises.").size(), 2u);
  EXPECT_TRUE(SegmentText("").empty());
}

TEST(Segment, SentencesCoverAllNonSpaceText) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Corpus c = testing::RandomCorpus(rng, {});
    for (const auto& doc : c.documents) {
      const auto s = SegmentDocument(doc);
      const auto& cps = doc.codepoints();
      std::vector<bool> covered(cps.size(), false);
      int64_t prev_end = 0;
      for (size_t k = 0; k < s.size(); ++k) {
        EXPECT_EQ(s[k].index, static_cast<int>(k));
        EXPECT_LT(s[k].start, s[k].end);
        EXPECT_GE(s[k].start, prev_end);
        prev_end = s[k].end;
        for (int64_t p = s[k].start; p < s[k].end; ++p) {
          covered[static_cast<size_t>(p)] = true;
        }
      }
      for (size_t p = 0; p < cps.size(); ++p) {
        if (!IsSpace(cps[p])) {
          EXPECT_TRUE(covered[p]) << doc.full_text() << " @" << p;
        }
      }
      EXPECT_EQ(s, SegmentDocument(doc));
    }
  }
}

// ------------------------------------------------------------------ BIO

TEST(Bio, ItdTags) {
  const Document text("10000001", kItd, "");
  const Document doc = text.WithMentions(
      {Make(0, 23, text, CoreEntityType::kDisease, {"D1"}),
       Make(25, 28, text, CoreEntityType::kDisease, {"D1"})});
  const auto r = EmitBio(doc);
  EXPECT_EQ(r.sequence.tags,
            (std::vector<std::string>{"B-Disease", "I-Disease", "I-Disease",
                                      "B-Disease", "O", "O", "O", "O"}));
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Bio, ItdFixtureFile) {
  const Corpus c = Load("itd.pubtator");
  EXPECT_EQ(EmitBio(c.documents[0]).sequence.tags,
            (std::vector<std::string>{"B-Disease", "I-Disease", "I-Disease",
                                      "B-Disease", "O", "O", "O", "O"}));
}

TEST(Bio, ItdDecode) {
  BioSequence seq;
  seq.tokens = Tokenize(kItd);
  seq.tags = {"B-Disease", "I-Disease", "I-Disease", "B-Disease",
              "O",         "O",         "O",         "O"};
  const auto d = DecodeBio(seq);
  ASSERT_EQ(d.mentions.size(), 2u);
  EXPECT_EQ(d.mentions[0].start, 0);
  EXPECT_EQ(d.mentions[0].end, 23);
  EXPECT_EQ(d.mentions[0].surface, "Iodide transport defect");
  EXPECT_EQ(d.mentions[1].start, 24);
  EXPECT_EQ(d.mentions[1].end, 29);
  EXPECT_EQ(d.mentions[1].core_type, CoreEntityType::kDisease);
  EXPECT_EQ(d.mentions[1].raw_type, "DiseaseOrPhenotypicFeature");
  EXPECT_TRUE(d.warnings.empty());
}

TEST(Bio, NoMentionsAllO) {
  const auto r = EmitBio(Document("1", "a b c", "d"));
  EXPECT_EQ(r.sequence.tags, std::vector<std::string>(4, "O"));
  EXPECT_TRUE(DecodeBio(r.sequence).mentions.empty());
}

TEST(Bio, AdjacentSameTypeMentionsDoNotBridge) {
  const Document text("1", "aspirin ibuprofen", "");
  const Document doc =
      text.WithMentions({Make(0, 7, text, CoreEntityType::kChemical),
                         Make(8, 17, text, CoreEntityType::kChemical)});
  const auto r = EmitBio(doc);
  EXPECT_EQ(r.sequence.tags,
            (std::vector<std::string>{"B-Chemical", "B-Chemical"}));
  EXPECT_EQ(DecodeBio(r.sequence).mentions.size(), 2u);
}

TEST(Bio, NestedMentionLosesToLongerAndWarns) {
  const Document text("1", "breast cancer risk", "");
  const Document doc =
      text.WithMentions({Make(0, 6, text, CoreEntityType::kGene),
                         Make(0, 13, text, CoreEntityType::kDisease)});
  const auto r = EmitBio(doc);
  EXPECT_EQ(r.sequence.tags,
            (std::vector<std::string>{"B-Disease", "I-Disease", "O"}));
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("breast"), std::string::npos);
}

TEST(Bio, FilteredTypesAreO) {
  const Corpus c = ParsePubtatorString(
      "1|t|mice and TP53\n1|a|\n"
      "1\t0\t4\tmice\tOrganismTaxon\t10090\n"
      "1\t9\t13\tTP53\tGeneOrGeneProduct\t7157\n");
  EXPECT_EQ(EmitBio(c.documents[0]).sequence.tags,
            (std::vector<std::string>{"O", "O", "B-Gene"}));
}

TEST(Bio, OrphanInsideRepairedAndUnknownTagsWarn) {
  BioSequence seq;
  seq.tokens = Tokenize("a b c d");
  seq.tags = {"I-Gene", "I-Gene", "X-Foo", "I-Disease"};
  const auto d = DecodeBio(seq);
  ASSERT_EQ(d.mentions.size(), 2u);
  EXPECT_EQ(d.mentions[0].start, 0);
  EXPECT_EQ(d.mentions[0].end, 3);
  EXPECT_EQ(d.mentions[0].surface, "a b");
  EXPECT_EQ(d.mentions[1].core_type, CoreEntityType::kDisease);
  EXPECT_EQ(d.warnings.size(), 3u);
}

TEST(Bio, OrphanAtStartIsOneWarning) {
  BioSequence seq;
  seq.tokens = Tokenize("TP53 binds");
  seq.tags = {"I-Gene", "O"};
  const auto d = DecodeBio(seq);
  ASSERT_EQ(d.mentions.size(), 1u);
  EXPECT_EQ(d.warnings.size(), 1u);
}

TEST(Bio, SequenceInvariantsOnRandomCorpora) {
  std::mt19937_64 rng(21);
  testing::RandomCorpusOptions options;
  options.word_aligned = false;
  for (int i = 0; i < 200; ++i) {
    for (const auto& doc : testing::RandomCorpus(rng, options).documents) {
      for (auto mode :
           {TokenizeMode::kWhitespace, TokenizeMode::kSplitPunctuation}) {
        const auto seq = EmitBio(doc, mode).sequence;
        ASSERT_EQ(seq.tags.size(), seq.tokens.size());
        for (size_t k = 0; k < seq.tags.size(); ++k) {
          const std::string& t = seq.tags[k];
          if (t[0] != 'I') continue;
          ASSERT_GT(k, 0u);
          const std::string& prev = seq.tags[k - 1];
          EXPECT_TRUE(prev.substr(2) == t.substr(2) && prev[0] != 'O');
        }
        EXPECT_TRUE(DecodeBio(seq).warnings.empty());
      }
    }
  }
}

TEST(Bio, RoundTripOnNonOverlappingTokenAlignedMentions) {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    for (const auto& doc : testing::RandomCorpus(rng, {}).documents) {
      // Keep a non-overlapping subset of the core mentions.
      std::vector<Mention> kept;
      for (const auto& m : doc.CoreMentions()) {
        bool clash = false;
        for (const auto& k : kept) {
          clash |= m.start < k.end && k.start < m.end;
        }
        if (!clash) kept.push_back(m);
      }
      const Document d = doc.WithMentions(kept);
      const auto decoded = DecodeBio(EmitBio(d).sequence).mentions;
      std::set<std::tuple<int64_t, int64_t, CoreEntityType>> want, got;
      for (const auto& m : d.mentions()) want.emplace(m.start, m.end, *m.core_type);
      for (const auto& m : decoded) got.emplace(m.start, m.end, *m.core_type);
      // Same-type mentions separated only by whitespace stay distinct only
      // when tagged B; emit always starts each mention with B.
      EXPECT_EQ(got, want) << d.full_text();
      for (const auto& m : decoded) {
        EXPECT_EQ(m.surface, d.Slice(m.start, m.end));
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

// --------------------------------------------------------------- labels

TEST(Labels, Normalization) {
  using L = CoreRelationLabel;
  EXPECT_EQ(NormalizeRelationLabel("Cotreatment"), L::kAssociation);
  EXPECT_EQ(NormalizeRelationLabel("Cause"), L::kAssociation);
  EXPECT_EQ(NormalizeRelationLabel("Bind"), L::kAssociation);
  EXPECT_EQ(NormalizeRelationLabel("Drug_Interaction"), L::kAssociation);
  EXPECT_EQ(NormalizeRelationLabel("Negative_Correlation"),
            L::kNegativeCorrelation);
  EXPECT_EQ(NormalizeRelationLabel("negative correlation"),
            L::kNegativeCorrelation);
  EXPECT_EQ(NormalizeRelationLabel("Positive-Correlation"),
            L::kPositiveCorrelation);
  EXPECT_EQ(ParseCoreRelationLabel("Positive_Correlation"),
            L::kPositiveCorrelation);
  EXPECT_EQ(ParseCoreRelationLabel("Bind"), std::nullopt);
}

TEST(Labels, ImageIsThreeValues) {
  std::mt19937_64 rng(5);
  const std::string alphabet = "abcnegativposrl_- CN";
  std::set<CoreRelationLabel> image;
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const int n = static_cast<int>(rng() % 24);
    for (int k = 0; k < n; ++k) s += alphabet[rng() % alphabet.size()];
    image.insert(NormalizeRelationLabel(s));
  }
  image.insert(NormalizeRelationLabel("Negative_Correlation"));
  image.insert(NormalizeRelationLabel("Positive_Correlation"));
  EXPECT_EQ(image.size(), 3u);
}

// ------------------------------------------------------------ RE inputs

TEST(Re, CrocinMarkerString) {
  const Corpus c = Load("crocin.pubtator");
  const auto instances = GenerateReInstances(c.documents[0]);
  const ReInstance* found = nullptr;
  for (const auto& inst : instances) {
    if (inst.concept_a == "D008055" && inst.concept_b == "D003976") {
      found = &inst;
    }
  }
  ASSERT_NE(found, nullptr);
  EXPECT_EQ(found->window_text,
            "Crocin improves <e1> lipid </e1> dysregulation in subacute <e2> "
            "diazinon </e2> exposure through ERK1/2 pathways");
  EXPECT_EQ(found->label, CoreRelationLabel::kAssociation);
  EXPECT_EQ(found->type_a, CoreEntityType::kChemical);
}

TEST(Re, CrocinInMemory) {
  const Document text("1", kCrocin, "");
  const Document doc =
      text.WithMentions({Make(16, 21, text, CoreEntityType::kChemical, {"L"}),
                         Make(48, 56, text, CoreEntityType::kChemical, {"Z"})})
          .WithRelations({{"Z", "L", "Bind", {}}});
  const auto instances = GenerateReInstances(doc);
  ASSERT_EQ(instances.size(), 1u);
  EXPECT_EQ(StripMarkers(instances[0].window_text), kCrocin);
  EXPECT_EQ(instances[0].label, CoreRelationLabel::kAssociation);
}

Document ThreeSentenceGap() {
  const Document text("1", "Title here.",
                      "Alpha one. Filler two. Filler three. Omega four.");
  return text.WithMentions(
      {Make(12, 17, text, CoreEntityType::kGene, {"G"}),
       Make(49, 54, text, CoreEntityType::kDisease, {"D"})});
}

TEST(Re, PairsBeyondWindowAreSkipped) {
  const Document doc = ThreeSentenceGap();
  EXPECT_TRUE(GenerateReInstances(doc).empty());
  ReOptions wide;
  wide.pair_window = 3;
  EXPECT_EQ(GenerateReInstances(doc, wide).size(), 1u);
}

TEST(Re, WindowClipsToDocument) {
  const Document text("1", "TP53 title.", "MDM2 here. Next. Last.");
  const Document doc = text.WithMentions(
      {Make(0, 4, text, CoreEntityType::kGene, {"A"}),
       Make(12, 16, text, CoreEntityType::kGene, {"B"})});
  const auto inst = GenerateReInstances(doc);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst[0].sent_lo, 0);
  EXPECT_EQ(inst[0].sent_hi, 2);
  EXPECT_EQ(inst[0].window_text,
            "<e1> TP53 </e1> title. <e2> MDM2 </e2> here. Next.");
}

TEST(Re, TwoMentionPairsGiveTwoPositives) {
  const Document text("1", "TP53 and MDM2.", "TP53 binds MDM2 again.");
  const Document doc =
      text.WithMentions({Make(0, 4, text, CoreEntityType::kGene, {"A"}),
                         Make(9, 13, text, CoreEntityType::kGene, {"B"}),
                         Make(15, 19, text, CoreEntityType::kGene, {"A"}),
                         Make(26, 30, text, CoreEntityType::kGene, {"B"})})
          .WithRelations({{"A", "B", "Positive_Correlation", {}}});
  ReOptions same_sentence;
  same_sentence.pair_window = 0;
  const auto inst = GenerateReInstances(doc, same_sentence);
  ASSERT_EQ(inst.size(), 2u);
  for (const auto& i : inst) {
    EXPECT_EQ(i.label, CoreRelationLabel::kPositiveCorrelation);
  }
}

TEST(Re, SharedIdsGiveOneInstancePerMentionPair) {
  const Document text("1", "aa bb", "");
  const Document doc =
      text.WithMentions({Make(0, 2, text, CoreEntityType::kGene, {"X", "Y"}),
                         Make(3, 5, text, CoreEntityType::kGene, {"Y", "X"})});
  const auto inst = GenerateReInstances(doc);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst[0].concept_a, "X");
  EXPECT_EQ(inst[0].concept_b, "Y");
}

TEST(Re, NegativeSampling) {
  const Corpus c = Load("multi.pubtator");
  ReOptions all;
  ReOptions none;
  none.negative_keep_ratio = 0.0;
  ReOptions keep;
  keep.negative_keep_ratio = 1.0;
  ReOptions half;
  half.negative_keep_ratio = 0.5;
  for (const auto& doc : c.documents) {
    const auto a = GenerateReInstances(doc, all);
    const auto n = GenerateReInstances(doc, none);
    EXPECT_EQ(GenerateReInstances(doc, keep), a);
    for (const auto& i : n) EXPECT_TRUE(i.label.has_value());
    size_t positives = 0;
    for (const auto& i : a) positives += i.label.has_value();
    EXPECT_EQ(n.size(), positives);
    const auto h1 = GenerateReInstances(doc, half);
    EXPECT_EQ(h1, GenerateReInstances(doc, half));
    EXPECT_LE(h1.size(), a.size());
    EXPECT_GE(h1.size(), positives);
  }
}

TEST(Re, SeedDependsOnDocumentId) {
  EXPECT_EQ(DocumentSeed(42, "123"), DocumentSeed(42, "123"));
  EXPECT_NE(DocumentSeed(42, "123"), DocumentSeed(42, "124"));
  EXPECT_NE(DocumentSeed(42, "123"), DocumentSeed(43, "123"));
}

// Reference enumeration of in-window mention pairs for one relation.
bool BruteReachable(const Document& doc, const RelationAnnotation& rel,
                    int window) {
  const auto sentences = SegmentDocument(doc);
  for (const auto& a : doc.mentions()) {
    for (const auto& b : doc.mentions()) {
      if (&a == &b || !a.core_type || !b.core_type) continue;
      if (!a.HasConcept(rel.concept_a) || !b.HasConcept(rel.concept_b)) {
        continue;
      }
      if (rel.concept_a == rel.concept_b) continue;
      if (a.start < b.end && b.start < a.end) continue;
      const int a0 = SentenceOf(sentences, a.start);
      const int a1 = SentenceOf(sentences, a.end - 1);
      const int b0 = SentenceOf(sentences, b.start);
      const int b1 = SentenceOf(sentences, b.end - 1);
      const int gap = a1 < b0 ? b0 - a1 : (b1 < a0 ? a0 - b1 : 0);
      if (gap <= window) return true;
    }
  }
  return false;
}

TEST(Re, PropertiesOnRandomCorpora) {
  std::mt19937_64 rng(31);
  testing::RandomCorpusOptions options;
  options.max_mentions = 12;
  for (int i = 0; i < 300; ++i) {
    for (const auto& doc : testing::RandomCorpus(rng, options).documents) {
      const auto instances = GenerateReInstances(doc);
      for (const auto& inst : instances) {
        EXPECT_NE(inst.concept_a, inst.concept_b);
        EXPECT_EQ(Count(inst.window_text, kE1Open), 1u);
        EXPECT_EQ(Count(inst.window_text, kE2Close), 1u);
        const std::string stripped = StripMarkers(inst.window_text);
        EXPECT_NE(doc.full_text().find(stripped), std::string::npos)
            << inst.window_text;
        EXPECT_LE(inst.sent_lo, inst.sent_hi);
      }
      int64_t reachable = 0;
      const auto dedup = DedupRelations(doc.relations());
      for (const auto& rel : dedup) {
        if (!BruteReachable(doc, rel, 1)) continue;
        ++reachable;
        bool positive = false;
        for (const auto& inst : instances) {
          positive |= inst.label.has_value() &&
                      ((inst.concept_a == rel.concept_a &&
                        inst.concept_b == rel.concept_b) ||
                       (inst.concept_a == rel.concept_b &&
                        inst.concept_b == rel.concept_a));
        }
        EXPECT_TRUE(positive);
      }
      const Reachability r = WindowReachability(doc);
      EXPECT_EQ(r.gold_relations, static_cast<int64_t>(dedup.size()));
      EXPECT_EQ(r.reachable, reachable);
    }
  }
}

TEST(Re, JsonRoundTrip) {
  const Corpus c = Load("multi.pubtator");
  for (const auto& doc : c.documents) {
    for (const auto& inst : GenerateReInstances(doc)) {
      EXPECT_EQ(ReInstanceFromJson(ReInstanceToJson(inst)), inst);
    }
  }
  EXPECT_THROW(ReInstanceFromJson("{not json"), std::runtime_error);
  const std::string neg = ReInstanceToJson(ReInstance{});
  EXPECT_NE(neg.find("\"label\":null"), std::string::npos);
}

TEST(Bio, JsonShape) {
  const Corpus c = Load("itd.pubtator");
  const std::string j = BioToJson(EmitBio(c.documents[0]).sequence);
  EXPECT_EQ(j.rfind("{\"doc_id\":\"10000001\",\"tokens\":[{\"text\":\"Iodide\","
                    "\"start\":0,\"end\":6}",
                    0),
            0u);
  EXPECT_NE(j.find("\"tags\":[\"B-Disease\""), std::string::npos);
}

// --------------------------------------------------------------- prompt

TEST(Prompt, FiveExamplesOneQuery) {
  const Corpus pool = Load("prompt_pool.pubtator");
  const std::vector<Document> examples(pool.documents.begin(),
                                       pool.documents.begin() + 5);
  const std::vector<Document> queries = {pool.documents[5]};
  const PromptBundle b = BuildFewshotPrompt(examples, queries);
  EXPECT_EQ(b.instruction_examples.size(), 5u);
  EXPECT_EQ(b.question_docs.size(), 1u);
  EXPECT_EQ(Count(b.rendered, "|t|"), 6u);
  EXPECT_EQ(b.rendered.rfind(
                "Instruction\nEach of the following examples include the "
                "title, abstract, and annotations for PubMed records.\n\n",
                0),
            0u);
  const size_t q = b.rendered.find(
      "\nQuestion\nProcess the title and abstract of the new PubMed record "
      "and return the annotations in new lines.\n");
  ASSERT_NE(q, std::string::npos);
  const std::string tail = b.rendered.substr(q);
  EXPECT_EQ(Count(tail, "\t"), 0u);
  EXPECT_EQ(tail.substr(tail.find("20000006|t|")),
            "20000006|t|PIK3CA E545K and alpelisib response in breast "
            "cancer.\n20000006|a|Alpelisib improved outcomes in "
            "PIK3CA-mutant breast cancer carrying E545K.\n");
  // Example blocks are canonical PubTator without relation lines.
  EXPECT_NE(b.rendered.find("20000001\t0\t5\tBRCA1\tGeneOrGeneProduct\n"),
            std::string::npos);
  EXPECT_EQ(b.rendered.find("Association"), std::string::npos);
  EXPECT_EQ(b.rendered.find("OrganismTaxon"), std::string::npos);
}

TEST(Prompt, FiveQueries) {
  const Corpus pool = Load("prompt_pool.pubtator");
  const std::vector<Document> examples(pool.documents.begin(),
                                       pool.documents.begin() + 5);
  const std::vector<Document> queries(pool.documents.begin(),
                                      pool.documents.begin() + 5);
  const PromptBundle b = BuildFewshotPrompt(examples, queries);
  EXPECT_EQ(Count(b.rendered, "|t|"), 10u);
}

TEST(Prompt, Errors) {
  const Corpus pool = Load("prompt_pool.pubtator");
  std::vector<Document> examples(pool.documents.begin(),
                                 pool.documents.begin() + 5);
  const std::vector<Document> one = {pool.documents[5]};
  // Metformin abstract has no Variant.
  examples[2] = pool.documents[6];
  try {
    BuildFewshotPrompt(examples, one);
    FAIL();
  } catch (const PromptError& e) {
    EXPECT_STREQ(e.what(), "example 3 lacks Variant");
  }
  // Strip chemicals from example 3.
  std::vector<Mention> no_chem;
  for (const auto& m : pool.documents[2].mentions()) {
    if (m.core_type != CoreEntityType::kChemical) no_chem.push_back(m);
  }
  examples[2] = pool.documents[2].WithMentions(no_chem);
  try {
    BuildFewshotPrompt(examples, one);
    FAIL();
  } catch (const PromptError& e) {
    EXPECT_STREQ(e.what(), "example 3 lacks Chemical");
  }
  examples.pop_back();
  EXPECT_THROW(BuildFewshotPrompt(examples, one), PromptError);
  const std::vector<Document> five(pool.documents.begin(),
                                   pool.documents.begin() + 5);
  EXPECT_THROW(BuildFewshotPrompt(five, {}), PromptError);
  const std::vector<Document> six(pool.documents.begin(),
                                  pool.documents.begin() + 6);
  EXPECT_THROW(BuildFewshotPrompt(five, six), PromptError);
}

TEST(Prompt, SelectionIsSeededAndEligible) {
  const Corpus pool = Load("prompt_pool.pubtator");
  EXPECT_EQ(DocumentsWithAllCoreTypes(pool).size(), 6u);
  const auto a = SelectFewshotExamples(pool, 42);
  const auto b = SelectFewshotExamples(pool, 42);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a, b);
  std::set<std::string> ids;
  for (const auto& d : a) {
    ids.insert(d.id());
    EXPECT_NE(d.id(), "20000007");
  }
  EXPECT_EQ(ids.size(), 5u);
  EXPECT_THROW(SelectFewshotExamples(pool, 42, 7), PromptError);
}

}  // namespace
}  // namespace biored

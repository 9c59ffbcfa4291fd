//
// Copyright 2026 The bnfake Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bnfake/augmentation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "bnfake/error.h"
#include "bnfake/mock_backends.h"
#include "bnfake/random.h"
#include "bnfake/text.h"
#include "test_util.h"

namespace bnfake {
namespace {

using testing::Article;

TEST(MaskCountTest, RoundsHalfUpAndClamps) {
  EXPECT_EQ(MaskCount(10, 0.2), 2u);
  EXPECT_EQ(MaskCount(10, 0.15), 2u);   // 1.5 rounds up
  EXPECT_EQ(MaskCount(1, 0.15), 1u);    // never below one
  EXPECT_EQ(MaskCount(3, 1.0), 3u);
  EXPECT_EQ(MaskCount(7, 0.15), 1u);    // 1.05
}

TEST(TokenReplaceTest, ReplaysSeededSelection) {
  // Ten distinct tokens, each with a synonym, so every masked position shows.
  std::map<std::string, std::string> table;
  std::vector<std::string> tokens;
  for (int i = 0; i < 10; ++i) {
    tokens.push_back("w" + std::to_string(i));
    table[tokens.back()] = "s" + std::to_string(i);
  }
  SynonymMaskedLm mlm("m", table);
  WhitespaceTokenizer tokenizer;
  auto out = SplitWhitespace(TokenReplace(JoinTokens(tokens), mlm, tokenizer, 0.2, 7));

  // Independent replay: partial Fisher-Yates over [0, 10), two draws.
  Rng rng(7);
  std::vector<std::size_t> pool(10);
  for (std::size_t i = 0; i < 10; ++i) pool[i] = i;
  for (std::size_t i = 0; i < 2; ++i) std::swap(pool[i], pool[i + rng.Below(10 - i)]);
  std::vector<std::size_t> expected = {pool[0], pool[1]};
  std::sort(expected.begin(), expected.end());

  ASSERT_EQ(out.size(), 10u);
  std::vector<std::size_t> changed;
  for (std::size_t i = 0; i < 10; ++i) {
    if (out[i] != tokens[i]) {
      changed.push_back(i);
      EXPECT_EQ(out[i], table[tokens[i]]);
    }
  }
  EXPECT_EQ(changed, expected);
  EXPECT_EQ(SelectMaskPositions(10, 0.2, 7), expected);
}

TEST(TokenReplaceTest, TableExampleWithSynonyms) {
  // Find a seed whose draw masks "by" and "attack", then check the rewrite.
  SynonymMaskedLm mlm("m", {{"by", "in"}, {"attack", "raid"}});
  WhitespaceTokenizer tokenizer;
  std::uint64_t seed = 0;
  while (SelectMaskPositions(5, 0.4, seed) != std::vector<std::size_t>{2, 4}) ++seed;
  EXPECT_EQ(TokenReplace("Fox killed by chicken attack", mlm, tokenizer, 0.4, seed),
            "Fox killed in chicken raid");
}

TEST(TokenReplaceTest, SingleTokenAndIdentity) {
  WhitespaceTokenizer tokenizer;
  SynonymMaskedLm mlm("m", {{"shohor", "nogor"}});
  EXPECT_EQ(TokenReplace("shohor", mlm, tokenizer, 0.01, 3), "nogor");
  SynonymMaskedLm identity("id", {});
  EXPECT_EQ(TokenReplace("a b c d", identity, tokenizer, 0.5, 3), "a b c d");
  EXPECT_THROW(TokenReplace("   ", mlm, tokenizer, 0.5, 3), Error);
}

TEST(TokenReplaceTest, BoundsOverRandomTexts) {
  WhitespaceTokenizer tokenizer;
  std::mt19937_64 g(31);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + g() % 80;
    std::vector<std::string> tokens;
    for (std::size_t k = 0; k < n; ++k) tokens.push_back("t" + std::to_string(g() % 1000));
    std::map<std::string, std::string> table;
    for (const auto& t : tokens) table[t] = t + "'";
    SynonymMaskedLm every("e", table);
    double f = 0.01 + static_cast<double>(g() % 100) / 100.0;
    auto out = SplitWhitespace(TokenReplace(JoinTokens(tokens), every, tokenizer, f, g()));
    ASSERT_EQ(out.size(), n);
    std::size_t changed = 0;
    for (std::size_t k = 0; k < n; ++k) changed += out[k] != tokens[k];
    EXPECT_EQ(changed, MaskCount(n, f));
    EXPECT_LE(changed, static_cast<std::size_t>(std::ceil(f * static_cast<double>(n))));
  }
}

TEST(BackTranslateTest, InverseTranslatorsAreIdentity) {
  auto suite = BackendSuite::Mocks();
  const auto& fwd = suite.model(Seq2SeqRole::kTranslatorForward);
  const auto& bwd = suite.model(Seq2SeqRole::kTranslatorBackward);
  EXPECT_EQ(BackTranslate("Fox killed by chicken attack.", fwd, bwd),
            "Fox killed by chicken attack.");
  DictionaryTranslator f("f", Seq2SeqRole::kTranslatorForward, {{"ab", "AB"}});
  DictionaryTranslator b("b", Seq2SeqRole::kTranslatorBackward, {{"ab", "AB"}});
  std::mt19937_64 g(2);
  for (int i = 0; i < 100; ++i) {
    auto text = testing::RandomWords(g, 1 + g() % 50) + " ab";
    EXPECT_EQ(BackTranslate(text, f, b), text);
  }
  IdentitySeq2Seq id1("i1", Seq2SeqRole::kTranslatorForward);
  IdentitySeq2Seq id2("i2", Seq2SeqRole::kTranslatorBackward);
  EXPECT_EQ(BackTranslate("S1 a. S2", id1, id2), "S1 a. S2");
}

TEST(ParaphraseTest, MarkerPerSentenceInOrder) {
  MarkerParaphraser p("[m]");
  EXPECT_EQ(Paraphrase("One a. Two b! Three c?", p), "One a [m]. Two b [m]! Three c [m]?");
  IdentitySeq2Seq identity("i", Seq2SeqRole::kParaphraser);
  EXPECT_EQ(Paraphrase("Fox killed by chicken attack", identity),
            "Fox killed by chicken attack");
}

TEST(EngineTest, ValidatesConfiguration) {
  auto suite = BackendSuite::Mocks();
  using T = Technique;
  EXPECT_THROW(AugmentationEngine({}, suite, std::nullopt, 1), ConfigError);
  EXPECT_THROW(AugmentationEngine({T::kParaphrase, T::kParaphrase}, suite, std::nullopt, 1),
               ConfigError);
  EXPECT_THROW(AugmentationEngine({T::kTokenReplacement}, suite, std::nullopt, 1), ConfigError);
  EXPECT_THROW(AugmentationEngine({T::kParaphrase}, suite, 0.15, 1), ConfigError);
  EXPECT_THROW(AugmentationEngine({T::kTokenReplacement}, suite, 1.5, 1), ConfigError);
  auto missing = suite;
  missing.seq2seq.erase(Seq2SeqRole::kTranslatorBackward);
  EXPECT_THROW(AugmentationEngine({T::kBackTranslation}, missing, std::nullopt, 1),
               ConfigError);
  EXPECT_NO_THROW(AugmentationEngine({T::kTokenReplacement, T::kParaphrase}, suite, 0.15, 1));
}

TEST(EngineTest, SeedsDependOnArticleAndTechnique) {
  AugmentationEngine e({Technique::kTokenReplacement, Technique::kParaphrase},
                       BackendSuite::Mocks(), 0.15, 5);
  EXPECT_EQ(e.SeedFor("a", Technique::kTokenReplacement),
            e.SeedFor("a", Technique::kTokenReplacement));
  EXPECT_NE(e.SeedFor("a", Technique::kTokenReplacement),
            e.SeedFor("b", Technique::kTokenReplacement));
  EXPECT_NE(e.SeedFor("a", Technique::kTokenReplacement),
            e.SeedFor("a", Technique::kParaphrase));
}

LabeledCorpus Fakes(std::size_t n) {
  LabeledCorpus c("fakes");
  for (std::size_t i = 0; i < n; ++i) {
    c.Add(Article("f" + std::to_string(i), Label::kFake,
                  "shohor manush bazar khobor " + std::to_string(i) + ". nodi gram din."));
  }
  return c;
}

TEST(AugmentCorpusTest, ThreeArticlesTwoCopies) {
  AugmentationEngine e({Technique::kTokenReplacement, Technique::kParaphrase},
                       BackendSuite::Mocks(), 0.15, 5);
  auto r = AugmentCorpus(Fakes(3), e, 2);
  ASSERT_EQ(r.corpus.size(), 9u);
  std::map<std::string, int> kinds;
  for (const auto& a : r.corpus) {
    EXPECT_EQ(a.label, Label::kFake);
    if (a.provenance.empty()) {
      ++kinds["original"];
      EXPECT_NE(a.origin, Origin::kAugmented);
      continue;
    }
    ASSERT_EQ(a.provenance.size(), 1u);
    const auto& p = a.provenance[0];
    ++kinds[std::string(TransformKindName(p.kind))];
    EXPECT_EQ(a.origin, Origin::kAugmented);
    EXPECT_TRUE(r.corpus.Contains(p.source_id));
    EXPECT_TRUE(p.seed.has_value());
  }
  EXPECT_EQ(kinds["original"], 3);
  EXPECT_EQ(kinds["token_replaced"], 3);
  EXPECT_EQ(kinds["paraphrased"], 3);
  EXPECT_EQ(r.log.size(), 6u);
  // Originals are each followed by their copies.
  EXPECT_EQ(r.corpus[0].id, "f0");
  EXPECT_EQ(r.corpus[1].id, AugmentedId("f0", Technique::kTokenReplacement));
  EXPECT_EQ(r.corpus[2].id, AugmentedId("f0", Technique::kParaphrase));
}

TEST(AugmentCorpusTest, ZeroCopiesIsIdentity) {
  AugmentationEngine e({Technique::kParaphrase}, BackendSuite::Mocks(), std::nullopt, 5);
  auto in = Fakes(4);
  auto r = AugmentCorpus(in, e, 0);
  EXPECT_EQ(r.corpus.articles(), in.articles());
}

TEST(AugmentCorpusTest, RejectsAuthenticAndTooManyCopies) {
  AugmentationEngine e({Technique::kParaphrase}, BackendSuite::Mocks(), std::nullopt, 5);
  LabeledCorpus mixed("m");
  mixed.Add(Article("a", Label::kAuthentic, "x y z"));
  EXPECT_THROW(AugmentCorpus(mixed, e, 1), Error);
  EXPECT_THROW(AugmentCorpus(Fakes(1), e, 2), Error);
}

TEST(AugmentCorpusTest, OutputIsThreeNForRandomSizes) {
  AugmentationEngine e({Technique::kTokenReplacement, Technique::kParaphrase},
                       BackendSuite::Mocks(), 0.15, 9);
  std::mt19937_64 g(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = g() % 60;
    EXPECT_EQ(AugmentCorpus(Fakes(n), e, 2).corpus.size(), 3 * n);
  }
}

TEST(AugmentCorpusTest, ParallelMatchesSerial) {
  AugmentationEngine e({Technique::kTokenReplacement, Technique::kBackTranslation,
                        Technique::kParaphrase},
                       BackendSuite::Mocks(), 0.3, 11);
  auto fakes = Fakes(40);
  auto serial = AugmentCorpus(fakes, e, 3, 1);
  auto parallel = AugmentCorpus(fakes, e, 3, 8);
  EXPECT_EQ(serial.corpus, parallel.corpus);
  // Processing a subset gives the same copy for each article it contains.
  LabeledCorpus tail("fakes");
  for (std::size_t i = 20; i < 40; ++i) tail.Add(fakes[i]);
  auto partial = AugmentCorpus(tail, e, 3);
  for (const auto& a : partial.corpus) {
    auto it = std::find_if(serial.corpus.begin(), serial.corpus.end(),
                           [&](const NewsArticle& b) { return b.id == a.id; });
    ASSERT_NE(it, serial.corpus.end());
    EXPECT_EQ(*it, a);
  }
}

TEST(AugmentCorpusTest, MultipleMlmsArePinnedPerArticle) {
  auto suite = BackendSuite::Mocks();
  suite.masked_lms.push_back(std::make_shared<SynonymMaskedLm>("second", MockSynonyms()));
  AugmentationEngine e({Technique::kTokenReplacement}, suite, 0.5, 3);
  std::map<std::string, int> used;
  auto r = AugmentCorpus(Fakes(30), e, 1);
  for (const auto& a : r.corpus) {
    if (!a.provenance.empty()) ++used[a.provenance[0].backend_id];
  }
  EXPECT_EQ(used.size(), 2u);
  EXPECT_EQ(&e.MaskedLmFor("f1"), &e.MaskedLmFor("f1"));
}

}  // namespace
}  // namespace bnfake

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

#include "bnfake/summarization.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bnfake/error.h"
#include "bnfake/mock_backends.h"
#include "bnfake/text.h"
#include "test_util.h"

namespace bnfake {
namespace {

std::vector<std::string> Tokens(std::size_t n, std::size_t sentence_every = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool end = sentence_every && (i + 1) % sentence_every == 0;
    out.push_back("t" + std::to_string(i) + (end ? "." : ""));
  }
  return out;
}

void ExpectExactCover(const ChunkPlan& plan, std::size_t n, std::size_t budget) {
  ASSERT_FALSE(plan.boundaries.empty());
  EXPECT_EQ(plan.boundaries.front().begin, 0u);
  EXPECT_EQ(plan.boundaries.back().end, n);
  for (std::size_t i = 0; i < plan.boundaries.size(); ++i) {
    const auto& r = plan.boundaries[i];
    EXPECT_LT(r.begin, r.end);
    EXPECT_LE(r.size(), budget);
    if (i > 0) EXPECT_EQ(plan.boundaries[i - 1].end, r.begin);
  }
  EXPECT_EQ(plan.boundaries.size(), (n + budget - 1) / budget);
}

TEST(PlanChunksTest, WorkedCounts) {
  for (auto [n, chunks] : {std::pair<std::size_t, std::size_t>{1300, 4}, {100, 1},
                           {19000, 48}, {400, 1}, {401, 2}}) {
    auto plan = PlanChunks(Tokens(n, 17), 400);
    EXPECT_EQ(plan.boundaries.size(), chunks) << n;
    ExpectExactCover(plan, n, 400);
  }
  auto whole = PlanChunks(Tokens(100), 400);
  EXPECT_EQ(whole.boundaries[0], (TokenRange{0, 100}));
}

TEST(PlanChunksTest, SnapsToSentenceEnds) {
  // Sentence ends every 30 tokens: the first cut lands on 390, not 400.
  auto plan = PlanChunks(Tokens(1000, 30), 400);
  ASSERT_EQ(plan.boundaries.size(), 3u);
  EXPECT_EQ(plan.boundaries[0].end, 390u);
  EXPECT_TRUE(EndsSentence(Tokens(1000, 30)[389]));
}

TEST(PlanChunksTest, RejectsBadInput) {
  std::vector<std::string> none;
  EXPECT_THROW(PlanChunks(none, 400), Error);
  EXPECT_THROW(PlanChunks(Tokens(10), kMinChunkBudget - 1), ConfigError);
}

TEST(PlanChunksTest, RandomPlansCoverExactlyOnce) {
  std::mt19937_64 g(12);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + g() % 5000;
    std::size_t budget = kMinChunkBudget + g() % 600;
    std::size_t every = g() % 50;
    auto plan = PlanChunks(Tokens(n, every), budget);
    ExpectExactCover(plan, n, budget);
    std::vector<int> hits(n, 0);
    for (const auto& r : plan.boundaries) {
      for (std::size_t i = r.begin; i < r.end; ++i) ++hits[i];
    }
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST(SummarizeArticleTest, ShortArticlePassesThrough) {
  WhitespaceTokenizer t;
  FirstSentenceSummarizer s;
  auto text = JoinTokens(Tokens(300, 10));
  auto r = SummarizeArticle(text, s, t, {});
  EXPECT_TRUE(r.passthrough);
  EXPECT_EQ(r.text, text);
  EXPECT_EQ(r.input_token_count, 300u);
}

TEST(SummarizeArticleTest, FirstSentenceOfEachChunk) {
  WhitespaceTokenizer t;
  FirstSentenceSummarizer s;
  auto tokens = Tokens(1300, 25);
  auto r = SummarizeArticle(JoinTokens(tokens), s, t, {});
  EXPECT_FALSE(r.passthrough);
  EXPECT_EQ(r.chunk_count, 4u);
  EXPECT_EQ(r.per_chunk_budget_used, 128u);

  // Oracle: for each planned chunk, the tokens up to its first sentence end.
  auto plan = PlanChunks(tokens, 400);
  std::vector<std::string> expected;
  for (const auto& range : plan.boundaries) {
    for (std::size_t i = range.begin; i < range.end; ++i) {
      expected.push_back(tokens[i]);
      if (EndsSentence(tokens[i])) break;
    }
  }
  EXPECT_EQ(r.text, JoinTokens(expected));
  EXPECT_LE(r.final_token_count, 512u);
}

// Ignores its budget, forcing the second pass and the final cut.
class VerboseSummarizer final : public Seq2SeqModel {
 public:
  std::string id() const override { return "verbose"; }
  Seq2SeqRole role() const override { return Seq2SeqRole::kSummarizer; }
  std::string Generate(std::string_view text, std::size_t) const override {
    return std::string(text);
  }
};

TEST(SummarizeArticleTest, OverLongJoinIsCut) {
  WhitespaceTokenizer t;
  VerboseSummarizer s;
  auto tokens = Tokens(3000, 40);
  auto r = SummarizeArticle(JoinTokens(tokens), s, t, {});
  EXPECT_TRUE(r.second_pass);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.final_token_count, 512u);
  EXPECT_EQ(r.text, JoinTokens(std::span<const std::string>(tokens.data(), 512)));
}

TEST(SummarizeArticleTest, BudgetHoldsOverRandomLengths) {
  WhitespaceTokenizer t;
  FirstSentenceSummarizer s;
  std::mt19937_64 g(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + g() % 20000;
    auto tokens = Tokens(n, g() % 60);
    auto r = SummarizeArticle(JoinTokens(tokens), s, t, {});
    EXPECT_LE(t.Count(r.text), 512u);
    EXPECT_EQ(r.passthrough, n <= 512);
    // Extractive summaries keep source order.
    auto out = SplitWhitespace(r.text);
    std::size_t cursor = 0;
    for (const auto& token : out) {
      while (cursor < n && tokens[cursor] != token) ++cursor;
      ASSERT_LT(cursor, n) << "token out of order: " << token;
      ++cursor;
    }
  }
}

TEST(SummaryOptionsTest, Validation) {
  SummaryOptions o;
  EXPECT_NO_THROW(o.Validate());
  o.limit = 0;
  EXPECT_THROW(o.Validate(), ConfigError);
  o = {};
  o.chunk_budget = 8;
  EXPECT_THROW(o.Validate(), ConfigError);
}

TEST(SummarizeCorpusTest, CountsSummarizedRecords) {
  WhitespaceTokenizer t;
  FirstSentenceSummarizer s;
  LabeledCorpus c("c");
  for (int i = 0; i < 3; ++i) {
    c.Add(testing::Article("short" + std::to_string(i), Label::kFake, "a b c."));
  }
  for (int i = 0; i < 2; ++i) {
    c.Add(testing::Article("long" + std::to_string(i), Label::kAuthentic,
                           JoinTokens(Tokens(900, 20))));
  }
  auto r = SummarizeCorpus(c, s, t, {}, 4);
  ASSERT_EQ(r.corpus.size(), 5u);
  std::size_t summarized = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(r.corpus[i].id, c[i].id);
    EXPECT_EQ(r.corpus[i].label, c[i].label);
    summarized += r.corpus[i].HasTransform(TransformKind::kSummarized);
  }
  EXPECT_EQ(summarized, 2u);
  EXPECT_EQ(r.log.size(), 5u);
}

TEST(SummarizeCorpusTest, ShortCorpusIsUnchanged) {
  WhitespaceTokenizer t;
  FirstSentenceSummarizer s;
  auto c = testing::Balanced("c", "p", 3, 3);
  auto r = SummarizeCorpus(c, s, t, {});
  EXPECT_EQ(r.corpus.articles(), c.articles());
}

}  // namespace
}  // namespace bnfake

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
//

#ifndef BNFAKE_SUMMARIZATION_H_
#define BNFAKE_SUMMARIZATION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bnfake/article.h"
#include "bnfake/backends.h"
#include "json.hpp"

namespace bnfake {

struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  std::size_t size() const { return end - begin; }
  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

// Contiguous, non-overlapping chunks covering [0, article_token_count).
// Every chunk holds at most chunk_token_budget tokens and all but the last
// hold at least half of it.
struct ChunkPlan {
  std::vector<TokenRange> boundaries;
  std::size_t chunk_token_budget = 0;
  std::size_t article_token_count = 0;
};

inline constexpr std::size_t kMinChunkBudget = 16;

// Uses ceil(tokens / budget) chunks. Each cut moves back to the nearest
// sentence end inside the chunk when one exists in the window that still
// lets the remaining chunks cover the rest; otherwise it is a hard cut.
// Throws Error on empty text and ConfigError on a budget below 16.
ChunkPlan PlanChunks(std::span<const std::string> tokens, std::size_t chunk_budget);
ChunkPlan PlanChunks(std::string_view text, const Tokenizer& tokenizer,
                     std::size_t chunk_budget);

struct SummaryOptions {
  std::size_t limit = 512;
  std::size_t chunk_budget = 400;
  std::size_t per_chunk_summary_budget = 128;

  void Validate() const;
};

struct SummaryResult {
  std::string text;
  bool passthrough = false;
  std::size_t chunk_count = 0;
  std::size_t input_token_count = 0;
  std::size_t final_token_count = 0;
  // The per-chunk budget actually used after sharing the limit between chunks.
  std::size_t per_chunk_budget_used = 0;
  bool second_pass = false;
  bool truncated = false;
};

// Articles within the limit pass through unchanged. Longer ones are chunked,
// each chunk summarized within min(per_chunk_summary_budget, limit / chunks)
// tokens (at least 1), and the summaries joined with single spaces in chunk
// order. An over-limit join gets one more summarization pass; anything still
// over the limit is cut to its first `limit` tokens.
SummaryResult SummarizeArticle(std::string_view text, const Seq2SeqModel& summarizer,
                               const Tokenizer& tokenizer, const SummaryOptions& options);

struct SummaryLogEntry {
  std::string id;
  SummaryResult result;
};

struct SummarizeCorpusResult {
  LabeledCorpus corpus;
  std::vector<SummaryLogEntry> log;
};

// Maps every article's content through SummarizeArticle, keeping ids, labels
// and order. Summarized articles gain a summarized provenance record. Every
// failure is collected, then the first few are reported in one Error.
SummarizeCorpusResult SummarizeCorpus(const LabeledCorpus& corpus,
                                      const Seq2SeqModel& summarizer,
                                      const Tokenizer& tokenizer,
                                      const SummaryOptions& options,
                                      std::size_t workers = 1);

nlohmann::ordered_json ToJson(const SummaryLogEntry& entry);

}  // namespace bnfake

#endif  // BNFAKE_SUMMARIZATION_H_

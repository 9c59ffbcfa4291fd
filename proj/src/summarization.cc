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

#include "bnfake/summarization.h"

#include <algorithm>

#include "bnfake/error.h"
#include "bnfake/parallel.h"
#include "bnfake/text.h"

namespace bnfake {

ChunkPlan PlanChunks(std::span<const std::string> tokens, std::size_t chunk_budget) {
  if (chunk_budget < kMinChunkBudget) {
    throw ConfigError("chunk budget must be at least " + std::to_string(kMinChunkBudget));
  }
  if (tokens.empty()) throw Error("cannot plan chunks for empty text");

  const std::size_t n = tokens.size();
  const std::size_t chunks = (n + chunk_budget - 1) / chunk_budget;
  const std::size_t min_chunk = (chunk_budget + 1) / 2;
  ChunkPlan plan;
  plan.chunk_token_budget = chunk_budget;
  plan.article_token_count = n;

  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < chunks; ++i) {
    const std::size_t hard_end = start + chunk_budget;  // < n for non-final chunks
    // The remaining chunks can absorb at most this many tokens.
    const std::size_t capacity_after = (chunks - i - 1) * chunk_budget;
    const std::size_t earliest =
        std::max(start + min_chunk, n > capacity_after ? n - capacity_after : 0);
    std::size_t end = hard_end;
    for (std::size_t cut = hard_end; cut >= earliest && cut > start; --cut) {
      if (EndsSentence(tokens[cut - 1])) {
        end = cut;
        break;
      }
    }
    plan.boundaries.push_back({start, end});
    start = end;
  }
  plan.boundaries.push_back({start, n});
  return plan;
}

ChunkPlan PlanChunks(std::string_view text, const Tokenizer& tokenizer,
                     std::size_t chunk_budget) {
  auto tokens = tokenizer.Tokenize(text);
  return PlanChunks(tokens, chunk_budget);
}

void SummaryOptions::Validate() const {
  if (limit == 0) throw ConfigError("summary limit must be positive");
  if (chunk_budget < kMinChunkBudget) {
    throw ConfigError("chunk budget must be at least " + std::to_string(kMinChunkBudget));
  }
  if (per_chunk_summary_budget == 0) {
    throw ConfigError("per-chunk summary budget must be positive");
  }
}

SummaryResult SummarizeArticle(std::string_view text, const Seq2SeqModel& summarizer,
                               const Tokenizer& tokenizer,
                               const SummaryOptions& options) {
  options.Validate();
  SummaryResult result;
  auto tokens = tokenizer.Tokenize(text);
  result.input_token_count = tokens.size();
  if (tokens.size() <= options.limit) {
    result.text = std::string(text);
    result.passthrough = true;
    result.final_token_count = tokens.size();
    return result;
  }

  ChunkPlan plan = PlanChunks(tokens, options.chunk_budget);
  result.chunk_count = plan.boundaries.size();
  result.per_chunk_budget_used = std::max<std::size_t>(
      1, std::min(options.per_chunk_summary_budget, options.limit / result.chunk_count));

  std::vector<std::string> summaries;
  summaries.reserve(plan.boundaries.size());
  for (std::size_t i = 0; i < plan.boundaries.size(); ++i) {
    const auto& range = plan.boundaries[i];
    auto chunk = tokenizer.Detokenize(
        std::span<const std::string>(tokens).subspan(range.begin, range.size()));
    try {
      auto summary = summarizer.Generate(chunk, result.per_chunk_budget_used);
      if (!summary.empty()) summaries.push_back(std::move(summary));
    } catch (const std::exception& e) {
      throw Error("summarizer failed on chunk " + std::to_string(i) + ": " + e.what());
    }
  }
  if (summaries.empty()) throw Error("summarizer returned nothing for every chunk");
  std::string joined = JoinTokens(summaries);

  if (tokenizer.Count(joined) > options.limit) {
    result.second_pass = true;
    try {
      joined = summarizer.Generate(joined, options.limit);
    } catch (const std::exception& e) {
      throw Error(std::string("summarizer failed on the second pass: ") + e.what());
    }
  }
  auto final_tokens = tokenizer.Tokenize(joined);
  if (final_tokens.size() > options.limit) {
    final_tokens.resize(options.limit);
    joined = tokenizer.Detokenize(final_tokens);
    result.truncated = true;
  }
  result.text = std::move(joined);
  result.final_token_count = tokenizer.Count(result.text);
  return result;
}

SummarizeCorpusResult SummarizeCorpus(const LabeledCorpus& corpus,
                                      const Seq2SeqModel& summarizer,
                                      const Tokenizer& tokenizer,
                                      const SummaryOptions& options,
                                      std::size_t workers) {
  options.Validate();
  std::vector<SummaryResult> results(corpus.size());
  std::vector<std::string> errors(corpus.size());
  ParallelFor(corpus.size(), workers, [&](std::size_t i) {
    try {
      results[i] = SummarizeArticle(corpus[i].content, summarizer, tokenizer, options);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  std::string failure;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (errors[i].empty()) continue;
    if (++failed <= 3) failure += "\n  " + corpus[i].id + ": " + errors[i];
  }
  if (failed > 0) {
    throw Error("summarization failed for " + std::to_string(failed) + " article(s):" +
                failure);
  }

  SummarizeCorpusResult out;
  out.corpus.set_name(corpus.name());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    NewsArticle article = corpus[i];
    if (!results[i].passthrough) {
      article.content = results[i].text;
      article.provenance.push_back(
          {TransformKind::kSummarized, article.id, summarizer.id(), std::nullopt});
    }
    out.log.push_back({article.id, std::move(results[i])});
    out.log.back().result.text.clear();
    out.corpus.Add(std::move(article));
  }
  return out;
}

nlohmann::ordered_json ToJson(const SummaryLogEntry& entry) {
  nlohmann::ordered_json j;
  j["id"] = entry.id;
  j["passthrough"] = entry.result.passthrough;
  j["chunk_count"] = entry.result.chunk_count;
  j["in_tokens"] = entry.result.input_token_count;
  j["out_tokens"] = entry.result.final_token_count;
  j["second_pass"] = entry.result.second_pass;
  j["truncated"] = entry.result.truncated;
  return j;
}

}  // namespace bnfake

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

#ifndef BNFAKE_CORPUS_H_
#define BNFAKE_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bnfake/article.h"
#include "bnfake/backends.h"
#include "json.hpp"

namespace bnfake {

enum class CorpusFormat { kCsv, kJsonl };

CorpusFormat CorpusFormatFromName(std::string_view name);
// ".csv" or ".jsonl"/".json"; throws ConfigError otherwise.
CorpusFormat CorpusFormatFromPath(const std::filesystem::path& path);

// A row that failed validation. Rows are numbered from 1; for CSV the header
// is not counted, for JSONL the number is the line number.
struct RejectedRow {
  std::size_t row = 0;
  std::string reason;
};

struct LoadResult {
  LabeledCorpus corpus;
  std::vector<RejectedRow> rejects;
};

// Reads a corpus, NFC-normalizing every text field and collapsing whitespace.
// Rows with a bad label, an empty id or content, invalid UTF-8 or the wrong
// shape go to `rejects`. A duplicate id throws Error naming the id and both
// rows, as does a missing file or a header without the required columns.
//
// `origin` applies to every row unless a JSONL row carries its own.
LoadResult LoadCorpus(const std::filesystem::path& path, CorpusFormat format,
                      Origin origin);
LoadResult ParseCorpus(std::istream& in, CorpusFormat format, Origin origin,
                       std::string name);

// JSONL carries origin and provenance, so it round-trips through LoadCorpus.
void WriteCorpusJsonl(const LabeledCorpus& corpus, std::ostream& out);
void WriteCorpusJsonl(const LabeledCorpus& corpus, const std::filesystem::path& path);
void WriteCorpusCsv(const LabeledCorpus& corpus, std::ostream& out);
void WriteCorpusCsv(const LabeledCorpus& corpus, const std::filesystem::path& path);
void WriteRejects(const std::vector<RejectedRow>& rejects,
                  const std::filesystem::path& path);

// Content becomes headline + separator + content and a merged_headline
// record is appended. An empty headline leaves the content as is (the record
// is still added). Throws Error if the article was already merged.
NewsArticle MergeHeadlineContent(const NewsArticle& article,
                                 std::string_view separator = " ");
LabeledCorpus MergeHeadlines(const LabeledCorpus& corpus,
                             std::string_view separator = " ");

struct ClassStats {
  std::size_t count = 0;
  double avg_char_length = 0.0;  // code points
  double avg_word_count = 0.0;   // whitespace tokens
  std::size_t longest_article_words = 0;
  std::size_t max_token_length = 0;  // under the supplied tokenizer
};

struct CorpusStats {
  ClassStats fake;
  ClassStats authentic;

  std::size_t count_fake() const { return fake.count; }
  std::size_t count_authentic() const { return authentic.count; }
  const ClassStats& of(Label label) const {
    return label == Label::kFake ? fake : authentic;
  }
};

// Per-class statistics over article content. Throws Error("no articles") on
// an empty corpus.
CorpusStats ComputeStats(const LabeledCorpus& corpus, const Tokenizer& tokenizer);
nlohmann::ordered_json ToJson(const CorpusStats& stats);

// Hex FNV-1a digest of the corpus JSONL serialization.
std::string Fingerprint(const LabeledCorpus& corpus);

}  // namespace bnfake

#endif  // BNFAKE_CORPUS_H_

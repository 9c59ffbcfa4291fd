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

#ifndef BNFAKE_MOCK_BACKENDS_H_
#define BNFAKE_MOCK_BACKENDS_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bnfake/backends.h"

namespace bnfake {

inline constexpr char kMockTokenizerId[] = "mock.tokenizer";
inline constexpr char kMockSynonymMlmId[] = "mock.mlm.synonyms";
inline constexpr char kMockIdentityMlmId[] = "mock.mlm.identity";
inline constexpr char kMockTranslatorForwardId[] = "mock.seq2seq.translator_fwd";
inline constexpr char kMockTranslatorBackwardId[] = "mock.seq2seq.translator_bwd";
inline constexpr char kMockParaphraserId[] = "mock.seq2seq.paraphraser";
inline constexpr char kMockSummarizerId[] = "mock.seq2seq.summarizer";
inline constexpr char kMockLexiconClassifierId[] = "mock.classifier.lexicon";
inline constexpr char kMockPresenceClassifierId[] = "mock.classifier.presence";

// Whitespace tokenizer. Ids are FNV-1a hashes of the pieces; pieces seen by
// Encode are remembered so Decode can invert them.
class WhitespaceTokenizer final : public Tokenizer {
 public:
  explicit WhitespaceTokenizer(std::size_t max_positions = 512)
      : max_positions_(max_positions) {}

  std::string id() const override { return kMockTokenizerId; }
  std::vector<std::string> Tokenize(std::string_view text) const override;
  std::vector<TokenId> Encode(std::string_view text) const override;
  // Unknown ids decode to "[UNK]".
  std::string Decode(std::span<const TokenId> ids) const override;
  std::size_t Count(std::string_view text) const override;
  // Distinct pieces encoded so far; the mock vocabulary is open.
  std::size_t vocabulary_size() const override;
  std::size_t max_positions() const override { return max_positions_; }

 private:
  std::size_t max_positions_;
  mutable std::mutex mu_;
  mutable std::unordered_map<TokenId, std::string> pieces_;
};

// Looks each masked token up in a fixed synonym table; tokens without an
// entry are predicted unchanged. An empty table is the identity MLM.
class SynonymMaskedLm final : public MaskedLanguageModel {
 public:
  SynonymMaskedLm(std::string id, std::map<std::string, std::string> synonyms)
      : id_(std::move(id)), synonyms_(std::move(synonyms)) {}

  std::string id() const override { return id_; }
  std::vector<std::string> Predict(
      std::span<const std::string> tokens,
      std::span<const std::size_t> masked_positions) const override;

 private:
  std::string id_;
  std::map<std::string, std::string> synonyms_;
};

// Word-level translator over an involutive dictionary: each pair (a, b) maps
// a to b and b to a, and words outside the dictionary pass through. Applying
// it twice is the identity on any text. Without pairs it swaps the case of
// ASCII letters, which is also an involution.
class DictionaryTranslator final : public Seq2SeqModel {
 public:
  DictionaryTranslator(std::string id, Seq2SeqRole role,
                       const std::vector<std::pair<std::string, std::string>>& pairs = {});

  std::string id() const override { return id_; }
  Seq2SeqRole role() const override { return role_; }
  std::string Generate(std::string_view text,
                       std::size_t max_output_tokens) const override;

 private:
  std::string id_;
  Seq2SeqRole role_;
  std::map<std::string, std::string> dictionary_;
};

// Appends a marker token to every sentence, ahead of the terminator.
class MarkerParaphraser final : public Seq2SeqModel {
 public:
  explicit MarkerParaphraser(std::string marker = "[para]",
                             std::string id = kMockParaphraserId)
      : marker_(std::move(marker)), id_(std::move(id)) {}

  std::string id() const override { return id_; }
  Seq2SeqRole role() const override { return Seq2SeqRole::kParaphraser; }
  std::string Generate(std::string_view text,
                       std::size_t max_output_tokens) const override;
  const std::string& marker() const { return marker_; }

 private:
  std::string marker_;
  std::string id_;
};

// Returns the first sentence, cut to max_output_tokens.
class FirstSentenceSummarizer final : public Seq2SeqModel {
 public:
  explicit FirstSentenceSummarizer(std::string id = kMockSummarizerId)
      : id_(std::move(id)) {}

  std::string id() const override { return id_; }
  Seq2SeqRole role() const override { return Seq2SeqRole::kSummarizer; }
  std::string Generate(std::string_view text,
                       std::size_t max_output_tokens) const override;

 private:
  std::string id_;
};

// Echoes the input (cut to the budget). Used for identity round trips.
class IdentitySeq2Seq final : public Seq2SeqModel {
 public:
  IdentitySeq2Seq(std::string id, Seq2SeqRole role)
      : id_(std::move(id)), role_(role) {}

  std::string id() const override { return id_; }
  Seq2SeqRole role() const override { return role_; }
  std::string Generate(std::string_view text,
                       std::size_t max_output_tokens) const override;

 private:
  std::string id_;
  Seq2SeqRole role_;
};

// Bag-of-words log-odds classifier.
//
// Predict sums the lexicon weights of the first max_tokens whitespace tokens
// and squashes the sum with the logistic function; a score of exactly 0.5
// (no lexicon hits) is labelled authentic. FineTune re-estimates every weight
// as the Laplace-smoothed log ratio of the token's relative frequency in the
// authentic class over the fake class, so fake-only words get negative
// weights. In presence mode a token counts once per article.
class LexiconClassifier final : public SequenceClassifier {
 public:
  enum class CountMode { kFrequency, kPresence };

  // Throws Error if the lexicon is empty.
  LexiconClassifier(std::string id, std::map<std::string, double> lexicon,
                    CountMode mode = CountMode::kFrequency,
                    std::size_t max_tokens = 512, double smoothing = 1.0);

  std::string id() const override { return id_; }
  Prediction Predict(std::string_view text) const override;
  std::unique_ptr<SequenceClassifier> FineTune(
      const LabeledCorpus& train, const Hyperparams& hyperparams,
      const EpochObserver& on_epoch) const override;
  nlohmann::ordered_json Serialize() const override;
  static std::unique_ptr<LexiconClassifier> Deserialize(const nlohmann::json& blob);

  const std::map<std::string, double>& lexicon() const { return lexicon_; }
  double weight(const std::string& token) const;

 private:
  std::string id_;
  std::map<std::string, double> lexicon_;
  CountMode mode_;
  std::size_t max_tokens_;
  double smoothing_;
};

// Untrained lexicon: a single neutral entry that real text never contains,
// so every prediction is the 0.5 tie.
std::map<std::string, double> NeutralLexicon();

// Filler vocabulary and its synonym table, shared by the default synonym MLM
// and the synthetic corpus generator.
const std::vector<std::string>& MockFillerWords();
const std::map<std::string, std::string>& MockSynonyms();

}  // namespace bnfake

#endif  // BNFAKE_MOCK_BACKENDS_H_

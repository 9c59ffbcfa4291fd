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

#ifndef BNFAKE_BACKENDS_H_
#define BNFAKE_BACKENDS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnfake/article.h"
#include "bnfake/hyperparams.h"
#include "json.hpp"

namespace bnfake {

// Common surface of every pluggable model. Run manifests refer to backends by
// id only, so ids must be stable across runs.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string id() const = 0;
  // True if one instance may serve several worker threads at once.
  virtual bool shareable() const { return true; }
};

using TokenId = std::uint64_t;

class Tokenizer : public Backend {
 public:
  // Surface pieces in order. Every other method is defined in terms of these.
  virtual std::vector<std::string> Tokenize(std::string_view text) const = 0;
  // Single-space join.
  virtual std::string Detokenize(std::span<const std::string> pieces) const;
  virtual std::vector<TokenId> Encode(std::string_view text) const = 0;
  virtual std::string Decode(std::span<const TokenId> ids) const = 0;
  virtual std::size_t Count(std::string_view text) const {
    return Tokenize(text).size();
  }
  virtual std::size_t vocabulary_size() const = 0;
  virtual std::size_t max_positions() const = 0;
};

class MaskedLanguageModel : public Backend {
 public:
  // Top-1 replacement for each masked position, in the order given.
  virtual std::vector<std::string> Predict(
      std::span<const std::string> tokens,
      std::span<const std::size_t> masked_positions) const = 0;
};

enum class Seq2SeqRole : std::uint8_t {
  kTranslatorForward,
  kTranslatorBackward,
  kParaphraser,
  kSummarizer,
};

std::string_view Seq2SeqRoleName(Seq2SeqRole role);
Seq2SeqRole Seq2SeqRoleFromName(std::string_view name);

class Seq2SeqModel : public Backend {
 public:
  virtual Seq2SeqRole role() const = 0;
  // The result must not exceed max_output_tokens under the paired tokenizer.
  virtual std::string Generate(std::string_view text,
                               std::size_t max_output_tokens) const = 0;
};

struct Prediction {
  Label label = Label::kAuthentic;
  // Probability of the authentic class, in [0, 1].
  double score = 0.5;
};

class SequenceClassifier : public Backend {
 public:
  // Called once per finished epoch with the model state after that epoch.
  using EpochObserver =
      std::function<void(int epoch, const SequenceClassifier& snapshot)>;

  virtual Prediction Predict(std::string_view text) const = 0;

  // Returns a new trained classifier; *this is left untouched.
  virtual std::unique_ptr<SequenceClassifier> FineTune(
      const LabeledCorpus& train, const Hyperparams& hyperparams,
      const EpochObserver& on_epoch) const = 0;

  // Opaque model blob. Must carry "backend_id" so a registry can reload it.
  virtual nlohmann::ordered_json Serialize() const = 0;
};

// Resolves backends by id.
class BackendRegistry {
 public:
  using ClassifierFactory =
      std::function<std::unique_ptr<SequenceClassifier>()>;
  using ClassifierLoader = std::function<std::unique_ptr<SequenceClassifier>(
      const nlohmann::json& blob)>;

  // Registry preloaded with every mock backend.
  static BackendRegistry WithMocks();

  void Register(std::shared_ptr<const Tokenizer> tokenizer);
  void Register(std::shared_ptr<const MaskedLanguageModel> mlm);
  void Register(std::shared_ptr<const Seq2SeqModel> model);
  void RegisterClassifier(std::string id, ClassifierFactory factory,
                          ClassifierLoader loader);

  // All lookups throw ConfigError naming the id when it is unknown.
  std::shared_ptr<const Tokenizer> tokenizer(std::string_view id) const;
  std::shared_ptr<const MaskedLanguageModel> masked_lm(std::string_view id) const;
  std::shared_ptr<const Seq2SeqModel> seq2seq(std::string_view id) const;
  std::unique_ptr<SequenceClassifier> NewClassifier(std::string_view id) const;
  std::unique_ptr<SequenceClassifier> LoadClassifier(const nlohmann::json& blob) const;

  bool HasClassifier(std::string_view id) const;
  std::vector<std::string> ClassifierIds() const;

 private:
  struct ClassifierEntry {
    ClassifierFactory factory;
    ClassifierLoader loader;
  };
  std::map<std::string, std::shared_ptr<const Tokenizer>, std::less<>> tokenizers_;
  std::map<std::string, std::shared_ptr<const MaskedLanguageModel>, std::less<>> mlms_;
  std::map<std::string, std::shared_ptr<const Seq2SeqModel>, std::less<>> seq2seq_;
  std::map<std::string, ClassifierEntry, std::less<>> classifiers_;
};

// The set of models one pipeline run consumes.
struct BackendSuite {
  std::shared_ptr<const Tokenizer> tokenizer;
  std::vector<std::shared_ptr<const MaskedLanguageModel>> masked_lms;
  std::map<Seq2SeqRole, std::shared_ptr<const Seq2SeqModel>> seq2seq;
  std::shared_ptr<const BackendRegistry> registry;

  // Throws ConfigError if the role is not present.
  const Seq2SeqModel& model(Seq2SeqRole role) const;
  bool has(Seq2SeqRole role) const { return seq2seq.contains(role); }

  // Tokenizer, registry and at least one masked LM must be present, and each
  // seq2seq model must sit under its own role.
  void Validate() const;

  // Every role filled with the default mock.
  static BackendSuite Mocks();
};

}  // namespace bnfake

#endif  // BNFAKE_BACKENDS_H_

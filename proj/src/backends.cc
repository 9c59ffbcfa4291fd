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

#include "bnfake/backends.h"

#include <array>
#include <algorithm>

#include "bnfake/error.h"
#include "bnfake/mock_backends.h"
#include "bnfake/text.h"

namespace bnfake {
namespace {

constexpr std::array<std::string_view, 4> kRoleNames = {
    "translator_fwd", "translator_bwd", "paraphraser", "summarizer"};

template <typename Map>
auto Lookup(const Map& map, std::string_view id, const char* what) {
  auto it = map.find(id);
  if (it == map.end()) {
    throw ConfigError(std::string("unknown ") + what + " backend '" +
                      std::string(id) + "'");
  }
  return it->second;
}

}  // namespace

std::string_view Seq2SeqRoleName(Seq2SeqRole role) {
  return kRoleNames[static_cast<std::size_t>(role)];
}

Seq2SeqRole Seq2SeqRoleFromName(std::string_view name) {
  auto it = std::find(kRoleNames.begin(), kRoleNames.end(), name);
  if (it == kRoleNames.end()) {
    throw ConfigError("unknown seq2seq role '" + std::string(name) + "'");
  }
  return static_cast<Seq2SeqRole>(it - kRoleNames.begin());
}

std::string Tokenizer::Detokenize(std::span<const std::string> pieces) const {
  return JoinTokens(pieces);
}

BackendRegistry BackendRegistry::WithMocks() {
  BackendRegistry registry;
  registry.Register(std::make_shared<WhitespaceTokenizer>());
  registry.Register(
      std::make_shared<SynonymMaskedLm>(kMockSynonymMlmId, MockSynonyms()));
  registry.Register(std::make_shared<SynonymMaskedLm>(
      kMockIdentityMlmId, std::map<std::string, std::string>{}));
  registry.Register(std::make_shared<DictionaryTranslator>(
      kMockTranslatorForwardId, Seq2SeqRole::kTranslatorForward));
  registry.Register(std::make_shared<DictionaryTranslator>(
      kMockTranslatorBackwardId, Seq2SeqRole::kTranslatorBackward));
  registry.Register(std::make_shared<MarkerParaphraser>());
  registry.Register(std::make_shared<FirstSentenceSummarizer>());

  auto add_lexicon = [&registry](const char* id,
                                 LexiconClassifier::CountMode mode) {
    registry.RegisterClassifier(
        id,
        [id, mode] {
          return std::make_unique<LexiconClassifier>(id, NeutralLexicon(), mode);
        },
        [](const nlohmann::json& blob) -> std::unique_ptr<SequenceClassifier> {
          return LexiconClassifier::Deserialize(blob);
        });
  };
  add_lexicon(kMockLexiconClassifierId, LexiconClassifier::CountMode::kFrequency);
  add_lexicon(kMockPresenceClassifierId, LexiconClassifier::CountMode::kPresence);
  return registry;
}

void BackendRegistry::Register(std::shared_ptr<const Tokenizer> tokenizer) {
  auto id = tokenizer->id();
  tokenizers_[id] = std::move(tokenizer);
}

void BackendRegistry::Register(std::shared_ptr<const MaskedLanguageModel> mlm) {
  auto id = mlm->id();
  mlms_[id] = std::move(mlm);
}

void BackendRegistry::Register(std::shared_ptr<const Seq2SeqModel> model) {
  auto id = model->id();
  seq2seq_[id] = std::move(model);
}

void BackendRegistry::RegisterClassifier(std::string id,
                                         ClassifierFactory factory,
                                         ClassifierLoader loader) {
  classifiers_[std::move(id)] = {std::move(factory), std::move(loader)};
}

std::shared_ptr<const Tokenizer> BackendRegistry::tokenizer(
    std::string_view id) const {
  return Lookup(tokenizers_, id, "tokenizer");
}

std::shared_ptr<const MaskedLanguageModel> BackendRegistry::masked_lm(
    std::string_view id) const {
  return Lookup(mlms_, id, "masked LM");
}

std::shared_ptr<const Seq2SeqModel> BackendRegistry::seq2seq(
    std::string_view id) const {
  return Lookup(seq2seq_, id, "seq2seq");
}

std::unique_ptr<SequenceClassifier> BackendRegistry::NewClassifier(
    std::string_view id) const {
  return Lookup(classifiers_, id, "classifier").factory();
}

std::unique_ptr<SequenceClassifier> BackendRegistry::LoadClassifier(
    const nlohmann::json& blob) const {
  if (!blob.contains("backend_id")) {
    throw Error("model blob has no backend_id");
  }
  auto id = blob.at("backend_id").get<std::string>();
  return Lookup(classifiers_, id, "classifier").loader(blob);
}

bool BackendRegistry::HasClassifier(std::string_view id) const {
  return classifiers_.find(id) != classifiers_.end();
}

std::vector<std::string> BackendRegistry::ClassifierIds() const {
  std::vector<std::string> ids;
  for (const auto& [id, entry] : classifiers_) ids.push_back(id);
  return ids;
}

const Seq2SeqModel& BackendSuite::model(Seq2SeqRole role) const {
  auto it = seq2seq.find(role);
  if (it == seq2seq.end() || !it->second) {
    throw ConfigError("backend suite has no " +
                      std::string(Seq2SeqRoleName(role)) + " model");
  }
  return *it->second;
}

void BackendSuite::Validate() const {
  if (!tokenizer) throw ConfigError("backend suite has no tokenizer");
  if (!registry) throw ConfigError("backend suite has no classifier registry");
  if (masked_lms.empty()) throw ConfigError("backend suite needs at least one masked LM");
  for (const auto& mlm : masked_lms) {
    if (!mlm) throw ConfigError("backend suite holds a null masked LM");
  }
  for (const auto& [role, model] : seq2seq) {
    if (!model) throw ConfigError("null seq2seq model");
    if (model->role() != role) {
      throw ConfigError("seq2seq backend '" + model->id() + "' registered as " +
                        std::string(Seq2SeqRoleName(role)) + " but declares " +
                        std::string(Seq2SeqRoleName(model->role())));
    }
  }
}

BackendSuite BackendSuite::Mocks() {
  auto registry = std::make_shared<const BackendRegistry>(BackendRegistry::WithMocks());
  BackendSuite suite;
  suite.tokenizer = registry->tokenizer(kMockTokenizerId);
  suite.masked_lms = {registry->masked_lm(kMockSynonymMlmId)};
  suite.seq2seq[Seq2SeqRole::kTranslatorForward] =
      registry->seq2seq(kMockTranslatorForwardId);
  suite.seq2seq[Seq2SeqRole::kTranslatorBackward] =
      registry->seq2seq(kMockTranslatorBackwardId);
  suite.seq2seq[Seq2SeqRole::kParaphraser] = registry->seq2seq(kMockParaphraserId);
  suite.seq2seq[Seq2SeqRole::kSummarizer] = registry->seq2seq(kMockSummarizerId);
  suite.registry = std::move(registry);
  return suite;
}

}  // namespace bnfake

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

#include "bnfake/augmentation.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "bnfake/error.h"
#include "bnfake/parallel.h"
#include "bnfake/random.h"
#include "bnfake/text.h"

namespace bnfake {
namespace {

constexpr std::array<std::string_view, 3> kTechniqueNames = {
    "token_replacement", "back_translation", "paraphrase"};
constexpr std::array<std::string_view, 3> kIdSuffixes = {"tr", "bt", "pp"};

// Seq2seq budget for one sentence; generous so mocks never clip and real
// models have room to rephrase.
std::size_t SentenceBudget(std::string_view sentence) {
  return 4 * CountWhitespaceTokens(sentence) + 16;
}

std::string BackendIdFor(const AugmentationEngine& engine, Technique technique,
                         std::string_view article_id) {
  const auto& backends = engine.backends();
  switch (technique) {
    case Technique::kTokenReplacement:
      return engine.MaskedLmFor(article_id).id();
    case Technique::kBackTranslation:
      return backends.model(Seq2SeqRole::kTranslatorForward).id() + "+" +
             backends.model(Seq2SeqRole::kTranslatorBackward).id();
    case Technique::kParaphrase:
      return backends.model(Seq2SeqRole::kParaphraser).id();
  }
  return {};
}

}  // namespace

std::string_view TechniqueName(Technique technique) {
  return kTechniqueNames[static_cast<std::size_t>(technique)];
}

Technique TechniqueFromName(std::string_view name) {
  auto it = std::find(kTechniqueNames.begin(), kTechniqueNames.end(), name);
  if (it == kTechniqueNames.end()) {
    throw ConfigError("unknown augmentation technique '" + std::string(name) + "'");
  }
  return static_cast<Technique>(it - kTechniqueNames.begin());
}

TransformKind TransformKindOf(Technique technique) {
  switch (technique) {
    case Technique::kTokenReplacement:
      return TransformKind::kTokenReplaced;
    case Technique::kBackTranslation:
      return TransformKind::kBackTranslated;
    case Technique::kParaphrase:
      return TransformKind::kParaphrased;
  }
  return TransformKind::kTokenReplaced;
}

AugmentationEngine::AugmentationEngine(std::vector<Technique> techniques,
                                       BackendSuite backends,
                                       std::optional<double> mask_fraction,
                                       std::uint64_t base_seed)
    : techniques_(std::move(techniques)),
      backends_(std::move(backends)),
      mask_fraction_(mask_fraction),
      base_seed_(base_seed) {
  if (techniques_.empty()) throw ConfigError("augmentation needs at least one technique");
  std::set<Technique> seen;
  for (auto t : techniques_) {
    if (!seen.insert(t).second) {
      throw ConfigError("technique '" + std::string(TechniqueName(t)) + "' listed twice");
    }
  }
  backends_.Validate();
  bool replaces = seen.contains(Technique::kTokenReplacement);
  if (replaces != mask_fraction_.has_value()) {
    throw ConfigError(replaces ? "token replacement needs a mask fraction"
                               : "mask fraction given without token replacement");
  }
  if (mask_fraction_ && !(*mask_fraction_ > 0.0 && *mask_fraction_ <= 1.0)) {
    throw ConfigError("mask fraction must lie in (0, 1]");
  }
  if (seen.contains(Technique::kBackTranslation)) {
    backends_.model(Seq2SeqRole::kTranslatorForward);
    backends_.model(Seq2SeqRole::kTranslatorBackward);
  }
  if (seen.contains(Technique::kParaphrase)) backends_.model(Seq2SeqRole::kParaphraser);
}

std::uint64_t AugmentationEngine::SeedFor(std::string_view article_id,
                                          Technique technique) const {
  return DeriveSeed(base_seed_, article_id, TechniqueName(technique));
}

const MaskedLanguageModel& AugmentationEngine::MaskedLmFor(
    std::string_view article_id) const {
  const auto& mlms = backends_.masked_lms;
  if (mlms.size() == 1) return *mlms.front();
  return *mlms[DeriveSeed(base_seed_, article_id, "mlm") % mlms.size()];
}

std::size_t MaskCount(std::size_t token_count, double mask_fraction) {
  auto rounded = static_cast<std::size_t>(
      std::floor(mask_fraction * static_cast<double>(token_count) + 0.5));
  return std::clamp<std::size_t>(rounded, 1, std::max<std::size_t>(token_count, 1));
}

std::vector<std::size_t> SelectMaskPositions(std::size_t token_count,
                                             double mask_fraction,
                                             std::uint64_t seed) {
  Rng rng(seed);
  auto positions = rng.SampleIndices(token_count, MaskCount(token_count, mask_fraction));
  std::sort(positions.begin(), positions.end());
  return positions;
}

std::string TokenReplace(std::string_view text, const MaskedLanguageModel& mlm,
                         const Tokenizer& tokenizer, double mask_fraction,
                         std::uint64_t seed) {
  if (!(mask_fraction > 0.0 && mask_fraction <= 1.0)) {
    throw Error("mask fraction must lie in (0, 1]");
  }
  auto tokens = tokenizer.Tokenize(text);
  if (tokens.empty()) throw Error("token replacement on empty text");
  auto positions = SelectMaskPositions(tokens.size(), mask_fraction, seed);
  auto predictions = mlm.Predict(tokens, positions);
  if (predictions.size() != positions.size()) {
    throw Error("masked LM '" + mlm.id() + "' returned " +
                std::to_string(predictions.size()) + " predictions for " +
                std::to_string(positions.size()) + " masks");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    tokens[positions[i]] = std::move(predictions[i]);
  }
  return JoinTokens(tokens);
}

std::string BackTranslate(std::string_view text, const Seq2SeqModel& forward,
                          const Seq2SeqModel& backward) {
  auto sentences = SplitSentences(text);
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    try {
      auto pivot = forward.Generate(sentences[i], SentenceBudget(sentences[i]));
      out.push_back(backward.Generate(pivot, SentenceBudget(pivot)));
    } catch (const std::exception& e) {
      throw Error("back-translation failed on sentence " + std::to_string(i) +
                  ": " + e.what());
    }
  }
  return JoinTokens(out);
}

std::string Paraphrase(std::string_view text, const Seq2SeqModel& paraphraser) {
  auto sentences = SplitSentences(text);
  if (sentences.empty()) throw Error("paraphrase of empty text");
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    try {
      out.push_back(paraphraser.Generate(sentences[i], SentenceBudget(sentences[i])));
    } catch (const std::exception& e) {
      throw Error("paraphrase failed on sentence " + std::to_string(i) + ": " +
                  e.what());
    }
  }
  return JoinTokens(out);
}

std::string ApplyTechnique(const AugmentationEngine& engine, Technique technique,
                           std::string_view article_id, std::string_view text) {
  const auto& backends = engine.backends();
  switch (technique) {
    case Technique::kTokenReplacement:
      return TokenReplace(text, engine.MaskedLmFor(article_id), *backends.tokenizer,
                          *engine.mask_fraction(), engine.SeedFor(article_id, technique));
    case Technique::kBackTranslation:
      return BackTranslate(text, backends.model(Seq2SeqRole::kTranslatorForward),
                           backends.model(Seq2SeqRole::kTranslatorBackward));
    case Technique::kParaphrase:
      return Paraphrase(text, backends.model(Seq2SeqRole::kParaphraser));
  }
  throw Error("unhandled technique");
}

std::string AugmentedId(std::string_view source_id, Technique technique) {
  return std::string(source_id) + "~" +
         std::string(kIdSuffixes[static_cast<std::size_t>(technique)]);
}

AugmentResult AugmentCorpus(const LabeledCorpus& fakes,
                            const AugmentationEngine& engine,
                            std::size_t copies_per_article, std::size_t workers) {
  if (copies_per_article > engine.techniques().size()) {
    throw ConfigError("requested " + std::to_string(copies_per_article) +
                      " copies but only " +
                      std::to_string(engine.techniques().size()) +
                      " techniques are enabled");
  }
  for (const auto& article : fakes) {
    if (article.label != Label::kFake) {
      throw Error("augmentation input '" + article.id + "' is not labelled fake");
    }
  }

  struct Slot {
    std::vector<NewsArticle> copies;
    std::vector<AugmentationLogEntry> log;
    std::vector<AugmentationFailure> failures;
  };
  std::vector<Slot> slots(fakes.size());
  ParallelFor(fakes.size(), workers, [&](std::size_t i) {
    const auto& source = fakes[i];
    auto& slot = slots[i];
    for (std::size_t c = 0; c < copies_per_article; ++c) {
      Technique technique = engine.techniques()[c];
      try {
        NewsArticle copy = source;
        copy.id = AugmentedId(source.id, technique);
        copy.origin = Origin::kAugmented;
        copy.content = ApplyTechnique(engine, technique, source.id, source.content);
        if (copy.content.empty()) throw Error("backend produced empty text");
        std::uint64_t seed = engine.SeedFor(source.id, technique);
        copy.provenance.push_back({TransformKindOf(technique), source.id,
                                   BackendIdFor(engine, technique, source.id), seed});
        slot.log.push_back({source.id, copy.id, TransformKindOf(technique), seed});
        slot.copies.push_back(std::move(copy));
      } catch (const std::exception& e) {
        slot.failures.push_back({source.id, technique, e.what()});
      }
    }
  });

  AugmentResult result;
  result.corpus.set_name(fakes.name() + "+augmented");
  for (std::size_t i = 0; i < fakes.size(); ++i) {
    auto& slot = slots[i];
    if (copies_per_article > 0 && slot.copies.empty()) {
      throw Error("augmentation produced no copy of '" + fakes[i].id +
                  "': " + slot.failures.front().reason);
    }
    result.corpus.Add(fakes[i]);
    for (auto& copy : slot.copies) result.corpus.Add(std::move(copy));
    std::move(slot.log.begin(), slot.log.end(), std::back_inserter(result.log));
    std::move(slot.failures.begin(), slot.failures.end(),
              std::back_inserter(result.failures));
  }
  return result;
}

nlohmann::ordered_json ToJson(const AugmentationLogEntry& entry) {
  nlohmann::ordered_json j;
  j["source_id"] = entry.source_id;
  j["new_id"] = entry.new_id;
  j["kind"] = TransformKindName(entry.kind);
  j["seed"] = entry.seed;
  return j;
}

}  // namespace bnfake

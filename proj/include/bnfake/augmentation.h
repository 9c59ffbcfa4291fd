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

#ifndef BNFAKE_AUGMENTATION_H_
#define BNFAKE_AUGMENTATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnfake/article.h"
#include "bnfake/backends.h"
#include "json.hpp"

namespace bnfake {

enum class Technique : std::uint8_t { kTokenReplacement, kBackTranslation, kParaphrase };

std::string_view TechniqueName(Technique technique);
Technique TechniqueFromName(std::string_view name);
TransformKind TransformKindOf(Technique technique);

inline constexpr double kDefaultMaskFraction = 0.15;

// Immutable augmentation setup. Copy i of an article is produced by
// techniques()[i].
class AugmentationEngine {
 public:
  // Throws ConfigError when techniques is empty or repeats a technique, when
  // mask_fraction is given without token replacement (or missing with it),
  // when it falls outside (0, 1], or when a required backend role is absent.
  AugmentationEngine(std::vector<Technique> techniques, BackendSuite backends,
                     std::optional<double> mask_fraction, std::uint64_t base_seed);

  const std::vector<Technique>& techniques() const { return techniques_; }
  const BackendSuite& backends() const { return backends_; }
  std::optional<double> mask_fraction() const { return mask_fraction_; }
  std::uint64_t base_seed() const { return base_seed_; }

  // Seed for one (article, technique) pair; independent of processing order.
  std::uint64_t SeedFor(std::string_view article_id, Technique technique) const;
  // With several masked LMs, each article is pinned to one of them by id.
  const MaskedLanguageModel& MaskedLmFor(std::string_view article_id) const;

 private:
  std::vector<Technique> techniques_;
  BackendSuite backends_;
  std::optional<double> mask_fraction_;
  std::uint64_t base_seed_;
};

// max(1, round(mask_fraction * token_count)), rounding halves up.
std::size_t MaskCount(std::size_t token_count, double mask_fraction);

// The positions token replacement masks, ascending.
std::vector<std::size_t> SelectMaskPositions(std::size_t token_count,
                                             double mask_fraction,
                                             std::uint64_t seed);

// Masks MaskCount positions drawn without replacement and substitutes the
// MLM's top prediction at each; the token count never changes. A prediction
// equal to the original token is kept. Throws Error on empty text.
std::string TokenReplace(std::string_view text, const MaskedLanguageModel& mlm,
                         const Tokenizer& tokenizer, double mask_fraction,
                         std::uint64_t seed);

// backward(forward(s)) for each sentence s, in order.
std::string BackTranslate(std::string_view text, const Seq2SeqModel& forward,
                          const Seq2SeqModel& backward);

// Sentence-by-sentence paraphrase, in order.
std::string Paraphrase(std::string_view text, const Seq2SeqModel& paraphraser);

// Applies one technique of the engine to a single article text.
std::string ApplyTechnique(const AugmentationEngine& engine, Technique technique,
                           std::string_view article_id, std::string_view text);

struct AugmentationLogEntry {
  std::string source_id;
  std::string new_id;
  TransformKind kind = TransformKind::kTokenReplaced;
  std::uint64_t seed = 0;
};

struct AugmentationFailure {
  std::string article_id;
  Technique technique = Technique::kTokenReplacement;
  std::string reason;
};

struct AugmentResult {
  LabeledCorpus corpus;
  std::vector<AugmentationLogEntry> log;
  // Copies that failed while the article still produced at least one copy.
  std::vector<AugmentationFailure> failures;
};

// Id of the copy made from `source_id` with `technique`.
std::string AugmentedId(std::string_view source_id, Technique technique);

// Emits every original followed by its copies, in input order. Requires
// all-fake input and copies_per_article <= techniques().size(). Throws Error
// if an article ends up with no copy although copies were requested.
// `workers` > 1 augments articles concurrently; the output is identical.
AugmentResult AugmentCorpus(const LabeledCorpus& fakes,
                            const AugmentationEngine& engine,
                            std::size_t copies_per_article, std::size_t workers = 1);

nlohmann::ordered_json ToJson(const AugmentationLogEntry& entry);

}  // namespace bnfake

#endif  // BNFAKE_AUGMENTATION_H_

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

#include "bnfake/dataset_builder.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include "bnfake/corpus.h"
#include "bnfake/error.h"
#include "bnfake/random.h"

namespace bnfake {
namespace {

constexpr std::array<std::string_view, 5> kDatasetNames = {
    "dataset1", "dataset2", "test_ds1", "test_ds2", "test_ds3"};

std::vector<NewsArticle> Eligible(const LabeledCorpus& corpus, Label label,
                                  const IdSet& exclude) {
  std::vector<NewsArticle> out;
  for (const auto& article : corpus) {
    if (article.label == label && !exclude.contains(article.id)) out.push_back(article);
  }
  return out;
}

std::vector<NewsArticle> Draw(const std::vector<NewsArticle>& pool, std::size_t k,
                              Rng& rng) {
  std::vector<NewsArticle> out;
  out.reserve(k);
  for (std::size_t i : rng.SampleIndices(pool.size(), k)) out.push_back(pool[i]);
  return out;
}

void RequireAtLeast(std::size_t have, std::size_t need, const std::string& what) {
  if (have < need) {
    throw Error("insufficient eligible " + what + ": need " + std::to_string(need) +
                ", have " + std::to_string(have));
  }
}

BuiltDataset Finish(DatasetName name, std::vector<NewsArticle> articles,
                    std::uint64_t seed, std::size_t target,
                    std::map<std::string, std::string> inputs, std::size_t excluded) {
  Rng rng(DeriveSeed(seed, DatasetNameString(name), "shuffle"));
  rng.Shuffle(articles);
  BuiltDataset out;
  out.corpus = LabeledCorpus(std::string(DatasetNameString(name)), std::move(articles));
  auto& m = out.manifest;
  m.name = name;
  m.seed = seed;
  m.sampler = std::string(kSamplerAlgorithm);
  m.input_fingerprints = std::move(inputs);
  m.target_per_class = target;
  m.fake = out.corpus.CountLabel(Label::kFake);
  m.authentic = out.corpus.CountLabel(Label::kAuthentic);
  m.excluded_ids = excluded;
  m.output_fingerprint = Fingerprint(out.corpus);
  if (m.fake != m.authentic) {
    throw Error(std::string(DatasetNameString(name)) + " is unbalanced: " +
                std::to_string(m.fake) + " fake vs " + std::to_string(m.authentic) +
                " authentic");
  }
  return out;
}

}  // namespace

std::string_view DatasetNameString(DatasetName name) {
  return kDatasetNames[static_cast<std::size_t>(name)];
}

DatasetName DatasetNameFromString(std::string_view name) {
  auto it = std::find(kDatasetNames.begin(), kDatasetNames.end(), name);
  if (it == kDatasetNames.end()) {
    throw ConfigError("unknown dataset '" + std::string(name) + "'");
  }
  return static_cast<DatasetName>(it - kDatasetNames.begin());
}

DatasetTargets DatasetTargets::Scaled(double factor) {
  if (!(factor > 0)) throw ConfigError("dataset scale must be positive");
  auto scale = [factor](std::size_t n) {
    return std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor)));
  };
  DatasetTargets defaults;
  return {scale(defaults.test_ds1_per_class), scale(defaults.dataset2_per_class),
          scale(defaults.test_ds2_per_class)};
}

nlohmann::ordered_json ToJson(const DatasetManifest& m) {
  nlohmann::ordered_json j;
  j["dataset"] = DatasetNameString(m.name);
  j["seed"] = m.seed;
  j["sampler"] = m.sampler;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [name, digest] : m.input_fingerprints) inputs[name] = digest;
  j["input_fingerprints"] = std::move(inputs);
  j["target_per_class"] = m.target_per_class;
  j["counts"] = {{"fake", m.fake}, {"authentic", m.authentic}};
  j["excluded_ids"] = m.excluded_ids;
  j["output_fingerprint"] = m.output_fingerprint;
  return j;
}

Dataset1Result BuildDataset1(const LabeledCorpus& banfake, const LabeledCorpus& transfnd,
                             std::uint64_t seed, std::size_t holdout_per_class) {
  for (const auto& article : transfnd) {
    if (article.label != Label::kFake) {
      throw Error("translated corpus article '" + article.id + "' is not fake");
    }
    if (banfake.Contains(article.id)) {
      throw Error("id '" + article.id + "' appears in both input corpora");
    }
  }
  const IdSet none;
  auto translated = Eligible(transfnd, Label::kFake, none);
  auto original_fake = Eligible(banfake, Label::kFake, none);
  auto authentic_all = Eligible(banfake, Label::kAuthentic, none);

  const std::size_t pool = translated.size() + original_fake.size();
  RequireAtLeast(authentic_all.size(), pool, "authentic articles to balance the fake pool");
  RequireAtLeast(pool, holdout_per_class, "fake articles for the Test DS1 holdout");

  Rng rng(DeriveSeed(seed, "dataset1", "sample"));
  auto authentic = Draw(authentic_all, pool, rng);

  // Holdout fakes: translated first, then original fakes for any shortfall.
  std::vector<bool> translated_held(translated.size(), false);
  std::vector<bool> original_held(original_fake.size(), false);
  const std::size_t from_translated = std::min(holdout_per_class, translated.size());
  for (std::size_t i : rng.SampleIndices(translated.size(), from_translated)) {
    translated_held[i] = true;
  }
  for (std::size_t i :
       rng.SampleIndices(original_fake.size(), holdout_per_class - from_translated)) {
    original_held[i] = true;
  }
  std::vector<bool> authentic_held(authentic.size(), false);
  for (std::size_t i : rng.SampleIndices(authentic.size(), holdout_per_class)) {
    authentic_held[i] = true;
  }

  std::vector<NewsArticle> train, test;
  auto route = [&](const std::vector<NewsArticle>& src, const std::vector<bool>& held) {
    for (std::size_t i = 0; i < src.size(); ++i) (held[i] ? test : train).push_back(src[i]);
  };
  route(translated, translated_held);
  route(original_fake, original_held);
  route(authentic, authentic_held);

  std::map<std::string, std::string> inputs = {
      {banfake.name().empty() ? "banfake" : banfake.name(), Fingerprint(banfake)},
      {transfnd.name().empty() ? "transfnd" : transfnd.name(), Fingerprint(transfnd)}};
  Dataset1Result result;
  result.train = Finish(DatasetName::kDataset1, std::move(train), seed,
                        pool - holdout_per_class, inputs, 0);
  result.test_ds1 =
      Finish(DatasetName::kTestDs1, std::move(test), seed, holdout_per_class, inputs, 0);
  return result;
}

Dataset2Result BuildDataset2(const LabeledCorpus& banfake_fake,
                             const AugmentationEngine& engine,
                             const LabeledCorpus& banfake_auth, std::uint64_t seed,
                             std::size_t per_class, const IdSet& exclude_ids,
                             std::size_t workers) {
  LabeledCorpus fakes(banfake_fake.name());
  for (const auto& article : banfake_fake) {
    if (article.label != Label::kFake) {
      throw Error("Dataset 2 fake input '" + article.id + "' is not fake");
    }
    if (!exclude_ids.contains(article.id)) fakes.Add(article);
  }
  Dataset2Result result;
  result.augmentation = AugmentCorpus(fakes, engine, engine.techniques().size(), workers);
  const auto& augmented = result.augmentation.corpus.articles();
  RequireAtLeast(augmented.size(), per_class, "augmented fake articles");

  auto authentic_pool = Eligible(banfake_auth, Label::kAuthentic, exclude_ids);
  RequireAtLeast(authentic_pool.size(), per_class, "authentic articles");

  Rng rng(DeriveSeed(seed, "dataset2", "sample"));
  auto chosen = Draw(augmented, per_class, rng);
  auto authentic = Draw(authentic_pool, per_class, rng);
  chosen.insert(chosen.end(), std::make_move_iterator(authentic.begin()),
                std::make_move_iterator(authentic.end()));

  std::map<std::string, std::string> inputs = {
      {banfake_fake.name().empty() ? "banfake_fake" : banfake_fake.name() + ":fake",
       Fingerprint(banfake_fake)},
      {banfake_auth.name().empty() ? "banfake_auth" : banfake_auth.name() + ":authentic",
       Fingerprint(banfake_auth)}};
  result.train = Finish(DatasetName::kDataset2, std::move(chosen), seed, per_class,
                        std::move(inputs), exclude_ids.size());
  return result;
}

BuiltDataset BuildTestDs2(const LabeledCorpus& transfnd, const LabeledCorpus& banfake_auth,
                          const IdSet& exclude_ids, std::uint64_t seed,
                          std::size_t per_class) {
  auto fake_pool = Eligible(transfnd, Label::kFake, exclude_ids);
  auto authentic_pool = Eligible(banfake_auth, Label::kAuthentic, exclude_ids);
  RequireAtLeast(fake_pool.size(), per_class, "fake articles");
  RequireAtLeast(authentic_pool.size(), per_class, "authentic articles");

  Rng rng(DeriveSeed(seed, "test_ds2", "sample"));
  auto articles = Draw(fake_pool, per_class, rng);
  auto authentic = Draw(authentic_pool, per_class, rng);
  articles.insert(articles.end(), std::make_move_iterator(authentic.begin()),
                  std::make_move_iterator(authentic.end()));
  std::map<std::string, std::string> inputs = {
      {transfnd.name().empty() ? "transfnd" : transfnd.name(), Fingerprint(transfnd)},
      {banfake_auth.name().empty() ? "banfake" : banfake_auth.name(),
       Fingerprint(banfake_auth)}};
  return Finish(DatasetName::kTestDs2, std::move(articles), seed, per_class,
                std::move(inputs), exclude_ids.size());
}

BuiltDataset BuildTestDs3(const LabeledCorpus& customfake,
                          const LabeledCorpus& banfake_auth, const IdSet& exclude_ids,
                          std::uint64_t seed) {
  std::vector<NewsArticle> articles;
  for (const auto& article : customfake) {
    if (article.label != Label::kFake) {
      throw Error("custom fake article '" + article.id + "' is not fake");
    }
    if (exclude_ids.contains(article.id)) {
      throw Error("custom fake article '" + article.id + "' was used in training");
    }
    articles.push_back(article);
  }
  if (articles.empty()) throw Error("custom fake corpus is empty");
  const std::size_t per_class = articles.size();
  auto authentic_pool = Eligible(banfake_auth, Label::kAuthentic, exclude_ids);
  RequireAtLeast(authentic_pool.size(), per_class, "authentic articles");

  Rng rng(DeriveSeed(seed, "test_ds3", "sample"));
  auto authentic = Draw(authentic_pool, per_class, rng);
  articles.insert(articles.end(), std::make_move_iterator(authentic.begin()),
                  std::make_move_iterator(authentic.end()));
  std::map<std::string, std::string> inputs = {
      {customfake.name().empty() ? "customfake" : customfake.name(),
       Fingerprint(customfake)},
      {banfake_auth.name().empty() ? "banfake" : banfake_auth.name(),
       Fingerprint(banfake_auth)}};
  return Finish(DatasetName::kTestDs3, std::move(articles), seed, per_class,
                std::move(inputs), exclude_ids.size());
}

nlohmann::ordered_json ToJson(const BundleManifest& m) {
  nlohmann::ordered_json j;
  j["dataset"] = m.dataset;
  j["source_fingerprint"] = m.source_fingerprint;
  j["seed"] = m.seed;
  j["ratio"] = m.ratio;
  j["train"] = {{"fake", m.train_fake}, {"authentic", m.train_authentic}};
  j["validation"] = {{"fake", m.validation_fake},
                     {"authentic", m.validation_authentic}};
  j["summarized"] = m.summarized;
  return j;
}

DatasetBundle SplitTrainValidation(const LabeledCorpus& train, double ratio,
                                   std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ConfigError("train/validation ratio must lie in (0, 1)");
  }
  std::vector<NewsArticle> train_side, validation_side;
  for (Label label : kAllLabels) {
    auto members = Eligible(train, label, {});
    if (members.size() < 2) {
      throw Error("class " + std::string(LabelName(label)) + " has " +
                  std::to_string(members.size()) + " article(s); need at least 2 to split");
    }
    const std::size_t n = members.size();
    auto keep = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 0.5));
    keep = std::clamp<std::size_t>(keep, 1, n - 1);
    Rng rng(DeriveSeed(seed, "split", LabelName(label)));
    rng.Shuffle(members);
    for (std::size_t i = 0; i < n; ++i) {
      (i < keep ? train_side : validation_side).push_back(std::move(members[i]));
    }
  }
  Rng rng(DeriveSeed(seed, "split", "order"));
  rng.Shuffle(train_side);
  rng.Shuffle(validation_side);

  DatasetBundle bundle;
  bundle.train = LabeledCorpus(train.name() + ":train", std::move(train_side));
  bundle.validation = LabeledCorpus(train.name() + ":validation", std::move(validation_side));
  auto& m = bundle.manifest;
  m.dataset = train.name();
  m.source_fingerprint = Fingerprint(train);
  m.seed = seed;
  m.ratio = ratio;
  m.train_fake = bundle.train.CountLabel(Label::kFake);
  m.train_authentic = bundle.train.CountLabel(Label::kAuthentic);
  m.validation_fake = bundle.validation.CountLabel(Label::kFake);
  m.validation_authentic = bundle.validation.CountLabel(Label::kAuthentic);
  return bundle;
}

void WriteDataset(const BuiltDataset& dataset, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string name(DatasetNameString(dataset.manifest.name));
  WriteCorpusJsonl(dataset.corpus, dir / (name + ".jsonl"));
  std::ofstream out(dir / (name + ".manifest.json"), std::ios::binary);
  if (!out) throw Error("cannot write manifest for " + name);
  out << ToJson(dataset.manifest).dump(2) << '\n';
}

}  // namespace bnfake

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

#ifndef BNFAKE_DATASET_BUILDER_H_
#define BNFAKE_DATASET_BUILDER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>

#include "bnfake/article.h"
#include "bnfake/augmentation.h"
#include "json.hpp"

namespace bnfake {

enum class DatasetName : std::uint8_t { kDataset1, kDataset2, kTestDs1, kTestDs2, kTestDs3 };

std::string_view DatasetNameString(DatasetName name);
DatasetName DatasetNameFromString(std::string_view name);

using IdSet = std::unordered_set<std::string>;

// Per-class target sizes. Every dataset is balanced, so one count per
// dataset suffices. Defaults are the published sizes; Dataset 1's size
// follows from its inputs.
struct DatasetTargets {
  std::size_t test_ds1_per_class = 600;
  std::size_t dataset2_per_class = 3507;
  std::size_t test_ds2_per_class = 2000;

  // Published sizes times factor, rounded, at least 1.
  static DatasetTargets Scaled(double factor);
};

// Construction record written next to every emitted dataset.
struct DatasetManifest {
  DatasetName name = DatasetName::kDataset1;
  std::uint64_t seed = 0;
  std::string sampler;
  std::map<std::string, std::string> input_fingerprints;  // corpus name -> digest
  std::size_t target_per_class = 0;
  std::size_t fake = 0;
  std::size_t authentic = 0;
  std::size_t excluded_ids = 0;
  std::string output_fingerprint;
};

nlohmann::ordered_json ToJson(const DatasetManifest& manifest);

struct BuiltDataset {
  LabeledCorpus corpus;
  DatasetManifest manifest;
};

struct Dataset1Result {
  BuiltDataset train;
  BuiltDataset test_ds1;
};

// Fake pool = every TransFND fake plus every BanFakeNews fake; an equal number
// of BanFakeNews authentic articles is sampled. Test DS1 holds out
// holdout_per_class of each class; its fakes come from the translated pool
// first and from BanFakeNews fakes only if that pool runs short, so the
// BanFakeNews fakes stay free for Dataset 2. The rest is the training set.
// Throws Error on id overlap between inputs, a non-fake TransFND article,
// or too few authentic articles.
Dataset1Result BuildDataset1(const LabeledCorpus& banfake, const LabeledCorpus& transfnd,
                             std::uint64_t seed, std::size_t holdout_per_class);

struct Dataset2Result {
  BuiltDataset train;
  AugmentResult augmentation;
};

// Augments every eligible BanFakeNews fake with one copy per engine technique,
// subsamples the fakes to per_class, adds as many eligible authentic
// articles and shuffles. Articles whose id is in exclude_ids are ineligible.
Dataset2Result BuildDataset2(const LabeledCorpus& banfake_fake,
                             const AugmentationEngine& engine,
                             const LabeledCorpus& banfake_auth, std::uint64_t seed,
                             std::size_t per_class, const IdSet& exclude_ids,
                             std::size_t workers = 1);

// per_class fakes from TransFND and per_class authentic articles, none in
// exclude_ids, shuffled. Throws Error("insufficient eligible ...").
BuiltDataset BuildTestDs2(const LabeledCorpus& transfnd, const LabeledCorpus& banfake_auth,
                          const IdSet& exclude_ids, std::uint64_t seed,
                          std::size_t per_class);

// Every CustomFake article paired with as many eligible authentic articles.
BuiltDataset BuildTestDs3(const LabeledCorpus& customfake,
                          const LabeledCorpus& banfake_auth, const IdSet& exclude_ids,
                          std::uint64_t seed);

struct BundleManifest {
  std::string dataset;
  std::string source_fingerprint;
  std::uint64_t seed = 0;
  double ratio = 0.0;
  std::size_t train_fake = 0;
  std::size_t train_authentic = 0;
  std::size_t validation_fake = 0;
  std::size_t validation_authentic = 0;
  // Set once both splits went through the summarization pipeline.
  bool summarized = false;
};

nlohmann::ordered_json ToJson(const BundleManifest& manifest);

struct DatasetBundle {
  LabeledCorpus train;
  LabeledCorpus validation;
  BundleManifest manifest;
};

// Stratified split: each class keeps round(ratio * n) articles for training,
// halves rounding toward training, clamped so both sides get at least one.
// Throws ConfigError unless 0 < ratio < 1 and Error if a class has fewer
// than two articles.
DatasetBundle SplitTrainValidation(const LabeledCorpus& train, double ratio,
                                   std::uint64_t seed);

// <dir>/<name>.jsonl and <dir>/<name>.manifest.json.
void WriteDataset(const BuiltDataset& dataset, const std::filesystem::path& dir);

}  // namespace bnfake

#endif  // BNFAKE_DATASET_BUILDER_H_

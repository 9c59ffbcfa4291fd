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

#ifndef BNFAKE_TRAINING_H_
#define BNFAKE_TRAINING_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnfake/backends.h"
#include "bnfake/dataset_builder.h"
#include "bnfake/evaluation.h"
#include "bnfake/hyperparams.h"
#include "bnfake/summarization.h"
#include "json.hpp"

namespace bnfake {

enum class Approach : std::uint8_t { kA1 = 1, kA2 = 2, kA3 = 3, kA4 = 4 };

// "a1".."a4".
std::string ApproachName(Approach approach);
// Accepts "a1".."a4" or "1".."4".
Approach ApproachFromString(std::string_view text);
Approach ApproachFromInt(int value);

// a1: Dataset 1 as is; a2: Dataset 1 summarized; a3: Dataset 2 (augmented)
// as is; a4: Dataset 2 summarized.
struct ApproachConfig {
  Approach approach = Approach::kA1;
  DatasetName dataset = DatasetName::kDataset1;
  bool summarize = false;
  Hyperparams hyperparams;
  std::string classifier_backend_id;

  // The only valid pairing for the approach.
  static ApproachConfig For(Approach approach, std::string classifier_backend_id,
                            Hyperparams hyperparams = {});
  // Throws ConfigError for any other (dataset, summarize) pairing.
  void Validate() const;
};

nlohmann::ordered_json ToJson(const ApproachConfig& config);

// Test sets each approach is scored on.
std::vector<DatasetName> ApplicableTestSets(Approach approach);

// Ids (and provenance sources) of every test set a run must not train on.
class TestSetRegistry {
 public:
  void Register(const LabeledCorpus& testset);
  // Throws Error naming the article and test set on any overlap, including
  // an augmented or summarized article whose source is a test article.
  void CheckNoLeak(const LabeledCorpus& training) const;
  bool empty() const { return sets_.empty(); }

 private:
  std::map<std::string, IdSet> sets_;
};

struct EpochMetrics {
  int epoch = 0;
  double accuracy = 0.0;
  double f1 = 0.0;
  double mcc = 0.0;
  std::optional<double> roc_auc;
};

struct RunManifest {
  ApproachConfig config;
  BundleManifest bundle;
  std::map<std::string, std::string> dataset_fingerprints;
  std::map<std::string, std::string> backend_ids;
  std::uint64_t seed = 0;
  double wall_clock_seconds = 0.0;
  std::vector<EpochMetrics> epochs;
  std::string model_reference;
  std::size_t summarized_articles = 0;
  bool complete = false;
};

// Everything except the wall clock, which would break byte-identical reruns.
nlohmann::ordered_json ToJson(const RunManifest& manifest);
nlohmann::ordered_json TimingJson(const RunManifest& manifest);

struct TrainedRun {
  std::unique_ptr<SequenceClassifier> classifier;
  RunManifest manifest;
  // The bundle actually trained on (summarized for a2/a4).
  DatasetBundle bundle;
  std::vector<SummaryLogEntry> summary_log;
};

// Relative path of the serialized model, recorded in the manifest.
inline constexpr char kModelFileName[] = "model.json";

// Fine-tunes the configured classifier on bundle.train. When the approach
// summarizes and the bundle is not yet summarized, both splits are run
// through SummarizeCorpus first. Validation metrics are recorded after every
// epoch and never influence training; the final-epoch model is returned.
//
// Throws ConfigError on an invalid config or a bundle built from another
// dataset, and Error on test leakage or backend failure.
TrainedRun RunApproach(const ApproachConfig& config, const DatasetBundle& bundle,
                       const BackendSuite& backends, const TestSetRegistry& test_sets,
                       const SummaryOptions& summary_options = {},
                       std::size_t workers = 1);

// Scores the backend's untrained classifier as is.
EvaluationReport ZeroShotEvaluate(std::string_view classifier_backend_id,
                                  const LabeledCorpus& testset,
                                  const BackendSuite& backends, std::size_t workers = 1);

}  // namespace bnfake

#endif  // BNFAKE_TRAINING_H_

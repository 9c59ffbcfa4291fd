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

#ifndef BNFAKE_PIPELINE_H_
#define BNFAKE_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "bnfake/augmentation.h"
#include "bnfake/backends.h"
#include "bnfake/corpus.h"
#include "bnfake/dataset_builder.h"
#include "bnfake/evaluation.h"
#include "bnfake/hyperparams.h"
#include "bnfake/summarization.h"
#include "bnfake/training.h"
#include "json.hpp"

namespace bnfake {

struct InputSpec {
  std::filesystem::path path;
  CorpusFormat format = CorpusFormat::kCsv;
};

// Declarative description of one run; see docs/config_schema.md for the JSON form.
// All randomness derives from `seed`.
struct RunConfig {
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
  InputSpec banfake;
  InputSpec transfnd;
  InputSpec customfake;
  bool merge_headline = true;

  DatasetTargets targets;
  double validation_ratio = 0.85;

  std::vector<Technique> techniques = {Technique::kTokenReplacement,
                                       Technique::kParaphrase};
  double mask_fraction = kDefaultMaskFraction;

  std::string tokenizer_id;
  std::vector<std::string> masked_lm_ids;
  std::string translator_forward_id;
  std::string translator_backward_id;
  std::string paraphraser_id;
  std::string summarizer_id;
  SummaryOptions summary;

  std::vector<Approach> approaches;
  std::vector<std::string> classifier_ids;
  Hyperparams hyperparams;
  bool inference = true;
  std::size_t workers = 1;

  // Relative paths resolve against base_dir. A missing "seed" is an error:
  // no run may fall back to implicit entropy. Throws ConfigError.
  static RunConfig FromJson(const nlohmann::json& j,
                            const std::filesystem::path& base_dir);
  static RunConfig Load(const std::filesystem::path& path);

  // Input files exist and every backend id resolves. Throws ConfigError.
  void Validate(const BackendRegistry& registry) const;
  BackendSuite MakeSuite(std::shared_ptr<const BackendRegistry> registry) const;
};

nlohmann::ordered_json ToJson(const RunConfig& config);

struct LoadedInputs {
  LabeledCorpus banfake;
  LabeledCorpus transfnd;
  LabeledCorpus customfake;
  std::map<std::string, std::vector<RejectedRow>> rejects;
};

LoadedInputs LoadInputs(const RunConfig& config);

struct BuiltDatasets {
  Dataset1Result dataset1;
  Dataset2Result dataset2;
  BuiltDataset test_ds2;
  BuiltDataset test_ds3;

  const LabeledCorpus& training(DatasetName name) const;
  const LabeledCorpus& test(DatasetName name) const;
};

// Builds the two training sets and three test sets so that every evaluated
// (train, test) pair is disjoint by id and by provenance source.
BuiltDatasets BuildDatasets(const RunConfig& config, const LoadedInputs& inputs,
                            const BackendSuite& backends);
// Exclusion used for each built set, exposed for audits.
IdSet TrainingIds(const BuiltDatasets& datasets, DatasetName name);
// Datasets, manifests, the augmentation log and any load rejects.
void WriteDatasets(const BuiltDatasets& datasets, const LoadedInputs& inputs,
                   const std::filesystem::path& dir);

// One (approach, classifier) training cell.
struct CellOutcome {
  std::string cell;
  bool ok = false;
  std::string error;
  std::vector<EvaluationReport> reports;
};

struct PipelineOutcome {
  std::vector<CellOutcome> cells;
  std::vector<EvaluationReport> reports;
  ComparisonTable table;
  bool all_ok() const;
};

// Loads, builds, trains every approach x classifier cell, scores each on its
// applicable test sets (plus zero-shot inference rows) and writes everything
// below config.output_dir. A failed cell is recorded and the rest continue.
// Progress lines, tagged with the cell id, go to `log` when non-null.
PipelineOutcome RunPipeline(const RunConfig& config,
                            std::shared_ptr<const BackendRegistry> registry,
                            std::ostream* log = nullptr);

// Writes a trained run: manifest.json, timing.json, model.json and, for
// summarizing approaches, summary_log.jsonl.
void WriteRun(const TrainedRun& run, const std::filesystem::path& dir);

// <dir>/<method>__<model>__<test_set>.{json,csv,predictions.jsonl}
void WriteReport(const EvaluationReport& report, const std::filesystem::path& dir);

// Reads every report JSON under run_dir/reports (or run_dir itself), writes
// comparison.{csv,md,svg} into run_dir and returns the table.
ComparisonTable WriteComparison(const std::filesystem::path& run_dir);

}  // namespace bnfake

#endif  // BNFAKE_PIPELINE_H_

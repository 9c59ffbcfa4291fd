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

#include "bnfake/training.h"

#include <chrono>

#include "bnfake/corpus.h"
#include "bnfake/error.h"

namespace bnfake {
namespace {

struct Pairing {
  DatasetName dataset;
  bool summarize;
};

Pairing PairingFor(Approach approach) {
  switch (approach) {
    case Approach::kA1:
      return {DatasetName::kDataset1, false};
    case Approach::kA2:
      return {DatasetName::kDataset1, true};
    case Approach::kA3:
      return {DatasetName::kDataset2, false};
    case Approach::kA4:
      return {DatasetName::kDataset2, true};
  }
  throw ConfigError("unknown approach");
}

nlohmann::ordered_json ToJson(const EpochMetrics& m) {
  nlohmann::ordered_json j;
  j["epoch"] = m.epoch;
  j["accuracy"] = m.accuracy;
  j["f1"] = m.f1;
  j["mcc"] = m.mcc;
  if (m.roc_auc) {
    j["roc_auc"] = *m.roc_auc;
  } else {
    j["roc_auc"] = nullptr;
  }
  return j;
}

}  // namespace

std::string ApproachName(Approach approach) {
  return "a" + std::to_string(static_cast<int>(approach));
}

Approach ApproachFromInt(int value) {
  if (value < 1 || value > 4) {
    throw ConfigError("approach must be 1..4, got " + std::to_string(value));
  }
  return static_cast<Approach>(value);
}

Approach ApproachFromString(std::string_view text) {
  if (text.size() == 2 && (text[0] == 'a' || text[0] == 'A')) text.remove_prefix(1);
  if (text.size() != 1 || text[0] < '1' || text[0] > '4') {
    throw ConfigError("unknown approach '" + std::string(text) + "'");
  }
  return ApproachFromInt(text[0] - '0');
}

ApproachConfig ApproachConfig::For(Approach approach, std::string classifier_backend_id,
                                   Hyperparams hyperparams) {
  auto pairing = PairingFor(approach);
  ApproachConfig config;
  config.approach = approach;
  config.dataset = pairing.dataset;
  config.summarize = pairing.summarize;
  config.hyperparams = std::move(hyperparams);
  config.classifier_backend_id = std::move(classifier_backend_id);
  return config;
}

void ApproachConfig::Validate() const {
  auto pairing = PairingFor(approach);
  if (dataset != pairing.dataset || summarize != pairing.summarize) {
    throw ConfigError("approach " + ApproachName(approach) + " cannot run on " +
                      std::string(DatasetNameString(dataset)) +
                      (summarize ? " with" : " without") + " summarization");
  }
  if (classifier_backend_id.empty()) throw ConfigError("no classifier backend id");
  hyperparams.Validate();
}

nlohmann::ordered_json ToJson(const ApproachConfig& c) {
  nlohmann::ordered_json j;
  j["approach"] = ApproachName(c.approach);
  j["dataset"] = DatasetNameString(c.dataset);
  j["summarize"] = c.summarize;
  j["hyperparams"] = ToJson(c.hyperparams);
  j["classifier_backend_id"] = c.classifier_backend_id;
  return j;
}

std::vector<DatasetName> ApplicableTestSets(Approach approach) {
  if (approach == Approach::kA1 || approach == Approach::kA2) {
    return {DatasetName::kTestDs1, DatasetName::kTestDs3};
  }
  return {DatasetName::kTestDs1, DatasetName::kTestDs2, DatasetName::kTestDs3};
}

void TestSetRegistry::Register(const LabeledCorpus& testset) {
  sets_[testset.name()] = testset.IdsWithSources();
}

void TestSetRegistry::CheckNoLeak(const LabeledCorpus& training) const {
  for (const auto& article : training) {
    for (const auto& [name, ids] : sets_) {
      if (ids.contains(article.id)) {
        throw Error("training article '" + article.id + "' belongs to test set '" +
                    name + "'");
      }
      for (const auto& record : article.provenance) {
        if (ids.contains(record.source_id)) {
          throw Error("training article '" + article.id + "' derives from '" +
                      record.source_id + "' in test set '" + name + "'");
        }
      }
    }
  }
}

nlohmann::ordered_json ToJson(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["config"] = ToJson(m.config);
  j["bundle"] = ToJson(m.bundle);
  nlohmann::ordered_json fingerprints = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m.dataset_fingerprints) fingerprints[k] = v;
  j["dataset_fingerprints"] = std::move(fingerprints);
  nlohmann::ordered_json backends = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m.backend_ids) backends[k] = v;
  j["backend_ids"] = std::move(backends);
  j["seed"] = m.seed;
  auto epochs = nlohmann::ordered_json::array();
  for (const auto& e : m.epochs) epochs.push_back(ToJson(e));
  j["epochs"] = std::move(epochs);
  j["summarized_articles"] = m.summarized_articles;
  j["model_reference"] = m.model_reference;
  j["timing_reference"] = "timing.json";
  j["complete"] = m.complete;
  return j;
}

nlohmann::ordered_json TimingJson(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["wall_clock_seconds"] = m.wall_clock_seconds;
  return j;
}

TrainedRun RunApproach(const ApproachConfig& config, const DatasetBundle& bundle,
                       const BackendSuite& backends, const TestSetRegistry& test_sets,
                       const SummaryOptions& summary_options, std::size_t workers) {
  const auto started = std::chrono::steady_clock::now();
  config.Validate();
  backends.Validate();
  if (bundle.manifest.dataset != DatasetNameString(config.dataset)) {
    throw ConfigError("approach " + ApproachName(config.approach) + " needs " +
                      std::string(DatasetNameString(config.dataset)) +
                      " but the bundle was built from '" + bundle.manifest.dataset + "'");
  }
  test_sets.CheckNoLeak(bundle.train);
  test_sets.CheckNoLeak(bundle.validation);

  TrainedRun run;
  run.bundle = bundle;
  auto& m = run.manifest;
  m.config = config;
  m.seed = config.hyperparams.seed;
  m.backend_ids["classifier"] = config.classifier_backend_id;
  m.backend_ids["tokenizer"] = backends.tokenizer->id();

  if (config.summarize && !bundle.manifest.summarized) {
    const auto& summarizer = backends.model(Seq2SeqRole::kSummarizer);
    auto train = SummarizeCorpus(bundle.train, summarizer, *backends.tokenizer,
                                 summary_options, workers);
    auto validation = SummarizeCorpus(bundle.validation, summarizer,
                                      *backends.tokenizer, summary_options, workers);
    run.bundle.train = std::move(train.corpus);
    run.bundle.validation = std::move(validation.corpus);
    run.bundle.manifest.summarized = true;
    run.summary_log = std::move(train.log);
    run.summary_log.insert(run.summary_log.end(), validation.log.begin(),
                           validation.log.end());
    m.backend_ids["summarizer"] = summarizer.id();
  }
  for (const auto* split : {&run.bundle.train, &run.bundle.validation}) {
    for (const auto& article : *split) {
      if (article.HasTransform(TransformKind::kSummarized)) ++m.summarized_articles;
    }
  }
  m.bundle = run.bundle.manifest;
  m.dataset_fingerprints["train"] = Fingerprint(run.bundle.train);
  m.dataset_fingerprints["validation"] = Fingerprint(run.bundle.validation);
  m.dataset_fingerprints["source"] = bundle.manifest.source_fingerprint;

  auto base = backends.registry->NewClassifier(config.classifier_backend_id);
  const auto& validation = run.bundle.validation;
  try {
    run.classifier = base->FineTune(
        run.bundle.train, config.hyperparams,
        [&](int epoch, const SequenceClassifier& snapshot) {
          auto report = Evaluate(snapshot, validation, ApproachName(config.approach),
                                 workers);
          m.epochs.push_back({epoch, report.accuracy, report.f1, report.mcc,
                              report.roc_auc});
        });
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error("fine-tuning " + config.classifier_backend_id + " failed: " + e.what());
  }
  if (!run.classifier) throw Error("backend returned no fine-tuned classifier");

  m.model_reference = kModelFileName;
  m.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  m.complete = true;
  return run;
}

EvaluationReport ZeroShotEvaluate(std::string_view classifier_backend_id,
                                  const LabeledCorpus& testset,
                                  const BackendSuite& backends, std::size_t workers) {
  if (!backends.registry) throw ConfigError("backend suite has no classifier registry");
  auto classifier = backends.registry->NewClassifier(classifier_backend_id);
  return Evaluate(*classifier, testset, "inference", workers);
}

}  // namespace bnfake

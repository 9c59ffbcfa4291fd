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

#ifndef BNFAKE_EVALUATION_H_
#define BNFAKE_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnfake/article.h"
#include "bnfake/backends.h"
#include "json.hpp"

namespace bnfake {

// Counts with the authentic class (1) as positive.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + tn + fp + fn; }
  // The same counts with the fake class taken as positive.
  ConfusionMatrix Swapped() const { return {tn, tp, fn, fp}; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// Throws Error on a length mismatch or empty input.
ConfusionMatrix Confusion(std::span<const Label> predictions,
                          std::span<const Label> truths);

// Zero denominators give 0 throughout: precision, recall, F1 and MCC alike.
double Accuracy(const ConfusionMatrix& cm);
double Precision(const ConfusionMatrix& cm, Label positive);
double Recall(const ConfusionMatrix& cm, Label positive);
double F1(const ConfusionMatrix& cm, Label positive);
double PrecisionMacro(const ConfusionMatrix& cm);
double RecallMacro(const ConfusionMatrix& cm);
double F1Macro(const ConfusionMatrix& cm);
double Mcc(const ConfusionMatrix& cm);

// Probability that a random positive outscores a random negative, ties
// counting one half (Mann-Whitney U over mid-ranks). Throws Error("undefined
// AUC") unless both classes are present.
double RocAuc(std::span<const double> scores, std::span<const Label> truths);

struct PredictionRecord {
  std::string id;
  Label truth = Label::kFake;
  Label predicted = Label::kFake;
  double score = 0.5;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvaluationReport {
  std::string model_id;
  // "inference" or "a1".."a4".
  std::string method;
  std::string test_set;
  ConfusionMatrix confusion;
  double accuracy = 0.0;
  double precision = 0.0;  // macro
  double recall = 0.0;     // macro
  double f1 = 0.0;         // macro
  double mcc = 0.0;
  // Empty when the test set holds a single class.
  std::optional<double> roc_auc;
  ClassMetrics per_class[2];
  std::vector<PredictionRecord> predictions;
};

EvaluationReport MakeReport(std::string model_id, std::string method,
                            std::string test_set,
                            std::vector<PredictionRecord> predictions);

// Runs the classifier once over the test set (in parallel with workers > 1;
// order is preserved) and derives every metric from that pass.
EvaluationReport Evaluate(const SequenceClassifier& classifier,
                          const LabeledCorpus& testset, std::string method,
                          std::size_t workers = 1);

nlohmann::ordered_json ToJson(const EvaluationReport& report);
// Metrics only; the prediction list is not part of the JSON form.
EvaluationReport ReportFromJson(const nlohmann::json& j);

// Header plus one line, A/P/R/F1/MCC/ROC columns.
std::string ReportCsv(const EvaluationReport& report);
void WritePredictions(const EvaluationReport& report, const std::filesystem::path& path);

struct ComparisonRow {
  std::string method;
  std::string model_id;
  std::string test_set;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double mcc = 0.0;
  std::optional<double> roc_auc;
  bool best_accuracy = false;
  bool best_f1 = false;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

// Rows ordered by test set, then method (inference, a1..a4), then model id.
// Within each test set the top accuracy and top macro-F1 are flagged; ties
// are all flagged.
ComparisonTable Compare(std::span<const EvaluationReport> reports);
std::string ComparisonCsv(const ComparisonTable& table);
std::string ComparisonMarkdown(const ComparisonTable& table);
// Grouped bar chart of accuracy per test set.
std::string ComparisonSvg(const ComparisonTable& table);

}  // namespace bnfake

#endif  // BNFAKE_EVALUATION_H_

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

#include "bnfake/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "bnfake/error.h"
#include "bnfake/parallel.h"

namespace bnfake {
namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string Fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string FixedOr(const std::optional<double>& value, int digits = 6) {
  return value ? Fixed(*value, digits) : "";
}

int MethodRank(const std::string& method) {
  static const std::map<std::string, int> ranks = {
      {"inference", 0}, {"a1", 1}, {"a2", 2}, {"a3", 3}, {"a4", 4}};
  auto it = ranks.find(method);
  return it == ranks.end() ? 5 : it->second;
}

}  // namespace

ConfusionMatrix Confusion(std::span<const Label> predictions,
                          std::span<const Label> truths) {
  if (predictions.size() != truths.size()) {
    throw Error("prediction/truth length mismatch: " +
                std::to_string(predictions.size()) + " vs " +
                std::to_string(truths.size()));
  }
  if (predictions.empty()) throw Error("no predictions to score");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    bool pred = predictions[i] == Label::kAuthentic;
    bool truth = truths[i] == Label::kAuthentic;
    if (pred && truth) {
      ++cm.tp;
    } else if (!pred && !truth) {
      ++cm.tn;
    } else if (pred) {
      ++cm.fp;
    } else {
      ++cm.fn;
    }
  }
  return cm;
}

double Accuracy(const ConfusionMatrix& cm) { return Ratio(cm.tp + cm.tn, cm.total()); }

double Precision(const ConfusionMatrix& cm, Label positive) {
  const auto c = positive == Label::kAuthentic ? cm : cm.Swapped();
  return Ratio(c.tp, c.tp + c.fp);
}

double Recall(const ConfusionMatrix& cm, Label positive) {
  const auto c = positive == Label::kAuthentic ? cm : cm.Swapped();
  return Ratio(c.tp, c.tp + c.fn);
}

double F1(const ConfusionMatrix& cm, Label positive) {
  double p = Precision(cm, positive);
  double r = Recall(cm, positive);
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

double PrecisionMacro(const ConfusionMatrix& cm) {
  return (Precision(cm, Label::kFake) + Precision(cm, Label::kAuthentic)) / 2.0;
}

double RecallMacro(const ConfusionMatrix& cm) {
  return (Recall(cm, Label::kFake) + Recall(cm, Label::kAuthentic)) / 2.0;
}

double F1Macro(const ConfusionMatrix& cm) {
  return (F1(cm, Label::kFake) + F1(cm, Label::kAuthentic)) / 2.0;
}

double Mcc(const ConfusionMatrix& cm) {
  using ld = long double;
  const ld tp = cm.tp, tn = cm.tn, fp = cm.fp, fn = cm.fn;
  const ld product = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  if (product == 0) return 0.0;
  return static_cast<double>((tp * tn - fp * fn) / std::sqrt(product));
}

double RocAuc(std::span<const double> scores, std::span<const Label> truths) {
  if (scores.size() != truths.size()) throw Error("score/truth length mismatch");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of 1-based mid-ranks of the positives.
  long double positive_rank_sum = 0;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const long double mid_rank = (static_cast<long double>(i + 1) + j) / 2;
    for (std::size_t k = i; k < j; ++k) {
      if (truths[order[k]] == Label::kAuthentic) {
        positive_rank_sum += mid_rank;
        ++positives;
      }
    }
    i = j;
  }
  const std::size_t negatives = scores.size() - positives;
  if (positives == 0 || negatives == 0) throw Error("undefined AUC");
  const long double p = positives;
  const long double u = positive_rank_sum - p * (p + 1) / 2;
  return static_cast<double>(u / (p * static_cast<long double>(negatives)));
}

EvaluationReport MakeReport(std::string model_id, std::string method,
                            std::string test_set,
                            std::vector<PredictionRecord> predictions) {
  std::vector<Label> predicted, truths;
  std::vector<double> scores;
  for (const auto& p : predictions) {
    predicted.push_back(p.predicted);
    truths.push_back(p.truth);
    scores.push_back(p.score);
  }
  EvaluationReport r;
  r.model_id = std::move(model_id);
  r.method = std::move(method);
  r.test_set = std::move(test_set);
  r.confusion = Confusion(predicted, truths);
  r.accuracy = Accuracy(r.confusion);
  r.precision = PrecisionMacro(r.confusion);
  r.recall = RecallMacro(r.confusion);
  r.f1 = F1Macro(r.confusion);
  r.mcc = Mcc(r.confusion);
  bool both_classes = std::find(truths.begin(), truths.end(), Label::kFake) != truths.end() &&
                      std::find(truths.begin(), truths.end(), Label::kAuthentic) != truths.end();
  if (both_classes) r.roc_auc = RocAuc(scores, truths);
  for (Label label : kAllLabels) {
    auto& m = r.per_class[LabelValue(label)];
    m.precision = Precision(r.confusion, label);
    m.recall = Recall(r.confusion, label);
    m.f1 = F1(r.confusion, label);
  }
  r.predictions = std::move(predictions);
  return r;
}

EvaluationReport Evaluate(const SequenceClassifier& classifier,
                          const LabeledCorpus& testset, std::string method,
                          std::size_t workers) {
  if (testset.empty()) throw Error("test set '" + testset.name() + "' is empty");
  std::vector<PredictionRecord> predictions(testset.size());
  ParallelFor(testset.size(), workers, [&](std::size_t i) {
    const auto& article = testset[i];
    Prediction p;
    try {
      p = classifier.Predict(article.content);
    } catch (const std::exception& e) {
      throw Error("classifier '" + classifier.id() + "' failed on '" + article.id +
                  "': " + e.what());
    }
    if (!(p.score >= 0.0 && p.score <= 1.0)) {
      throw Error("classifier '" + classifier.id() + "' returned score " +
                  std::to_string(p.score) + " outside [0,1]");
    }
    predictions[i] = {article.id, article.label, p.label, p.score};
  });
  return MakeReport(classifier.id(), std::move(method), testset.name(),
                    std::move(predictions));
}

nlohmann::ordered_json ToJson(const EvaluationReport& r) {
  nlohmann::ordered_json j;
  j["model_id"] = r.model_id;
  j["method"] = r.method;
  j["test_set"] = r.test_set;
  j["confusion"] = {{"tp", r.confusion.tp},
                    {"tn", r.confusion.tn},
                    {"fp", r.confusion.fp},
                    {"fn", r.confusion.fn}};
  j["accuracy"] = r.accuracy;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["mcc"] = r.mcc;
  if (r.roc_auc) {
    j["roc_auc"] = *r.roc_auc;
  } else {
    j["roc_auc"] = nullptr;
  }
  nlohmann::ordered_json per_class;
  for (Label label : kAllLabels) {
    const auto& m = r.per_class[LabelValue(label)];
    per_class[std::string(LabelName(label))] = {
        {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
  }
  j["per_class"] = std::move(per_class);
  return j;
}

EvaluationReport ReportFromJson(const nlohmann::json& j) {
  try {
    EvaluationReport r;
    r.model_id = j.at("model_id").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.test_set = j.at("test_set").get<std::string>();
    const auto& cm = j.at("confusion");
    r.confusion = {cm.at("tp").get<std::size_t>(), cm.at("tn").get<std::size_t>(),
                   cm.at("fp").get<std::size_t>(), cm.at("fn").get<std::size_t>()};
    r.accuracy = j.at("accuracy").get<double>();
    r.precision = j.at("precision").get<double>();
    r.recall = j.at("recall").get<double>();
    r.f1 = j.at("f1").get<double>();
    r.mcc = j.at("mcc").get<double>();
    if (!j.at("roc_auc").is_null()) r.roc_auc = j.at("roc_auc").get<double>();
    if (j.contains("per_class")) {
      for (Label label : kAllLabels) {
        const auto& m = j.at("per_class").at(std::string(LabelName(label)));
        r.per_class[LabelValue(label)] = {m.at("precision").get<double>(),
                                          m.at("recall").get<double>(),
                                          m.at("f1").get<double>()};
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed evaluation report: ") + e.what());
  }
}

std::string ReportCsv(const EvaluationReport& r) {
  std::ostringstream out;
  out << "method,model,test_set,n,tp,tn,fp,fn,A,P,R,F1,MCC,ROC\n";
  out << r.method << ',' << r.model_id << ',' << r.test_set << ','
      << r.confusion.total() << ',' << r.confusion.tp << ',' << r.confusion.tn << ','
      << r.confusion.fp << ',' << r.confusion.fn << ',' << Fixed(r.accuracy) << ','
      << Fixed(r.precision) << ',' << Fixed(r.recall) << ',' << Fixed(r.f1) << ','
      << Fixed(r.mcc) << ',' << FixedOr(r.roc_auc) << '\n';
  return out.str();
}

void WritePredictions(const EvaluationReport& report, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  for (const auto& p : report.predictions) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["truth"] = LabelValue(p.truth);
    j["pred"] = LabelValue(p.predicted);
    j["score"] = p.score;
    out << j.dump() << '\n';
  }
}

ComparisonTable Compare(std::span<const EvaluationReport> reports) {
  ComparisonTable table;
  for (const auto& r : reports) {
    table.rows.push_back({r.method, r.model_id, r.test_set, r.accuracy, r.precision,
                          r.recall, r.f1, r.mcc, r.roc_auc, false, false});
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ComparisonRow& a, const ComparisonRow& b) {
                     if (a.test_set != b.test_set) return a.test_set < b.test_set;
                     int ra = MethodRank(a.method), rb = MethodRank(b.method);
                     if (ra != rb) return ra < rb;
                     return a.model_id < b.model_id;
                   });
  std::map<std::string, std::pair<double, double>> best;  // test set -> (acc, f1)
  for (const auto& row : table.rows) {
    auto [it, inserted] = best.try_emplace(row.test_set, row.accuracy, row.f1);
    if (!inserted) {
      it->second.first = std::max(it->second.first, row.accuracy);
      it->second.second = std::max(it->second.second, row.f1);
    }
  }
  for (auto& row : table.rows) {
    const auto& [acc, f1] = best.at(row.test_set);
    row.best_accuracy = row.accuracy == acc;
    row.best_f1 = row.f1 == f1;
  }
  return table;
}

std::string ComparisonCsv(const ComparisonTable& table) {
  std::ostringstream out;
  out << "test_set,method,model,A,P,R,F1,MCC,ROC,best_A,best_F1\n";
  for (const auto& row : table.rows) {
    out << row.test_set << ',' << row.method << ',' << row.model_id << ','
        << Fixed(row.accuracy) << ',' << Fixed(row.precision) << ','
        << Fixed(row.recall) << ',' << Fixed(row.f1) << ',' << Fixed(row.mcc) << ','
        << FixedOr(row.roc_auc) << ',' << (row.best_accuracy ? 1 : 0) << ','
        << (row.best_f1 ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string ComparisonMarkdown(const ComparisonTable& table) {
  std::ostringstream out;
  std::string current;
  for (const auto& row : table.rows) {
    if (row.test_set != current) {
      if (!current.empty()) out << '\n';
      current = row.test_set;
      out << "### " << current << "\n\n"
          << "| Method | Model | A | P | R | F1 | MCC | ROC |\n"
          << "|---|---|---|---|---|---|---|---|\n";
    }
    auto mark = [](double v, bool best) {
      auto s = Fixed(v, 2);
      return best ? "**" + s + "**" : s;
    };
    out << "| " << row.method << " | " << row.model_id << " | "
        << mark(row.accuracy, row.best_accuracy) << " | " << Fixed(row.precision, 2)
        << " | " << Fixed(row.recall, 2) << " | " << mark(row.f1, row.best_f1) << " | "
        << Fixed(row.mcc, 2) << " | " << (row.roc_auc ? Fixed(*row.roc_auc, 2) : "-")
        << " |\n";
  }
  return out.str();
}

std::string ComparisonSvg(const ComparisonTable& table) {
  constexpr int kBarWidth = 14, kGap = 4, kGroupGap = 30, kHeight = 200, kTop = 30,
                kLeft = 40, kBottom = 110;
  std::vector<std::string> sets;
  for (const auto& row : table.rows) {
    if (sets.empty() || sets.back() != row.test_set) sets.push_back(row.test_set);
  }
  std::ostringstream bars;
  int x = kLeft + kGroupGap / 2;
  for (const auto& set : sets) {
    int group_start = x;
    for (const auto& row : table.rows) {
      if (row.test_set != set) continue;
      int h = static_cast<int>(std::lround(row.accuracy * kHeight));
      bars << "<rect x=\"" << x << "\" y=\"" << kTop + kHeight - h << "\" width=\""
           << kBarWidth << "\" height=\"" << h << "\" fill=\""
           << (row.method == "inference" ? "#9e9e9e" : "#3f6fb5") << "\"><title>"
           << row.method << ' ' << row.model_id << ' ' << Fixed(row.accuracy, 3)
           << "</title></rect>\n";
      bars << "<text x=\"" << x + kBarWidth / 2 << "\" y=\"" << kTop + kHeight + 8
           << "\" font-size=\"9\" transform=\"rotate(60 " << x + kBarWidth / 2 << ' '
           << kTop + kHeight + 8 << ")\">" << row.method << ' ' << row.model_id
           << "</text>\n";
      x += kBarWidth + kGap;
    }
    bars << "<text x=\"" << (group_start + x) / 2 << "\" y=\"" << kTop - 10
         << "\" font-size=\"12\" text-anchor=\"middle\">" << set << "</text>\n";
    x += kGroupGap;
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << x + kLeft
      << "\" height=\"" << kTop + kHeight + kBottom << "\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + kHeight << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << kLeft - 5 << "\" y=\"" << kTop + 4
      << "\" font-size=\"10\" text-anchor=\"end\">1.0</text>\n"
      << "<text x=\"" << kLeft - 5 << "\" y=\"" << kTop + kHeight
      << "\" font-size=\"10\" text-anchor=\"end\">0.0</text>\n"
      << bars.str() << "</svg>\n";
  return svg.str();
}

}  // namespace bnfake

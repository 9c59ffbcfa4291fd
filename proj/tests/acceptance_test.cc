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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bnfake/augmentation.h"
#include "bnfake/corpus.h"
#include "bnfake/error.h"
#include "bnfake/evaluation.h"
#include "bnfake/mock_backends.h"
#include "bnfake/pipeline.h"
#include "bnfake/summarization.h"
#include "bnfake/synthetic.h"
#include "bnfake/text.h"

namespace bnfake {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using nlohmann::json;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    std::string s = std::to_string(failures_) + " failure(s)";
    for (const auto& m : messages_) s += "; " + m;
    return s;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Workdir {
 public:
  Workdir() {
    std::mt19937_64 g(std::random_device{}());
    path_ = fs::temp_directory_path() / ("bnfake_acceptance_" + std::to_string(g()));
    fs::create_directories(path_);
  }
  ~Workdir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

json ConfigFor(double scale, json approaches, json classifiers) {
  return {{"seed", 20240229},
          {"output_dir", "run"},
          {"inputs",
           {{"banfake", "banfake.csv"}, {"transfnd", "transfnd.csv"},
            {"customfake", "customfake.csv"}}},
          {"scale", scale},
          {"approaches", std::move(approaches)},
          {"backends", {{"classifiers", std::move(classifiers)}}},
          {"workers", 4}};
}

// Shared state: the full-scale build feeds the leak suite.
struct FullScale {
  std::unique_ptr<BuiltDatasets> datasets;
};

std::string Criterion1(FullScale& state, const fs::path& dir) {
  auto started = Clock::now();
  WriteSyntheticInputs(dir, SyntheticInputCounts{}, 1);
  auto config = RunConfig::FromJson(ConfigFor(1.0, {"a1"}, json::array({kMockLexiconClassifierId})),
                                    dir);
  auto registry = std::make_shared<const BackendRegistry>(BackendRegistry::WithMocks());
  config.Validate(*registry);
  auto inputs = LoadInputs(config);
  auto datasets = BuildDatasets(config, inputs, config.MakeSuite(registry));
  WriteDatasets(datasets, inputs, dir / "datasets");
  double seconds = Seconds(started);

  Check check;
  const std::map<std::string, std::size_t> expected = {{"dataset1", 5008}, {"dataset2", 3507},
                                                       {"test_ds1", 600},  {"test_ds2", 2000},
                                                       {"test_ds3", 102}};
  std::string detail;
  for (const auto& [name, n] : expected) {
    auto m = json::parse(ReadFile(dir / "datasets" / (name + ".manifest.json")));
    std::size_t fake = m.at("counts").at("fake"), authentic = m.at("counts").at("authentic");
    check.Expect(fake == n && authentic == n, name + " is " + std::to_string(fake) + "/" +
                                                  std::to_string(authentic));
    std::size_t lines = 0;
    std::ifstream in(dir / "datasets" / (name + ".jsonl"));
    for (std::string line; std::getline(in, line);) lines += !line.empty();
    check.Expect(lines == 2 * n, name + " file has " + std::to_string(lines) + " rows");
    detail += " " + name + "=" + std::to_string(fake) + "/" + std::to_string(authentic);
  }
  check.Expect(seconds < 60.0, "took " + std::to_string(seconds) + " s");
  state.datasets = std::make_unique<BuiltDatasets>(std::move(datasets));
  char time[32];
  std::snprintf(time, sizeof(time), " in %.1f s", seconds);
  return check.ok() ? "PASS:" + detail + time : "FAIL: " + check.Summary();
}

// Every evaluated (training set, test set) pair: ids and provenance sources
// of the training side never meet a test id.
void CheckPairs(const BuiltDatasets& d, Check& check, std::size_t& pairs,
                std::size_t& compared) {
  for (Approach a : {Approach::kA1, Approach::kA2, Approach::kA3, Approach::kA4}) {
    auto dataset = ApproachConfig::For(a, "x").dataset;
    const auto& train = d.training(dataset);
    for (DatasetName t : ApplicableTestSets(a)) {
      const auto& test = d.test(t);
      ++pairs;
      std::set<std::string> test_ids;
      for (const auto& article : test) test_ids.insert(article.id);
      for (const auto& article : train) {
        ++compared;
        check.Expect(!test_ids.contains(article.id),
                     std::string(DatasetNameString(dataset)) + " shares id " + article.id +
                         " with " + std::string(DatasetNameString(t)));
        for (const auto& record : article.provenance) {
          check.Expect(!test_ids.contains(record.source_id),
                       std::string(DatasetNameString(dataset)) + " article " + article.id +
                           " derives from test article " + record.source_id);
        }
      }
    }
  }
}

std::string Criterion2(const FullScale& state, const BuiltDatasets& desk) {
  if (!state.datasets) return "FAIL: full-scale datasets unavailable";
  Check check;
  std::size_t pairs = 0, compared = 0;
  CheckPairs(*state.datasets, check, pairs, compared);
  CheckPairs(desk, check, pairs, compared);
  return check.ok() ? "PASS: " + std::to_string(pairs) + " (train, test) pairs, " +
                          std::to_string(compared) + " training articles checked"
                    : "FAIL: " + check.Summary();
}

LabeledCorpus Fakes(std::size_t n, std::mt19937_64& g) {
  LabeledCorpus c("fakes");
  const auto& words = MockFillerWords();
  for (std::size_t i = 0; i < n; ++i) {
    NewsArticle a;
    a.id = "f" + std::to_string(i);
    a.label = Label::kFake;
    std::string text;
    for (std::size_t k = 0, len = 3 + g() % 40; k < len; ++k) {
      if (k) text += ' ';
      text += words[g() % words.size()];
      if (g() % 8 == 0) text += '.';
    }
    a.content = text;
    c.Add(std::move(a));
  }
  return c;
}

std::string Criterion3() {
  Check check;
  std::mt19937_64 g(3);
  AugmentationEngine engine({Technique::kTokenReplacement, Technique::kParaphrase},
                            BackendSuite::Mocks(), kDefaultMaskFraction, 3);
  auto full = AugmentCorpus(Fakes(1299, g), engine, 2, 4);
  check.Expect(full.corpus.size() == 3897,
               "1299 inputs gave " + std::to_string(full.corpus.size()));
  int trials = 0;
  for (; trials < 200; ++trials) {
    std::size_t n = g() % 300;
    auto out = AugmentCorpus(Fakes(n, g), engine, 2, 1 + g() % 4).corpus.size();
    check.Expect(out == 3 * n, std::to_string(n) + " inputs gave " + std::to_string(out));
  }
  return check.ok() ? "PASS: 1299 -> " + std::to_string(full.corpus.size()) + ", 3n held on " +
                          std::to_string(trials) + " random sizes"
                    : "FAIL: " + check.Summary();
}

std::string Criterion4() {
  Check check;
  std::mt19937_64 g(4);
  WhitespaceTokenizer tokenizer;
  const int kTexts = 1000;
  for (int i = 0; i < kTexts; ++i) {
    std::size_t n = 1 + g() % 300;
    std::vector<std::string> tokens;
    std::map<std::string, std::string> table;
    for (std::size_t k = 0; k < n; ++k) {
      tokens.push_back("w" + std::to_string(g() % 5000));
      table[tokens.back()] = tokens.back() + "_syn";
    }
    SynonymMaskedLm mlm("every", table);
    double f = 0.01 + static_cast<double>(g() % 99) / 100.0;
    std::uint64_t seed = g();
    auto out = SplitWhitespace(TokenReplace(JoinTokens(tokens), mlm, tokenizer, f, seed));
    check.Expect(out.size() == n, "token count changed");
    std::size_t changed = 0;
    for (std::size_t k = 0; k < std::min(n, out.size()); ++k) changed += out[k] != tokens[k];
    auto bound = static_cast<std::size_t>(std::ceil(f * static_cast<double>(n)));
    auto selected = SelectMaskPositions(n, f, seed).size();
    check.Expect(changed <= bound, "changed " + std::to_string(changed) + " > bound");
    check.Expect(changed == selected, "changed count differs from the selected set");
  }
  auto suite = BackendSuite::Mocks();
  const auto& fwd = suite.model(Seq2SeqRole::kTranslatorForward);
  const auto& bwd = suite.model(Seq2SeqRole::kTranslatorBackward);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [a, b] : MockSynonyms()) pairs.emplace_back(a, b);
  DictionaryTranslator dict_fwd("f", Seq2SeqRole::kTranslatorForward, pairs);
  DictionaryTranslator dict_bwd("b", Seq2SeqRole::kTranslatorBackward, pairs);
  std::size_t identical = 0;
  for (int i = 0; i < kTexts; ++i) {
    std::string text;
    for (std::size_t k = 0, len = 1 + g() % 80; k < len; ++k) {
      if (k) text += ' ';
      text += MockFillerWords()[g() % MockFillerWords().size()];
      if (g() % 3 == 0) text += "AbC";
      if (g() % 7 == 0) text += std::string(kDanda);
    }
    bool ok = BackTranslate(text, fwd, bwd) == text && BackTranslate(text, dict_fwd, dict_bwd) == text;
    identical += ok;
    check.Expect(ok, "round trip altered: " + text.substr(0, 40));
  }
  return check.ok() ? "PASS: " + std::to_string(kTexts) +
                          " texts within bounds, back-translation identity on " +
                          std::to_string(identical) + "/" + std::to_string(kTexts)
                    : "FAIL: " + check.Summary();
}

std::string Criterion5() {
  Check check;
  std::mt19937_64 g(5);
  WhitespaceTokenizer tokenizer;
  FirstSentenceSummarizer summarizer;
  SummaryOptions options;
  const int kArticles = 1000;
  std::size_t passthrough = 0, largest = 0;
  for (int i = 0; i < kArticles; ++i) {
    // Log-uniform lengths so both short and very long articles are common.
    auto n = static_cast<std::size_t>(std::exp(std::log(20000.0) *
                                               std::uniform_real_distribution<>(0, 1)(g)));
    n = std::clamp<std::size_t>(n, 1, 20000);
    if (i == 0) n = 1;
    if (i == 1) n = 20000;
    if (i == 2) n = 512;
    if (i == 3) n = 513;
    largest = std::max(largest, n);
    std::vector<std::string> tokens(n);
    std::size_t every = g() % 80;
    for (std::size_t k = 0; k < n; ++k) {
      tokens[k] = "t" + std::to_string(k % 997);
      if (every && g() % every == 0) tokens[k] += '.';
    }
    auto text = JoinTokens(tokens);
    auto r = SummarizeArticle(text, summarizer, tokenizer, options);
    std::size_t out = tokenizer.Count(r.text);
    check.Expect(out <= options.limit, std::to_string(n) + " tokens gave " + std::to_string(out));
    check.Expect(r.passthrough == (n <= options.limit), "passthrough flag wrong at " +
                                                            std::to_string(n));
    passthrough += r.passthrough;
    auto plan = PlanChunks(tokens, options.chunk_budget);
    std::vector<unsigned char> hits(n, 0);
    for (const auto& range : plan.boundaries) {
      check.Expect(range.size() <= options.chunk_budget, "chunk over budget");
      for (std::size_t k = range.begin; k < range.end && k < n; ++k) ++hits[k];
    }
    check.Expect(std::all_of(hits.begin(), hits.end(), [](unsigned char h) { return h == 1; }),
                 "chunk plan does not cover " + std::to_string(n) + " tokens exactly once");
  }
  return check.ok() ? "PASS: " + std::to_string(kArticles) + " articles up to " +
                          std::to_string(largest) + " tokens, " + std::to_string(passthrough) +
                          " passthrough, all outputs <= 512"
                    : "FAIL: " + check.Summary();
}

std::string Criterion6() {
  Check check;
  std::mt19937_64 g(6);
  auto near = [](double a, double b) { return std::fabs(a - b) <= 1e-9; };
  const int kTrials = 500;
  for (int t = 0; t < kTrials; ++t) {
    std::size_t n = 1 + g() % 200;
    std::vector<Label> pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = LabelFromInt(static_cast<long long>(g() % 2));
      truth[i] = LabelFromInt(static_cast<long long>(g() % 2));
    }
    auto cm = Confusion(pred, truth);
    // Oracle: tallies from the raw vectors, exact integer MCC numerator.
    long long tp = 0, tn = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool p = pred[i] == Label::kAuthentic, y = truth[i] == Label::kAuthentic;
      tp += p && y;
      tn += !p && !y;
      fp += p && !y;
      fn += !p && y;
    }
    auto ratio = [](long long a, long long b) { return b ? static_cast<double>(a) / b : 0.0; };
    auto f1 = [](double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; };
    double p1 = ratio(tp, tp + fp), r1 = ratio(tp, tp + fn);
    double p0 = ratio(tn, tn + fn), r0 = ratio(tn, tn + fp);
    __int128 num = static_cast<__int128>(tp) * tn - static_cast<__int128>(fp) * fn;
    long double den = std::sqrt(static_cast<long double>((tp + fp) * (tp + fn)) *
                                static_cast<long double>((tn + fp) * (tn + fn)));
    double mcc = den == 0 ? 0.0 : static_cast<double>(static_cast<long double>(num) / den);
    check.Expect(near(Accuracy(cm), ratio(tp + tn, static_cast<long long>(n))), "accuracy");
    check.Expect(near(PrecisionMacro(cm), (p1 + p0) / 2), "precision");
    check.Expect(near(RecallMacro(cm), (r1 + r0) / 2), "recall");
    check.Expect(near(F1Macro(cm), (f1(p1, r1) + f1(p0, r0)) / 2), "f1");
    check.Expect(near(Mcc(cm), mcc), "mcc");
  }
  for (int t = 0; t < kTrials; ++t) {
    std::size_t n = 2 + g() % 150;
    std::vector<double> scores(n);
    std::vector<Label> truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] = static_cast<double>(g() % 21) / 20.0;
      truth[i] = LabelFromInt(static_cast<long long>(g() % 2));
    }
    truth[0] = Label::kFake;
    truth[1] = Label::kAuthentic;
    double wins = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (truth[i] != Label::kAuthentic || truth[j] != Label::kFake) continue;
        total += 1;
        wins += scores[i] > scores[j] ? 1.0 : scores[i] == scores[j] ? 0.5 : 0.0;
      }
    }
    check.Expect(near(RocAuc(scores, truth), wins / total), "roc-auc");
  }
  check.Expect(Mcc({7, 5, 0, 0}) == 1.0, "perfect mcc");
  check.Expect(Mcc({7, 0, 5, 0}) == 0.0 && Mcc({0, 7, 0, 5}) == 0.0, "degenerate mcc");
  std::vector<double> ties(9, 0.3);
  std::vector<Label> mixed = {Label::kFake, Label::kAuthentic, Label::kFake, Label::kFake,
                              Label::kAuthentic, Label::kFake, Label::kAuthentic,
                              Label::kFake, Label::kFake};
  check.Expect(RocAuc(ties, mixed) == 0.5, "all-ties auc");
  return check.ok() ? "PASS: " + std::to_string(kTrials) + " confusion matrices and " +
                          std::to_string(kTrials) + " score vectors within 1e-9"
                    : "FAIL: " + check.Summary();
}

struct EndToEnd {
  PipelineOutcome outcome;
  RunConfig config;
  std::unique_ptr<BuiltDatasets> datasets;
  double seconds = 0;
};

const std::vector<std::string> kClassifiers = {kMockLexiconClassifierId,
                                               kMockPresenceClassifierId};

EndToEnd RunEndToEnd(const fs::path& dir) {
  EndToEnd e;
  auto started = Clock::now();
  WriteSyntheticInputs(dir, SyntheticInputCounts::Scaled(0.03), 8, 7);
  auto j = ConfigFor(0.03, {"a1", "a2", "a3", "a4"}, kClassifiers);
  e.config = RunConfig::FromJson(j, dir);
  auto registry = std::make_shared<const BackendRegistry>(BackendRegistry::WithMocks());
  e.outcome = RunPipeline(e.config, registry);
  e.seconds = Seconds(started);
  auto inputs = LoadInputs(e.config);
  e.datasets = std::make_unique<BuiltDatasets>(
      BuildDatasets(e.config, inputs, e.config.MakeSuite(registry)));
  return e;
}

std::string Criterion7(const EndToEnd& e) {
  Check check;
  std::size_t articles =
      e.datasets->dataset1.train.corpus.size() + e.datasets->dataset2.train.corpus.size();
  check.Expect(articles >= 400, "only " + std::to_string(articles) + " training articles");
  check.Expect(e.outcome.all_ok(), "a cell failed");
  for (const auto& cell : e.outcome.cells) check.Expect(cell.ok, cell.cell + ": " + cell.error);
  std::size_t rows = 0;
  for (const auto& r : e.outcome.reports) {
    if (r.method == "inference") continue;
    ++rows;
    check.Expect(r.accuracy == 1.0 && r.mcc == 1.0,
                 r.method + "/" + r.model_id + "/" + r.test_set + " accuracy " +
                     std::to_string(r.accuracy) + " mcc " + std::to_string(r.mcc));
  }
  std::size_t summarized = 0;
  for (const auto& approach : {"a2", "a4"}) {
    for (const auto& id : kClassifiers) {
      auto m = json::parse(ReadFile(e.config.output_dir / "runs" /
                                    (std::string(approach) + "__" + id) / "manifest.json"));
      std::size_t n = m.at("summarized_articles");
      summarized += n;
      check.Expect(n >= 1, std::string(approach) + "/" + id + " has no summarized article");
    }
  }
  check.Expect(e.seconds < 300.0, "took " + std::to_string(e.seconds) + " s");
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "PASS: %zu training articles, %zu trained rows at A = MCC = 1.0, "
                "%zu summarized records in a2/a4, %.1f s",
                articles, rows, summarized, e.seconds);
  return check.ok() ? detail : "FAIL: " + check.Summary();
}

std::map<std::string, std::string> Snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename() == "timing.json") continue;  // wall clock
    files[fs::relative(entry.path(), root).string()] = ReadFile(entry.path());
  }
  return files;
}

std::string Criterion8(const EndToEnd& e, const fs::path& dir) {
  Check check;
  auto first = Snapshot(e.config.output_dir);
  fs::rename(e.config.output_dir, dir / "first_run");
  auto registry = std::make_shared<const BackendRegistry>(BackendRegistry::WithMocks());
  auto again = RunPipeline(e.config, registry);
  check.Expect(again.all_ok(), "second run had a failed cell");
  auto second = Snapshot(e.config.output_dir);
  check.Expect(first.size() == second.size(), "file sets differ");
  std::size_t datasets = 0, manifests = 0, csvs = 0;
  for (const auto& [name, bytes] : first) {
    auto it = second.find(name);
    check.Expect(it != second.end(), name + " missing in second run");
    if (it == second.end()) continue;
    check.Expect(it->second == bytes, name + " differs");
    datasets += name.ends_with(".jsonl") && name.starts_with("datasets");
    manifests += name.ends_with("manifest.json");
    csvs += name.ends_with(".csv");
  }
  return check.ok() ? "PASS: " + std::to_string(first.size()) + " files byte-identical (" +
                          std::to_string(datasets) + " dataset files, " +
                          std::to_string(manifests) + " manifests, " + std::to_string(csvs) +
                          " CSVs)"
                    : "FAIL: " + check.Summary();
}

std::string Criterion9(const EndToEnd& e) {
  Check check;
  std::set<std::string> expected;
  for (const auto& id : kClassifiers) {
    for (auto t : {"test_ds1", "test_ds3"}) {
      expected.insert("a1/" + id + "/" + t);
      expected.insert("a2/" + id + "/" + t);
    }
    for (auto t : {"test_ds1", "test_ds2", "test_ds3"}) {
      expected.insert("a3/" + id + "/" + t);
      expected.insert("a4/" + id + "/" + t);
      expected.insert("inference/" + id + "/" + t);
    }
  }
  std::set<std::string> actual;
  std::istringstream csv(ReadFile(e.config.output_dir / "comparison.csv"));
  std::string line;
  std::getline(csv, line);
  check.Expect(line == "test_set,method,model,A,P,R,F1,MCC,ROC,best_A,best_F1",
               "unexpected header " + line);
  std::size_t count = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> cells;
    std::stringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    if (cells.size() < 3) continue;
    ++count;
    actual.insert(cells[1] + "/" + cells[2] + "/" + cells[0]);
  }
  check.Expect(count == actual.size(), "duplicate rows");
  for (const auto& row : expected) check.Expect(actual.contains(row), "missing row " + row);
  for (const auto& row : actual) check.Expect(expected.contains(row), "unexpected row " + row);
  return check.ok() ? "PASS: " + std::to_string(count) +
                          " rows = (2 x 2 + 2 x 3 + 3 inference) x 2 backends"
                    : "FAIL: " + check.Summary();
}

int Main() {
  Workdir full_dir, desk_dir;
  FullScale full;
  std::vector<std::pair<int, std::function<std::string()>>> order;
  std::unique_ptr<EndToEnd> e2e;
  auto guarded = [](const std::function<std::string()>& fn) {
    try {
      return fn();
    } catch (const std::exception& ex) {
      return std::string("FAIL: exception: ") + ex.what();
    }
  };
  auto end_to_end = [&]() -> const EndToEnd& {
    if (!e2e) e2e = std::make_unique<EndToEnd>(RunEndToEnd(desk_dir.path()));
    return *e2e;
  };

  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"dataset-count reproduction", [&] { return Criterion1(full, full_dir.path()); }},
      {"disjointness and provenance leaks",
       [&] { return Criterion2(full, *end_to_end().datasets); }},
      {"augmentation arithmetic", [] { return Criterion3(); }},
      {"token-replacement bounds", [] { return Criterion4(); }},
      {"summarization budget", [] { return Criterion5(); }},
      {"metric oracle equivalence", [] { return Criterion6(); }},
      {"end-to-end separable corpus", [&] { return Criterion7(end_to_end()); }},
      {"determinism", [&] { return Criterion8(end_to_end(), desk_dir.path()); }},
      {"protocol fidelity", [&] { return Criterion9(end_to_end()); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto result = guarded(criteria[i].second);
    failed += result.starts_with("FAIL");
    std::cout << (result.starts_with("PASS") ? "PASS" : "FAIL") << " criterion " << i + 1
              << " (" << criteria[i].first << ")" << result.substr(4) << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace bnfake

int main() { return bnfake::Main(); }

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

// Command-line entry point: ingest, build-datasets, augment, summarize,
// train, infer, evaluate, pipeline, report and make-synthetic.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bnfake/augmentation.h"
#include "bnfake/corpus.h"
#include "bnfake/dataset_builder.h"
#include "bnfake/error.h"
#include "bnfake/evaluation.h"
#include "bnfake/mock_backends.h"
#include "bnfake/pipeline.h"
#include "bnfake/random.h"
#include "bnfake/summarization.h"
#include "bnfake/synthetic.h"
#include "bnfake/training.h"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace bnfake {
namespace {

constexpr int kExitCellFailure = 1;
constexpr int kExitConfig = 2;

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::size_t workers = 1;
  std::string backend;
};

std::shared_ptr<const BackendRegistry> Registry() {
  return std::make_shared<const BackendRegistry>(BackendRegistry::WithMocks());
}

BackendSuite Suite() {
  auto suite = BackendSuite::Mocks();
  suite.registry = Registry();
  return suite;
}

// --seed wins; otherwise the seed of --config, if one was given.
std::uint64_t RequireSeed(const Globals& g) {
  if (g.seed) return *g.seed;
  if (!g.config.empty()) return RunConfig::Load(g.config).seed;
  throw ConfigError("--seed is required");
}

fs::path RequireOut(const Globals& g) {
  if (g.out.empty()) throw ConfigError("--out is required");
  return g.out;
}

void RequireFile(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw ConfigError("input not found: " + path.string());
}

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path.string());
}

LabeledCorpus ReadJsonl(const fs::path& path) {
  RequireFile(path);
  auto result = LoadCorpus(path, CorpusFormatFromPath(path), Origin::kBanFake);
  if (!result.rejects.empty()) {
    throw Error(path.string() + ": row " + std::to_string(result.rejects[0].row) + ": " +
                result.rejects[0].reason);
  }
  result.corpus.set_name(path.stem().string());
  return std::move(result.corpus);
}

RunConfig LoadRunConfig(const Globals& g) {
  if (g.config.empty()) throw ConfigError("--config is required");
  RequireFile(g.config);
  auto config = RunConfig::Load(g.config);
  if (g.seed) {
    config.seed = *g.seed;
    config.hyperparams.seed = *g.seed;
  }
  if (!g.out.empty()) config.output_dir = g.out;
  if (g.workers > 1) config.workers = g.workers;
  if (!g.backend.empty()) config.classifier_ids = {g.backend};
  return config;
}

int RunIngest(const Globals& g, const std::string& input, const std::string& format,
              const std::string& origin, bool merge) {
  RequireFile(input);
  const auto out = RequireOut(g);
  auto fmt = format.empty() ? CorpusFormatFromPath(input) : CorpusFormatFromName(format);
  auto result = LoadCorpus(input, fmt, OriginFromName(origin));
  auto corpus = merge ? MergeHeadlines(result.corpus) : result.corpus;
  const std::string stem = fs::path(input).stem().string();
  fs::create_directories(out);
  WriteCorpusJsonl(corpus, out / (stem + ".jsonl"));
  WriteRejects(result.rejects, out / (stem + ".rejects.jsonl"));
  auto stats = ToJson(ComputeStats(corpus, *Suite().tokenizer));
  WriteFile(out / (stem + ".stats.json"), stats.dump(2) + "\n");
  std::cout << stem << ": " << corpus.size() << " accepted, " << result.rejects.size()
            << " rejected\n";
  return 0;
}

int RunBuildDatasets(const Globals& g) {
  auto config = LoadRunConfig(g);
  auto registry = Registry();
  config.approaches = {Approach::kA1};  // datasets only; approaches are not used
  config.Validate(*registry);
  auto suite = config.MakeSuite(registry);
  auto inputs = LoadInputs(config);
  auto datasets = BuildDatasets(config, inputs, suite);
  WriteDatasets(datasets, inputs, config.output_dir / "datasets");
  for (const auto* d : {&datasets.dataset1.train, &datasets.dataset2.train,
                        &datasets.dataset1.test_ds1, &datasets.test_ds2, &datasets.test_ds3}) {
    std::cout << DatasetNameString(d->manifest.name) << ": " << d->manifest.fake << " fake / "
              << d->manifest.authentic << " authentic\n";
  }
  return 0;
}

int RunAugment(const Globals& g, const std::string& input,
               const std::vector<std::string>& techniques, std::size_t copies,
               std::optional<double> mask_fraction) {
  auto corpus = ReadJsonl(input);
  const auto out = RequireOut(g);
  std::vector<Technique> list;
  for (const auto& t : techniques) list.push_back(TechniqueFromName(t));
  const bool replaces =
      std::find(list.begin(), list.end(), Technique::kTokenReplacement) != list.end();
  if (replaces && !mask_fraction) mask_fraction = kDefaultMaskFraction;
  AugmentationEngine engine(list, Suite(), mask_fraction, RequireSeed(g));
  if (copies == 0) copies = list.size();
  auto result = AugmentCorpus(corpus.Filter(Label::kFake), engine, copies, g.workers);
  fs::create_directories(out);
  WriteCorpusJsonl(result.corpus, out / "augmented.jsonl");
  std::string log;
  for (const auto& entry : result.log) log += ToJson(entry).dump() + "\n";
  WriteFile(out / "augmentation_log.jsonl", log);
  for (const auto& f : result.failures) {
    std::cerr << "augment: " << f.article_id << " " << TechniqueName(f.technique) << ": "
              << f.reason << "\n";
  }
  std::cout << result.corpus.size() << " articles written\n";
  return 0;
}

int RunSummarize(const Globals& g, const std::string& input, const SummaryOptions& options) {
  auto corpus = ReadJsonl(input);
  const auto out = RequireOut(g);
  options.Validate();
  auto suite = Suite();
  auto summarizer = g.backend.empty() ? suite.seq2seq.at(Seq2SeqRole::kSummarizer)
                                      : suite.registry->seq2seq(g.backend);
  if (summarizer->role() != Seq2SeqRole::kSummarizer) {
    throw ConfigError("backend '" + g.backend + "' is not a summarizer");
  }
  auto result = SummarizeCorpus(corpus, *summarizer, *suite.tokenizer, options, g.workers);
  fs::create_directories(out);
  WriteCorpusJsonl(result.corpus, out / "summarized.jsonl");
  std::string log;
  for (const auto& entry : result.log) log += ToJson(entry).dump() + "\n";
  WriteFile(out / "summary_log.jsonl", log);
  return 0;
}

int RunTrain(const Globals& g, int approach_number, const std::string& dataset_dir,
             double ratio, int epochs) {
  const auto approach = ApproachFromInt(approach_number);
  Hyperparams hp;
  if (!g.config.empty()) hp = RunConfig::Load(g.config).hyperparams;
  hp.seed = RequireSeed(g);
  if (epochs > 0) hp.epochs = epochs;
  auto config = ApproachConfig::For(
      approach, g.backend.empty() ? std::string(kMockLexiconClassifierId) : g.backend, hp);
  config.Validate();
  const auto out = RequireOut(g);
  auto suite = Suite();
  if (!suite.registry->HasClassifier(config.classifier_backend_id)) {
    throw ConfigError("unknown classifier backend '" + config.classifier_backend_id + "'");
  }
  const fs::path dir = dataset_dir;
  auto train = ReadJsonl(dir / (std::string(DatasetNameString(config.dataset)) + ".jsonl"));
  TestSetRegistry tests;
  for (DatasetName t : ApplicableTestSets(approach)) {
    auto path = dir / (std::string(DatasetNameString(t)) + ".jsonl");
    if (fs::is_regular_file(path)) tests.Register(ReadJsonl(path));
  }
  auto bundle = SplitTrainValidation(train, ratio,
                                     DeriveSeed(hp.seed, train.name(), "split"));
  auto run = RunApproach(config, bundle, suite, tests, {}, g.workers);
  WriteRun(run, out);
  for (const auto& e : run.manifest.epochs) {
    std::cout << "epoch " << e.epoch << " validation accuracy " << e.accuracy << "\n";
  }
  return 0;
}

void EmitReport(const EvaluationReport& report, const Globals& g) {
  if (!g.out.empty()) WriteReport(report, g.out);
  std::cout << ReportCsv(report);
}

int RunInfer(const Globals& g, const std::string& test) {
  auto testset = ReadJsonl(test);
  auto id = g.backend.empty() ? std::string(kMockLexiconClassifierId) : g.backend;
  EmitReport(ZeroShotEvaluate(id, testset, Suite(), g.workers), g);
  return 0;
}

int RunEvaluate(const Globals& g, const std::string& model, const std::string& test,
                const std::string& method, bool summarize) {
  fs::path model_path = model;
  if (fs::is_directory(model_path)) model_path /= kModelFileName;
  RequireFile(model_path);
  std::ifstream in(model_path);
  auto suite = Suite();
  auto classifier = suite.registry->LoadClassifier(json::parse(in));
  std::string label = method;
  if (label.empty()) {
    // Name rows after the approach recorded next to the model, when present.
    auto manifest = model_path.parent_path() / "manifest.json";
    label = "model";
    if (fs::is_regular_file(manifest)) {
      std::ifstream m(manifest);
      label = json::parse(m).at("config").value("approach", label);
    }
  }
  auto testset = ReadJsonl(test);
  if (summarize) {
    testset = SummarizeCorpus(testset, suite.model(Seq2SeqRole::kSummarizer),
                              *suite.tokenizer, {}, g.workers)
                  .corpus;
  }
  EmitReport(Evaluate(*classifier, testset, label, g.workers), g);
  return 0;
}

int RunPipelineCommand(const Globals& g) {
  auto config = LoadRunConfig(g);
  auto outcome = RunPipeline(config, Registry(), &std::cerr);
  std::cout << ComparisonMarkdown(outcome.table);
  for (const auto& cell : outcome.cells) {
    if (!cell.ok) std::cerr << "cell " << cell.cell << " failed: " << cell.error << "\n";
  }
  return outcome.all_ok() ? 0 : kExitCellFailure;
}

int RunReport(const Globals& g, const std::string& run_dir) {
  fs::path dir = run_dir.empty() ? fs::path(g.out) : fs::path(run_dir);
  if (dir.empty()) throw ConfigError("a run directory is required");
  if (!fs::is_directory(dir)) throw ConfigError("run directory not found: " + dir.string());
  std::cout << ComparisonMarkdown(WriteComparison(dir));
  return 0;
}

int RunMakeSynthetic(const Globals& g, double scale, std::size_t long_every,
                     const std::vector<std::string>& approaches) {
  const auto out = RequireOut(g);
  const auto seed = RequireSeed(g);
  WriteSyntheticInputs(out, SyntheticInputCounts::Scaled(scale), seed, long_every);
  ordered_json config;
  config["seed"] = seed;
  config["output_dir"] = "run";
  config["inputs"] = {{"banfake", "banfake.csv"},
                      {"transfnd", "transfnd.csv"},
                      {"customfake", "customfake.csv"}};
  config["scale"] = scale;
  config["approaches"] = approaches;
  config["hyperparams"] = {{"epochs", 2}};
  config["workers"] = g.workers;
  WriteFile(out / "config.json", config.dump(2) + "\n");
  std::cout << "wrote synthetic inputs and config.json to " << out.string() << "\n";
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Bengali fake news detection experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "Run config (JSON)");
  app.add_option("--seed", g.seed, "Base seed");
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--backend", g.backend, "Backend id");

  std::string input, format, origin = "banfake", dataset_dir, model, test, method,
                             run_dir;
  bool no_merge = false, summarize_test = false;
  std::vector<std::string> techniques = {"token_replacement", "paraphrase"};
  std::vector<std::string> approaches = {"a1", "a2", "a3", "a4"};
  std::size_t copies = 0, long_every = 0;
  std::optional<double> mask_fraction;
  SummaryOptions summary;
  int approach = 0, epochs = 0;
  double ratio = 0.85, scale = 0.01;

  auto* ingest = app.add_subcommand("ingest", "Load, validate and normalize a corpus");
  ingest->add_option("--input", input)->required();
  ingest->add_option("--format", format, "csv or jsonl (default: by extension)");
  ingest->add_option("--origin", origin);
  ingest->add_flag("--no-merge-headline", no_merge);

  auto* build = app.add_subcommand("build-datasets", "Build the five datasets from a config");

  auto* augment = app.add_subcommand("augment", "Augment the fake articles of a corpus");
  augment->add_option("--input", input)->required();
  augment->add_option("--techniques", techniques)->delimiter(',');
  augment->add_option("--copies", copies, "Copies per article (default: one per technique)");
  augment->add_option("--mask-fraction", mask_fraction);

  auto* summarize = app.add_subcommand("summarize", "Summarize over-long articles");
  summarize->add_option("--input", input)->required();
  summarize->add_option("--limit", summary.limit);
  summarize->add_option("--chunk-budget", summary.chunk_budget);
  summarize->add_option("--per-chunk-budget", summary.per_chunk_summary_budget);

  auto* train = app.add_subcommand("train", "Fine-tune one approach");
  train->add_option("--approach", approach)->required()->check(CLI::Range(1, 4));
  train->add_option("--dataset-dir", dataset_dir)->required();
  train->add_option("--ratio", ratio, "Train share of the train/validation split");
  train->add_option("--epochs", epochs);

  auto* infer = app.add_subcommand("infer", "Zero-shot evaluation of an untuned backend");
  infer->add_option("--test", test)->required();

  auto* evaluate = app.add_subcommand("evaluate", "Score a trained model on a test set");
  evaluate->add_option("--model", model, "model.json or a run directory")->required();
  evaluate->add_option("--test", test)->required();
  evaluate->add_option("--method", method, "Row label; defaults to the approach in the run manifest");
  evaluate->add_flag("--summarize", summarize_test);

  auto* pipeline = app.add_subcommand("pipeline", "Run the full experiment");

  auto* report = app.add_subcommand("report", "Build comparison tables from reports");
  report->add_option("run_dir", run_dir);

  auto* synthetic = app.add_subcommand("make-synthetic", "Write synthetic inputs and a config");
  synthetic->add_option("--scale", scale);
  synthetic->add_option("--long-every", long_every);
  synthetic->add_option("--approaches", approaches)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*ingest) return RunIngest(g, input, format, origin, !no_merge);
    if (*build) return RunBuildDatasets(g);
    if (*augment) return RunAugment(g, input, techniques, copies, mask_fraction);
    if (*summarize) return RunSummarize(g, input, summary);
    if (*train) return RunTrain(g, approach, dataset_dir, ratio, epochs);
    if (*infer) return RunInfer(g, test);
    if (*evaluate) return RunEvaluate(g, model, test, method, summarize_test);
    if (*pipeline) return RunPipelineCommand(g);
    if (*report) return RunReport(g, run_dir);
    if (*synthetic) return RunMakeSynthetic(g, scale, long_every, approaches);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCellFailure;
  }
  return kExitConfig;
}

}  // namespace
}  // namespace bnfake

int main(int argc, char** argv) { return bnfake::Main(argc, argv); }

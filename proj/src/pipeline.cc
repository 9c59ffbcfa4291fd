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

#include "bnfake/pipeline.h"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "bnfake/error.h"
#include "bnfake/mock_backends.h"
#include "bnfake/parallel.h"
#include "bnfake/random.h"

namespace bnfake {
namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

InputSpec ParseInput(const json& j, std::string_view key, const fs::path& base) {
  if (!j.contains(key)) throw ConfigError("inputs." + std::string(key) + " is missing");
  const auto& entry = j.at(std::string(key));
  InputSpec spec;
  fs::path path = entry.is_string() ? entry.get<std::string>()
                                    : entry.at("path").get<std::string>();
  spec.path = path.is_absolute() ? path : base / path;
  spec.format = entry.is_object() && entry.contains("format")
                    ? CorpusFormatFromName(entry.at("format").get<std::string>())
                    : CorpusFormatFromPath(spec.path);
  return spec;
}

std::string FormatName(CorpusFormat format) {
  return format == CorpusFormat::kCsv ? "csv" : "jsonl";
}

void WriteText(const fs::path& path, std::string_view text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

void WriteJson(const fs::path& path, const ordered_json& j) {
  WriteText(path, j.dump(2) + "\n");
}

std::string CellId(Approach approach, std::string_view backend) {
  return ApproachName(approach) + "__" + std::string(backend);
}

class Logger {
 public:
  explicit Logger(std::ostream* out) : out_(out) {}
  void operator()(std::string_view tag, std::string_view line) {
    if (!out_) return;
    std::lock_guard lock(mu_);
    *out_ << '[' << tag << "] " << line << '\n';
  }

 private:
  std::ostream* out_;
  std::mutex mu_;
};

}  // namespace

RunConfig RunConfig::FromJson(const json& j, const fs::path& base_dir) {
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (!j.contains("seed")) throw ConfigError("config has no 'seed'; seeds must be explicit");
    RunConfig c;
    c.seed = j.at("seed").get<std::uint64_t>();
    fs::path out = j.value("output_dir", std::string("out"));
    c.output_dir = out.is_absolute() ? out : base_dir / out;

    if (!j.contains("inputs")) throw ConfigError("config has no 'inputs'");
    const auto& inputs = j.at("inputs");
    c.banfake = ParseInput(inputs, "banfake", base_dir);
    c.transfnd = ParseInput(inputs, "transfnd", base_dir);
    c.customfake = ParseInput(inputs, "customfake", base_dir);
    c.merge_headline = j.value("merge_headline", true);

    if (j.contains("scale")) c.targets = DatasetTargets::Scaled(j.at("scale").get<double>());
    if (j.contains("targets")) {
      const auto& t = j.at("targets");
      c.targets.test_ds1_per_class = t.value("test_ds1_per_class", c.targets.test_ds1_per_class);
      c.targets.dataset2_per_class = t.value("dataset2_per_class", c.targets.dataset2_per_class);
      c.targets.test_ds2_per_class = t.value("test_ds2_per_class", c.targets.test_ds2_per_class);
    }
    c.validation_ratio = j.value("validation_ratio", c.validation_ratio);

    if (j.contains("augmentation")) {
      const auto& a = j.at("augmentation");
      if (a.contains("techniques")) {
        c.techniques.clear();
        for (const auto& t : a.at("techniques")) {
          c.techniques.push_back(TechniqueFromName(t.get<std::string>()));
        }
      }
      c.mask_fraction = a.value("mask_fraction", c.mask_fraction);
    }

    const json backends = j.value("backends", json::object());
    c.tokenizer_id = backends.value("tokenizer", std::string(kMockTokenizerId));
    if (backends.contains("masked_lms")) {
      c.masked_lm_ids = backends.at("masked_lms").get<std::vector<std::string>>();
    } else {
      c.masked_lm_ids = {kMockSynonymMlmId};
    }
    c.translator_forward_id =
        backends.value("translator_fwd", std::string(kMockTranslatorForwardId));
    c.translator_backward_id =
        backends.value("translator_bwd", std::string(kMockTranslatorBackwardId));
    c.paraphraser_id = backends.value("paraphraser", std::string(kMockParaphraserId));
    c.summarizer_id = backends.value("summarizer", std::string(kMockSummarizerId));
    if (backends.contains("classifiers")) {
      c.classifier_ids = backends.at("classifiers").get<std::vector<std::string>>();
    } else {
      c.classifier_ids = {kMockLexiconClassifierId};
    }

    if (j.contains("summary")) {
      const auto& s = j.at("summary");
      c.summary.limit = s.value("limit", c.summary.limit);
      c.summary.chunk_budget = s.value("chunk_budget", c.summary.chunk_budget);
      c.summary.per_chunk_summary_budget =
          s.value("per_chunk_budget", c.summary.per_chunk_summary_budget);
    }

    for (const auto& a : j.value("approaches", json::array())) {
      c.approaches.push_back(a.is_number_integer() ? ApproachFromInt(a.get<int>())
                                                   : ApproachFromString(a.get<std::string>()));
    }
    json hp = j.value("hyperparams", json::object());
    if (!hp.contains("seed")) hp["seed"] = c.seed;
    c.hyperparams = HyperparamsFromJson(hp);
    c.inference = j.value("inference", true);
    c.workers = j.value("workers", std::size_t{1});
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

RunConfig RunConfig::Load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return FromJson(j, path.has_parent_path() ? path.parent_path() : fs::path("."));
}

void RunConfig::Validate(const BackendRegistry& registry) const {
  if (approaches.empty()) throw ConfigError("no approaches listed");
  std::set<Approach> seen;
  for (Approach a : approaches) {
    if (!seen.insert(a).second) {
      throw ConfigError("approach " + ApproachName(a) + " listed twice");
    }
  }
  for (const auto* input : {&banfake, &transfnd, &customfake}) {
    if (!fs::is_regular_file(input->path)) {
      throw ConfigError("input not found: " + input->path.string());
    }
  }
  if (!(validation_ratio > 0.0 && validation_ratio < 1.0)) {
    throw ConfigError("validation_ratio must lie in (0, 1)");
  }
  if (workers == 0) throw ConfigError("workers must be at least 1");
  if (classifier_ids.empty()) throw ConfigError("no classifier backends listed");
  for (const auto& id : classifier_ids) {
    if (!registry.HasClassifier(id)) throw ConfigError("unknown classifier backend '" + id + "'");
  }
  summary.Validate();
  hyperparams.Validate();
  // Resolving every role surfaces unknown ids and role mismatches here.
  auto suite = MakeSuite(std::make_shared<const BackendRegistry>(registry));
  AugmentationEngine(techniques, suite,
                     std::find(techniques.begin(), techniques.end(),
                               Technique::kTokenReplacement) != techniques.end()
                         ? std::optional<double>(mask_fraction)
                         : std::nullopt,
                     seed);
}

BackendSuite RunConfig::MakeSuite(std::shared_ptr<const BackendRegistry> registry) const {
  BackendSuite suite;
  suite.registry = registry;
  suite.tokenizer = registry->tokenizer(tokenizer_id);
  for (const auto& id : masked_lm_ids) suite.masked_lms.push_back(registry->masked_lm(id));
  auto put = [&](Seq2SeqRole role, const std::string& id) {
    auto model = registry->seq2seq(id);
    if (model->role() != role) {
      throw ConfigError("backend '" + id + "' cannot serve as " +
                        std::string(Seq2SeqRoleName(role)));
    }
    suite.seq2seq[role] = std::move(model);
  };
  put(Seq2SeqRole::kTranslatorForward, translator_forward_id);
  put(Seq2SeqRole::kTranslatorBackward, translator_backward_id);
  put(Seq2SeqRole::kParaphraser, paraphraser_id);
  put(Seq2SeqRole::kSummarizer, summarizer_id);
  suite.Validate();
  return suite;
}

ordered_json ToJson(const RunConfig& c) {
  ordered_json j;
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir.string();
  auto input = [](const InputSpec& s) {
    return ordered_json{{"path", s.path.string()}, {"format", FormatName(s.format)}};
  };
  j["inputs"] = {{"banfake", input(c.banfake)},
                 {"transfnd", input(c.transfnd)},
                 {"customfake", input(c.customfake)}};
  j["merge_headline"] = c.merge_headline;
  j["targets"] = {{"test_ds1_per_class", c.targets.test_ds1_per_class},
                  {"dataset2_per_class", c.targets.dataset2_per_class},
                  {"test_ds2_per_class", c.targets.test_ds2_per_class}};
  j["validation_ratio"] = c.validation_ratio;
  ordered_json techniques = ordered_json::array();
  for (Technique t : c.techniques) techniques.push_back(TechniqueName(t));
  j["augmentation"] = {{"techniques", techniques}, {"mask_fraction", c.mask_fraction}};
  j["backends"] = {{"tokenizer", c.tokenizer_id},
                   {"masked_lms", c.masked_lm_ids},
                   {"translator_fwd", c.translator_forward_id},
                   {"translator_bwd", c.translator_backward_id},
                   {"paraphraser", c.paraphraser_id},
                   {"summarizer", c.summarizer_id},
                   {"classifiers", c.classifier_ids}};
  j["summary"] = {{"limit", c.summary.limit},
                  {"chunk_budget", c.summary.chunk_budget},
                  {"per_chunk_budget", c.summary.per_chunk_summary_budget}};
  ordered_json approaches = ordered_json::array();
  for (Approach a : c.approaches) approaches.push_back(ApproachName(a));
  j["approaches"] = approaches;
  j["hyperparams"] = ToJson(c.hyperparams);
  j["inference"] = c.inference;
  j["workers"] = c.workers;
  return j;
}

LoadedInputs LoadInputs(const RunConfig& config) {
  LoadedInputs out;
  auto load = [&](const InputSpec& spec, Origin origin, std::string name) {
    auto result = LoadCorpus(spec.path, spec.format, origin);
    out.rejects[name] = std::move(result.rejects);
    auto corpus = config.merge_headline ? MergeHeadlines(result.corpus)
                                        : std::move(result.corpus);
    corpus.set_name(std::move(name));
    return corpus;
  };
  out.banfake = load(config.banfake, Origin::kBanFake, "banfake");
  out.transfnd = load(config.transfnd, Origin::kTransFnd, "transfnd");
  out.customfake = load(config.customfake, Origin::kCustomFake, "customfake");
  return out;
}

const LabeledCorpus& BuiltDatasets::training(DatasetName name) const {
  switch (name) {
    case DatasetName::kDataset1: return dataset1.train.corpus;
    case DatasetName::kDataset2: return dataset2.train.corpus;
    default: throw Error(std::string(DatasetNameString(name)) + " is not a training set");
  }
}

const LabeledCorpus& BuiltDatasets::test(DatasetName name) const {
  switch (name) {
    case DatasetName::kTestDs1: return dataset1.test_ds1.corpus;
    case DatasetName::kTestDs2: return test_ds2.corpus;
    case DatasetName::kTestDs3: return test_ds3.corpus;
    default: throw Error(std::string(DatasetNameString(name)) + " is not a test set");
  }
}

IdSet TrainingIds(const BuiltDatasets& datasets, DatasetName name) {
  return datasets.training(name).IdsWithSources();
}

BuiltDatasets BuildDatasets(const RunConfig& config, const LoadedInputs& inputs,
                            const BackendSuite& backends) {
  const auto banfake_fake = inputs.banfake.Filter(Label::kFake);
  const auto banfake_auth = inputs.banfake.Filter(Label::kAuthentic);

  BuiltDatasets out;
  out.dataset1 = BuildDataset1(inputs.banfake, inputs.transfnd, config.seed,
                               config.targets.test_ds1_per_class);
  const auto& ds1 = out.dataset1.test_ds1.corpus;

  const bool replaces = std::find(config.techniques.begin(), config.techniques.end(),
                                  Technique::kTokenReplacement) != config.techniques.end();
  AugmentationEngine engine(config.techniques, backends,
                            replaces ? std::optional<double>(config.mask_fraction)
                                     : std::nullopt,
                            DeriveSeed(config.seed, "dataset2", "augment"));
  out.dataset2 = BuildDataset2(banfake_fake, engine, banfake_auth, config.seed,
                               config.targets.dataset2_per_class, ds1.IdsWithSources(),
                               config.workers);

  IdSet ds2_exclude = out.dataset2.train.corpus.IdsWithSources();
  for (const LabeledCorpus* corpus : {&std::as_const(out.dataset1.train.corpus), &ds1}) {
    for (const auto& article : *corpus) {
      if (article.label == Label::kAuthentic) ds2_exclude.insert(article.id);
    }
  }
  out.test_ds2 = BuildTestDs2(inputs.transfnd, banfake_auth, ds2_exclude, config.seed,
                              config.targets.test_ds2_per_class);

  IdSet ds3_exclude = out.dataset1.train.corpus.IdsWithSources();
  for (const LabeledCorpus* corpus :
       {&std::as_const(out.dataset2.train.corpus), &ds1, &std::as_const(out.test_ds2.corpus)}) {
    auto ids = corpus->IdsWithSources();
    ds3_exclude.insert(ids.begin(), ids.end());
  }
  out.test_ds3 = BuildTestDs3(inputs.customfake, banfake_auth, ds3_exclude, config.seed);
  return out;
}

void WriteDatasets(const BuiltDatasets& d, const LoadedInputs& inputs, const fs::path& dir) {
  WriteDataset(d.dataset1.train, dir);
  WriteDataset(d.dataset1.test_ds1, dir);
  WriteDataset(d.dataset2.train, dir);
  WriteDataset(d.test_ds2, dir);
  WriteDataset(d.test_ds3, dir);
  std::string log;
  for (const auto& entry : d.dataset2.augmentation.log) log += ToJson(entry).dump() + "\n";
  WriteText(dir / "augmentation_log.jsonl", log);
  for (const auto& [name, rejects] : inputs.rejects) {
    if (!rejects.empty()) WriteRejects(rejects, dir / ("rejects_" + name + ".jsonl"));
  }
}

bool PipelineOutcome::all_ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.ok; });
}

void WriteRun(const TrainedRun& run, const fs::path& dir) {
  fs::create_directories(dir);
  WriteJson(dir / "manifest.json", ToJson(run.manifest));
  WriteJson(dir / "timing.json", TimingJson(run.manifest));
  WriteJson(dir / kModelFileName, run.classifier->Serialize());
  if (run.manifest.config.summarize) {
    std::string log;
    for (const auto& entry : run.summary_log) log += ToJson(entry).dump() + "\n";
    WriteText(dir / "summary_log.jsonl", log);
  }
}

void WriteReport(const EvaluationReport& report, const fs::path& dir) {
  const std::string stem = report.method + "__" + report.model_id + "__" + report.test_set;
  WriteJson(dir / (stem + ".json"), ToJson(report));
  WriteText(dir / (stem + ".csv"), ReportCsv(report));
  WritePredictions(report, dir / (stem + ".predictions.jsonl"));
}

ComparisonTable WriteComparison(const fs::path& run_dir) {
  fs::path reports_dir = fs::is_directory(run_dir / "reports") ? run_dir / "reports" : run_dir;
  if (!fs::is_directory(reports_dir)) throw Error("no such directory " + run_dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(reports_dir)) {
    const auto& p = entry.path();
    if (entry.is_regular_file() && p.extension() == ".json" &&
        p.stem().string().find("__") != std::string::npos) {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<EvaluationReport> reports;
  for (const auto& file : files) {
    std::ifstream in(file);
    try {
      reports.push_back(ReportFromJson(json::parse(in)));
    } catch (const std::exception& e) {
      throw Error("unreadable report " + file.string() + ": " + e.what());
    }
  }
  if (reports.empty()) throw Error("no reports under " + reports_dir.string());
  auto table = Compare(reports);
  WriteText(run_dir / "comparison.csv", ComparisonCsv(table));
  WriteText(run_dir / "comparison.md", ComparisonMarkdown(table));
  WriteText(run_dir / "comparison.svg", ComparisonSvg(table));
  return table;
}

PipelineOutcome RunPipeline(const RunConfig& config,
                            std::shared_ptr<const BackendRegistry> registry,
                            std::ostream* log_stream) {
  config.Validate(*registry);
  Logger log(log_stream);
  const auto suite = config.MakeSuite(registry);
  const fs::path out = config.output_dir;

  auto inputs = LoadInputs(config);
  log("pipeline", "loaded " + std::to_string(inputs.banfake.size()) + " banfake, " +
                      std::to_string(inputs.transfnd.size()) + " transfnd, " +
                      std::to_string(inputs.customfake.size()) + " customfake");
  auto datasets = BuildDatasets(config, inputs, suite);
  WriteDatasets(datasets, inputs, out / "datasets");
  log("pipeline", "datasets written");

  // Summarized views of the test sets for the summarizing approaches.
  const bool any_summary = std::any_of(
      config.approaches.begin(), config.approaches.end(),
      [](Approach a) { return ApproachConfig::For(a, "").summarize; });
  std::map<DatasetName, LabeledCorpus> summarized_tests;
  if (any_summary) {
    for (DatasetName name :
         {DatasetName::kTestDs1, DatasetName::kTestDs2, DatasetName::kTestDs3}) {
      auto result = SummarizeCorpus(datasets.test(name), suite.model(Seq2SeqRole::kSummarizer),
                                    *suite.tokenizer, config.summary, config.workers);
      summarized_tests[name] = std::move(result.corpus);
    }
  }

  std::map<DatasetName, DatasetBundle> bundles;
  for (Approach a : config.approaches) {
    auto dataset = ApproachConfig::For(a, "").dataset;
    if (!bundles.contains(dataset)) {
      bundles[dataset] =
          SplitTrainValidation(datasets.training(dataset), config.validation_ratio,
                               DeriveSeed(config.seed, DatasetNameString(dataset), "split"));
    }
  }

  struct Cell {
    Approach approach;
    std::string backend;
  };
  std::vector<Cell> cells;
  for (Approach a : config.approaches) {
    for (const auto& id : config.classifier_ids) cells.push_back({a, id});
  }

  PipelineOutcome outcome;
  outcome.cells.resize(cells.size());
  ParallelFor(cells.size(), config.workers, [&](std::size_t i) {
    const auto& cell = cells[i];
    auto& result = outcome.cells[i];
    result.cell = CellId(cell.approach, cell.backend);
    try {
      auto approach = ApproachConfig::For(cell.approach, cell.backend, config.hyperparams);
      TestSetRegistry registry_for_cell;
      for (DatasetName t : ApplicableTestSets(cell.approach)) {
        registry_for_cell.Register(datasets.test(t));
      }
      log(result.cell, "training on " + std::string(DatasetNameString(approach.dataset)));
      auto run = RunApproach(approach, bundles.at(approach.dataset), suite, registry_for_cell,
                             config.summary, 1);
      WriteRun(run, out / "runs" / result.cell);
      for (DatasetName t : ApplicableTestSets(cell.approach)) {
        const auto& testset =
            approach.summarize ? summarized_tests.at(t) : datasets.test(t);
        auto report = Evaluate(*run.classifier, testset, ApproachName(cell.approach), 1);
        report.test_set = std::string(DatasetNameString(t));
        WriteReport(report, out / "reports");
        log(result.cell, report.test_set + " accuracy " + std::to_string(report.accuracy));
        result.reports.push_back(std::move(report));
      }
      result.ok = true;
    } catch (const std::exception& e) {
      result.error = e.what();
      log(result.cell, std::string("failed: ") + e.what());
    }
  });

  for (auto& cell : outcome.cells) {
    for (auto& report : cell.reports) outcome.reports.push_back(report);
  }
  if (config.inference) {
    for (const auto& id : config.classifier_ids) {
      for (DatasetName t :
           {DatasetName::kTestDs1, DatasetName::kTestDs2, DatasetName::kTestDs3}) {
        auto report = ZeroShotEvaluate(id, datasets.test(t), suite, config.workers);
        report.test_set = std::string(DatasetNameString(t));
        WriteReport(report, out / "reports");
        outcome.reports.push_back(std::move(report));
      }
    }
  }
  if (!outcome.reports.empty()) outcome.table = WriteComparison(out);
  return outcome;
}

}  // namespace bnfake

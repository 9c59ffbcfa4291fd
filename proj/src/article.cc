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

#include "bnfake/article.h"

#include <algorithm>
#include <array>
#include <utility>

#include "bnfake/error.h"

namespace bnfake {
namespace {

constexpr std::array<std::string_view, 4> kOriginNames = {
    "banfake", "transfnd", "customfake", "augmented"};

constexpr std::array<std::string_view, 6> kTransformNames = {
    "translated",  "token_replaced", "back_translated",
    "paraphrased", "summarized",     "merged_headline"};

template <typename Enum, std::size_t N>
Enum FromName(const std::array<std::string_view, N>& names,
              std::string_view name, const char* what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw Error(std::string("unknown ") + what + ": '" + std::string(name) +
                "'");
  }
  return static_cast<Enum>(it - names.begin());
}

}  // namespace

Label LabelFromInt(long long value) {
  if (value != 0 && value != 1) {
    throw Error("label " + std::to_string(value) + " outside {0,1}");
  }
  return static_cast<Label>(value);
}

std::string_view LabelName(Label label) {
  return label == Label::kFake ? "fake" : "authentic";
}

std::string_view OriginName(Origin origin) {
  return kOriginNames[static_cast<std::size_t>(origin)];
}

Origin OriginFromName(std::string_view name) {
  return FromName<Origin>(kOriginNames, name, "origin");
}

std::string_view TransformKindName(TransformKind kind) {
  return kTransformNames[static_cast<std::size_t>(kind)];
}

TransformKind TransformKindFromName(std::string_view name) {
  return FromName<TransformKind>(kTransformNames, name, "transform kind");
}

bool NewsArticle::HasTransform(TransformKind kind) const {
  return std::any_of(provenance.begin(), provenance.end(),
                     [kind](const TransformRecord& r) { return r.kind == kind; });
}

LabeledCorpus::LabeledCorpus(std::string name, std::vector<NewsArticle> articles)
    : name_(std::move(name)) {
  articles_.reserve(articles.size());
  for (auto& article : articles) Add(std::move(article));
}

void LabeledCorpus::Add(NewsArticle article) {
  if (!ids_.insert(article.id).second) {
    throw Error("duplicate id '" + article.id + "' in corpus '" + name_ + "'");
  }
  articles_.push_back(std::move(article));
}

bool LabeledCorpus::Contains(std::string_view id) const {
  return ids_.contains(std::string(id));
}

std::size_t LabeledCorpus::CountLabel(Label label) const {
  return std::count_if(articles_.begin(), articles_.end(),
                       [label](const NewsArticle& a) { return a.label == label; });
}

LabeledCorpus LabeledCorpus::Filter(Label label) const {
  LabeledCorpus out(name_);
  for (const auto& article : articles_) {
    if (article.label == label) out.Add(article);
  }
  return out;
}

std::unordered_set<std::string> LabeledCorpus::Ids() const { return ids_; }

std::unordered_set<std::string> LabeledCorpus::IdsWithSources() const {
  std::unordered_set<std::string> out = ids_;
  for (const auto& article : articles_) {
    for (const auto& record : article.provenance) out.insert(record.source_id);
  }
  return out;
}

nlohmann::ordered_json ToJson(const TransformRecord& record) {
  nlohmann::ordered_json j;
  j["kind"] = TransformKindName(record.kind);
  j["source_id"] = record.source_id;
  j["backend_id"] = record.backend_id;
  if (record.seed) {
    j["seed"] = *record.seed;
  } else {
    j["seed"] = nullptr;
  }
  return j;
}

TransformRecord TransformRecordFromJson(const nlohmann::ordered_json& j) {
  TransformRecord record;
  record.kind = TransformKindFromName(j.at("kind").get<std::string>());
  record.source_id = j.at("source_id").get<std::string>();
  if (record.source_id.empty()) throw Error("provenance record without source_id");
  record.backend_id = j.value("backend_id", std::string());
  if (j.contains("seed") && !j.at("seed").is_null()) {
    record.seed = j.at("seed").get<std::uint64_t>();
  }
  return record;
}

nlohmann::ordered_json ToJson(const NewsArticle& article) {
  nlohmann::ordered_json j;
  j["id"] = article.id;
  j["domain"] = article.domain;
  j["date"] = article.date;
  j["category"] = article.category;
  j["headline"] = article.headline;
  j["content"] = article.content;
  j["label"] = LabelValue(article.label);
  j["origin"] = OriginName(article.origin);
  auto provenance = nlohmann::ordered_json::array();
  for (const auto& record : article.provenance) provenance.push_back(ToJson(record));
  j["provenance"] = std::move(provenance);
  return j;
}

}  // namespace bnfake

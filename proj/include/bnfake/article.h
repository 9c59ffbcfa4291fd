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

#ifndef BNFAKE_ARTICLE_H_
#define BNFAKE_ARTICLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace bnfake {

enum class Label : std::uint8_t { kFake = 0, kAuthentic = 1 };

inline constexpr Label kAllLabels[] = {Label::kFake, Label::kAuthentic};

inline int LabelValue(Label label) { return static_cast<int>(label); }
// Throws Error unless value is 0 or 1.
Label LabelFromInt(long long value);
std::string_view LabelName(Label label);

// Which corpus an article was drawn from.
enum class Origin : std::uint8_t { kBanFake, kTransFnd, kCustomFake, kAugmented };

std::string_view OriginName(Origin origin);
Origin OriginFromName(std::string_view name);

enum class TransformKind : std::uint8_t {
  kTranslated,
  kTokenReplaced,
  kBackTranslated,
  kParaphrased,
  kSummarized,
  kMergedHeadline,
};

std::string_view TransformKindName(TransformKind kind);
TransformKind TransformKindFromName(std::string_view name);

// One step in the chain of transforms that produced an article.
struct TransformRecord {
  TransformKind kind = TransformKind::kTranslated;
  std::string source_id;
  std::string backend_id;
  // Set for stochastic transforms only.
  std::optional<std::uint64_t> seed;

  friend bool operator==(const TransformRecord&, const TransformRecord&) = default;
};

struct NewsArticle {
  std::string id;
  std::string domain;
  std::string date;
  std::string category;
  std::string headline;
  std::string content;
  Label label = Label::kFake;
  Origin origin = Origin::kBanFake;
  std::vector<TransformRecord> provenance;

  bool HasTransform(TransformKind kind) const;

  friend bool operator==(const NewsArticle&, const NewsArticle&) = default;
};

// Ordered collection of articles with unique ids. Iteration order is the
// insertion order and is part of the corpus identity.
class LabeledCorpus {
 public:
  LabeledCorpus() = default;
  explicit LabeledCorpus(std::string name) : name_(std::move(name)) {}
  // Throws Error on a duplicate id.
  LabeledCorpus(std::string name, std::vector<NewsArticle> articles);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Throws Error naming the id if it is already present.
  void Add(NewsArticle article);
  bool Contains(std::string_view id) const;

  const std::vector<NewsArticle>& articles() const { return articles_; }
  std::size_t size() const { return articles_.size(); }
  bool empty() const { return articles_.empty(); }
  const NewsArticle& operator[](std::size_t i) const { return articles_[i]; }
  auto begin() const { return articles_.begin(); }
  auto end() const { return articles_.end(); }

  std::size_t CountLabel(Label label) const;
  LabeledCorpus Filter(Label label) const;
  std::unordered_set<std::string> Ids() const;
  // Ids of every article plus every provenance source id.
  std::unordered_set<std::string> IdsWithSources() const;

  friend bool operator==(const LabeledCorpus& a, const LabeledCorpus& b) {
    return a.name_ == b.name_ && a.articles_ == b.articles_;
  }

 private:
  std::string name_;
  std::vector<NewsArticle> articles_;
  std::unordered_set<std::string> ids_;
};

nlohmann::ordered_json ToJson(const TransformRecord& record);
TransformRecord TransformRecordFromJson(const nlohmann::ordered_json& j);
nlohmann::ordered_json ToJson(const NewsArticle& article);

}  // namespace bnfake

#endif  // BNFAKE_ARTICLE_H_

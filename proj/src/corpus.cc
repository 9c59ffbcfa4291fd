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

#include "bnfake/corpus.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "bnfake/error.h"
#include "bnfake/random.h"
#include "bnfake/text.h"

namespace bnfake {
namespace {

constexpr std::string_view kColumns[] = {"id",       "domain",  "date", "category",
                                         "headline", "content", "label"};
constexpr std::string_view kRequired[] = {"id", "headline", "content", "label"};

struct CsvRecord {
  std::vector<std::string> fields;
  bool malformed = false;
};

// RFC 4180 records: quoted fields may hold separators, doubled quotes and
// line breaks. CRLF and LF line ends are both accepted.
class CsvReader {
 public:
  explicit CsvReader(std::string data) : data_(std::move(data)) {}

  std::optional<CsvRecord> Next() {
    if (pos_ >= data_.size()) return std::nullopt;
    CsvRecord record;
    std::string field;
    bool quoted = false;
    bool after_quote = false;
    while (pos_ < data_.size()) {
      char c = data_[pos_++];
      if (quoted) {
        if (c == '"') {
          if (pos_ < data_.size() && data_[pos_] == '"') {
            field += '"';
            ++pos_;
          } else {
            quoted = false;
            after_quote = true;
          }
        } else {
          field += c;
        }
        continue;
      }
      if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        after_quote = false;
      } else if (c == '\n' || c == '\r') {
        if (c == '\r' && pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
        break;
      } else if (c == '"' && field.empty() && !after_quote) {
        quoted = true;
      } else {
        // Text after a closing quote, or a bare quote inside a field.
        if (after_quote || c == '"') record.malformed = true;
        field += c;
      }
    }
    if (quoted) record.malformed = true;  // unterminated quote at EOF
    record.fields.push_back(std::move(field));
    return record;
  }

 private:
  std::string data_;
  std::size_t pos_ = 0;
};

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string CsvQuote(const std::string& field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Validates and normalizes one raw row. Returns the rejection reason, or
// nullopt with *article filled in.
std::optional<std::string> BuildArticle(
    const std::map<std::string, std::string, std::less<>>& fields,
    Origin origin, NewsArticle* article) {
  auto get = [&fields](std::string_view key) -> std::string {
    auto it = fields.find(key);
    return it == fields.end() ? std::string() : it->second;
  };
  try {
    article->id = NormalizeText(get("id"));
    article->domain = NormalizeText(get("domain"));
    article->date = NormalizeText(get("date"));
    article->category = NormalizeText(get("category"));
    article->headline = NormalizeText(get("headline"));
    article->content = NormalizeText(get("content"));
  } catch (const Error& e) {
    return std::string(e.what());
  }
  if (article->id.empty()) return "empty id";
  std::string label = NormalizeText(get("label"));
  if (label != "0" && label != "1") {
    return "label '" + label + "' outside {0,1}";
  }
  article->label = label == "0" ? Label::kFake : Label::kAuthentic;
  if (article->content.empty()) return "empty content";
  article->origin = origin;
  return std::nullopt;
}

class CorpusAssembler {
 public:
  explicit CorpusAssembler(std::string name) { result_.corpus.set_name(std::move(name)); }

  void Accept(std::size_t row, NewsArticle article) {
    auto [it, inserted] = first_row_.emplace(article.id, row);
    if (!inserted) {
      throw Error("duplicate id '" + article.id + "' at row " + std::to_string(row) +
                  " (first seen at row " + std::to_string(it->second) + ")");
    }
    result_.corpus.Add(std::move(article));
  }
  void Reject(std::size_t row, std::string reason) {
    result_.rejects.push_back({row, std::move(reason)});
  }
  LoadResult Finish() { return std::move(result_); }

 private:
  LoadResult result_;
  std::unordered_map<std::string, std::size_t> first_row_;
};

LoadResult ParseCsv(std::istream& in, Origin origin, std::string name) {
  CsvReader reader(ReadAll(in));
  auto header = reader.Next();
  if (!header) throw Error("corpus '" + name + "' is empty (no header row)");
  std::vector<std::string> columns;
  for (auto& column : header->fields) columns.push_back(NormalizeText(column));
  if (!columns.empty() && columns[0].starts_with("\xEF\xBB\xBF")) {
    columns[0].erase(0, 3);  // BOM
  }
  for (auto required : kRequired) {
    if (std::find(columns.begin(), columns.end(), required) == columns.end()) {
      throw Error("corpus '" + name + "' header lacks column '" +
                  std::string(required) + "'");
    }
  }

  CorpusAssembler assembler(std::move(name));
  std::size_t row = 0;
  while (auto record = reader.Next()) {
    if (record->fields.size() == 1 && record->fields[0].empty() && !record->malformed) {
      continue;  // blank line
    }
    ++row;
    if (record->malformed) {
      assembler.Reject(row, "malformed quoting");
      continue;
    }
    if (record->fields.size() != columns.size()) {
      assembler.Reject(row, "expected " + std::to_string(columns.size()) +
                                " fields, got " + std::to_string(record->fields.size()));
      continue;
    }
    std::map<std::string, std::string, std::less<>> fields;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      fields[columns[i]] = std::move(record->fields[i]);
    }
    NewsArticle article;
    if (auto reason = BuildArticle(fields, origin, &article)) {
      assembler.Reject(row, *reason);
    } else {
      assembler.Accept(row, std::move(article));
    }
  }
  return assembler.Finish();
}

LoadResult ParseJsonl(std::istream& in, Origin origin, std::string name) {
  CorpusAssembler assembler(std::move(name));
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      assembler.Reject(row, "invalid JSON");
      continue;
    }
    if (!j.is_object()) {
      assembler.Reject(row, "not a JSON object");
      continue;
    }
    std::map<std::string, std::string, std::less<>> fields;
    std::optional<std::string> problem;
    for (auto key : kColumns) {
      if (!j.contains(key)) continue;
      const auto& v = j.at(std::string(key));
      if (v.is_string()) {
        fields[std::string(key)] = v.get<std::string>();
      } else if (v.is_number_integer()) {
        fields[std::string(key)] = std::to_string(v.get<long long>());
      } else if (!v.is_null()) {
        problem = "field '" + std::string(key) + "' has unsupported type";
      }
    }
    for (auto required : kRequired) {
      if (!j.contains(required)) problem = "missing key '" + std::string(required) + "'";
    }
    if (problem) {
      assembler.Reject(row, *problem);
      continue;
    }
    NewsArticle article;
    Origin row_origin = origin;
    try {
      if (j.contains("origin")) row_origin = OriginFromName(j.at("origin").get<std::string>());
      if (j.contains("provenance")) {
        for (const auto& record : j.at("provenance")) {
          article.provenance.push_back(TransformRecordFromJson(record));
        }
      }
    } catch (const std::exception& e) {
      assembler.Reject(row, std::string("bad origin/provenance: ") + e.what());
      continue;
    }
    if (auto reason = BuildArticle(fields, row_origin, &article)) {
      assembler.Reject(row, *reason);
    } else {
      assembler.Accept(row, std::move(article));
    }
  }
  return assembler.Finish();
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

CorpusFormat CorpusFormatFromName(std::string_view name) {
  if (name == "csv") return CorpusFormat::kCsv;
  if (name == "jsonl") return CorpusFormat::kJsonl;
  throw ConfigError("unknown corpus format '" + std::string(name) + "'");
}

CorpusFormat CorpusFormatFromPath(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".csv") return CorpusFormat::kCsv;
  if (ext == ".jsonl" || ext == ".json") return CorpusFormat::kJsonl;
  throw ConfigError("cannot infer corpus format of '" + path.string() + "'");
}

LoadResult LoadCorpus(const std::filesystem::path& path, CorpusFormat format,
                      Origin origin) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("missing corpus file '" + path.string() + "'");
  return ParseCorpus(in, format, origin, path.stem().string());
}

LoadResult ParseCorpus(std::istream& in, CorpusFormat format, Origin origin,
                       std::string name) {
  return format == CorpusFormat::kCsv ? ParseCsv(in, origin, std::move(name))
                                      : ParseJsonl(in, origin, std::move(name));
}

void WriteCorpusJsonl(const LabeledCorpus& corpus, std::ostream& out) {
  for (const auto& article : corpus) out << ToJson(article).dump() << '\n';
}

void WriteCorpusJsonl(const LabeledCorpus& corpus, const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  WriteCorpusJsonl(corpus, out);
}

void WriteCorpusCsv(const LabeledCorpus& corpus, std::ostream& out) {
  out << "id,domain,date,category,headline,content,label\r\n";
  for (const auto& a : corpus) {
    out << CsvQuote(a.id) << ',' << CsvQuote(a.domain) << ',' << CsvQuote(a.date)
        << ',' << CsvQuote(a.category) << ',' << CsvQuote(a.headline) << ','
        << CsvQuote(a.content) << ',' << LabelValue(a.label) << "\r\n";
  }
}

void WriteCorpusCsv(const LabeledCorpus& corpus, const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  WriteCorpusCsv(corpus, out);
}

void WriteRejects(const std::vector<RejectedRow>& rejects,
                  const std::filesystem::path& path) {
  auto out = OpenForWrite(path);
  for (const auto& r : rejects) {
    nlohmann::ordered_json j;
    j["row"] = r.row;
    j["reason"] = r.reason;
    out << j.dump() << '\n';
  }
}

NewsArticle MergeHeadlineContent(const NewsArticle& article,
                                 std::string_view separator) {
  if (article.HasTransform(TransformKind::kMergedHeadline)) {
    throw Error("article '" + article.id + "' already has its headline merged");
  }
  NewsArticle merged = article;
  if (!article.headline.empty()) {
    merged.content = article.headline + std::string(separator) + article.content;
  }
  merged.provenance.push_back({TransformKind::kMergedHeadline, article.id, "", std::nullopt});
  return merged;
}

LabeledCorpus MergeHeadlines(const LabeledCorpus& corpus, std::string_view separator) {
  LabeledCorpus out(corpus.name());
  for (const auto& article : corpus) out.Add(MergeHeadlineContent(article, separator));
  return out;
}

CorpusStats ComputeStats(const LabeledCorpus& corpus, const Tokenizer& tokenizer) {
  if (corpus.empty()) throw Error("no articles");
  struct Accumulator {
    std::size_t count = 0;
    double chars = 0.0;
    double words = 0.0;
    std::size_t longest = 0;
    std::size_t max_tokens = 0;
  } acc[2];
  for (const auto& article : corpus) {
    auto& a = acc[LabelValue(article.label)];
    std::size_t words = CountWhitespaceTokens(article.content);
    ++a.count;
    a.chars += static_cast<double>(CodePointCount(article.content));
    a.words += static_cast<double>(words);
    a.longest = std::max(a.longest, words);
    a.max_tokens = std::max(a.max_tokens, tokenizer.Count(article.content));
  }
  auto finish = [](const Accumulator& a) {
    ClassStats s;
    s.count = a.count;
    if (a.count > 0) {
      s.avg_char_length = a.chars / static_cast<double>(a.count);
      s.avg_word_count = a.words / static_cast<double>(a.count);
    }
    s.longest_article_words = a.longest;
    s.max_token_length = a.max_tokens;
    return s;
  };
  return {finish(acc[0]), finish(acc[1])};
}

nlohmann::ordered_json ToJson(const CorpusStats& stats) {
  auto one = [](const ClassStats& s) {
    nlohmann::ordered_json j;
    j["count"] = s.count;
    j["avg_char_length"] = s.avg_char_length;
    j["avg_word_count"] = s.avg_word_count;
    j["longest_article_words"] = s.longest_article_words;
    j["max_token_length"] = s.max_token_length;
    return j;
  };
  nlohmann::ordered_json j;
  j["authentic"] = one(stats.authentic);
  j["fake"] = one(stats.fake);
  return j;
}

std::string Fingerprint(const LabeledCorpus& corpus) {
  std::ostringstream out;
  WriteCorpusJsonl(corpus, out);
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(out.str())));
  return hex;
}

}  // namespace bnfake

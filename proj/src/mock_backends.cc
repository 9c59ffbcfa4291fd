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

#include "bnfake/mock_backends.h"

#include <cctype>
#include <cmath>
#include <numeric>
#include <set>

#include "bnfake/error.h"
#include "bnfake/random.h"
#include "bnfake/text.h"

namespace bnfake {
namespace {

std::string TruncateTokens(std::string_view text, std::size_t max_tokens) {
  auto tokens = SplitWhitespace(text);
  if (tokens.size() > max_tokens) tokens.resize(max_tokens);
  return JoinTokens(tokens);
}

std::string SwapAsciiCase(std::string word) {
  for (char& c : word) {
    auto u = static_cast<unsigned char>(c);
    if (std::islower(u)) {
      c = static_cast<char>(std::toupper(u));
    } else if (std::isupper(u)) {
      c = static_cast<char>(std::tolower(u));
    }
  }
  return word;
}

// Splits a trailing sentence terminator off a token.
std::pair<std::string, std::string> SplitTerminator(const std::string& token) {
  if (token.ends_with(kDanda)) {
    return {token.substr(0, token.size() - kDanda.size()), std::string(kDanda)};
  }
  if (!token.empty() && (token.back() == '.' || token.back() == '?' ||
                         token.back() == '!')) {
    return {token.substr(0, token.size() - 1), token.substr(token.size() - 1)};
  }
  return {token, ""};
}

}  // namespace

std::vector<std::string> WhitespaceTokenizer::Tokenize(std::string_view text) const {
  return SplitWhitespace(text);
}

std::vector<TokenId> WhitespaceTokenizer::Encode(std::string_view text) const {
  std::vector<TokenId> ids;
  std::lock_guard<std::mutex> lock(mu_);
  for (auto& piece : SplitWhitespace(text)) {
    TokenId id = Fnv1a64(piece);
    ids.push_back(id);
    pieces_.try_emplace(id, std::move(piece));
  }
  return ids;
}

std::string WhitespaceTokenizer::Decode(std::span<const TokenId> ids) const {
  std::vector<std::string> pieces;
  pieces.reserve(ids.size());
  std::lock_guard<std::mutex> lock(mu_);
  for (TokenId id : ids) {
    auto it = pieces_.find(id);
    pieces.push_back(it == pieces_.end() ? "[UNK]" : it->second);
  }
  return JoinTokens(pieces);
}

std::size_t WhitespaceTokenizer::Count(std::string_view text) const {
  return CountWhitespaceTokens(text);
}

std::size_t WhitespaceTokenizer::vocabulary_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return pieces_.size();
}

std::vector<std::string> SynonymMaskedLm::Predict(
    std::span<const std::string> tokens,
    std::span<const std::size_t> masked_positions) const {
  std::vector<std::string> out;
  out.reserve(masked_positions.size());
  for (std::size_t pos : masked_positions) {
    if (pos >= tokens.size()) {
      throw Error("masked position " + std::to_string(pos) +
                  " outside a sequence of " + std::to_string(tokens.size()));
    }
    auto it = synonyms_.find(tokens[pos]);
    out.push_back(it == synonyms_.end() ? tokens[pos] : it->second);
  }
  return out;
}

DictionaryTranslator::DictionaryTranslator(
    std::string id, Seq2SeqRole role,
    const std::vector<std::pair<std::string, std::string>>& pairs)
    : id_(std::move(id)), role_(role) {
  for (const auto& [a, b] : pairs) {
    auto insert = [this](const std::string& from, const std::string& to) {
      auto [it, inserted] = dictionary_.emplace(from, to);
      if (!inserted && it->second != to) {
        throw Error("translator dictionary maps '" + from + "' twice");
      }
    };
    insert(a, b);
    insert(b, a);
  }
}

std::string DictionaryTranslator::Generate(std::string_view text,
                                           std::size_t max_output_tokens) const {
  auto tokens = SplitWhitespace(text);
  for (auto& token : tokens) {
    if (dictionary_.empty()) {
      token = SwapAsciiCase(std::move(token));
    } else if (auto it = dictionary_.find(token); it != dictionary_.end()) {
      token = it->second;
    }
  }
  if (tokens.size() > max_output_tokens) tokens.resize(max_output_tokens);
  return JoinTokens(tokens);
}

std::string MarkerParaphraser::Generate(std::string_view text,
                                        std::size_t max_output_tokens) const {
  std::vector<std::string> out;
  for (const auto& sentence : SplitSentences(text)) {
    auto tokens = SplitWhitespace(sentence);
    auto [stem, terminator] = SplitTerminator(tokens.back());
    if (terminator.empty()) {
      tokens.push_back(marker_);
    } else if (stem.empty()) {
      tokens.insert(tokens.end() - 1, marker_);
    } else {
      tokens.back() = stem;
      tokens.push_back(marker_ + terminator);
    }
    out.insert(out.end(), tokens.begin(), tokens.end());
  }
  if (out.size() > max_output_tokens) out.resize(max_output_tokens);
  return JoinTokens(out);
}

std::string FirstSentenceSummarizer::Generate(std::string_view text,
                                              std::size_t max_output_tokens) const {
  auto sentences = SplitSentences(text);
  if (sentences.empty()) return {};
  return TruncateTokens(sentences.front(), max_output_tokens);
}

std::string IdentitySeq2Seq::Generate(std::string_view text,
                                      std::size_t max_output_tokens) const {
  return TruncateTokens(text, max_output_tokens);
}

LexiconClassifier::LexiconClassifier(std::string id,
                                     std::map<std::string, double> lexicon,
                                     CountMode mode, std::size_t max_tokens,
                                     double smoothing)
    : id_(std::move(id)),
      lexicon_(std::move(lexicon)),
      mode_(mode),
      max_tokens_(max_tokens),
      smoothing_(smoothing) {
  if (lexicon_.empty()) throw Error("lexicon classifier needs a non-empty lexicon");
  if (!(smoothing_ > 0)) throw Error("lexicon smoothing must be positive");
}

double LexiconClassifier::weight(const std::string& token) const {
  auto it = lexicon_.find(token);
  return it == lexicon_.end() ? 0.0 : it->second;
}

Prediction LexiconClassifier::Predict(std::string_view text) const {
  auto tokens = SplitWhitespace(text);
  // Inputs longer than the model's window keep their head.
  if (tokens.size() > max_tokens_) tokens.resize(max_tokens_);
  double sum = 0.0;
  for (const auto& token : tokens) sum += weight(token);
  Prediction p;
  p.score = 1.0 / (1.0 + std::exp(-sum));
  p.label = p.score >= 0.5 ? Label::kAuthentic : Label::kFake;
  return p;
}

std::unique_ptr<SequenceClassifier> LexiconClassifier::FineTune(
    const LabeledCorpus& train, const Hyperparams& hyperparams,
    const EpochObserver& on_epoch) const {
  hyperparams.Validate();
  if (train.empty()) throw Error("cannot fine-tune on an empty training set");

  const auto window = static_cast<std::size_t>(hyperparams.max_sequence_length);
  const auto batch = static_cast<std::size_t>(hyperparams.batch_size);
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(hyperparams.seed);

  std::unique_ptr<LexiconClassifier> current;
  for (int epoch = 1; epoch <= hyperparams.epochs; ++epoch) {
    rng.Shuffle(order);
    // The estimator is closed-form, so each epoch recounts from scratch and
    // converges to the same weights regardless of batch order.
    std::map<std::string, double> counts[2];
    double totals[2] = {0.0, 0.0};
    for (std::size_t begin = 0; begin < order.size(); begin += batch) {
      std::size_t end = std::min(order.size(), begin + batch);
      for (std::size_t i = begin; i < end; ++i) {
        const auto& article = train[order[i]];
        auto tokens = SplitWhitespace(article.content);
        if (tokens.size() > window) tokens.resize(window);
        if (mode_ == CountMode::kPresence) {
          std::set<std::string> unique(tokens.begin(), tokens.end());
          tokens.assign(unique.begin(), unique.end());
        }
        int y = LabelValue(article.label);
        for (auto& token : tokens) {
          counts[y][token] += 1.0;
          totals[y] += 1.0;
        }
      }
    }

    std::set<std::string> vocabulary;
    for (const auto& c : counts) {
      for (const auto& [token, n] : c) vocabulary.insert(token);
    }
    const double v = static_cast<double>(vocabulary.size());
    std::map<std::string, double> lexicon;
    for (const auto& token : vocabulary) {
      double c0 = counts[0].contains(token) ? counts[0].at(token) : 0.0;
      double c1 = counts[1].contains(token) ? counts[1].at(token) : 0.0;
      lexicon[token] =
          std::log((c1 + smoothing_) / (totals[1] + smoothing_ * v)) -
          std::log((c0 + smoothing_) / (totals[0] + smoothing_ * v));
    }
    if (lexicon.empty()) lexicon = NeutralLexicon();
    current = std::make_unique<LexiconClassifier>(id_, std::move(lexicon), mode_,
                                                  window, smoothing_);
    if (on_epoch) on_epoch(epoch, *current);
  }
  return current;
}

nlohmann::ordered_json LexiconClassifier::Serialize() const {
  nlohmann::ordered_json j;
  j["backend_id"] = id_;
  j["mode"] = mode_ == CountMode::kFrequency ? "frequency" : "presence";
  j["max_tokens"] = max_tokens_;
  j["smoothing"] = smoothing_;
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (const auto& [token, w] : lexicon_) weights[token] = w;
  j["lexicon"] = std::move(weights);
  return j;
}

std::unique_ptr<LexiconClassifier> LexiconClassifier::Deserialize(
    const nlohmann::json& blob) {
  try {
    auto mode_name = blob.at("mode").get<std::string>();
    if (mode_name != "frequency" && mode_name != "presence") {
      throw Error("unknown lexicon count mode '" + mode_name + "'");
    }
    auto mode = mode_name == "frequency" ? CountMode::kFrequency : CountMode::kPresence;
    std::map<std::string, double> lexicon;
    for (const auto& [token, w] : blob.at("lexicon").items()) {
      lexicon[token] = w.get<double>();
    }
    return std::make_unique<LexiconClassifier>(
        blob.at("backend_id").get<std::string>(), std::move(lexicon), mode,
        blob.at("max_tokens").get<std::size_t>(), blob.at("smoothing").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed lexicon model blob: ") + e.what());
  }
}

std::map<std::string, double> NeutralLexicon() { return {{"\x01<neutral>", 0.0}}; }

const std::vector<std::string>& MockFillerWords() {
  static const std::vector<std::string> words = {
      "shohor", "manush", "bazar", "nodi",   "rasta",  "bari",   "gram",
      "sokal",  "rat",    "din",   "desh",   "kaj",    "khela",  "school",
      "bochor", "pani",   "alo",   "megh",   "brishti", "gach",  "phul",
      "bondhu", "poribar", "shikkha", "rog",  "daktar", "shilpo", "bank",
      "jomi",   "fosol"};
  return words;
}

const std::map<std::string, std::string>& MockSynonyms() {
  static const std::map<std::string, std::string> synonyms = {
      {"shohor", "nogor"},   {"manush", "lok"},     {"bazar", "haat"},
      {"nodi", "tatini"},    {"rasta", "poth"},     {"bari", "ghor"},
      {"gram", "palli"},     {"sokal", "probhat"},  {"rat", "nishi"},
      {"din", "dibos"},      {"desh", "rashtro"},   {"kaj", "karjo"},
      {"pani", "jol"},       {"alo", "prodip"},     {"megh", "jolod"},
      {"brishti", "borsha"}, {"gach", "brikkho"},   {"phul", "kusum"},
      {"bondhu", "sokha"},   {"daktar", "chikitsok"}};
  return synonyms;
}

}  // namespace bnfake

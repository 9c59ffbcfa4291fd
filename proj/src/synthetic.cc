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

#include "bnfake/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bnfake/corpus.h"
#include "bnfake/error.h"
#include "bnfake/mock_backends.h"
#include "bnfake/random.h"
#include "bnfake/text.h"

namespace bnfake {
namespace {

std::string Sentence(Rng& rng, const SyntheticOptions& o,
                     const std::vector<std::string>& markers) {
  const auto& filler = MockFillerWords();
  std::size_t words = o.min_words + rng.Below(o.max_words - o.min_words + 1);
  std::size_t marker_at = rng.Below(words);
  std::vector<std::string> tokens;
  tokens.reserve(words);
  for (std::size_t i = 0; i < words; ++i) {
    tokens.push_back(i == marker_at ? markers[rng.Below(markers.size())]
                                    : filler[rng.Below(filler.size())]);
  }
  // Mix Latin full stops and the danda so both terminators get exercised.
  tokens.back() += rng.Below(3) == 0 ? std::string(kDanda) : std::string(".");
  return JoinTokens(tokens);
}

NewsArticle MakeArticle(Rng& rng, const SyntheticOptions& o, Label label,
                        std::size_t index, bool long_article) {
  const auto& markers = label == Label::kFake ? FakeMarkerWords() : AuthenticMarkerWords();
  char id[64];
  std::snprintf(id, sizeof(id), "%s-%c%06zu", o.id_prefix.c_str(),
                label == Label::kFake ? 'f' : 'a', index);
  NewsArticle a;
  a.id = id;
  a.domain = label == Label::kFake ? "example-rumor.test" : "example-daily.test";
  a.date = "2019-01-01";
  a.category = "national";
  a.label = label;
  a.origin = o.origin;

  std::vector<std::string> headline = {markers[rng.Below(markers.size())]};
  for (std::size_t i = 0; i < 3; ++i) {
    headline.push_back(MockFillerWords()[rng.Below(MockFillerWords().size())]);
  }
  a.headline = JoinTokens(headline);

  std::string content;
  std::size_t tokens = 0;
  std::size_t sentences =
      o.min_sentences + rng.Below(o.max_sentences - o.min_sentences + 1);
  for (std::size_t s = 0; s < sentences || (long_article && tokens <= o.long_tokens); ++s) {
    auto sentence = Sentence(rng, o, markers);
    tokens += CountWhitespaceTokens(sentence);
    if (!content.empty()) content += ' ';
    content += sentence;
  }
  a.content = std::move(content);
  return a;
}

}  // namespace

const std::vector<std::string>& FakeMarkerWords() {
  static const std::vector<std::string> words = {"gujob", "bhuya", "rotona", "jaliyati"};
  return words;
}

const std::vector<std::string>& AuthenticMarkerWords() {
  static const std::vector<std::string> words = {"sorkari", "protibedon", "nishchit",
                                                 "jachai"};
  return words;
}

LabeledCorpus MakeSyntheticCorpus(const SyntheticOptions& o) {
  Rng rng(o.seed);
  LabeledCorpus corpus(o.name);
  auto emit = [&](Label label, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      bool long_article = o.long_every > 0 && (i + 1) % o.long_every == 0;
      corpus.Add(MakeArticle(rng, o, label, i, long_article));
    }
  };
  emit(Label::kAuthentic, o.authentic);
  emit(Label::kFake, o.fake);
  return corpus;
}

SyntheticInputCounts SyntheticInputCounts::Scaled(double factor) {
  if (!(factor > 0)) throw ConfigError("scale must be positive");
  auto scale = [factor](std::size_t n) {
    return std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor)));
  };
  SyntheticInputCounts d;
  return {scale(d.banfake_authentic), scale(d.banfake_fake), scale(d.transfnd_fake),
          scale(d.customfake_fake)};
}

void WriteSyntheticInputs(const std::filesystem::path& dir,
                          const SyntheticInputCounts& counts, std::uint64_t seed,
                          std::size_t long_every) {
  std::filesystem::create_directories(dir);
  auto make = [&](std::string name, Origin origin, std::size_t fake,
                  std::size_t authentic) {
    SyntheticOptions o;
    o.name = name;
    o.id_prefix = name;
    o.origin = origin;
    o.fake = fake;
    o.authentic = authentic;
    o.seed = DeriveSeed(seed, name, "synthetic");
    o.long_every = long_every;
    WriteCorpusCsv(MakeSyntheticCorpus(o), dir / (name + ".csv"));
  };
  make("banfake", Origin::kBanFake, counts.banfake_fake, counts.banfake_authentic);
  make("transfnd", Origin::kTransFnd, counts.transfnd_fake, 0);
  make("customfake", Origin::kCustomFake, counts.customfake_fake, 0);
}

}  // namespace bnfake

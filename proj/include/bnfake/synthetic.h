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

#ifndef BNFAKE_SYNTHETIC_H_
#define BNFAKE_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bnfake/article.h"

namespace bnfake {

// Lexically separable synthetic news. Every sentence carries one marker word
// of its class, the rest is filler shared by both classes. Output depends
// only on the options.
struct SyntheticOptions {
  std::string name = "synthetic";
  std::string id_prefix = "syn";
  Origin origin = Origin::kBanFake;
  std::size_t fake = 0;
  std::size_t authentic = 0;
  std::uint64_t seed = 1;
  std::size_t min_sentences = 2;
  std::size_t max_sentences = 4;
  std::size_t min_words = 5;  // per sentence, marker included
  std::size_t max_words = 10;
  // Every long_every-th article of each class (1-based) is extended past
  // long_tokens whitespace tokens. 0 disables.
  std::size_t long_every = 0;
  std::size_t long_tokens = 1300;
};

LabeledCorpus MakeSyntheticCorpus(const SyntheticOptions& options);

// Cardinalities of the three raw inputs the dataset builder consumes.
struct SyntheticInputCounts {
  std::size_t banfake_authentic = 48678;
  std::size_t banfake_fake = 1299;
  std::size_t transfnd_fake = 4309;
  std::size_t customfake_fake = 102;

  // Each count times factor, rounded, at least 1.
  static SyntheticInputCounts Scaled(double factor);
};

// Writes banfake.csv, transfnd.csv and customfake.csv into dir. Ids are
// unique across the three files.
void WriteSyntheticInputs(const std::filesystem::path& dir,
                          const SyntheticInputCounts& counts, std::uint64_t seed,
                          std::size_t long_every = 0);

const std::vector<std::string>& FakeMarkerWords();
const std::vector<std::string>& AuthenticMarkerWords();

}  // namespace bnfake

#endif  // BNFAKE_SYNTHETIC_H_

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

#ifndef BNFAKE_RANDOM_H_
#define BNFAKE_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace bnfake {

// Identifies the sampling algorithm in manifests. Bump the version whenever
// the draw sequence for a given seed changes.
inline constexpr std::string_view kSamplerAlgorithm =
    "mt19937_64+rejection-bounded+fisher-yates/v1";

// Seeded generator with a portable bounded draw. std::uniform_int_distribution
// is implementation-defined, so it is not used anywhere a seed must replay.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Fisher-Yates, walking from the back.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = Below(i);
      std::swap(items[i - 1], items[j]);
    }
  }
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    Shuffle(std::span<T>(items));
  }

  // k distinct indices from [0, n) in draw order (partial Fisher-Yates from
  // the front). Requires k <= n.
  std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view data,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

// Mixes a base seed with string keys so that a derived stream depends only on
// (base, keys), never on processing order.
std::uint64_t DeriveSeed(std::uint64_t base, std::string_view key,
                         std::string_view tag = {});

}  // namespace bnfake

#endif  // BNFAKE_RANDOM_H_

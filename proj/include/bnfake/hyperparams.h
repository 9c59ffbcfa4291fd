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

#ifndef BNFAKE_HYPERPARAMS_H_
#define BNFAKE_HYPERPARAMS_H_

#include <cstdint>
#include <string>

#include "json.hpp"

namespace bnfake {

// Fine-tuning hyperparameters. Defaults are the published settings.
struct Hyperparams {
  int max_sequence_length = 512;
  int epochs = 4;
  int batch_size = 16;
  double learning_rate = 2e-5;
  std::string optimizer = "AdamW";
  std::string loss = "binary cross entropy";
  std::uint64_t seed = 0;
  // Number of upper encoder layers unfrozen during fine-tuning. Backend
  // specific; 0 leaves the choice to the backend.
  int unfrozen_layers = 0;

  // Throws ConfigError unless every numeric field is positive (seed and
  // unfrozen_layers excepted) and the names are non-empty.
  void Validate() const;

  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

nlohmann::ordered_json ToJson(const Hyperparams& hp);
// Missing keys keep their defaults.
Hyperparams HyperparamsFromJson(const nlohmann::json& j);

}  // namespace bnfake

#endif  // BNFAKE_HYPERPARAMS_H_

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

#include "bnfake/hyperparams.h"

#include "bnfake/error.h"

namespace bnfake {

void Hyperparams::Validate() const {
  if (max_sequence_length <= 0) throw ConfigError("max_sequence_length must be positive");
  if (epochs <= 0) throw ConfigError("epochs must be positive");
  if (batch_size <= 0) throw ConfigError("batch_size must be positive");
  if (!(learning_rate > 0)) throw ConfigError("learning_rate must be positive");
  if (optimizer.empty()) throw ConfigError("optimizer name is empty");
  if (loss.empty()) throw ConfigError("loss name is empty");
  if (unfrozen_layers < 0) throw ConfigError("unfrozen_layers must be >= 0");
}

nlohmann::ordered_json ToJson(const Hyperparams& hp) {
  nlohmann::ordered_json j;
  j["max_sequence_length"] = hp.max_sequence_length;
  j["epochs"] = hp.epochs;
  j["batch_size"] = hp.batch_size;
  j["learning_rate"] = hp.learning_rate;
  j["optimizer"] = hp.optimizer;
  j["loss"] = hp.loss;
  j["seed"] = hp.seed;
  j["unfrozen_layers"] = hp.unfrozen_layers;
  return j;
}

Hyperparams HyperparamsFromJson(const nlohmann::json& j) {
  Hyperparams hp;
  hp.max_sequence_length = j.value("max_sequence_length", hp.max_sequence_length);
  hp.epochs = j.value("epochs", hp.epochs);
  hp.batch_size = j.value("batch_size", hp.batch_size);
  hp.learning_rate = j.value("learning_rate", hp.learning_rate);
  hp.optimizer = j.value("optimizer", hp.optimizer);
  hp.loss = j.value("loss", hp.loss);
  hp.seed = j.value("seed", hp.seed);
  hp.unfrozen_layers = j.value("unfrozen_layers", hp.unfrozen_layers);
  hp.Validate();
  return hp;
}

}  // namespace bnfake

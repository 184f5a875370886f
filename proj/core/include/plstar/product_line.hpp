// Copyright 2026 The plstar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "plstar/feature_model.hpp"
#include "plstar/mealy.hpp"

namespace plstar {

/// Output emitted by the self-loops that complete a product machine.
inline const Symbol kQuiescence{"0"};

/// Transition system whose transitions carry feature guards. Every input is
/// owned by exactly one feature; a product's alphabet is the inputs of its
/// selected features.
class FeaturedTransitionSystem {
 public:
  struct Transition {
    std::string from;
    Symbol input;
    FeatureExpr guard;
    Symbol output;
    std::string to;
  };

  /// Throws Errc::validation_error when the feature alphabet does not
  /// partition `inputs` or a transition references an unknown state/input,
  /// and Errc::unknown_feature for unknown feature names.
  FeaturedTransitionSystem(const FeatureModel& model, std::vector<std::string> states,
                           std::string initial, Word inputs,
                           const std::map<std::string, Word>& feature_alphabet,
                           std::vector<Transition> transitions);

  const std::vector<std::string>& states() const { return states_; }
  const std::string& initial() const { return initial_; }
  const Word& inputs() const { return inputs_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  /// Owning feature index per input, aligned with inputs().
  const std::vector<std::size_t>& input_owner() const { return owner_; }

 private:
  std::vector<std::string> states_;
  std::string initial_;
  Word inputs_;
  std::vector<std::size_t> owner_;
  std::vector<Transition> transitions_;
};

/// Inputs of the selected features, in the system's global input order.
Word product_alphabet(const FeaturedTransitionSystem& fts, Configuration c);

/// Projection onto one product: transitions whose guard holds and whose
/// input is in the product alphabet, restricted to reachable states, with
/// missing (state, input) pairs completed by quiescent self-loops.
/// Throws Errc::nondeterministic_projection.
MealyMachine derive(const FeaturedTransitionSystem& fts, Configuration c);

/// JSON: {"states", "initial", "inputs", "featureAlphabet", "transitions":
/// [{"from","input","output","to","guard"}]}.
FeaturedTransitionSystem parse_fts_json(std::string_view text, const FeatureModel& model);

/// Source of product machines for an SPL.
class ProductLine {
 public:
  explicit ProductLine(FeatureModel model) : model_(std::move(model)) {}
  virtual ~ProductLine() = default;

  const FeatureModel& model() const { return model_; }
  virtual Word alphabet(Configuration c) const = 0;
  virtual MealyMachine derive(Configuration c) const = 0;

 private:
  FeatureModel model_;
};

class FtsProductLine final : public ProductLine {
 public:
  FtsProductLine(FeatureModel model, const std::function<FeaturedTransitionSystem(const FeatureModel&)>& make)
      : ProductLine(std::move(model)), fts_(make(this->model())) {}

  const FeaturedTransitionSystem& fts() const { return fts_; }
  Word alphabet(Configuration c) const override { return product_alphabet(fts_, c); }
  MealyMachine derive(Configuration c) const override { return plstar::derive(fts_, c); }

 private:
  FeaturedTransitionSystem fts_;
};

/// Products built by composing one component machine per selected feature
/// (features without a component contribute no behavior). Component
/// alphabets must be pairwise disjoint.
class ComponentProductLine final : public ProductLine {
 public:
  /// Throws Errc::unknown_feature or Errc::overlapping_alphabets.
  ComponentProductLine(FeatureModel model, std::map<std::string, MealyMachine> components);

  const std::map<std::size_t, MealyMachine>& components() const { return components_; }
  Word alphabet(Configuration c) const override;
  MealyMachine derive(Configuration c) const override;

 private:
  std::map<std::size_t, MealyMachine> components_;  // keyed by feature index
};

/// Feature model plus an FTS file.
std::unique_ptr<ProductLine> load_fts_product_line(const std::filesystem::path& model_path,
                                                   const std::filesystem::path& fts_path);
/// Feature model plus a directory of `<feature>.fsm` component machines.
std::unique_ptr<ProductLine> load_component_product_line(const std::filesystem::path& model_path,
                                                         const std::filesystem::path& dir);

}  // namespace plstar

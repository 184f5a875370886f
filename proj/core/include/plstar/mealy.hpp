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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "plstar/symbol.hpp"

namespace plstar {

using StateId = std::uint32_t;

/// Input word together with the outputs observed for it.
struct Trace {
  Word inputs;
  Word outputs;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Deterministic, input-complete Mealy machine. Immutable once constructed;
/// the constructor enforces totality, determinism and that the initial state
/// exists. States are dense ids `0..state_count()-1` carrying opaque names.
class MealyMachine {
 public:
  struct Transition {
    StateId target = 0;
    Symbol output;
  };

  /// `table` is row-major: entry `s * inputs.size() + i` is the transition
  /// of state `s` on `inputs[i]`.
  MealyMachine(std::vector<std::string> state_names, StateId initial, Word inputs,
               std::vector<Transition> table);

  std::size_t state_count() const { return state_names_.size(); }
  std::size_t input_count() const { return inputs_.size(); }
  StateId initial() const { return initial_; }
  const Word& inputs() const { return inputs_; }
  /// Outputs referenced by transitions, sorted by symbol id.
  const std::vector<Symbol>& outputs() const { return outputs_; }
  const std::string& state_name(StateId s) const { return state_names_[s]; }
  const std::vector<std::string>& state_names() const { return state_names_; }

  const Transition& step(StateId s, std::size_t input_index) const {
    return table_[s * inputs_.size() + input_index];
  }

  std::optional<std::size_t> input_index(Symbol a) const {
    if (a.id() >= index_of_.size() || index_of_[a.id()] < 0) return std::nullopt;
    return static_cast<std::size_t>(index_of_[a.id()]);
  }
  /// Throws Errc::unknown_input_symbol.
  std::size_t require_input(Symbol a) const;
  bool has_input(Symbol a) const { return input_index(a).has_value(); }

  /// State reached from `from` after `word`.
  StateId reach(std::span<const Symbol> word) const { return reach(initial_, word); }
  StateId reach(StateId from, std::span<const Symbol> word) const;

  /// Output word for `word` read from the initial state.
  Word run(std::span<const Symbol> word) const { return run(initial_, word); }
  Word run(StateId from, std::span<const Symbol> word) const;

 private:
  std::vector<std::string> state_names_;
  StateId initial_;
  Word inputs_;
  std::vector<Symbol> outputs_;
  std::vector<Transition> table_;
  std::vector<std::int32_t> index_of_;  // symbol id -> input index, -1 if absent
};

/// Incremental construction from named transitions; `build` validates.
class MealyBuilder {
 public:
  explicit MealyBuilder(Word inputs);

  /// Declares a state without transitions (it must receive them later).
  StateId add_state(std::string_view name);
  /// Throws Errc::parse_error on a duplicate (from, input) and
  /// Errc::unknown_input_symbol on an undeclared input.
  MealyBuilder& add(std::string_view from, Symbol input, Symbol output, std::string_view to);
  MealyBuilder& add(std::string_view from, std::string_view input, std::string_view output,
                    std::string_view to) {
    return add(from, Symbol(input), Symbol(output), to);
  }
  bool has_transition(std::string_view from, Symbol input) const;

  /// Throws Errc::validation_error when a (state, input) pair is missing or
  /// the initial state is unknown.
  MealyMachine build(std::string_view initial) const;

 private:
  Word inputs_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> ids_;
  std::vector<std::optional<MealyMachine::Transition>> table_;
};

struct Equivalent {};
using EquivalenceResult = std::variant<Equivalent, Word>;

/// Shortest distinguishing word of `a` and `b` (ties broken by the order of
/// `a.inputs()`), or Equivalent. Throws Errc::alphabet_mismatch unless both
/// machines have the same input set.
EquivalenceResult equivalent(const MealyMachine& a, const MealyMachine& b);

inline bool is_equivalent(const EquivalenceResult& r) {
  return std::holds_alternative<Equivalent>(r);
}

/// Interleaving parallel composition over disjoint input alphabets. Only
/// reachable state tuples are materialized; the composed alphabet is the
/// concatenation of the component alphabets. Throws
/// Errc::overlapping_alphabets or Errc::invalid_argument (empty list).
MealyMachine compose(std::span<const MealyMachine> components);

/// Same behavior, states renumbered in breadth-first order from the initial
/// state (inputs in declared order), unreachable states dropped, names
/// replaced by `prefix<k>`.
MealyMachine canonical(const MealyMachine& m, std::string_view prefix = "q");

/// Same machine with the input alphabet permuted to `order` (a permutation of
/// m.inputs()).
MealyMachine with_input_order(const MealyMachine& m, const Word& order);

bool same_symbol_set(const Word& a, const Word& b);

}  // namespace plstar

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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plstar/mealy.hpp"

namespace plstar {

/// Visits the Wp-method test suite of hypothesis `h` for `depth` extra
/// states, in suite order, until `visit` returns false. Returns the number of
/// tests visited.
///
/// With Q the breadth-first state cover, P = Q·I ∪ Q, W the characterization
/// set and W_s the identification set of state s, the suite is
///   phase 1: Q · I^k · W
///   phase 2: (P \ Q) · I^k · W_s   (s the state reached by the prefix)
/// for k = 0..depth, each k emitting phase 1 then phase 2. Duplicates are
/// dropped at their later occurrence. A single-state hypothesis uses W = {first input}.
std::size_t for_each_wp_test(const MealyMachine& h, std::size_t depth,
                             const std::function<bool(const Word&)>& visit);

std::vector<Word> wp_test_suite(const MealyMachine& h, std::size_t depth);

/// Extra-state depth making the Wp suite complete for SULs with at most
/// `known_sul_states` states: max(0, n - |h|). Without a known bound the
/// configured default is used.
std::size_t auto_depth(const MealyMachine& h, std::optional<std::size_t> known_sul_states,
                       std::size_t default_depth = 0);

/// Answers equivalence queries for a hypothesis against a SUL and accounts
/// for the resets and input symbols spent on the SUL. Instances are stateful
/// and single-threaded; the SUL must outlive the oracle.
class EquivalenceOracle {
 public:
  explicit EquivalenceOracle(const MealyMachine& sul) : sul_(&sul) {}
  virtual ~EquivalenceOracle() = default;
  EquivalenceOracle(const EquivalenceOracle&) = delete;
  EquivalenceOracle& operator=(const EquivalenceOracle&) = delete;

  /// A word on which `h` and the SUL disagree, with the SUL's outputs, or
  /// nullopt. Throws Errc::alphabet_mismatch.
  virtual std::optional<Trace> find_counterexample(const MealyMachine& h) = 0;

  const MealyMachine& sul() const { return *sul_; }
  std::uint64_t resets() const { return resets_; }
  std::uint64_t symbols() const { return symbols_; }

 protected:
  void charge(std::uint64_t resets, std::uint64_t symbols) {
    resets_ += resets;
    symbols_ += symbols;
  }
  void check_alphabet(const MealyMachine& h) const;

 private:
  const MealyMachine* sul_;
  std::uint64_t resets_ = 0;
  std::uint64_t symbols_ = 0;
};

struct WpDepthPolicy {
  /// Fixed depth; when unset the depth is chosen per query by auto_depth.
  std::optional<std::size_t> fixed;
  /// SUL size handed to auto_depth (white-box experiments).
  std::optional<std::size_t> known_sul_states;
  std::size_t default_depth = 0;
  /// Added to the automatic depth, never to a fixed one.
  std::size_t lookahead = 0;

  std::size_t depth_for(const MealyMachine& h) const {
    return fixed ? *fixed : auto_depth(h, known_sul_states, default_depth) + lookahead;
  }
};

/// Executes the Wp suite of the hypothesis on the SUL, stopping at the first
/// failing test. Each executed test costs one reset plus its length.
class WpOracle final : public EquivalenceOracle {
 public:
  WpOracle(const MealyMachine& sul, WpDepthPolicy policy)
      : EquivalenceOracle(sul), policy_(policy) {}

  std::optional<Trace> find_counterexample(const MealyMachine& h) override;
  const WpDepthPolicy& policy() const { return policy_; }

 private:
  WpDepthPolicy policy_;
};

/// White-box oracle built on `equivalent`. Charged one reset per query plus
/// the counterexample length when one is returned.
class PerfectOracle final : public EquivalenceOracle {
 public:
  using EquivalenceOracle::EquivalenceOracle;
  std::optional<Trace> find_counterexample(const MealyMachine& h) override;
};

enum class OracleKind { wp, perfect };

struct OracleConfig {
  OracleKind kind = OracleKind::wp;
  /// nullopt = automatic depth from the SUL size.
  std::optional<std::size_t> wp_depth;
  /// Extra depth on top of the automatic one ("auto+k").
  std::size_t wp_lookahead = 0;

  /// "auto", "auto+<k>" or "<n>"; throws Errc::invalid_argument.
  static OracleConfig parse_wp_depth(std::string_view text, OracleKind kind = OracleKind::wp);
  std::string depth_string() const;
};

/// Builds the configured oracle for one SUL. Automatic Wp depth uses the
/// number of distinguishable SUL states as the state bound.
std::unique_ptr<EquivalenceOracle> make_oracle(const OracleConfig& config, const MealyMachine& sul);

using OracleFactory = std::function<std::unique_ptr<EquivalenceOracle>(const MealyMachine& sul)>;

}  // namespace plstar

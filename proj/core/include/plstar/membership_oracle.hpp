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
#include <span>

#include "plstar/mealy.hpp"

namespace plstar {

/// Cost counters of one learning run. `rounds` is the number of equivalence
/// queries posed.
struct LearningMetrics {
  std::uint64_t rounds = 0;
  std::uint64_t mq_resets = 0;
  std::uint64_t mq_symbols = 0;
  std::uint64_t eq_resets = 0;
  std::uint64_t eq_symbols = 0;

  std::uint64_t total_resets() const { return mq_resets + eq_resets; }
  std::uint64_t total_symbols() const { return mq_symbols + eq_symbols; }

  LearningMetrics& operator+=(const LearningMetrics& o) {
    rounds += o.rounds;
    mq_resets += o.mq_resets;
    mq_symbols += o.mq_symbols;
    eq_resets += o.eq_resets;
    eq_symbols += o.eq_symbols;
    return *this;
  }
  friend LearningMetrics operator+(LearningMetrics a, const LearningMetrics& b) { return a += b; }
  friend bool operator==(const LearningMetrics&, const LearningMetrics&) = default;
};

/// Answers membership queries against a system under learning. Every query
/// is one reset followed by the query's symbols; nothing is cached.
/// The SUL must outlive the oracle.
class MembershipOracle {
 public:
  explicit MembershipOracle(const MealyMachine& sul) : sul_(&sul) {}

  Word query(std::span<const Symbol> word) {
    ++resets_;
    symbols_ += word.size();
    return sul_->run(word);
  }

  /// Runs prefix·suffix as one query and returns the outputs of the suffix.
  Word query_suffix(std::span<const Symbol> prefix, std::span<const Symbol> suffix);

  const MealyMachine& sul() const { return *sul_; }
  std::uint64_t resets() const { return resets_; }
  std::uint64_t symbols() const { return symbols_; }

 private:
  const MealyMachine* sul_;
  std::uint64_t resets_ = 0;
  std::uint64_t symbols_ = 0;
};

}  // namespace plstar

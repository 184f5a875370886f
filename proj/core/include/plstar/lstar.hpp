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

#include <cstddef>
#include <vector>

#include "plstar/equivalence_oracle.hpp"
#include "plstar/membership_oracle.hpp"
#include "plstar/observation_table.hpp"

namespace plstar {

/// Initial contents of an observation table. The alphabet order is the scan
/// order the learner uses.
struct TableInit {
  Word alphabet;
  std::vector<Word> prefixes;
  std::vector<Word> suffixes;

  /// Classic initialization: S = {ε}, E = the alphabet.
  static TableInit classic(const Word& alphabet);
};

struct LearnerOptions {
  /// 0 means 10 × (number of SUL states).
  std::size_t max_rounds = 0;
};

struct LearnResult {
  MealyMachine model;
  ObservationTable table;
  LearningMetrics metrics;
};

/// Resolves closedness defects until none remain, then consistency defects
/// (adding v·e1 to E), repeating until the table is closed and consistent.
void stabilize(ObservationTable& table, MembershipOracle& mq);

/// Adds every prefix of the counterexample to S. Throws
/// Errc::not_a_counterexample if `hypothesis` already produces the
/// counterexample's outputs.
void process_counterexample(ObservationTable& table, const MealyMachine& hypothesis,
                            const Trace& counterexample, MembershipOracle& mq);

/// Mealy-machine L*: stabilize, build a hypothesis, pose an equivalence
/// query, refine with the counterexample, until the oracle accepts.
/// Metrics count the queries spent by this call only. Throws
/// Errc::round_limit_exceeded, Errc::alphabet_mismatch, or
/// Errc::invalid_argument for an invalid initialization.
LearnResult lstar_learn(MembershipOracle& mq, EquivalenceOracle& eq, TableInit init,
                        const LearnerOptions& options = {});

}  // namespace plstar

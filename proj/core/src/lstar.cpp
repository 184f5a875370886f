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

#include "plstar/lstar.hpp"

#include "plstar/error.hpp"

namespace plstar {

TableInit TableInit::classic(const Word& alphabet) {
  TableInit init;
  init.alphabet = alphabet;
  init.prefixes = {Word{}};
  for (auto a : alphabet) init.suffixes.push_back(Word{a});
  return init;
}

void stabilize(ObservationTable& table, MembershipOracle& mq) {
  for (;;) {
    while (auto unclosed = table.find_unclosed()) table.add_prefix(*unclosed, mq);
    auto witness = table.find_inconsistent();
    if (!witness) return;
    Word e = witness->e1;
    e.insert(e.begin(), witness->v);
    table.add_suffix(e, mq);
  }
}

void process_counterexample(ObservationTable& table, const MealyMachine& hypothesis,
                            const Trace& counterexample, MembershipOracle& mq) {
  if (hypothesis.run(counterexample.inputs) == counterexample.outputs)
    throw Error(Errc::not_a_counterexample,
                "hypothesis agrees with the SUL on '" + to_string(counterexample.inputs) + "'");
  Word prefix;
  for (auto a : counterexample.inputs) {
    prefix.push_back(a);
    table.add_prefix(prefix, mq);
  }
}

LearnResult lstar_learn(MembershipOracle& mq, EquivalenceOracle& eq, TableInit init,
                        const LearnerOptions& options) {
  if (!same_symbol_set(init.alphabet, mq.sul().inputs()))
    throw Error(Errc::alphabet_mismatch, "learner alphabet differs from the SUL alphabet");
  const std::size_t cap =
      options.max_rounds ? options.max_rounds : 10 * mq.sul().state_count();
  const auto mq_resets0 = mq.resets(), mq_symbols0 = mq.symbols();
  const auto eq_resets0 = eq.resets(), eq_symbols0 = eq.symbols();

  ObservationTable table(std::move(init.alphabet), std::move(init.prefixes),
                         std::move(init.suffixes), mq);
  std::uint64_t rounds = 0;
  for (;;) {
    stabilize(table, mq);
    MealyMachine hypothesis = table.build_hypothesis();
    if (++rounds > cap)
      throw Error(Errc::round_limit_exceeded,
                  "no correct hypothesis after " + std::to_string(cap) + " rounds");
    auto cex = eq.find_counterexample(hypothesis);
    if (!cex) {
      LearningMetrics metrics;
      metrics.rounds = rounds;
      metrics.mq_resets = mq.resets() - mq_resets0;
      metrics.mq_symbols = mq.symbols() - mq_symbols0;
      metrics.eq_resets = eq.resets() - eq_resets0;
      metrics.eq_symbols = eq.symbols() - eq_symbols0;
      return LearnResult{std::move(hypothesis), std::move(table), metrics};
    }
    process_counterexample(table, hypothesis, *cex, mq);
  }
}

}  // namespace plstar

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


#include <algorithm>

#include "check_errc.hpp"
#include "plstar/lstar.hpp"
#include "plstar/separators.hpp"
#include "test_support.hpp"

using namespace plstar;

namespace {

// Perfect oracle that records every hypothesis it is shown.
class RecordingOracle final : public EquivalenceOracle {
 public:
  explicit RecordingOracle(const MealyMachine& sul) : EquivalenceOracle(sul), inner_(sul) {}
  std::optional<Trace> find_counterexample(const MealyMachine& h) override {
    sizes.push_back(h.state_count());
    return inner_.find_counterexample(h);
  }
  std::vector<std::size_t> sizes;

 private:
  PerfectOracle inner_;
};

// Cost of filling every cell of the final table once.
std::pair<std::uint64_t, std::uint64_t> cell_cost(const ObservationTable& t) {
  std::uint64_t cells = 0, symbols = 0;
  auto add_row = [&](const Word& u) {
    for (const auto& e : t.suffixes()) {
      ++cells;
      symbols += u.size() + e.size();
    }
  };
  for (const auto& u : t.prefixes()) add_row(u);
  for (const auto& u : t.extensions()) add_row(u);
  return {cells, symbols};
}

}  // namespace

TEST_CASE("toggle, classic init, perfect oracle") {
  MealyMachine sul = plstar::testing::toggle();
  MembershipOracle mq(sul);
  PerfectOracle eq(sul);
  auto r = lstar_learn(mq, eq, TableInit::classic(sul.inputs()));
  CHECK(r.model.state_count() == 2);
  CHECK(r.metrics.rounds <= 2);
  CHECK(is_equivalent(equivalent(r.model, sul)));
}

TEST_CASE("single-state SUL is learned in one round") {
  MealyBuilder b(make_word({"a", "b"}));
  b.add("s", "a", "x", "s").add("s", "b", "y", "s");
  MealyMachine sul = b.build("s");
  MembershipOracle mq(sul);
  PerfectOracle eq(sul);
  auto r = lstar_learn(mq, eq, TableInit::classic(sul.inputs()));
  CHECK(r.metrics.rounds == 1);
  CHECK(r.model.state_count() == 1);
}

TEST_CASE("property: random machines, perfect oracle") {
  Rng rng(51);
  for (int k = 0; k < 200; ++k) {
    MealyMachine sul = plstar::testing::random_machine(rng, 1 + rng.below(8), 1 + rng.below(3), 3);
    MembershipOracle mq(sul);
    RecordingOracle eq(sul);
    auto r = lstar_learn(mq, eq, TableInit::classic(sul.inputs()));
    CHECK(is_equivalent(equivalent(r.model, sul)));
    CHECK(r.metrics.rounds <= sul.state_count());
    CHECK(r.metrics.rounds == eq.sizes.size());
    // hypothesis sizes never shrink and never exceed the minimal SUL
    for (std::size_t i = 1; i < eq.sizes.size(); ++i) CHECK(eq.sizes[i - 1] <= eq.sizes[i]);
    CHECK(eq.sizes.back() == minimize(sul).state_count());
    auto [cells, symbols] = cell_cost(r.table);
    CHECK(r.metrics.mq_resets == cells);
    CHECK(r.metrics.mq_symbols == symbols);
  }
}

TEST_CASE("property: larger valid initializations still learn the SUL") {
  Rng rng(52);
  for (int k = 0; k < 100; ++k) {
    MealyMachine sul = plstar::testing::random_machine(rng, 1 + rng.below(6), 1 + rng.below(3), 2);
    TableInit init = TableInit::classic(sul.inputs());
    // random prefix-closed S and extra suffixes
    for (int j = 0; j < 4; ++j) {
      Word u = init.prefixes[rng.below(init.prefixes.size())];
      u.push_back(sul.inputs()[rng.below(sul.input_count())]);
      if (std::find(init.prefixes.begin(), init.prefixes.end(), u) == init.prefixes.end())
        init.prefixes.push_back(u);
      Word e{sul.inputs()[rng.below(sul.input_count())], sul.inputs()[rng.below(sul.input_count())]};
      if (std::find(init.suffixes.begin(), init.suffixes.end(), e) == init.suffixes.end())
        init.suffixes.push_back(e);
    }
    MembershipOracle mq(sul);
    PerfectOracle eq(sul);
    auto r = lstar_learn(mq, eq, init);
    CHECK(is_equivalent(equivalent(r.model, sul)));
  }
}

TEST_CASE("round limit") {
  Rng rng(53);
  for (int k = 0; k < 500; ++k) {
    MealyMachine sul = plstar::testing::random_machine(rng, 4 + rng.below(4), 2, 2);
    MembershipOracle mq(sul);
    PerfectOracle eq(sul);
    if (lstar_learn(mq, eq, TableInit::classic(sul.inputs())).metrics.rounds < 2) continue;
    MembershipOracle mq2(sul);
    PerfectOracle eq2(sul);
    LearnerOptions opts;
    opts.max_rounds = 1;
    CHECK_ERRC(lstar_learn(mq2, eq2, TableInit::classic(sul.inputs()), opts), Errc::round_limit_exceeded);
    return;
  }
  FAIL("no SUL needing two rounds found");
}

TEST_CASE("learner alphabet must match the SUL") {
  MealyMachine sul = plstar::testing::toggle();
  MembershipOracle mq(sul);
  PerfectOracle eq(sul);
  CHECK_ERRC(lstar_learn(mq, eq, TableInit::classic(make_word({"b"}))), Errc::alphabet_mismatch);
}

TEST_CASE("metrics count only the call's own queries") {
  MealyMachine sul = plstar::testing::toggle();
  MembershipOracle mq(sul);
  mq.query(make_word({"a", "a", "a"}));
  PerfectOracle eq(sul);
  auto r = lstar_learn(mq, eq, TableInit::classic(sul.inputs()));
  CHECK(r.metrics.mq_resets + 1 == mq.resets());
  CHECK(r.metrics.mq_symbols + 3 == mq.symbols());
  CHECK(r.metrics.eq_resets == eq.resets());
}

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


#include <set>

#include "check_errc.hpp"
#include "plstar/equivalence_oracle.hpp"
#include "plstar/separators.hpp"
#include "test_support.hpp"

using namespace plstar;
using plstar::testing::toggle;

namespace {

Word w(std::initializer_list<std::string_view> s) { return make_word(s); }

MealyMachine one_state(std::string_view out = "0") {
  MealyBuilder b(w({"a"}));
  b.add("s", "a", out, "s");
  return b.build("s");
}

// Every machine with `n` states over {a} and outputs {0, 1}, initial state 0.
std::vector<MealyMachine> all_machines_over_a(std::size_t n) {
  std::vector<MealyMachine> out;
  std::size_t per_state = n * 2;
  std::size_t total = 1;
  for (std::size_t s = 0; s < n; ++s) total *= per_state;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<MealyMachine::Transition> t;
    std::size_t c = code;
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t x = c % per_state;
      c /= per_state;
      t.push_back({static_cast<StateId>(x / 2), Symbol(x % 2 ? "1" : "0")});
    }
    std::vector<std::string> names;
    for (std::size_t s = 0; s < n; ++s) names.push_back("m" + std::to_string(s));
    out.emplace_back(std::move(names), 0, w({"a"}), std::move(t));
  }
  return out;
}

}  // namespace

TEST_CASE("1-state hypothesis, depth 0: suite is a, a·a") {
  CHECK(wp_test_suite(one_state(), 0) == std::vector<Word>{w({"a"}), w({"a", "a"})});
}

TEST_CASE("toggle hypothesis, depth 0, catches every inequivalent 2-state mutant") {
  MealyMachine h = toggle();
  for (const auto& m : all_machines_over_a(2)) {
    WpOracle wp(m, WpDepthPolicy{0, std::nullopt, 0, 0});
    bool found = wp.find_counterexample(h).has_value();
    CHECK(found == !is_equivalent(equivalent(h, m)));
  }
}

TEST_CASE("deeper suites contain shallower ones, without duplicates") {
  Rng rng(61);
  for (int k = 0; k < 30; ++k) {
    MealyMachine h = minimize(plstar::testing::random_machine(rng, 1 + rng.below(5), 1 + rng.below(3), 2));
    for (std::size_t d = 1; d <= 2; ++d) {
      auto small = wp_test_suite(h, d - 1);
      auto big = wp_test_suite(h, d);
      std::set<Word> bigset(big.begin(), big.end());
      CHECK(bigset.size() == big.size());
      for (const auto& t : small) CHECK(bigset.count(t) == 1);
    }
  }
}

TEST_CASE("passing EQ charges the whole suite") {
  MealyMachine h = toggle();
  WpOracle wp(h, WpDepthPolicy{1, std::nullopt, 0, 0});
  CHECK_FALSE(wp.find_counterexample(h).has_value());
  auto suite = wp_test_suite(h, 1);
  std::uint64_t symbols = 0;
  for (const auto& t : suite) symbols += t.size();
  CHECK(wp.resets() == suite.size());
  CHECK(wp.symbols() == symbols);
}

TEST_CASE("failing EQ stops at the first failing test") {
  MealyMachine sul = toggle();
  WpOracle wp(sul, WpDepthPolicy{1, std::nullopt, 0, 0});
  auto cex = wp.find_counterexample(one_state());
  REQUIRE(cex.has_value());
  CHECK(cex->inputs == w({"a", "a"}));
  CHECK(cex->outputs == w({"0", "1"}));
  CHECK(wp.resets() == 2);  // "a" passes, "a a" fails
  CHECK(wp.symbols() == 3);
}

TEST_CASE("perfect oracle delegates to equivalent") {
  MealyMachine sul = toggle();
  PerfectOracle p(sul);
  auto cex = p.find_counterexample(one_state());
  REQUIRE(cex.has_value());
  CHECK(cex->inputs == std::get<Word>(equivalent(one_state(), sul)));
  CHECK(p.resets() == 1);
  CHECK(p.symbols() == 2);
  CHECK_FALSE(p.find_counterexample(sul).has_value());
  CHECK(p.resets() == 2);
  CHECK(p.symbols() == 2);
}

TEST_CASE("alphabet mismatch") {
  MealyMachine sul = toggle("b");
  WpOracle wp(sul, WpDepthPolicy{});
  CHECK_ERRC(wp.find_counterexample(toggle("a")), Errc::alphabet_mismatch);
  PerfectOracle p(sul);
  CHECK_ERRC(p.find_counterexample(toggle("a")), Errc::alphabet_mismatch);
}

TEST_CASE("auto_depth") {
  Rng rng(62);
  MealyMachine h3 = minimize(plstar::testing::random_machine(rng, 3, 2, 3));
  while (h3.state_count() != 3) h3 = minimize(plstar::testing::random_machine(rng, 3, 2, 3));
  CHECK(auto_depth(h3, 5) == 2);
  CHECK(auto_depth(h3, 3) == 0);
  CHECK(auto_depth(h3, 1) == 0);
  CHECK(auto_depth(h3, std::nullopt) == 0);
  CHECK(auto_depth(h3, std::nullopt, 4) == 4);
  WpDepthPolicy p{std::nullopt, 5, 0, 2};
  CHECK(p.depth_for(h3) == 4);
}

TEST_CASE("depth strings") {
  auto a = OracleConfig::parse_wp_depth("auto");
  CHECK_FALSE(a.wp_depth.has_value());
  CHECK(a.wp_lookahead == 0);
  CHECK(a.depth_string() == "auto");
  auto b = OracleConfig::parse_wp_depth("auto+2");
  CHECK(b.wp_lookahead == 2);
  CHECK(b.depth_string() == "auto+2");
  auto c = OracleConfig::parse_wp_depth("3");
  CHECK(c.wp_depth == std::optional<std::size_t>(3));
  CHECK(c.depth_string() == "3");
  CHECK_ERRC(OracleConfig::parse_wp_depth("deep"), Errc::invalid_argument);
  CHECK_ERRC(OracleConfig::parse_wp_depth("auto+"), Errc::invalid_argument);
  CHECK_ERRC(OracleConfig::parse_wp_depth("-1"), Errc::invalid_argument);
}

TEST_CASE("property: Wp at sufficient depth finds a counterexample iff one exists") {
  Rng rng(63);
  for (int k = 0; k < 400; ++k) {
    std::size_t inputs = 1 + rng.below(3);
    MealyMachine h = minimize(plstar::testing::random_machine(rng, 1 + rng.below(5), inputs, 2));
    std::size_t d = rng.below(3);
    std::size_t n = 1 + rng.below(std::min<std::size_t>(6, h.state_count() + d));
    MealyMachine sul = plstar::testing::random_machine(rng, n, inputs, 2);
    WpOracle wp(sul, WpDepthPolicy{d, std::nullopt, 0, 0});
    auto cex = wp.find_counterexample(h);
    CHECK(cex.has_value() == !is_equivalent(equivalent(h, sul)));
    if (cex) {
      CHECK(cex->outputs == sul.run(cex->inputs));
      CHECK(h.run(cex->inputs) != cex->outputs);
    }
  }
}

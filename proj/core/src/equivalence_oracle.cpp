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

#include "plstar/equivalence_oracle.hpp"

#include <charconv>
#include <unordered_set>

#include "plstar/error.hpp"
#include "plstar/separators.hpp"

namespace plstar {
namespace {

// Calls f(x) for every x in I^k in lexicographic order of input indices;
// stops early when f returns false.
template <typename F>
bool for_each_middle(const Word& inputs, std::size_t k, F&& f) {
  if (k > 0 && inputs.empty()) return true;
  std::vector<std::size_t> digits(k, 0);
  Word x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = inputs[0];
  for (;;) {
    if (!f(x)) return false;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < inputs.size()) {
        x[pos] = inputs[digits[pos]];
        break;
      }
      digits[pos] = 0;
      x[pos] = inputs[0];
      if (pos == 0) return true;
    }
    if (k == 0) return true;
  }
}

}  // namespace

std::size_t for_each_wp_test(const MealyMachine& h, std::size_t depth,
                             const std::function<bool(const Word&)>& visit) {
  const MealyMachine c = canonical(h);
  const Word& inputs = c.inputs();
  if (inputs.empty()) return 0;

  // Breadth-first state cover; canonical ids are already BFS order.
  std::vector<Word> access(c.state_count());
  std::vector<bool> reached(c.state_count(), false);
  reached[c.initial()] = true;
  std::vector<StateId> queue{c.initial()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    StateId s = queue[head];
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      StateId t = c.step(s, i).target;
      if (!reached[t]) {
        reached[t] = true;
        access[t] = access[s];
        access[t].push_back(inputs[i]);
        queue.push_back(t);
      }
    }
  }
  std::unordered_set<Word, WordHash> cover(access.begin(), access.end());
  std::vector<Word> remainder;  // P \ Q
  for (const auto& q : access) {
    for (auto a : inputs) {
      Word p = q;
      p.push_back(a);
      if (!cover.contains(p)) remainder.push_back(std::move(p));
    }
  }

  Characterization ch = characterize(c);
  std::vector<Word> w_set = ch.separators;
  std::vector<std::vector<std::uint32_t>> ident = ch.identification;
  if (w_set.empty()) {
    w_set.push_back(Word{inputs[0]});
    for (auto& ids : ident) ids = {0};
  }

  std::unordered_set<Word, WordHash> seen;
  std::size_t visited = 0;
  bool stop = false;
  auto emit = [&](const Word& prefix, const Word& middle, const Word& suffix) {
    Word t;
    t.reserve(prefix.size() + middle.size() + suffix.size());
    t.insert(t.end(), prefix.begin(), prefix.end());
    t.insert(t.end(), middle.begin(), middle.end());
    t.insert(t.end(), suffix.begin(), suffix.end());
    if (!seen.insert(t).second) return true;
    ++visited;
    if (!visit(t)) stop = true;
    return !stop;
  };

  for (std::size_t k = 0; k <= depth && !stop; ++k) {
    for (const auto& q : access) {
      if (!for_each_middle(inputs, k, [&](const Word& x) {
            for (const auto& w : w_set)
              if (!emit(q, x, w)) return false;
            return true;
          }))
        return visited;
    }
    for (const auto& p : remainder) {
      StateId from = c.reach(p);
      if (!for_each_middle(inputs, k, [&](const Word& x) {
            StateId s = c.reach(from, x);
            for (auto id : ident[s])
              if (!emit(p, x, w_set[id])) return false;
            return true;
          }))
        return visited;
    }
  }
  return visited;
}

std::vector<Word> wp_test_suite(const MealyMachine& h, std::size_t depth) {
  std::vector<Word> suite;
  for_each_wp_test(h, depth, [&](const Word& t) {
    suite.push_back(t);
    return true;
  });
  return suite;
}

std::size_t auto_depth(const MealyMachine& h, std::optional<std::size_t> known_sul_states,
                       std::size_t default_depth) {
  if (!known_sul_states) return default_depth;
  return *known_sul_states > h.state_count() ? *known_sul_states - h.state_count() : 0;
}

void EquivalenceOracle::check_alphabet(const MealyMachine& h) const {
  if (!same_symbol_set(h.inputs(), sul_->inputs()))
    throw Error(Errc::alphabet_mismatch, "hypothesis and SUL have different input alphabets");
}

std::optional<Trace> WpOracle::find_counterexample(const MealyMachine& h) {
  check_alphabet(h);
  std::optional<Trace> cex;
  for_each_wp_test(h, policy_.depth_for(h), [&](const Word& t) {
    Word expected = sul().run(t);
    charge(1, t.size());
    if (h.run(t) != expected) {
      cex = Trace{t, std::move(expected)};
      return false;
    }
    return true;
  });
  return cex;
}

std::optional<Trace> PerfectOracle::find_counterexample(const MealyMachine& h) {
  check_alphabet(h);
  auto result = equivalent(h, sul());
  if (is_equivalent(result)) {
    charge(1, 0);
    return std::nullopt;
  }
  Word w = std::get<Word>(std::move(result));
  charge(1, w.size());
  Word out = sul().run(w);
  return Trace{std::move(w), std::move(out)};
}

std::unique_ptr<EquivalenceOracle> make_oracle(const OracleConfig& config,
                                               const MealyMachine& sul) {
  if (config.kind == OracleKind::perfect) return std::make_unique<PerfectOracle>(sul);
  WpDepthPolicy policy;
  policy.fixed = config.wp_depth;
  policy.lookahead = config.wp_lookahead;
  // Equivalence classes bound the SUL's behavior; unreachable or duplicate
  // states would only inflate the depth.
  if (!config.wp_depth) policy.known_sul_states = characterize(sul).class_count;
  return std::make_unique<WpOracle>(sul, policy);
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t n = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw Error(Errc::invalid_argument,
                "bad Wp depth '" + std::string(whole) + "' (expected auto, auto+<k> or <n>)");
  return n;
}

}  // namespace

OracleConfig OracleConfig::parse_wp_depth(std::string_view text, OracleKind kind) {
  OracleConfig c;
  c.kind = kind;
  if (text == "auto") return c;
  if (text.starts_with("auto+")) {
    c.wp_lookahead = parse_count(text.substr(5), text);
    return c;
  }
  c.wp_depth = parse_count(text, text);
  return c;
}

std::string OracleConfig::depth_string() const {
  if (wp_depth) return std::to_string(*wp_depth);
  return wp_lookahead ? "auto+" + std::to_string(wp_lookahead) : "auto";
}

}  // namespace plstar

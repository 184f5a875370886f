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


// Helpers shared by the unit and acceptance tests: small machine builders,
// seeded random machines and brute-force reference checks.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plstar/feature_model.hpp"
#include "plstar/mealy.hpp"
#include "plstar/random.hpp"

namespace plstar::testing {

inline std::filesystem::path fixture_dir() { return PLSTAR_FIXTURE_DIR; }
inline std::filesystem::path golden_dir() { return PLSTAR_GOLDEN_DIR; }

/// q0 --a/0--> q1, q1 --a/1--> q0.
inline MealyMachine toggle(std::string_view in = "a", std::string_view out0 = "0",
                           std::string_view out1 = "1") {
  MealyBuilder b(make_word({in}));
  b.add("q0", in, out0, "q1").add("q1", in, out1, "q0");
  return b.build("q0");
}

/// Uniformly random transitions and outputs; not necessarily minimal or
/// fully reachable.
inline MealyMachine random_machine(Rng& rng, std::size_t states, std::size_t inputs,
                                   std::size_t outputs) {
  Word in;
  for (std::size_t i = 0; i < inputs; ++i) in.push_back(Symbol("i" + std::to_string(i)));
  std::vector<std::string> names;
  for (std::size_t s = 0; s < states; ++s) names.push_back("s" + std::to_string(s));
  std::vector<MealyMachine::Transition> table;
  for (std::size_t k = 0; k < states * inputs; ++k)
    table.push_back({static_cast<StateId>(rng.below(states)),
                     Symbol("o" + std::to_string(rng.below(outputs)))});
  return MealyMachine(std::move(names), 0, std::move(in), std::move(table));
}

/// All words over `alphabet` of length exactly n, in lexicographic order of
/// the alphabet positions.
inline std::vector<Word> words_of_length(const Word& alphabet, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (auto a : alphabet) {
        Word x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

/// Shortest word (alphabet order of `a`) on which the machines differ, by
/// exhaustive enumeration up to `max_len`.
inline std::optional<Word> brute_force_distinguish(const MealyMachine& a, const MealyMachine& b,
                                                   std::size_t max_len) {
  for (std::size_t n = 1; n <= max_len; ++n)
    for (const auto& w : words_of_length(a.inputs(), n))
      if (a.run(w) != b.run(w)) return w;
  return std::nullopt;
}

/// Number of states reachable from the initial state.
inline std::size_t reachable_states(const MealyMachine& m) {
  std::vector<bool> seen(m.state_count());
  std::vector<StateId> todo{m.initial()};
  seen[m.initial()] = true;
  std::size_t n = 0;
  while (!todo.empty()) {
    StateId s = todo.back();
    todo.pop_back();
    ++n;
    for (std::size_t i = 0; i < m.input_count(); ++i) {
      StateId t = m.step(s, i).target;
      if (!seen[t]) {
        seen[t] = true;
        todo.push_back(t);
      }
    }
  }
  return n;
}

/// Random feature tree with `size` features (groups may overshoot by one
/// member) and up to two cross-tree constraints.
inline FeatureModel random_feature_model(Rng& rng, std::size_t size) {
  std::vector<Feature> fs;
  fs.push_back(Feature{"R", FeatureKind::root, -1, "", {}});
  std::size_t groups = 0;
  while (fs.size() < size) {
    auto parent = static_cast<std::int32_t>(rng.below(fs.size()));
    switch (rng.below(4)) {
      case 0:
      case 1: {
        FeatureKind k = rng.below(3) == 0 ? FeatureKind::mandatory : FeatureKind::optional;
        fs.push_back(Feature{"F" + std::to_string(fs.size()), k, parent, "", {}});
        break;
      }
      default: {
        FeatureKind k = rng.below(2) == 0 ? FeatureKind::alternative : FeatureKind::or_member;
        std::string label = "g" + std::to_string(groups++);
        std::size_t members = 2 + rng.below(2);
        for (std::size_t m = 0; m < members; ++m)
          fs.push_back(Feature{"F" + std::to_string(fs.size()), k, parent, label, {}});
      }
    }
  }
  std::vector<FeatureExpr> constraints;
  for (std::size_t c = rng.below(3); c > 0 && fs.size() > 2; --c) {
    std::string x = fs[1 + rng.below(fs.size() - 1)].name;
    std::string y = fs[1 + rng.below(fs.size() - 1)].name;
    constraints.push_back(FeatureExpr::parse(rng.below(2) ? x + " | !" + y : "!(" + x + " & " + y + ")"));
  }
  return FeatureModel(std::move(fs), std::move(constraints));
}

/// Validity straight from the tree rules, independent of the library's
/// checker; cross-tree constraints use FeatureExpr::evaluate.
inline bool rule_valid(const FeatureModel& fm, Configuration c) {
  if (!c.has(0)) return false;
  for (std::size_t i = 1; i < fm.size(); ++i) {
    const Feature& f = fm.feature(i);
    auto p = static_cast<std::size_t>(f.parent);
    if (c.has(i) && !c.has(p)) return false;
    if (f.kind == FeatureKind::mandatory && c.has(p) && !c.has(i)) return false;
  }
  for (std::size_t i = 0; i < fm.size(); ++i) {
    std::map<std::string, std::pair<FeatureKind, int>> count;
    for (auto ch : fm.feature(i).children) {
      const Feature& f = fm.feature(ch);
      if (f.kind != FeatureKind::alternative && f.kind != FeatureKind::or_member) continue;
      auto& slot = count[f.group + (f.kind == FeatureKind::alternative ? "/alt" : "/or")];
      slot.first = f.kind;
      slot.second += c.has(ch) ? 1 : 0;
    }
    if (!c.has(i)) continue;
    for (const auto& [label, kc] : count) {
      if (kc.first == FeatureKind::alternative && kc.second != 1) return false;
      if (kc.first == FeatureKind::or_member && kc.second < 1) return false;
    }
  }
  for (const auto& e : fm.constraints())
    if (!e.evaluate(c)) return false;
  return true;
}

/// Valid configurations by enumerating every subset.
inline std::vector<Configuration> brute_force_configurations(const FeatureModel& fm) {
  std::vector<Configuration> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << fm.size()); ++m)
    if (rule_valid(fm, Configuration(m))) out.push_back(Configuration(m));
  return out;
}

}  // namespace plstar::testing

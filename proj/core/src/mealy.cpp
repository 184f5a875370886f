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

#include "plstar/mealy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "plstar/error.hpp"

namespace plstar {

MealyMachine::MealyMachine(std::vector<std::string> state_names, StateId initial, Word inputs,
                           std::vector<Transition> table)
    : state_names_(std::move(state_names)),
      initial_(initial),
      inputs_(std::move(inputs)),
      table_(std::move(table)) {
  if (state_names_.empty()) throw Error(Errc::validation_error, "machine has no states");
  if (initial_ >= state_names_.size())
    throw Error(Errc::validation_error, "initial state is not a state of the machine");
  if (table_.size() != state_names_.size() * inputs_.size())
    throw Error(Errc::validation_error, "transition table is not total");
  std::unordered_set<std::string> seen_names;
  for (const auto& n : state_names_) {
    if (!seen_names.insert(n).second)
      throw Error(Errc::validation_error, "duplicate state name '" + n + "'");
  }
  std::uint32_t max_id = 0;
  for (auto a : inputs_) max_id = std::max(max_id, a.id());
  index_of_.assign(inputs_.empty() ? 0 : max_id + 1, -1);
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (index_of_[inputs_[i].id()] >= 0)
      throw Error(Errc::validation_error, "duplicate input symbol '" + inputs_[i].name() + "'");
    index_of_[inputs_[i].id()] = static_cast<std::int32_t>(i);
  }
  for (const auto& t : table_) {
    if (t.target >= state_names_.size())
      throw Error(Errc::validation_error, "transition target out of range");
    outputs_.push_back(t.output);
  }
  std::sort(outputs_.begin(), outputs_.end());
  outputs_.erase(std::unique(outputs_.begin(), outputs_.end()), outputs_.end());
}

std::size_t MealyMachine::require_input(Symbol a) const {
  auto i = input_index(a);
  if (!i) throw Error(Errc::unknown_input_symbol, "unknown input symbol '" + a.name() + "'");
  return *i;
}

StateId MealyMachine::reach(StateId from, std::span<const Symbol> word) const {
  StateId s = from;
  for (auto a : word) s = step(s, require_input(a)).target;
  return s;
}

Word MealyMachine::run(StateId from, std::span<const Symbol> word) const {
  Word out;
  out.reserve(word.size());
  StateId s = from;
  for (auto a : word) {
    const auto& t = step(s, require_input(a));
    out.push_back(t.output);
    s = t.target;
  }
  return out;
}

MealyBuilder::MealyBuilder(Word inputs) : inputs_(std::move(inputs)) {}

StateId MealyBuilder::add_state(std::string_view name) {
  auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<StateId>(names_.size()));
  if (inserted) {
    names_.emplace_back(name);
    table_.resize(names_.size() * inputs_.size());
  }
  return it->second;
}

MealyBuilder& MealyBuilder::add(std::string_view from, Symbol input, Symbol output,
                                std::string_view to) {
  auto pos = std::find(inputs_.begin(), inputs_.end(), input);
  if (pos == inputs_.end())
    throw Error(Errc::unknown_input_symbol, "unknown input symbol '" + input.name() + "'");
  StateId s = add_state(from);
  StateId t = add_state(to);
  auto& slot = table_[s * inputs_.size() + static_cast<std::size_t>(pos - inputs_.begin())];
  if (slot)
    throw Error(Errc::parse_error, "duplicate transition for (" + std::string(from) + ", " +
                                       input.name() + ")");
  slot = MealyMachine::Transition{t, output};
  return *this;
}

bool MealyBuilder::has_transition(std::string_view from, Symbol input) const {
  auto it = ids_.find(std::string(from));
  auto pos = std::find(inputs_.begin(), inputs_.end(), input);
  if (it == ids_.end() || pos == inputs_.end()) return false;
  return table_[it->second * inputs_.size() + static_cast<std::size_t>(pos - inputs_.begin())]
      .has_value();
}

MealyMachine MealyBuilder::build(std::string_view initial) const {
  auto it = ids_.find(std::string(initial));
  if (it == ids_.end())
    throw Error(Errc::validation_error, "initial state '" + std::string(initial) + "' has no transitions");
  std::vector<MealyMachine::Transition> table;
  table.reserve(table_.size());
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (!table_[k]) {
      throw Error(Errc::validation_error, "missing transition for (" +
                                              names_[k / inputs_.size()] + ", " +
                                              inputs_[k % inputs_.size()].name() + ")");
    }
    table.push_back(*table_[k]);
  }
  return MealyMachine(names_, it->second, inputs_, std::move(table));
}

bool same_symbol_set(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  Word x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

EquivalenceResult equivalent(const MealyMachine& a, const MealyMachine& b) {
  if (!same_symbol_set(a.inputs(), b.inputs()))
    throw Error(Errc::alphabet_mismatch, "machines have different input alphabets");
  const std::size_t k = a.input_count();
  std::vector<std::size_t> b_index(k);
  for (std::size_t i = 0; i < k; ++i) b_index[i] = *b.input_index(a.inputs()[i]);

  // BFS over reachable pairs; queue order is (length, lexicographic) order of
  // the recorded access words, so the first disagreement found is minimal.
  const std::size_t nb = b.state_count();
  auto key = [nb](StateId x, StateId y) { return static_cast<std::size_t>(x) * nb + y; };
  struct Visit {
    std::size_t parent;
    std::uint32_t input;
  };
  std::vector<std::int64_t> visit_index(a.state_count() * nb, -1);
  std::vector<std::pair<StateId, StateId>> order;
  std::vector<Visit> visits;

  auto word_of = [&](std::size_t v, std::size_t last_input) {
    Word w{a.inputs()[last_input]};
    while (v != 0) {
      w.push_back(a.inputs()[visits[v].input]);
      v = visits[v].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  order.emplace_back(a.initial(), b.initial());
  visits.push_back({0, 0});
  visit_index[key(a.initial(), b.initial())] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto [x, y] = order[head];
    for (std::size_t i = 0; i < k; ++i) {
      const auto& tx = a.step(x, i);
      const auto& ty = b.step(y, b_index[i]);
      if (tx.output != ty.output) return word_of(head, i);
    }
    for (std::size_t i = 0; i < k; ++i) {
      StateId nx = a.step(x, i).target;
      StateId ny = b.step(y, b_index[i]).target;
      auto& slot = visit_index[key(nx, ny)];
      if (slot < 0) {
        slot = static_cast<std::int64_t>(order.size());
        order.emplace_back(nx, ny);
        visits.push_back({head, static_cast<std::uint32_t>(i)});
      }
    }
  }
  return Equivalent{};
}

MealyMachine compose(std::span<const MealyMachine> components) {
  if (components.empty()) throw Error(Errc::invalid_argument, "compose needs at least one component");
  Word inputs;
  // owner[i] = (component, local input index) for composed input i
  std::vector<std::pair<std::size_t, std::size_t>> owner;
  std::unordered_set<Symbol> seen;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& m = components[c];
    for (std::size_t i = 0; i < m.input_count(); ++i) {
      Symbol a = m.inputs()[i];
      if (!seen.insert(a).second)
        throw Error(Errc::overlapping_alphabets,
                    "input '" + a.name() + "' is owned by more than one component");
      inputs.push_back(a);
      owner.emplace_back(c, i);
    }
  }

  using Tuple = std::vector<StateId>;
  std::map<Tuple, StateId> ids;
  std::vector<Tuple> tuples;
  Tuple init;
  for (const auto& m : components) init.push_back(m.initial());
  ids.emplace(init, 0);
  tuples.push_back(init);
  std::vector<MealyMachine::Transition> table;
  for (std::size_t head = 0; head < tuples.size(); ++head) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      auto [c, local] = owner[i];
      Tuple next = tuples[head];
      const auto& t = components[c].step(next[c], local);
      next[c] = t.target;
      auto [it, inserted] = ids.try_emplace(next, static_cast<StateId>(tuples.size()));
      if (inserted) tuples.push_back(next);
      table.push_back({it->second, t.output});
    }
  }
  std::vector<std::string> names;
  names.reserve(tuples.size());
  for (const auto& tup : tuples) {
    std::string n = "(";
    for (std::size_t c = 0; c < tup.size(); ++c) {
      if (c) n += ',';
      n += components[c].state_name(tup[c]);
    }
    n += ')';
    names.push_back(std::move(n));
  }
  return MealyMachine(std::move(names), 0, std::move(inputs), std::move(table));
}

MealyMachine canonical(const MealyMachine& m, std::string_view prefix) {
  std::vector<std::int64_t> renamed(m.state_count(), -1);
  std::vector<StateId> order{m.initial()};
  renamed[m.initial()] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t i = 0; i < m.input_count(); ++i) {
      StateId t = m.step(order[head], i).target;
      if (renamed[t] < 0) {
        renamed[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<std::string> names;
  std::vector<MealyMachine::Transition> table;
  for (std::size_t k = 0; k < order.size(); ++k) {
    names.push_back(std::string(prefix) + std::to_string(k));
    for (std::size_t i = 0; i < m.input_count(); ++i) {
      const auto& t = m.step(order[k], i);
      table.push_back({static_cast<StateId>(renamed[t.target]), t.output});
    }
  }
  return MealyMachine(std::move(names), 0, m.inputs(), std::move(table));
}

MealyMachine with_input_order(const MealyMachine& m, const Word& order) {
  if (!same_symbol_set(order, m.inputs()))
    throw Error(Errc::alphabet_mismatch, "input order is not a permutation of the alphabet");
  std::vector<std::size_t> src(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) src[i] = *m.input_index(order[i]);
  std::vector<MealyMachine::Transition> table;
  table.reserve(m.state_count() * order.size());
  for (StateId s = 0; s < m.state_count(); ++s)
    for (std::size_t i = 0; i < order.size(); ++i) table.push_back(m.step(s, src[i]));
  return MealyMachine(m.state_names(), m.initial(), order, std::move(table));
}

}  // namespace plstar

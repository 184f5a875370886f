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

#include "plstar/separators.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

namespace plstar {
namespace {

struct Node {
  std::vector<StateId> states;
  std::int64_t parent = -1;
  std::int64_t separator = -1;  // index into separators, internal nodes only
  std::uint32_t depth = 0;
  bool leaf = true;
};

class SplittingTree {
 public:
  explicit SplittingTree(const MealyMachine& m) : m_(m), leaf_of_(m.state_count(), 0) {
    Node root;
    for (StateId s = 0; s < m.state_count(); ++s) root.states.push_back(s);
    nodes_.push_back(std::move(root));
  }

  void refine() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t id = 0; id < nodes_.size(); ++id) {
        if (!nodes_[id].leaf || nodes_[id].states.size() < 2) continue;
        if (auto sep = best_separator(id)) {
          split(id, *sep);
          changed = true;
        }
      }
    }
  }

  Characterization result() && {
    Characterization c;
    c.separators = std::move(separators_);
    std::unordered_map<std::size_t, std::uint32_t> class_ids;
    c.class_of.resize(m_.state_count());
    for (StateId s = 0; s < m_.state_count(); ++s) {
      auto [it, inserted] =
          class_ids.try_emplace(leaf_of_[s], static_cast<std::uint32_t>(class_ids.size()));
      if (inserted) c.leaf_node.push_back(static_cast<std::uint32_t>(leaf_of_[s]));
      c.class_of[s] = it->second;
    }
    c.class_count = class_ids.size();
    c.identification.resize(m_.state_count());
    for (StateId s = 0; s < m_.state_count(); ++s) {
      auto& ids = c.identification[s];
      for (std::int64_t n = nodes_[leaf_of_[s]].parent; n >= 0; n = nodes_[n].parent)
        ids.push_back(static_cast<std::uint32_t>(nodes_[n].separator));
      std::sort(ids.begin(), ids.end());
    }
    for (const auto& n : nodes_) {
      c.parent.push_back(n.parent);
      c.node_separator.push_back(n.separator);
      c.depth.push_back(n.depth);
    }
    return c;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) const {
    while (nodes_[a].depth > nodes_[b].depth) a = static_cast<std::size_t>(nodes_[a].parent);
    while (nodes_[b].depth > nodes_[a].depth) b = static_cast<std::size_t>(nodes_[b].parent);
    while (a != b) {
      a = static_cast<std::size_t>(nodes_[a].parent);
      b = static_cast<std::size_t>(nodes_[b].parent);
    }
    return a;
  }

  std::optional<Word> best_separator(std::size_t id) const {
    const auto& states = nodes_[id].states;
    for (std::size_t i = 0; i < m_.input_count(); ++i) {
      Symbol first = m_.step(states[0], i).output;
      for (auto s : states)
        if (m_.step(s, i).output != first) return Word{m_.inputs()[i]};
    }
    std::optional<Word> best;
    for (std::size_t i = 0; i < m_.input_count(); ++i) {
      std::size_t first_leaf = leaf_of_[m_.step(states[0], i).target];
      std::optional<std::size_t> common;
      for (auto s : states) {
        std::size_t l = leaf_of_[m_.step(s, i).target];
        if (l != first_leaf) common = lca(common ? *common : first_leaf, l);
      }
      if (!common) continue;
      const Word& tail = separators_[static_cast<std::size_t>(nodes_[*common].separator)];
      if (!best || tail.size() + 1 < best->size()) {
        Word w{m_.inputs()[i]};
        w.insert(w.end(), tail.begin(), tail.end());
        best = std::move(w);
      }
    }
    return best;
  }

  void split(std::size_t id, const Word& sep) {
    std::map<Word, std::size_t> child_of_output;
    std::vector<std::size_t> children;
    const auto states = nodes_[id].states;
    for (auto s : states) {
      Word out = m_.run(s, sep);
      auto [it, inserted] = child_of_output.try_emplace(std::move(out), nodes_.size());
      if (inserted) {
        Node child;
        child.parent = static_cast<std::int64_t>(id);
        child.depth = nodes_[id].depth + 1;
        nodes_.push_back(std::move(child));
      }
      nodes_[it->second].states.push_back(s);
      leaf_of_[s] = it->second;
    }
    nodes_[id].leaf = false;
    nodes_[id].separator = static_cast<std::int64_t>(separators_.size());
    separators_.push_back(sep);
  }

  const MealyMachine& m_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> leaf_of_;
  std::vector<Word> separators_;
};

}  // namespace

std::int64_t Characterization::separator_between(StateId a, StateId b) const {
  if (class_of[a] == class_of[b]) return -1;
  std::size_t x = leaf_node[class_of[a]];
  std::size_t y = leaf_node[class_of[b]];
  while (depth[x] > depth[y]) x = static_cast<std::size_t>(parent[x]);
  while (depth[y] > depth[x]) y = static_cast<std::size_t>(parent[y]);
  while (x != y) {
    x = static_cast<std::size_t>(parent[x]);
    y = static_cast<std::size_t>(parent[y]);
  }
  return node_separator[x];
}

Characterization characterize(const MealyMachine& m) {
  SplittingTree tree(m);
  tree.refine();
  return std::move(tree).result();
}

MealyMachine minimize(const MealyMachine& m) {
  MealyMachine reach = canonical(m);
  Characterization c = characterize(reach);
  std::vector<std::int64_t> rep(c.class_count, -1);
  for (StateId s = 0; s < reach.state_count(); ++s)
    if (rep[c.class_of[s]] < 0) rep[c.class_of[s]] = s;
  std::vector<std::string> names;
  std::vector<MealyMachine::Transition> table;
  for (std::size_t k = 0; k < c.class_count; ++k) {
    names.push_back(reach.state_name(static_cast<StateId>(rep[k])));
    for (std::size_t i = 0; i < reach.input_count(); ++i) {
      const auto& t = reach.step(static_cast<StateId>(rep[k]), i);
      table.push_back({c.class_of[t.target], t.output});
    }
  }
  return canonical(MealyMachine(std::move(names), c.class_of[reach.initial()], reach.inputs(),
                                std::move(table)));
}

}  // namespace plstar

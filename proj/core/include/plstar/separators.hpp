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
#include <vector>

#include "plstar/mealy.hpp"

namespace plstar {

/// Result of partition refinement over a machine's states, recorded as a
/// splitting tree. Every internal node carries a separator word whose output
/// differs between the node's children.
struct Characterization {
  /// Characterization set W: one separator per internal node, creation order.
  std::vector<Word> separators;
  /// Equivalence class (leaf) per state; equal ids mean equivalent states.
  std::vector<std::uint32_t> class_of;
  std::size_t class_count = 0;
  /// Indices into `separators` forming the identification set of each state:
  /// the separators of all ancestors of the state's leaf.
  std::vector<std::vector<std::uint32_t>> identification;

  /// Index of a separator distinguishing `a` and `b`, or -1 if equivalent.
  std::int64_t separator_between(StateId a, StateId b) const;

  // tree storage, used by separator_between
  std::vector<std::int64_t> parent;
  std::vector<std::int64_t> node_separator;
  std::vector<std::uint32_t> depth;
  std::vector<std::uint32_t> leaf_node;
};

/// Refines the state partition until it reaches the equivalence relation.
/// Splits by single-input outputs are preferred; otherwise a block is split
/// by `a` followed by the separator of the lowest common ancestor of its
/// successors' blocks, choosing the shortest such word.
Characterization characterize(const MealyMachine& m);

/// Quotient by state equivalence (restricted to reachable states).
MealyMachine minimize(const MealyMachine& m);

}  // namespace plstar

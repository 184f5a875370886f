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

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "plstar/mealy.hpp"
#include "plstar/membership_oracle.hpp"

namespace plstar {

/// Observation table (S, E, T) for Mealy machines.
///
/// S (prefixes) is prefix-closed and contains the empty word; E (suffixes)
/// holds non-empty words and includes every single input symbol. T has an
/// entry for every (u, e) with u in S ∪ S·I and e in E: the last |e| outputs
/// of u·e. Each entry costs exactly one membership query.
///
/// Scan orders are insertion order for S and E and the table's alphabet
/// order for inputs, so runs are reproducible.
class ObservationTable {
 public:
  struct Inconsistency {
    Word s1;
    Word s2;
    Symbol v;
    Word e1;
  };

  /// Builds a table over `alphabet` and fills it with membership queries.
  /// Throws Errc::invalid_argument when `prefixes` is not prefix-closed,
  /// lacks the empty word, or `suffixes` does not contain every input.
  ObservationTable(Word alphabet, std::vector<Word> prefixes, std::vector<Word> suffixes,
                   MembershipOracle& mq);

  const Word& alphabet() const { return alphabet_; }
  const std::vector<Word>& prefixes() const { return prefixes_; }
  const std::vector<Word>& suffixes() const { return suffixes_; }
  /// Rows of S·I not in S, in (S order × alphabet order).
  std::vector<Word> extensions() const;

  bool is_prefix(const Word& u) const { return prefix_index_.contains(u); }
  bool has_row(const Word& u) const { return rows_.contains(u); }

  /// Entries T(u, e) for e in E order. Throws Errc::row_not_present.
  std::vector<Word> row(const Word& u) const;
  /// T(u, e); throws Errc::row_not_present for unknown rows or suffixes.
  Word entry(const Word& u, const Word& e) const;

  /// Moves or adds `u` into S and fills the rows of its one-symbol
  /// extensions. The parent of `u` must already be in S.
  void add_prefix(const Word& u, MembershipOracle& mq);
  /// Appends `e` to E and fills the new column. No-op if already present.
  void add_suffix(const Word& e, MembershipOracle& mq);

  /// First u in S·I (scan order) whose row matches no row of S.
  std::optional<Word> find_unclosed() const;
  /// First witness (s1, s2, v, e1) with row(s1) = row(s2) and
  /// T(s1·v, e1) ≠ T(s2·v, e1).
  std::optional<Inconsistency> find_inconsistent() const;
  bool is_closed() const { return !find_unclosed(); }
  bool is_consistent() const { return !find_inconsistent(); }

  /// One state per distinct row of S. Throws Errc::table_not_closed or
  /// Errc::table_not_consistent.
  MealyMachine build_hypothesis() const;

  std::size_t distinct_prefix_rows() const;
  std::size_t cell_count() const;

 private:
  using FlatRow = Word;  // concatenation of the entries in E order

  const FlatRow& flat(const Word& u) const;
  void fill_row(const Word& u, MembershipOracle& mq);
  void ensure_extensions(const Word& s, MembershipOracle& mq);

  Word alphabet_;
  std::vector<Word> prefixes_;
  std::unordered_map<Word, std::size_t, WordHash> prefix_index_;
  std::vector<Word> suffixes_;
  std::vector<std::size_t> offsets_;  // start of each suffix's entry in a flat row
  std::size_t row_width_ = 0;
  std::unordered_map<Word, FlatRow, WordHash> rows_;
};

/// Observation table as JSON {alphabet, prefixes, suffixes, entries}.
std::string table_to_json(const ObservationTable& table, int indent = 2);

}  // namespace plstar

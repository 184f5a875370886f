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

#include "plstar/observation_table.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"
#include "plstar/error.hpp"

namespace plstar {

Word MembershipOracle::query_suffix(std::span<const Symbol> prefix,
                                    std::span<const Symbol> suffix) {
  Word full = concat(prefix, suffix);
  Word out = query(full);
  return Word(out.end() - static_cast<std::ptrdiff_t>(suffix.size()), out.end());
}

ObservationTable::ObservationTable(Word alphabet, std::vector<Word> prefixes,
                                   std::vector<Word> suffixes, MembershipOracle& mq)
    : alphabet_(std::move(alphabet)) {
  std::unordered_set<Symbol> letters(alphabet_.begin(), alphabet_.end());
  if (letters.size() != alphabet_.size())
    throw Error(Errc::invalid_argument, "alphabet contains duplicate symbols");
  auto check_symbols = [&](const Word& w) {
    for (auto a : w)
      if (!letters.contains(a))
        throw Error(Errc::invalid_argument,
                    "word '" + to_string(w) + "' uses a symbol outside the alphabet");
  };

  std::unordered_set<Word, WordHash> prefix_set;
  for (auto& p : prefixes) {
    check_symbols(p);
    if (prefix_set.insert(p).second) {
      prefix_index_.emplace(p, prefixes_.size());
      prefixes_.push_back(std::move(p));
    }
  }
  if (!prefix_set.contains(Word{}))
    throw Error(Errc::invalid_argument, "prefix set must contain the empty word");
  for (const auto& p : prefixes_) {
    if (!p.empty() && !prefix_set.contains(Word(p.begin(), p.end() - 1)))
      throw Error(Errc::invalid_argument, "prefix set is not prefix-closed at '" + to_string(p) + "'");
  }

  std::unordered_set<Word, WordHash> suffix_set;
  for (auto& e : suffixes) {
    check_symbols(e);
    if (e.empty()) throw Error(Errc::invalid_argument, "suffixes must be non-empty");
    if (suffix_set.insert(e).second) {
      offsets_.push_back(row_width_);
      row_width_ += e.size();
      suffixes_.push_back(std::move(e));
    }
  }
  for (auto a : alphabet_) {
    if (!suffix_set.contains(Word{a}))
      throw Error(Errc::invalid_argument, "suffix set must contain input '" + a.name() + "'");
  }

  for (const auto& p : prefixes_) fill_row(p, mq);
  for (const auto& p : prefixes_) ensure_extensions(p, mq);
}

void ObservationTable::fill_row(const Word& u, MembershipOracle& mq) {
  auto [it, inserted] = rows_.try_emplace(u);
  if (!inserted) return;
  FlatRow& row = it->second;
  row.reserve(row_width_);
  for (const auto& e : suffixes_) {
    Word out = mq.query_suffix(u, e);
    row.insert(row.end(), out.begin(), out.end());
  }
}

void ObservationTable::ensure_extensions(const Word& s, MembershipOracle& mq) {
  Word u = s;
  u.push_back(Symbol{});
  for (auto a : alphabet_) {
    u.back() = a;
    fill_row(u, mq);
  }
}

std::vector<Word> ObservationTable::extensions() const {
  std::vector<Word> out;
  for (const auto& s : prefixes_) {
    for (auto a : alphabet_) {
      Word u = s;
      u.push_back(a);
      if (!is_prefix(u)) out.push_back(std::move(u));
    }
  }
  return out;
}

const ObservationTable::FlatRow& ObservationTable::flat(const Word& u) const {
  auto it = rows_.find(u);
  if (it == rows_.end())
    throw Error(Errc::row_not_present, "no row for '" + to_string(u) + "'");
  return it->second;
}

std::vector<Word> ObservationTable::row(const Word& u) const {
  const FlatRow& f = flat(u);
  std::vector<Word> out;
  out.reserve(suffixes_.size());
  for (std::size_t k = 0; k < suffixes_.size(); ++k) {
    auto begin = f.begin() + static_cast<std::ptrdiff_t>(offsets_[k]);
    out.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(suffixes_[k].size()));
  }
  return out;
}

Word ObservationTable::entry(const Word& u, const Word& e) const {
  const FlatRow& f = flat(u);
  auto k = std::find(suffixes_.begin(), suffixes_.end(), e);
  if (k == suffixes_.end())
    throw Error(Errc::row_not_present, "no column for '" + to_string(e) + "'");
  auto begin = f.begin() + static_cast<std::ptrdiff_t>(offsets_[k - suffixes_.begin()]);
  return Word(begin, begin + static_cast<std::ptrdiff_t>(e.size()));
}

void ObservationTable::add_prefix(const Word& u, MembershipOracle& mq) {
  if (is_prefix(u)) return;
  if (u.empty() || !is_prefix(Word(u.begin(), u.end() - 1)))
    throw Error(Errc::invalid_argument, "parent of '" + to_string(u) + "' is not a prefix");
  for (auto a : u)
    if (std::find(alphabet_.begin(), alphabet_.end(), a) == alphabet_.end())
      throw Error(Errc::invalid_argument, "prefix uses a symbol outside the alphabet");
  prefix_index_.emplace(u, prefixes_.size());
  prefixes_.push_back(u);
  fill_row(u, mq);
  ensure_extensions(u, mq);
}

void ObservationTable::add_suffix(const Word& e, MembershipOracle& mq) {
  if (e.empty()) throw Error(Errc::invalid_argument, "suffixes must be non-empty");
  if (std::find(suffixes_.begin(), suffixes_.end(), e) != suffixes_.end()) return;
  offsets_.push_back(row_width_);
  row_width_ += e.size();
  suffixes_.push_back(e);
  // Fill in S order, then extension order, so query order is deterministic.
  auto extend = [&](const Word& u) {
    Word out = mq.query_suffix(u, e);
    auto& row = rows_.at(u);
    row.insert(row.end(), out.begin(), out.end());
  };
  for (const auto& s : prefixes_) extend(s);
  for (const auto& u : extensions()) extend(u);
}

std::optional<Word> ObservationTable::find_unclosed() const {
  std::unordered_set<FlatRow, WordHash> s_rows;
  for (const auto& s : prefixes_) s_rows.insert(flat(s));
  for (const auto& s : prefixes_) {
    for (auto a : alphabet_) {
      Word u = s;
      u.push_back(a);
      if (is_prefix(u)) continue;
      if (!s_rows.contains(flat(u))) return u;
    }
  }
  return std::nullopt;
}

std::optional<ObservationTable::Inconsistency> ObservationTable::find_inconsistent() const {
  std::unordered_map<FlatRow, std::vector<std::size_t>, WordHash> groups;
  for (std::size_t i = 0; i < prefixes_.size(); ++i) groups[flat(prefixes_[i])].push_back(i);
  for (std::size_t i = 0; i < prefixes_.size(); ++i) {
    const auto& group = groups.at(flat(prefixes_[i]));
    for (auto j : group) {
      if (j <= i) continue;
      for (auto v : alphabet_) {
        Word u1 = prefixes_[i];
        u1.push_back(v);
        Word u2 = prefixes_[j];
        u2.push_back(v);
        const FlatRow& r1 = flat(u1);
        const FlatRow& r2 = flat(u2);
        if (r1 == r2) continue;
        for (std::size_t k = 0; k < suffixes_.size(); ++k) {
          auto b1 = r1.begin() + static_cast<std::ptrdiff_t>(offsets_[k]);
          auto b2 = r2.begin() + static_cast<std::ptrdiff_t>(offsets_[k]);
          if (!std::equal(b1, b1 + static_cast<std::ptrdiff_t>(suffixes_[k].size()), b2))
            return Inconsistency{prefixes_[i], prefixes_[j], v, suffixes_[k]};
        }
      }
    }
  }
  return std::nullopt;
}

MealyMachine ObservationTable::build_hypothesis() const {
  if (!is_closed()) throw Error(Errc::table_not_closed, "observation table is not closed");
  if (!is_consistent())
    throw Error(Errc::table_not_consistent, "observation table is not consistent");
  std::unordered_map<FlatRow, StateId, WordHash> state_of;
  std::vector<const Word*> representative;
  for (const auto& s : prefixes_) {
    if (state_of.try_emplace(flat(s), static_cast<StateId>(representative.size())).second)
      representative.push_back(&s);
  }
  std::vector<std::size_t> single(alphabet_.size());
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    auto k = std::find(suffixes_.begin(), suffixes_.end(), Word{alphabet_[i]});
    single[i] = offsets_[static_cast<std::size_t>(k - suffixes_.begin())];
  }
  std::vector<std::string> names;
  std::vector<MealyMachine::Transition> table;
  for (std::size_t q = 0; q < representative.size(); ++q) {
    names.push_back("q" + std::to_string(q));
    const Word& s = *representative[q];
    const FlatRow& here = flat(s);
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      Word u = s;
      u.push_back(alphabet_[i]);
      table.push_back({state_of.at(flat(u)), here[single[i]]});
    }
  }
  return MealyMachine(std::move(names), state_of.at(flat(Word{})), alphabet_, std::move(table));
}

std::size_t ObservationTable::distinct_prefix_rows() const {
  std::unordered_set<FlatRow, WordHash> s_rows;
  for (const auto& s : prefixes_) s_rows.insert(flat(s));
  return s_rows.size();
}

std::size_t ObservationTable::cell_count() const { return rows_.size() * suffixes_.size(); }

std::string table_to_json(const ObservationTable& table, int indent) {
  using nlohmann::json;
  auto words = [](const std::vector<Word>& ws) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(to_strings(w));
    return arr;
  };
  json doc;
  doc["alphabet"] = to_strings(table.alphabet());
  doc["prefixes"] = words(table.prefixes());
  doc["suffixes"] = words(table.suffixes());
  json entries = json::array();
  auto add = [&](const Word& u) {
    json outs = json::array();
    for (const auto& cell : table.row(u)) outs.push_back(to_strings(cell));
    entries.push_back({{"prefix", to_strings(u)}, {"outputs", outs}});
  };
  for (const auto& s : table.prefixes()) add(s);
  for (const auto& u : table.extensions()) add(u);
  doc["entries"] = std::move(entries);
  return doc.dump(indent);
}

}  // namespace plstar

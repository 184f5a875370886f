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

#include "plstar/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "plstar/error.hpp"

namespace plstar {
namespace {

class Interner {
 public:
  Interner() { intern(""); }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(name), 0);
    if (inserted) {
      it->second = static_cast<std::uint32_t>(names_.size());
      names_.emplace_back(name);
    }
    return it->second;
  }

  const std::string& name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return names_.at(id);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return names_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  // deque: references stay valid while new names are appended.
  std::deque<std::string> names_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

Symbol::Symbol(std::string_view name) : id_(interner().intern(name)) {}

const std::string& Symbol::name() const { return interner().name(id_); }

std::size_t interned_symbol_count() { return interner().size(); }

Word make_word(std::initializer_list<std::string_view> names) {
  Word w;
  w.reserve(names.size());
  for (auto n : names) w.emplace_back(n);
  return w;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text == "ε") return w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) w.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return w;
}

std::string to_string(std::span<const Symbol> word, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += sep;
    out += word[i].name();
  }
  return out;
}

std::vector<std::string> to_strings(std::span<const Symbol> word) {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (auto s : word) out.push_back(s.name());
  return out;
}

Word from_strings(const std::vector<std::string>& names) {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) w.emplace_back(n);
  return w;
}

Word concat(std::span<const Symbol> a, std::span<const Symbol> b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::size_t WordHash::operator()(std::span<const Symbol> w) const noexcept {
  // FNV-1a over symbol ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto s : w) {
    h ^= s.id();
    h *= 1099511628211ULL;
  }
  h ^= w.size();
  return static_cast<std::size_t>(h);
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unknown_input_symbol: return "UnknownInputSymbol";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::overlapping_alphabets: return "OverlappingAlphabets";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::too_many_features: return "TooManyFeatures";
    case Errc::unknown_feature: return "UnknownFeature";
    case Errc::nondeterministic_projection: return "NondeterministicProjection";
    case Errc::row_not_present: return "RowNotPresent";
    case Errc::table_not_closed: return "TableNotClosed";
    case Errc::table_not_consistent: return "TableNotConsistent";
    case Errc::not_a_counterexample: return "NotACounterexample";
    case Errc::round_limit_exceeded: return "RoundLimitExceeded";
    case Errc::too_many_orders_requested: return "TooManyOrdersRequested";
    case Errc::empty_series: return "EmptySeries";
    case Errc::singleton_series: return "SingletonSeries";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::zero_variance_differences: return "ZeroVarianceDifferences";
    case Errc::zero_variance: return "ZeroVariance";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::malformed_csv: return "MalformedCsv";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::invariant_violation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace plstar

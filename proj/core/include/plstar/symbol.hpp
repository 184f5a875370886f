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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plstar {

/// An interned input or output symbol. Symbols are process-wide: the same
/// spelling always maps to the same id, so words can be compared and hashed
/// as integer sequences.
class Symbol {
 public:
  constexpr Symbol() = default;

  /// Interns `name` (thread-safe).
  explicit Symbol(std::string_view name);

  static constexpr Symbol from_id(std::uint32_t id) {
    Symbol s;
    s.id_ = id;
    return s;
  }

  constexpr std::uint32_t id() const { return id_; }
  const std::string& name() const;

  friend constexpr bool operator==(Symbol, Symbol) = default;
  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  std::uint32_t id_ = 0;
};

/// Number of symbols interned so far; every Symbol id is below this.
std::size_t interned_symbol_count();

using Word = std::vector<Symbol>;

Word make_word(std::initializer_list<std::string_view> names);
/// Splits on ',' or whitespace; "" and "ε" give the empty word.
Word parse_word(std::string_view text);
std::string to_string(std::span<const Symbol> word, std::string_view sep = ",");
std::vector<std::string> to_strings(std::span<const Symbol> word);
Word from_strings(const std::vector<std::string>& names);

Word concat(std::span<const Symbol> a, std::span<const Symbol> b);

struct WordHash {
  std::size_t operator()(std::span<const Symbol> w) const noexcept;
  std::size_t operator()(const Word& w) const noexcept {
    return (*this)(std::span<const Symbol>(w));
  }
};

}  // namespace plstar

template <>
struct std::hash<plstar::Symbol> {
  std::size_t operator()(plstar::Symbol s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id());
  }
};

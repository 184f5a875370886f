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

#include "plstar/plstar.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "plstar/sampling.hpp"

namespace plstar {

namespace {

nlohmann::json words_to_json(const std::vector<Word>& ws) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : ws) out.push_back(to_strings(w));
  return out;
}

std::vector<Word> words_from_json(const nlohmann::json& j) {
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(from_strings(w.get<std::vector<std::string>>()));
  return out;
}

void append_unique(std::vector<Word>& out, std::unordered_set<Word, WordHash>& seen,
                   const std::vector<Word>& ws) {
  for (const auto& w : ws)
    if (seen.insert(w).second) out.push_back(w);
}

}  // namespace

void OtRepository::add(std::string product_id, const ObservationTable& table) {
  entries_.push_back({std::move(product_id), table.alphabet(), table.prefixes(), table.suffixes()});
}

std::string OtRepository::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : entries_) {
    doc.push_back({{"productId", e.product_id},
                   {"alphabet", to_strings(e.alphabet)},
                   {"prefixes", words_to_json(e.prefixes)},
                   {"suffixes", words_to_json(e.suffixes)}});
  }
  return doc.dump(2) + "\n";
}

OtRepository OtRepository::from_json(std::string_view text) {
  OtRepository repo;
  try {
    auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw Error(Errc::parse_error, "repository JSON must be an array");
    for (const auto& e : doc) {
      repo.add(RepositoryEntry{e.at("productId").get<std::string>(),
                               from_strings(e.at("alphabet").get<std::vector<std::string>>()),
                               words_from_json(e.at("prefixes")),
                               words_from_json(e.at("suffixes"))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("repository JSON: ") + e.what());
  }
  return repo;
}

std::vector<Word> filter_sequences(const std::vector<Word>& seqs, const Word& alphabet) {
  std::unordered_set<Symbol> letters(alphabet.begin(), alphabet.end());
  std::vector<Word> out;
  for (const auto& w : seqs)
    if (std::all_of(w.begin(), w.end(), [&](Symbol a) { return letters.contains(a); }))
      out.push_back(w);
  return out;
}

void sort_by_alphabet(std::vector<Word>& words, const Word& alphabet) {
  std::unordered_map<Symbol, std::size_t> rank;
  for (std::size_t i = 0; i < alphabet.size(); ++i) rank.emplace(alphabet[i], i);
  auto pos = [&](Symbol a) {
    auto it = rank.find(a);
    return it == rank.end() ? alphabet.size() : it->second;
  };
  std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return pos(a[i]) < pos(b[i]);
    return false;
  });
}

TableInit adaptive_init(const OtRepository& repo, const Word& alphabet, InitShuffle shuffle) {
  TableInit init;
  init.alphabet = alphabet;

  std::unordered_set<Word, WordHash> seen_s{Word{}};
  std::vector<Word> prefixes;
  for (const auto& e : repo.entries())
    append_unique(prefixes, seen_s, filter_sequences(e.prefixes, alphabet));
  sort_by_alphabet(prefixes, alphabet);
  if (shuffle.prefixes) shuffle.prefixes->shuffle(std::span<Word>(prefixes));
  init.prefixes.push_back(Word{});
  init.prefixes.insert(init.prefixes.end(), prefixes.begin(), prefixes.end());

  std::unordered_set<Word, WordHash> seen_e;
  for (auto a : alphabet) {
    init.suffixes.push_back(Word{a});
    seen_e.insert(Word{a});
  }
  for (const auto& e : repo.entries())
    append_unique(init.suffixes, seen_e, filter_sequences(e.suffixes, alphabet));
  sort_by_alphabet(init.suffixes, alphabet);
  if (shuffle.suffixes) shuffle.suffixes->shuffle(std::span<Word>(init.suffixes));
  return init;
}

Randomization Randomization::parse(std::string_view text) {
  Randomization r;
  if (text.empty() || text == "none") return r;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    if (item == "alphabet")
      r.alphabet = true;
    else if (item == "prefixes")
      r.prefixes = true;
    else if (item == "suffixes")
      r.suffixes = true;
    else
      throw Error(Errc::invalid_argument, "unknown randomization source '" + std::string(item) +
                                              "' (expected alphabet, prefixes, suffixes)");
    start = end + 1;
  }
  return r;
}

std::string Randomization::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(alphabet, "alphabet");
  add(prefixes, "prefixes");
  add(suffixes, "suffixes");
  return out.empty() ? "none" : out;
}

FamilyResult plstar_learn_family(const ProductLine& spl, const std::vector<Configuration>& sample,
                                 const std::vector<std::size_t>& order, const FamilyOptions& options,
                                 OtRepository resume) {
  FamilyResult result;
  std::size_t start = resume.size();
  if (start > order.size())
    throw Error(Errc::invalid_argument, "repository holds more products than the order");
  for (std::size_t i = 0; i < start; ++i) {
    if (resume.entries()[i].product_id != product_id(order[i]))
      throw Error(Errc::invalid_argument, "repository entry " + std::to_string(i + 1) + " is '" +
                                              resume.entries()[i].product_id + "', order has '" +
                                              product_id(order[i]) + "'");
  }
  result.repository = std::move(resume);

  for (std::size_t pos = start; pos < order.size(); ++pos) {
    const std::size_t index = order[pos];
    if (index >= sample.size())
      throw Error(Errc::invalid_argument, "order names product " + std::to_string(index + 1) +
                                              " of a " + std::to_string(sample.size()) +
                                              "-product sample");
    const Configuration c = sample[index];
    const std::string id = product_id(index);
    try {
      MealyMachine sul = spl.derive(c);
      Word alphabet = spl.alphabet(c);
      if (options.randomize.alphabet)
        Rng::stream(options.seed, "alphabet", index).shuffle(std::span<Symbol>(alphabet));
      Rng prefix_rng = Rng::stream(options.seed, "prefixes", index);
      Rng suffix_rng = Rng::stream(options.seed, "suffixes", index);
      InitShuffle shuffle{options.randomize.prefixes ? &prefix_rng : nullptr,
                          options.randomize.suffixes ? &suffix_rng : nullptr};
      static const OtRepository kEmpty;
      TableInit init = adaptive_init(options.adaptive ? result.repository : kEmpty, alphabet, shuffle);

      MembershipOracle mq(sul);
      auto eq = make_oracle(options.oracle, sul);
      LearnResult learned = lstar_learn(mq, *eq, std::move(init), options.learner);
      if (options.verify && !is_equivalent(equivalent(learned.model, sul)))
        throw Error(Errc::invariant_violation, "learned model of " + id + " differs from the product");

      result.repository.add(id, learned.table);
      result.total += learned.metrics;
      result.products.push_back(
          ProductRun{id, c, sul.state_count(), std::move(learned.model), learned.metrics});
    } catch (const Error& e) {
      result.error = Error(e.code(), id + ": " + e.what());
      break;
    }
  }
  return result;
}

std::vector<std::size_t> new_feature_counts(const FeatureModel& fm,
                                            const std::vector<Configuration>& sample,
                                            const std::vector<std::size_t>& order) {
  std::uint64_t variable = 0;
  for (auto f : fm.non_mandatory()) variable |= std::uint64_t{1} << f;
  std::uint64_t seen = 0;
  std::vector<std::size_t> counts;
  for (auto i : order) {
    const std::uint64_t fresh = sample.at(i).mask() & variable & ~seen;
    counts.push_back(static_cast<std::size_t>(std::popcount(fresh)));
    seen |= fresh;
  }
  return counts;
}

double order_score(const std::vector<std::size_t>& new_features) {
  double d = 0;
  for (auto f : new_features)
    if (f != 0) d += 1.0 / static_cast<double>(f);
  return d;
}

double order_score(const FeatureModel& fm, const std::vector<Configuration>& sample,
                   const std::vector<std::size_t>& order) {
  return order_score(new_feature_counts(fm, sample, order));
}

std::vector<std::vector<std::size_t>> generate_orders(std::size_t n, std::size_t count,
                                                      std::uint64_t seed) {
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= n && factorial < count; ++k) factorial *= k;
  if (count > factorial)
    throw Error(Errc::too_many_orders_requested, std::to_string(count) + " distinct orders of " +
                                                     std::to_string(n) + " products do not exist");
  Rng rng = Rng::stream(seed, "orders");
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  while (out.size() < count) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    rng.shuffle(std::span<std::size_t>(p));
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::string order_to_json(const std::vector<std::size_t>& order) {
  nlohmann::json doc = nlohmann::json::array();
  for (auto i : order) doc.push_back(product_id(i));
  return doc.dump() + "\n";
}

std::vector<std::size_t> order_from_json(std::string_view text, std::size_t n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("order JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(Errc::parse_error, "order JSON must be an array of product ids");
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  for (const auto& id : doc) {
    std::string s = id.is_string() ? id.get<std::string>() : std::string();
    std::size_t k = 0;
    bool ok = s.size() > 1 && s[0] == 'p' &&
              std::all_of(s.begin() + 1, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    if (ok) k = std::stoul(s.substr(1));
    if (!ok || k < 1 || k > n)
      throw Error(Errc::validation_error, "'" + id.dump() + "' is not a product id p1..p" + std::to_string(n));
    if (used[k - 1]) throw Error(Errc::validation_error, "product " + s + " appears twice");
    used[k - 1] = true;
    order.push_back(k - 1);
  }
  if (order.size() != n)
    throw Error(Errc::validation_error, "order lists " + std::to_string(order.size()) + " of " +
                                            std::to_string(n) + " products");
  return order;
}

}  // namespace plstar

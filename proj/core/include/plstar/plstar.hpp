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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plstar/equivalence_oracle.hpp"
#include "plstar/error.hpp"
#include "plstar/lstar.hpp"
#include "plstar/product_line.hpp"
#include "plstar/random.hpp"

namespace plstar {

/// Sequences kept from one learned product. Output entries are never
/// stored: outputs differ between products.
struct RepositoryEntry {
  std::string product_id;
  Word alphabet;
  std::vector<Word> prefixes;
  std::vector<Word> suffixes;
};

/// Final observation tables of earlier products, in learning order.
class OtRepository {
 public:
  void add(std::string product_id, const ObservationTable& table);
  void add(RepositoryEntry entry) { entries_.push_back(std::move(entry)); }

  const std::vector<RepositoryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// JSON array of {productId, alphabet, prefixes, suffixes}.
  std::string to_json() const;
  /// Throws Errc::parse_error.
  static OtRepository from_json(std::string_view text);

 private:
  std::vector<RepositoryEntry> entries_;
};

/// Sequences whose every symbol is in `alphabet`, first occurrence order.
std::vector<Word> filter_sequences(const std::vector<Word>& seqs, const Word& alphabet);

/// Orders words by length, then lexicographically by position in `alphabet`.
void sort_by_alphabet(std::vector<Word>& words, const Word& alphabet);

/// Streams for the randomized initial prefix and suffix orders; either may
/// be null to keep the sorted order.
struct InitShuffle {
  Rng* prefixes = nullptr;
  Rng* suffixes = nullptr;
};

/// S0 = {ε} ∪ filtered union of repository prefixes, E0 = the alphabet as
/// one-symbol words ∪ filtered union of repository suffixes, deduplicated and
/// sorted by sort_by_alphabet, then shuffled if requested. The empty word
/// stays first. An empty repository gives the classic initialization.
TableInit adaptive_init(const OtRepository& repo, const Word& alphabet, InitShuffle shuffle = {});

/// Which randomization sources are active.
struct Randomization {
  bool alphabet = false;
  bool prefixes = false;
  bool suffixes = false;

  /// Parses "alphabet,prefixes,suffixes" (any subset, or "none"). Throws
  /// Errc::invalid_argument.
  static Randomization parse(std::string_view text);
  std::string to_string() const;
};

struct FamilyOptions {
  bool adaptive = true;
  std::uint64_t seed = 0;
  Randomization randomize;
  OracleConfig oracle;
  LearnerOptions learner;
  /// Check every learned model against its product with `equivalent`.
  bool verify = false;
};

struct ProductRun {
  std::string product_id;
  Configuration configuration;
  std::size_t sul_states = 0;
  MealyMachine model;
  LearningMetrics metrics;
};

struct FamilyResult {
  std::vector<ProductRun> products;
  LearningMetrics total;
  OtRepository repository;
  /// Set when the run stopped early; `products` then holds the completed
  /// prefix of the order.
  std::optional<Error> error;
};

/// Learns `sample` in `order` (indices into the sample; product ids are
/// sample positions). Adaptive runs initialize each product from the
/// repository of its predecessors; non-adaptive runs use the classic
/// initialization. Random draws depend only on (seed, source, product id),
/// never on the position in the order. Passing a repository resumes a run:
/// its entries must name the first products of the order, which are
/// skipped. With `verify`, a learned model that is not equivalent to its
/// product stops the run with Errc::invariant_violation.
FamilyResult plstar_learn_family(const ProductLine& spl, const std::vector<Configuration>& sample,
                                 const std::vector<std::size_t>& order, const FamilyOptions& options,
                                 OtRepository resume = {});

/// F_i: non-mandatory features of each product in order not present in any
/// earlier product.
std::vector<std::size_t> new_feature_counts(const FeatureModel& fm,
                                            const std::vector<Configuration>& sample,
                                            const std::vector<std::size_t>& order);
/// D = sum over i of (F_i = 0 ? 0 : 1 / F_i).
double order_score(const std::vector<std::size_t>& new_features);
double order_score(const FeatureModel& fm, const std::vector<Configuration>& sample,
                   const std::vector<std::size_t>& order);

/// `count` distinct uniformly drawn permutations of 0..n-1. Throws
/// Errc::too_many_orders_requested when count > n!.
std::vector<std::vector<std::size_t>> generate_orders(std::size_t n, std::size_t count,
                                                      std::uint64_t seed);

/// Order files are JSON arrays of product ids.
std::string order_to_json(const std::vector<std::size_t>& order);
/// Throws Errc::parse_error or Errc::validation_error unless the ids form a
/// permutation of the n sample positions.
std::vector<std::size_t> order_from_json(std::string_view text, std::size_t n);

}  // namespace plstar

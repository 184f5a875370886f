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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plstar/plstar.hpp"
#include "plstar/stats.hpp"

namespace plstar {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t orders = 20;
  std::size_t reps = 10;
  Randomization randomize{true, true, true};
  OracleConfig oracle;
  /// Cross-check every learned model with `equivalent`.
  bool verify = false;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 0;
};

inline constexpr std::array<std::string_view, 7> kMetricNames = {
    "rounds", "mq_resets", "mq_symbols", "eq_resets", "eq_symbols", "total_resets", "total_symbols"};

double metric_value(const LearningMetrics& m, std::string_view name);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

/// Runs f(0..n-1) on up to `jobs` threads. The first exception (by index) is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& f);

struct CompareRow {
  std::size_t order_id = 0;
  std::vector<std::size_t> order;
  double d = 0;
  LearningMetrics plstar;
  LearningMetrics baseline;  // non-adaptive
};

struct MetricSummary {
  std::string metric;
  stats::Description plstar;
  stats::Description baseline;
  /// Paired one-sided test of PL* < non-adaptive; absent when the test is
  /// undefined (see `test_error`).
  std::optional<stats::TestResult> test;
  std::string test_error;
  std::optional<double> improvement;
};

struct Comparison {
  std::vector<CompareRow> rows;
  std::vector<MetricSummary> summary;
  /// Set when a family run failed; rows then hold the orders before it.
  std::optional<Error> error;
};

/// Learns the sample under `config.orders` seeded random orders with PL*
/// and with the non-adaptive learner. Both arms use the same random draws.
/// Throws Errc::invariant_violation if the non-adaptive totals differ
/// between orders.
Comparison run_compare(const ProductLine& spl, const std::vector<Configuration>& sample,
                       const ExperimentConfig& config);

std::string compare_csv(const Comparison& c);
std::string compare_summary_csv(const std::vector<MetricSummary>& summary);

struct OrderEffectRow {
  std::size_t rep = 0;
  std::string label;  // "best" or "worst"
  LearningMetrics metrics;
};

struct EffectSummary {
  std::string metric;
  stats::Description best;
  stats::Description worst;
  /// Two-sided unpaired test; absent when undefined (see `test_error`).
  std::optional<stats::TestResult> test;
  std::string test_error;
};

struct OrderEffect {
  std::vector<OrderEffectRow> rows;
  std::vector<EffectSummary> summary;
  std::optional<Error> error;
};

/// Runs PL* `config.reps` times on each order, repetition r using the seed
/// mix_seed(config.seed, r). Throws Errc::invalid_argument for fewer than
/// two repetitions.
OrderEffect run_order_effect(const ProductLine& spl, const std::vector<Configuration>& sample,
                             const std::vector<std::size_t>& best,
                             const std::vector<std::size_t>& worst, const ExperimentConfig& config);

std::string order_effect_csv(const OrderEffect& e);
std::string order_effect_summary_csv(const std::vector<EffectSummary>& summary);

/// Orders of the rows with the fewest and the most PL* total resets (first
/// row wins ties).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> extreme_orders(const Comparison& c);

/// Rows of a comparison CSV. Throws Errc::malformed_csv.
std::vector<CompareRow> parse_compare_csv(std::string_view text);

struct CorrelationResult {
  std::string metric;  // "total_resets" or "total_symbols"
  stats::TestResult test;
};

/// Pearson r of D against PL* total resets and total symbols. Throws
/// Errc::malformed_csv, or the stats errors for degenerate columns.
std::vector<CorrelationResult> correlate(const std::vector<CompareRow>& rows);
std::string correlation_csv(const std::vector<CorrelationResult>& results);
/// D, total_resets, total_symbols per order.
std::string scatter_csv(const std::vector<CompareRow>& rows);

}  // namespace plstar

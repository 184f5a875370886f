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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plstar/feature_model.hpp"

namespace plstar {

struct SamplingSpec {
  std::size_t t = 3;
  /// Feature indices that take part in tuples.
  std::vector<std::size_t> universe;

  /// t-wise over the model's non-mandatory features. Throws
  /// Errc::invalid_argument unless 1 <= t <= |universe|.
  static SamplingSpec for_model(const FeatureModel& fm, std::size_t t = 3);
};

/// A t-tuple: `features` holds exactly t universe bits, `values` the
/// selected subset of them.
struct FeatureTuple {
  std::uint64_t features = 0;
  std::uint64_t values = 0;

  bool covered_by(Configuration c) const { return (c.mask() & features) == values; }
  friend auto operator<=>(const FeatureTuple&, const FeatureTuple&) = default;
};

/// Every assignment of t distinct universe features that some valid
/// configuration exhibits, sorted. Propagates Errc::too_many_features.
std::vector<FeatureTuple> enumerate_valid_tuples(const FeatureModel& fm, const SamplingSpec& spec);

/// Chvátal's greedy cover over the valid configurations: take the candidate
/// covering most uncovered tuples (ties to the first in configuration_less
/// order) until every tuple is covered.
std::vector<Configuration> chvatal_sample(const FeatureModel& fm, const SamplingSpec& spec);

/// Product ids "p1".."pn" by sample position.
std::string product_id(std::size_t position);

/// JSON array of feature-name arrays (all selected features).
std::string sample_to_json(const FeatureModel& fm, const std::vector<Configuration>& sample);
/// Throws Errc::parse_error, Errc::unknown_feature, or Errc::validation_error
/// for invalid or duplicate configurations.
std::vector<Configuration> sample_from_json(const FeatureModel& fm, std::string_view text);

}  // namespace plstar

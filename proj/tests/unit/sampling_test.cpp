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


#include <algorithm>
#include <set>

#include "check_errc.hpp"
#include "plstar/sampling.hpp"
#include "test_support.hpp"

using namespace plstar;

namespace {

FeatureModel parse(const char* json) { return parse_feature_model_json(json); }

// Tuples that some valid configuration exhibits, found by checking every
// t-subset of the universe against every valid configuration.
std::set<std::pair<std::uint64_t, std::uint64_t>> brute_tuples(const FeatureModel& fm,
                                                               const SamplingSpec& spec) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  auto configs = plstar::testing::brute_force_configurations(fm);
  const auto& u = spec.universe;
  std::vector<bool> pick(u.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(spec.t), true);
  do {
    std::uint64_t features = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (pick[i]) features |= std::uint64_t{1} << u[i];
    for (auto c : configs) out.insert({features, c.mask() & features});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_CASE("t=1, one optional feature gives both values") {
  FeatureModel fm = parse(R"({"features": {"name": "R", "children": [{"name": "B", "kind": "optional"}]}})");
  auto spec = SamplingSpec::for_model(fm, 1);
  auto tuples = enumerate_valid_tuples(fm, spec);
  REQUIRE(tuples.size() == 2);
  std::uint64_t b = std::uint64_t{1} << fm.require("B");
  CHECK(std::count(tuples.begin(), tuples.end(), FeatureTuple{b, b}) == 1);
  CHECK(std::count(tuples.begin(), tuples.end(), FeatureTuple{b, 0}) == 1);
  CHECK(chvatal_sample(fm, spec).size() == 2);
}

TEST_CASE("t=2, alternative pair excludes both selected") {
  FeatureModel fm = parse(R"({"features": {"name": "R", "children": [
      {"name": "D", "kind": "alternative", "group": "g"},
      {"name": "E", "kind": "alternative", "group": "g"}]}})");
  auto tuples = enumerate_valid_tuples(fm, SamplingSpec::for_model(fm, 2));
  std::uint64_t de = (std::uint64_t{1} << fm.require("D")) | (std::uint64_t{1} << fm.require("E"));
  CHECK(std::count(tuples.begin(), tuples.end(), FeatureTuple{de, de}) == 0);
  CHECK(tuples.size() == 2);  // (D, !E) and (!D, E)
}

TEST_CASE("sample SPL, t=2: tuples match the brute-force count") {
  FeatureModel fm = load_feature_model((plstar::testing::fixture_dir() / "sample_spl" / "model.json").string());
  auto spec = SamplingSpec::for_model(fm, 2);
  auto tuples = enumerate_valid_tuples(fm, spec);
  auto brute = brute_tuples(fm, spec);
  CHECK(tuples.size() == brute.size());
  for (const auto& t : tuples) CHECK(brute.count({t.features, t.values}) == 1);
}

TEST_CASE("t=1, three independent optional features: greedy takes all, then none") {
  FeatureModel fm = parse(R"({"features": {"name": "R", "children": [
      {"name": "X", "kind": "optional"}, {"name": "Y", "kind": "optional"},
      {"name": "Z", "kind": "optional"}]}})");
  auto sample = chvatal_sample(fm, SamplingSpec::for_model(fm, 1));
  REQUIRE(sample.size() == 2);
  CHECK(fm.variable_names(sample[0]) == std::vector<std::string>{"X", "Y", "Z"});
  CHECK(fm.variable_names(sample[1]).empty());
}

TEST_CASE("t = |universe| takes every distinct variable part") {
  FeatureModel fm = load_feature_model((plstar::testing::fixture_dir() / "sample_spl" / "model.json").string());
  auto spec = SamplingSpec::for_model(fm, fm.non_mandatory().size());
  auto sample = chvatal_sample(fm, spec);
  CHECK(sample.size() == valid_configurations(fm).size());  // core features are fixed here
  std::set<std::uint64_t> masks;
  for (auto c : sample) masks.insert(c.mask());
  CHECK(masks.size() == sample.size());
}

TEST_CASE("SamplingSpec bounds") {
  FeatureModel fm = parse(R"({"features": {"name": "R", "children": [{"name": "B", "kind": "optional"}]}})");
  CHECK_ERRC(SamplingSpec::for_model(fm, 0), Errc::invalid_argument);
  CHECK_ERRC(SamplingSpec::for_model(fm, 2), Errc::invalid_argument);
}

TEST_CASE("property: every valid tuple is covered, sampling is deterministic") {
  Rng rng(41);
  for (int k = 0; k < 25; ++k) {
    FeatureModel fm = plstar::testing::random_feature_model(rng, 3 + rng.below(8));
    if (plstar::testing::brute_force_configurations(fm).empty()) continue;
    for (std::size_t t = 1; t <= 3; ++t) {
      if (t > fm.non_mandatory().size()) break;
      auto spec = SamplingSpec::for_model(fm, t);
      auto tuples = enumerate_valid_tuples(fm, spec);
      CHECK(tuples.size() == brute_tuples(fm, spec).size());
      auto sample = chvatal_sample(fm, spec);
      CHECK(sample == chvatal_sample(fm, spec));
      CHECK(sample.size() <= tuples.size());
      for (auto c : sample) CHECK(plstar::testing::rule_valid(fm, c));
      for (const auto& tp : tuples)
        CHECK(std::any_of(sample.begin(), sample.end(), [&](Configuration c) { return tp.covered_by(c); }));
    }
  }
}

TEST_CASE("sample JSON round-trip and validation") {
  FeatureModel fm = load_feature_model((plstar::testing::fixture_dir() / "sample_spl" / "model.json").string());
  auto sample = chvatal_sample(fm, SamplingSpec::for_model(fm, 2));
  CHECK(sample_from_json(fm, sample_to_json(fm, sample)) == sample);
  CHECK_ERRC(sample_from_json(fm, R"([["Root","A","C","D","F"],["Root","A","C","D","F"]])"),
             Errc::validation_error);
  CHECK_ERRC(sample_from_json(fm, R"([["Root","A","C","D","E","F"]])"), Errc::validation_error);
  CHECK_ERRC(sample_from_json(fm, R"([["Root","Q"]])"), Errc::unknown_feature);
  CHECK_ERRC(sample_from_json(fm, "[1"), Errc::parse_error);
}

TEST_CASE("product ids") {
  CHECK(product_id(0) == "p1");
  CHECK(product_id(14) == "p15");
}

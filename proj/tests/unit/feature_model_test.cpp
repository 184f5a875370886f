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

#include "check_errc.hpp"
#include "plstar/feature_model.hpp"
#include "test_support.hpp"

using namespace plstar;

namespace {

FeatureModel sample_spl() {
  return load_feature_model((plstar::testing::fixture_dir() / "sample_spl" / "model.json").string());
}

}  // namespace

TEST_CASE("sample SPL has 28 valid configurations") {
  FeatureModel fm = sample_spl();
  auto all = valid_configurations(fm);
  CHECK(all.size() == 28);
  CHECK(all.size() == plstar::testing::brute_force_configurations(fm).size());
}

TEST_CASE("root-only model has exactly one configuration") {
  FeatureModel fm = parse_feature_model_json(R"({"features": {"name": "R"}})");
  auto all = valid_configurations(fm);
  REQUIRE(all.size() == 1);
  CHECK(all[0].mask() == 1);
}

TEST_CASE("alternative members exclude each other") {
  FeatureModel fm = sample_spl();
  Configuration both = fm.configuration({"Root", "A", "C", "D", "E", "F"});
  CHECK_FALSE(is_valid(fm, both));
  auto all = valid_configurations(fm);
  CHECK(std::find(all.begin(), all.end(), both) == all.end());
}

TEST_CASE("is_valid by rules") {
  FeatureModel fm = sample_spl();
  CHECK(is_valid(fm, std::vector<std::string>{"Root", "A", "C", "D", "F"}));
  CHECK_FALSE(is_valid(fm, std::vector<std::string>{"Root"}));  // mandatory A, C missing
  CHECK_FALSE(is_valid(fm, std::vector<std::string>{"Root", "A", "C", "D"}));  // empty or-group
  CHECK_ERRC(is_valid(fm, std::vector<std::string>{"Root", "Z"}), Errc::unknown_feature);
}

TEST_CASE("core and non-mandatory features") {
  FeatureModel fm = sample_spl();
  CHECK(fm.is_core(fm.require("A")));
  CHECK_FALSE(fm.is_core(fm.require("B")));
  std::vector<std::string> names;
  for (auto i : fm.non_mandatory()) names.push_back(fm.feature(i).name);
  CHECK(names == std::vector<std::string>{"B", "D", "E", "F", "G", "H"});
}

TEST_CASE("cross-tree constraints restrict the configuration set") {
  FeatureModel fm = parse_feature_model_json(R"j({
    "features": {"name": "R", "children": [
      {"name": "X", "kind": "optional"}, {"name": "Y", "kind": "optional"}]},
    "constraints": ["!(X & Y)"]})j");
  CHECK(valid_configurations(fm).size() == 3);
}

TEST_CASE("malformed models") {
  CHECK_ERRC(parse_feature_model_json("{"), Errc::parse_error);
  CHECK_ERRC(parse_feature_model_json(R"({"features": {"name": "R", "children": [
      {"name": "X", "kind": "alternative", "group": "g"}]}})"),
             Errc::validation_error);
  CHECK_ERRC(parse_feature_model_json(R"({"features": {"name": "R", "children": [
      {"name": "R", "kind": "optional"}]}})"),
             Errc::validation_error);
  CHECK_ERRC(parse_feature_model_json(R"({"features": {"name": "R"}, "constraints": ["Q"]})"),
             Errc::unknown_feature);
}

TEST_CASE("enumeration limit") {
  std::vector<Feature> fs{{"R", FeatureKind::root, -1, "", {}}};
  for (int i = 1; i <= 31; ++i) fs.push_back({"F" + std::to_string(i), FeatureKind::optional, 0, "", {}});
  FeatureModel fm(std::move(fs), {});
  CHECK_ERRC(valid_configurations(fm), Errc::too_many_features);
}

TEST_CASE("FeatureExpr precedence and printing") {
  FeatureModel fm = parse_feature_model_json(R"({"features": {"name": "R", "children": [
      {"name": "a", "kind": "optional"}, {"name": "b", "kind": "optional"},
      {"name": "c", "kind": "optional"}]}})");
  FeatureExpr e = FeatureExpr::parse("a | b & c").bind(fm);
  // a alone separates a | (b & c) from (a | b) & c
  CHECK(e.evaluate(fm.configuration({"R", "a"})));
  CHECK_FALSE(e.evaluate(fm.configuration({"R", "b"})));
  CHECK(e.evaluate(fm.configuration({"R", "b", "c"})));
  CHECK(FeatureExpr::parse("!(a | b) & c").to_string() == "!(a | b) & c");
  CHECK(FeatureExpr::parse("true").bind(fm).evaluate(Configuration(1)));
  CHECK_ERRC(FeatureExpr::parse("a &"), Errc::parse_error);
  CHECK_ERRC(FeatureExpr::parse("a & z").bind(fm), Errc::unknown_feature);
  auto names = FeatureExpr::parse("a | !c").feature_names();
  CHECK(names == std::vector<std::string>{"a", "c"});
}

TEST_CASE("property: is_valid agrees with enumeration on every subset") {
  Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    FeatureModel fm = plstar::testing::random_feature_model(rng, 2 + rng.below(9));
    REQUIRE(fm.size() <= 12);
    auto all = valid_configurations(fm);
    auto less = [&](Configuration a, Configuration b) { return configuration_less(a, b, fm.size()); };
    auto brute = plstar::testing::brute_force_configurations(fm);
    std::sort(brute.begin(), brute.end(), less);
    CHECK(all == brute);
    CHECK(std::is_sorted(all.begin(), all.end(), less));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << fm.size()); ++m) {
      Configuration c(m);
      CHECK(is_valid(fm, c) == std::binary_search(all.begin(), all.end(), c, less));
    }
  }
}

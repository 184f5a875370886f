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
#include "plstar/fsm_io.hpp"
#include "plstar/product_line.hpp"
#include "test_support.hpp"

using namespace plstar;

namespace {

std::filesystem::path fts_dir() { return plstar::testing::fixture_dir() / "fts_small"; }
std::filesystem::path comfort_dir() { return plstar::testing::fixture_dir() / "comfort"; }

std::unique_ptr<ProductLine> small_fts() {
  return load_fts_product_line(fts_dir() / "model.json", fts_dir() / "fts.json");
}

bool subset(const Word& a, const Word& b) {
  return std::all_of(a.begin(), a.end(), [&](Symbol s) { return std::find(b.begin(), b.end(), s) != b.end(); });
}

}  // namespace

TEST_CASE("FTS: selecting X only gives a 2-state product") {
  auto spl = small_fts();
  const auto& fm = spl->model();
  MealyMachine m = spl->derive(fm.configuration({"Toy", "Core", "X"}));
  CHECK(m.state_count() == 2);
  CHECK(m.inputs() == make_word({"go", "x"}));
  CHECK(m.run(make_word({"go", "x", "go", "x"})) == make_word({"ok", "a", "up", "b"}));
}

TEST_CASE("FTS: full configuration keeps every enabled transition") {
  auto spl = small_fts();
  const auto& fm = spl->model();
  MealyMachine m = spl->derive(fm.configuration({"Toy", "Core", "X", "Y"}));
  CHECK(m.state_count() == 3);
  CHECK(m.run(make_word({"go", "y", "x", "x", "x", "go"})) == make_word({"hi", "d", "a", "b", "a", "up"}));
}

TEST_CASE("FTS: all-true guards keep every transition") {
  const char* text = R"({
    "states": ["p", "q"], "initial": "p", "inputs": ["a", "b"],
    "featureAlphabet": {"Core": ["a"], "X": ["b"]},
    "transitions": [
      {"from": "p", "input": "a", "output": "1", "to": "q"},
      {"from": "q", "input": "a", "output": "2", "to": "p"},
      {"from": "p", "input": "b", "output": "3", "to": "p"},
      {"from": "q", "input": "b", "output": "4", "to": "q"}]})";
  FeatureModel fm = load_feature_model((fts_dir() / "model.json").string());
  FtsProductLine spl(fm, [&](const FeatureModel& m) { return parse_fts_json(text, m); });
  MealyMachine d = spl.derive(fm.configuration({"Toy", "Core", "X", "Y"}));
  CHECK(d.state_count() == 2);
  CHECK(d.run(make_word({"b", "a", "b", "a"})) == make_word({"3", "1", "4", "2"}));
}

TEST_CASE("FTS: disabled transition is completed by a quiescent self-loop") {
  auto spl = small_fts();
  const auto& fm = spl->model();
  // without X the x input leaves the alphabet; with X but from s2 no x edge exists
  MealyMachine m = spl->derive(fm.configuration({"Toy", "Core", "X", "Y"}));
  CHECK(m.run(make_word({"y", "x", "x"})) == make_word({"c", "0", "0"}));
  MealyMachine core = spl->derive(fm.configuration({"Toy", "Core"}));
  CHECK(core.inputs() == make_word({"go"}));
  CHECK(core.state_count() == 1);
  CHECK(core.run(make_word({"go"})) == make_word({"ok"}));
}

TEST_CASE("FTS: product alphabets") {
  auto spl = small_fts();
  const auto& fm = spl->model();
  auto* fts = dynamic_cast<FtsProductLine*>(spl.get());
  REQUIRE(fts != nullptr);
  CHECK(spl->alphabet(fm.configuration({"Toy", "Core", "X", "Y"})) == fts->fts().inputs());
  Word no_x = spl->alphabet(fm.configuration({"Toy", "Core", "Y"}));
  CHECK(std::find(no_x.begin(), no_x.end(), Symbol("x")) == no_x.end());
  Word with_x = spl->alphabet(fm.configuration({"Toy", "Core", "X", "Y"}));
  Word diff;
  for (auto s : with_x)
    if (std::find(no_x.begin(), no_x.end(), s) == no_x.end()) diff.push_back(s);
  CHECK(diff == make_word({"x"}));
}

TEST_CASE("FTS property: every valid product is total over its alphabet, alphabets monotone") {
  auto spl = small_fts();
  const auto& fm = spl->model();
  auto all = valid_configurations(fm);
  for (auto c : all) {
    MealyMachine m = spl->derive(c);  // the constructor enforces totality and determinism
    CHECK(m.inputs() == spl->alphabet(c));
    for (auto d : all)
      if ((c.mask() & d.mask()) == c.mask()) CHECK(subset(spl->alphabet(c), spl->alphabet(d)));
  }
}

TEST_CASE("FTS errors") {
  FeatureModel fm = load_feature_model((fts_dir() / "model.json").string());
  auto make = [&](const std::string& transitions, const std::string& alphabet) {
    std::string text = R"({"states": ["p"], "initial": "p", "inputs": ["a", "b"], "featureAlphabet": )" +
                       alphabet + R"(, "transitions": [)" + transitions + "]}";
    return FtsProductLine(fm, [&](const FeatureModel& m) { return parse_fts_json(text, m); });
  };
  const std::string ok_alpha = R"({"Core": ["a"], "X": ["b"]})";
  auto dup = make(R"({"from": "p", "input": "a", "output": "1", "to": "p"},
                     {"from": "p", "input": "a", "output": "2", "to": "p", "guard": "X"})",
                  ok_alpha);
  CHECK_ERRC(dup.derive(fm.configuration({"Toy", "Core", "X"})), Errc::nondeterministic_projection);
  CHECK_NOTHROW(dup.derive(fm.configuration({"Toy", "Core"})));
  CHECK_ERRC(make("", R"({"Core": ["a"]})"), Errc::validation_error);
  CHECK_ERRC(make("", R"({"Core": ["a"], "X": ["a", "b"]})"), Errc::validation_error);
  CHECK_ERRC(make("", R"({"Core": ["a"], "Q": ["b"]})"), Errc::unknown_feature);
  CHECK_ERRC(make(R"({"from": "p", "input": "a", "output": "1", "to": "z"})", ok_alpha),
             Errc::validation_error);
  CHECK_ERRC(make(R"({"from": "p", "input": "a", "output": "1", "to": "p", "guard": "Q"})", ok_alpha),
             Errc::unknown_feature);
}

TEST_CASE("components: products are compositions in feature order") {
  auto spl = load_component_product_line(comfort_dir() / "model.json", comfort_dir() / "components");
  const auto& fm = spl->model();
  Configuration c = fm.configuration({"Comfort", "Base", "Security", "Lock", "Heating", "Boost"});
  REQUIRE(is_valid(fm, c));
  CHECK(spl->alphabet(c) == make_word({"pwr", "mode", "lock", "boost"}));
  std::vector<MealyMachine> parts;
  for (const char* f : {"Base", "Lock", "Boost"})
    parts.push_back(read_fsm_file(comfort_dir() / "components" / (std::string(f) + ".fsm")));
  MealyMachine expected = compose(parts);
  MealyMachine m = spl->derive(c);
  CHECK(m.inputs() == expected.inputs());
  CHECK(is_equivalent(equivalent(m, expected)));
  CHECK(m.state_count() == expected.state_count());
}

TEST_CASE("components: loader errors") {
  auto tmp = std::filesystem::temp_directory_path() / "plstar_components_test";
  std::filesystem::remove_all(tmp);
  std::filesystem::create_directories(tmp);
  write_text_file(tmp / "Nope.fsm", "inputs z\ninitial s\ns z / 0 -> s\n");
  CHECK_ERRC(load_component_product_line(comfort_dir() / "model.json", tmp), Errc::unknown_feature);
  std::filesystem::remove(tmp / "Nope.fsm");
  write_text_file(tmp / "Lock.fsm", "inputs z\ninitial s\ns z / 0 -> s\n");
  write_text_file(tmp / "Alarm.fsm", "inputs z\ninitial s\ns z / 1 -> s\n");
  CHECK_ERRC(load_component_product_line(comfort_dir() / "model.json", tmp), Errc::overlapping_alphabets);
  std::filesystem::remove_all(tmp);
  CHECK_ERRC(load_component_product_line(comfort_dir() / "model.json", tmp), Errc::io_error);
}

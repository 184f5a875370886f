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

#include "plstar/product_line.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "plstar/error.hpp"
#include "plstar/fsm_io.hpp"

namespace plstar {

FeaturedTransitionSystem::FeaturedTransitionSystem(
    const FeatureModel& model, std::vector<std::string> states, std::string initial, Word inputs,
    const std::map<std::string, Word>& feature_alphabet, std::vector<Transition> transitions)
    : states_(std::move(states)), initial_(std::move(initial)), inputs_(std::move(inputs)) {
  std::unordered_set<std::string> state_set(states_.begin(), states_.end());
  if (state_set.size() != states_.size())
    throw Error(Errc::validation_error, "FTS has duplicate states");
  if (!state_set.contains(initial_))
    throw Error(Errc::validation_error, "FTS initial state '" + initial_ + "' is not a state");

  std::unordered_map<Symbol, std::size_t> owner;
  for (const auto& [feature, symbols] : feature_alphabet) {
    std::size_t f = model.require(feature);
    for (auto a : symbols) {
      if (std::find(inputs_.begin(), inputs_.end(), a) == inputs_.end())
        throw Error(Errc::validation_error,
                    "feature alphabet of '" + feature + "' names unknown input '" + a.name() + "'");
      if (!owner.emplace(a, f).second)
        throw Error(Errc::validation_error, "input '" + a.name() + "' is owned by two features");
    }
  }
  for (auto a : inputs_) {
    auto it = owner.find(a);
    if (it == owner.end())
      throw Error(Errc::validation_error, "input '" + a.name() + "' is not owned by any feature");
    owner_.push_back(it->second);
  }
  if (owner.size() != inputs_.size())
    throw Error(Errc::validation_error, "FTS inputs contain duplicates");

  for (auto& t : transitions) {
    if (!state_set.contains(t.from) || !state_set.contains(t.to))
      throw Error(Errc::validation_error,
                  "transition " + t.from + " -> " + t.to + " references an unknown state");
    if (!owner.contains(t.input))
      throw Error(Errc::validation_error,
                  "transition from " + t.from + " uses unknown input '" + t.input.name() + "'");
    t.guard = t.guard.bind(model);
    transitions_.push_back(std::move(t));
  }
}

Word product_alphabet(const FeaturedTransitionSystem& fts, Configuration c) {
  Word out;
  for (std::size_t i = 0; i < fts.inputs().size(); ++i)
    if (c.has(fts.input_owner()[i])) out.push_back(fts.inputs()[i]);
  return out;
}

MealyMachine derive(const FeaturedTransitionSystem& fts, Configuration c) {
  const Word alphabet = product_alphabet(fts, c);
  std::unordered_map<Symbol, std::size_t> input_index;
  for (std::size_t i = 0; i < alphabet.size(); ++i) input_index.emplace(alphabet[i], i);
  std::unordered_map<std::string, std::size_t> state_index;
  for (std::size_t s = 0; s < fts.states().size(); ++s) state_index.emplace(fts.states()[s], s);

  const std::size_t k = alphabet.size();
  std::vector<std::optional<std::pair<std::size_t, Symbol>>> edges(fts.states().size() * k);
  for (const auto& t : fts.transitions()) {
    auto in = input_index.find(t.input);
    if (in == input_index.end() || !t.guard.evaluate(c)) continue;
    auto& slot = edges[state_index.at(t.from) * k + in->second];
    if (slot)
      throw Error(Errc::nondeterministic_projection,
                  "two enabled transitions from '" + t.from + "' on '" + t.input.name() + "'");
    slot.emplace(state_index.at(t.to), t.output);
  }

  std::vector<std::int64_t> renamed(fts.states().size(), -1);
  std::vector<std::size_t> order{state_index.at(fts.initial())};
  renamed[order[0]] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = edges[order[head] * k + i];
      if (e && renamed[e->first] < 0) {
        renamed[e->first] = static_cast<std::int64_t>(order.size());
        order.push_back(e->first);
      }
    }
  }
  std::vector<std::string> names;
  std::vector<MealyMachine::Transition> table;
  for (std::size_t q = 0; q < order.size(); ++q) {
    names.push_back(fts.states()[order[q]]);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = edges[order[q] * k + i];
      if (e)
        table.push_back({static_cast<StateId>(renamed[e->first]), e->second});
      else
        table.push_back({static_cast<StateId>(q), kQuiescence});
    }
  }
  return MealyMachine(std::move(names), 0, alphabet, std::move(table));
}

namespace {

const nlohmann::json& field(const nlohmann::json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name))
    throw Error(Errc::parse_error, std::string("FTS JSON lacks '") + name + "'");
  return obj[name];
}

std::string string_field(const nlohmann::json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_string()) throw Error(Errc::parse_error, std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

FeaturedTransitionSystem parse_fts_json(std::string_view text, const FeatureModel& model) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("FTS JSON: ") + e.what());
  }
  try {
    auto states = field(doc, "states").get<std::vector<std::string>>();
    auto initial = string_field(doc, "initial");
    Word inputs = from_strings(field(doc, "inputs").get<std::vector<std::string>>());
    std::map<std::string, Word> alphabet;
    for (const auto& [feature, syms] : field(doc, "featureAlphabet").items())
      alphabet.emplace(feature, from_strings(syms.get<std::vector<std::string>>()));
    std::vector<FeaturedTransitionSystem::Transition> transitions;
    std::size_t index = 0;
    for (const auto& t : field(doc, "transitions")) {
      ++index;
      FeaturedTransitionSystem::Transition tr;
      tr.from = string_field(t, "from");
      tr.input = Symbol(string_field(t, "input"));
      tr.output = Symbol(string_field(t, "output"));
      tr.to = string_field(t, "to");
      tr.guard = t.contains("guard") ? FeatureExpr::parse(t["guard"].get<std::string>()) : FeatureExpr();
      transitions.push_back(std::move(tr));
    }
    return FeaturedTransitionSystem(model, std::move(states), std::move(initial), std::move(inputs),
                                    alphabet, std::move(transitions));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("FTS JSON: ") + e.what());
  }
}

ComponentProductLine::ComponentProductLine(FeatureModel model,
                                           std::map<std::string, MealyMachine> components)
    : ProductLine(std::move(model)) {
  std::unordered_set<Symbol> seen;
  for (auto& [name, m] : components) {
    for (auto a : m.inputs())
      if (!seen.insert(a).second)
        throw Error(Errc::overlapping_alphabets,
                    "input '" + a.name() + "' appears in more than one component");
    components_.emplace(this->model().require(name), std::move(m));
  }
}

Word ComponentProductLine::alphabet(Configuration c) const {
  Word out;
  for (const auto& [feature, m] : components_)
    if (c.has(feature)) out.insert(out.end(), m.inputs().begin(), m.inputs().end());
  return out;
}

MealyMachine ComponentProductLine::derive(Configuration c) const {
  std::vector<MealyMachine> parts;
  for (const auto& [feature, m] : components_)
    if (c.has(feature)) parts.push_back(m);
  if (parts.empty()) return MealyMachine({"()"}, 0, Word{}, {});
  return compose(parts);
}

std::unique_ptr<ProductLine> load_fts_product_line(const std::filesystem::path& model_path,
                                                   const std::filesystem::path& fts_path) {
  FeatureModel model = load_feature_model(model_path.string());
  std::string text = read_text_file(fts_path);
  try {
    return std::make_unique<FtsProductLine>(
        std::move(model), [&](const FeatureModel& fm) { return parse_fts_json(text, fm); });
  } catch (const Error& e) {
    throw Error(e.code(), fts_path.string() + ": " + e.what());
  }
}

std::unique_ptr<ProductLine> load_component_product_line(const std::filesystem::path& model_path,
                                                         const std::filesystem::path& dir) {
  FeatureModel model = load_feature_model(model_path.string());
  if (!std::filesystem::is_directory(dir))
    throw Error(Errc::io_error, "component directory '" + dir.string() + "' does not exist");
  std::map<std::string, MealyMachine> components;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".fsm") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::string feature = f.stem().string();
    if (!model.index_of(feature))
      throw Error(Errc::unknown_feature,
                  f.string() + ": no feature named '" + feature + "' in the model");
    components.emplace(feature, read_fsm_file(f));
  }
  return std::make_unique<ComponentProductLine>(std::move(model), std::move(components));
}

}  // namespace plstar

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

#include "plstar/sampling.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "plstar/error.hpp"

namespace plstar {

SamplingSpec SamplingSpec::for_model(const FeatureModel& fm, std::size_t t) {
  SamplingSpec spec;
  spec.t = t;
  spec.universe = fm.non_mandatory();
  if (t < 1 || t > spec.universe.size())
    throw Error(Errc::invalid_argument, "t = " + std::to_string(t) + " needs 1 <= t <= " +
                                            std::to_string(spec.universe.size()));
  return spec;
}

namespace {

// Calls f(mask) for every t-subset of `universe`.
template <class F>
void for_each_subset(const std::vector<std::size_t>& universe, std::size_t t, F&& f) {
  std::vector<std::size_t> pick(t);
  for (std::size_t i = 0; i < t; ++i) pick[i] = i;
  const std::size_t n = universe.size();
  for (;;) {
    std::uint64_t mask = 0;
    for (auto p : pick) mask |= std::uint64_t{1} << universe[p];
    f(mask);
    std::size_t i = t;
    while (i > 0 && pick[i - 1] == n - t + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<FeatureTuple> enumerate_valid_tuples(const FeatureModel& fm, const SamplingSpec& spec) {
  if (spec.t < 1 || spec.t > spec.universe.size())
    throw Error(Errc::invalid_argument, "sampling strength out of range");
  const auto configs = valid_configurations(fm);
  std::vector<std::uint64_t> subsets;
  for_each_subset(spec.universe, spec.t, [&](std::uint64_t m) { subsets.push_back(m); });
  std::set<FeatureTuple> seen;
  for (auto c : configs)
    for (auto m : subsets) seen.insert({m, c.mask() & m});
  return {seen.begin(), seen.end()};
}

std::vector<Configuration> chvatal_sample(const FeatureModel& fm, const SamplingSpec& spec) {
  const auto tuples = enumerate_valid_tuples(fm, spec);
  const auto candidates = valid_configurations(fm);

  std::vector<std::vector<std::uint32_t>> covers(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t k = 0; k < tuples.size(); ++k)
      if (tuples[k].covered_by(candidates[c])) covers[c].push_back(static_cast<std::uint32_t>(k));

  std::vector<bool> covered(tuples.size(), false);
  std::vector<bool> taken(candidates.size(), false);
  std::size_t remaining = tuples.size();
  std::vector<Configuration> sample;
  while (remaining > 0) {
    std::size_t best = candidates.size(), best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (taken[c]) continue;
      std::size_t gain = 0;
      for (auto k : covers[c]) gain += !covered[k];
      if (gain > best_gain) best = c, best_gain = gain;
    }
    taken[best] = true;
    for (auto k : covers[best])
      if (!covered[k]) covered[k] = true, --remaining;
    sample.push_back(candidates[best]);
  }
  return sample;
}

std::string product_id(std::size_t position) { return "p" + std::to_string(position + 1); }

std::string sample_to_json(const FeatureModel& fm, const std::vector<Configuration>& sample) {
  nlohmann::json doc = nlohmann::json::array();
  for (auto c : sample) doc.push_back(fm.names(c));
  return doc.dump(2) + "\n";
}

std::vector<Configuration> sample_from_json(const FeatureModel& fm, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("sample JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(Errc::parse_error, "sample JSON must be an array");
  std::vector<Configuration> out;
  for (const auto& entry : doc) {
    if (!entry.is_array()) throw Error(Errc::parse_error, "sample entries must be name arrays");
    std::vector<std::string> names;
    for (const auto& n : entry) {
      if (!n.is_string()) throw Error(Errc::parse_error, "feature names must be strings");
      names.push_back(n.get<std::string>());
    }
    Configuration c = fm.configuration(names);
    if (!is_valid(fm, c))
      throw Error(Errc::validation_error, "product " + product_id(out.size()) + " is not valid");
    if (std::find(out.begin(), out.end(), c) != out.end())
      throw Error(Errc::validation_error, "product " + product_id(out.size()) + " is a duplicate");
    out.push_back(c);
  }
  return out;
}

}  // namespace plstar

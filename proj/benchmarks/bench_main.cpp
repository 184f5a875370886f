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


#include <benchmark/benchmark.h>

#include <filesystem>

#include "plstar/equivalence_oracle.hpp"
#include "plstar/lstar.hpp"
#include "plstar/plstar.hpp"
#include "plstar/sampling.hpp"
#include "plstar/separators.hpp"
#include "plstar/stats.hpp"

using namespace plstar;

namespace {

const std::filesystem::path kComfort = std::filesystem::path(PLSTAR_FIXTURE_DIR) / "comfort";

struct Comfort {
  std::unique_ptr<ProductLine> spl =
      load_component_product_line(kComfort / "model.json", kComfort / "components");
  std::vector<Configuration> sample =
      chvatal_sample(spl->model(), SamplingSpec::for_model(spl->model(), 3));
};

const Comfort& comfort() {
  static const Comfort c;
  return c;
}

// Largest product of the fixture.
MealyMachine largest() {
  const auto& c = comfort();
  MealyMachine best = c.spl->derive(c.sample[0]);
  for (auto cfg : c.sample) {
    auto m = c.spl->derive(cfg);
    if (m.state_count() > best.state_count()) best = m;
  }
  return best;
}

void BM_Characterize(benchmark::State& state) {
  const MealyMachine m = largest();
  for (auto _ : state) benchmark::DoNotOptimize(characterize(m));
  state.SetLabel(std::to_string(m.state_count()) + " states");
}
BENCHMARK(BM_Characterize);

void BM_WpSuite(benchmark::State& state) {
  const MealyMachine m = largest();
  const auto depth = static_cast<std::size_t>(state.range(0));
  std::size_t tests = 0;
  for (auto _ : state) tests = for_each_wp_test(m, depth, [](const Word&) { return true; });
  state.counters["tests"] = static_cast<double>(tests);
}
BENCHMARK(BM_WpSuite)->Arg(0)->Arg(1)->Arg(2);

void BM_LearnLargestProduct(benchmark::State& state) {
  const MealyMachine sul = largest();
  const auto config = OracleConfig::parse_wp_depth("auto+2");
  for (auto _ : state) {
    MembershipOracle mq(sul);
    auto eq = make_oracle(config, sul);
    benchmark::DoNotOptimize(lstar_learn(mq, *eq, TableInit::classic(sul.inputs())));
  }
}
BENCHMARK(BM_LearnLargestProduct)->Unit(benchmark::kMillisecond);

void BM_FamilyRun(benchmark::State& state) {
  const auto& c = comfort();
  FamilyOptions opts;
  opts.adaptive = state.range(0) != 0;
  opts.randomize = Randomization{true, true, true};
  opts.oracle = OracleConfig::parse_wp_depth("auto+2");
  const auto order = generate_orders(c.sample.size(), 1, 1)[0];
  for (auto _ : state) benchmark::DoNotOptimize(plstar_learn_family(*c.spl, c.sample, order, opts));
  state.SetLabel(opts.adaptive ? "PL*" : "non-adaptive");
}
BENCHMARK(BM_FamilyRun)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_ChvatalSample(benchmark::State& state) {
  const auto& fm = comfort().spl->model();
  const auto spec = SamplingSpec::for_model(fm, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chvatal_sample(fm, spec));
}
BENCHMARK(BM_ChvatalSample)->DenseRange(1, 3);

void BM_StudentTCdf(benchmark::State& state) {
  double t = -3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stats::student_t_cdf(t, 17.5));
    t = t > 3 ? -3 : t + 0.01;
  }
}
BENCHMARK(BM_StudentTCdf);

}  // namespace

BENCHMARK_MAIN();

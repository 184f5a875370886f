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


#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "plstar/experiment.hpp"
#include "plstar/fsm_io.hpp"
#include "plstar/plstar.hpp"
#include "plstar/product_line.hpp"
#include "plstar/sampling.hpp"

namespace plstar::cli {
namespace {

namespace fs = std::filesystem;

std::unique_ptr<ProductLine> load_spl(const Options& o) {
  if (o.model.empty()) throw UsageError("--model is required");
  if (o.fts.empty() == o.components.empty())
    throw UsageError("give exactly one of --fts or --components");
  if (!o.fts.empty()) return load_fts_product_line(o.model, o.fts);
  return load_component_product_line(o.model, o.components);
}

std::vector<Configuration> load_sample(const Options& o, const FeatureModel& fm) {
  if (!o.sample.empty()) {
    try {
      return sample_from_json(fm, read_text_file(o.sample));
    } catch (const Error& e) {
      throw Error(e.code(), o.sample + ": " + e.what());
    }
  }
  return chvatal_sample(fm, SamplingSpec::for_model(fm, o.t));
}

OracleConfig oracle_config(const Options& o) {
  OracleKind kind;
  if (o.oracle == "wp")
    kind = OracleKind::wp;
  else if (o.oracle == "perfect")
    kind = OracleKind::perfect;
  else
    throw UsageError("--oracle must be wp or perfect");
  return OracleConfig::parse_wp_depth(o.wp_depth, kind);
}

ExperimentConfig experiment_config(const Options& o) {
  ExperimentConfig cfg;
  cfg.seed = o.seed;
  cfg.orders = o.orders;
  cfg.reps = o.reps;
  cfg.randomize = Randomization::parse(o.randomize);
  cfg.oracle = oracle_config(o);
  cfg.verify = o.verify;
  cfg.jobs = o.jobs;
  return cfg;
}

void emit(const Options& o, const std::string& name, std::string_view text, std::ostream& log) {
  fs::path p = o.out / name;
  write_text_file(p, text);
  log << "wrote " << p.string() << '\n';
}

std::size_t parse_product_id(std::string_view id, std::size_t n) {
  std::size_t k = 0;
  if (id.size() >= 2 && id[0] == 'p') {
    auto [end, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), k);
    if (ec == std::errc{} && end == id.data() + id.size() && k >= 1 && k <= n) return k - 1;
  }
  throw Error(Errc::validation_error,
              "unknown product id '" + std::string(id) + "' (sample has p1..p" + std::to_string(n) + ")");
}

std::vector<std::size_t> read_order(const std::string& path, std::size_t n) {
  try {
    return order_from_json(read_text_file(path), n);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string order_text(const std::vector<std::size_t>& order) {
  std::string s;
  for (auto i : order) {
    if (!s.empty()) s += ' ';
    s += product_id(i);
  }
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += ' ';
    s += x;
  }
  return s.empty() ? "(none)" : s;
}

std::string p_text(const std::optional<stats::TestResult>& t, const std::string& error) {
  return t ? format_double(t->p_value) : error;
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::invariant_violation:
    case Errc::row_not_present:
    case Errc::table_not_closed:
    case Errc::table_not_consistent:
    case Errc::not_a_counterexample:
    case Errc::round_limit_exceeded:
      return 3;
    default:
      return 2;
  }
}

void cmd_sample(const Options& o, std::ostream& log) {
  auto spl = load_spl(o);
  const FeatureModel& fm = spl->model();
  auto sample = chvatal_sample(fm, SamplingSpec::for_model(fm, o.t));
  emit(o, "sample.json", sample_to_json(fm, sample), log);

  std::size_t lo = SIZE_MAX, hi = 0;
  log << sample.size() << " products (t=" << o.t << ")\n";
  for (std::size_t i = 0; i < sample.size(); ++i) {
    MealyMachine m = spl->derive(sample[i]);
    lo = std::min(lo, m.state_count());
    hi = std::max(hi, m.state_count());
    log << product_id(i) << "  states=" << m.state_count() << "  inputs=" << m.input_count() << "  "
        << join(fm.variable_names(sample[i])) << '\n';
  }
  if (!sample.empty()) log << "states: min " << lo << ", max " << hi << '\n';
}

void cmd_learn(const Options& o, std::ostream& log) {
  auto spl = load_spl(o);
  auto sample = load_sample(o, spl->model());
  const std::size_t n = sample.size();

  std::vector<std::size_t> order;
  if (!o.products.empty() && !o.order_file.empty())
    throw UsageError("--product and --order are exclusive");
  if (!o.products.empty()) {
    for (const auto& id : o.products) order.push_back(parse_product_id(id, n));
  } else if (!o.order_file.empty()) {
    order = read_order(o.order_file, n);
  } else {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }

  OtRepository resume;
  if (!o.repository.empty()) {
    try {
      resume = OtRepository::from_json(read_text_file(o.repository));
    } catch (const Error& e) {
      throw Error(e.code(), o.repository + ": " + e.what());
    }
  }

  FamilyOptions fo;
  fo.adaptive = !o.non_adaptive;
  fo.seed = o.seed;
  fo.randomize = Randomization::parse(o.randomize);
  fo.oracle = oracle_config(o);
  fo.verify = o.verify;
  FamilyResult r = plstar_learn_family(*spl, sample, order, fo, std::move(resume));

  std::ostringstream csv;
  csv << "position,product_id,sul_states,model_states";
  for (auto m : kMetricNames) csv << ',' << m;
  csv << '\n';
  for (std::size_t i = 0; i < r.products.size(); ++i) {
    const ProductRun& p = r.products[i];
    csv << i + 1 << ',' << p.product_id << ',' << p.sul_states << ',' << p.model.state_count();
    for (auto m : kMetricNames) csv << ',' << format_double(metric_value(p.metrics, m));
    csv << '\n';
    write_text_file(o.out / "models" / (p.product_id + ".fsm"), write_fsm(p.model));
    log << p.product_id << "  states=" << p.model.state_count() << "  rounds=" << p.metrics.rounds
        << "  resets=" << p.metrics.total_resets() << "  symbols=" << p.metrics.total_symbols() << '\n';
  }
  emit(o, "learn.csv", csv.str(), log);
  emit(o, "repository.json", r.repository.to_json(), log);
  log << "total  rounds=" << r.total.rounds << "  resets=" << r.total.total_resets()
      << "  symbols=" << r.total.total_symbols() << '\n';
  if (r.error) throw *r.error;
}

void cmd_compare(const Options& o, std::ostream& log) {
  auto spl = load_spl(o);
  auto sample = load_sample(o, spl->model());
  Comparison c = run_compare(*spl, sample, experiment_config(o));

  emit(o, "compare.csv", compare_csv(c), log);
  if (c.error) throw *c.error;
  emit(o, "compare_summary.csv", compare_summary_csv(c.summary), log);
  auto [best, worst] = extreme_orders(c);
  emit(o, "best_order.json", order_to_json(best), log);
  emit(o, "worst_order.json", order_to_json(worst), log);

  log << c.rows.size() << " orders, " << sample.size() << " products\n";
  for (const auto& s : c.summary) {
    log << s.metric << ": PL* " << format_double(s.plstar.mean) << ", non-adaptive "
        << format_double(s.baseline.mean) << ", p " << p_text(s.test, s.test_error);
    if (s.improvement) log << ", improvement " << format_double(*s.improvement) << '%';
    log << '\n';
  }
}

void cmd_order_effect(const Options& o, std::ostream& log) {
  auto spl = load_spl(o);
  auto sample = load_sample(o, spl->model());
  const std::size_t n = sample.size();

  std::vector<std::size_t> best, worst;
  if (!o.ranking.empty()) {
    if (!o.best_file.empty() || !o.worst_file.empty())
      throw UsageError("--ranking excludes --best/--worst");
    Comparison ranked;
    try {
      ranked.rows = parse_compare_csv(read_text_file(o.ranking));
    } catch (const Error& e) {
      throw Error(e.code(), o.ranking + ": " + e.what());
    }
    if (ranked.rows.empty()) throw Error(Errc::malformed_csv, o.ranking + ": no rows");
    for (const auto& row : ranked.rows) {
      if (row.order.size() != n || std::any_of(row.order.begin(), row.order.end(),
                                               [n](std::size_t i) { return i >= n; }))
        throw Error(Errc::validation_error, o.ranking + ": order does not match the sample");
    }
    std::tie(best, worst) = extreme_orders(ranked);
  } else {
    if (o.best_file.empty() || o.worst_file.empty())
      throw UsageError("give --ranking or both --best and --worst");
    best = read_order(o.best_file, n);
    worst = read_order(o.worst_file, n);
  }

  OrderEffect e = run_order_effect(*spl, sample, best, worst, experiment_config(o));
  emit(o, "order_effect.csv", order_effect_csv(e), log);
  if (e.error) throw *e.error;
  emit(o, "order_effect_summary.csv", order_effect_summary_csv(e.summary), log);

  log << "best:  " << order_text(best) << "\nworst: " << order_text(worst) << '\n';
  for (const auto& s : e.summary) {
    log << s.metric << ": best " << format_double(s.best.mean) << ", worst "
        << format_double(s.worst.mean) << ", p " << p_text(s.test, s.test_error) << '\n';
  }
}

void cmd_correlate(const Options& o, std::ostream& log) {
  if (o.csv.empty()) throw UsageError("a comparison CSV is required");
  std::vector<CompareRow> rows;
  try {
    rows = parse_compare_csv(read_text_file(o.csv));
  } catch (const Error& e) {
    throw Error(e.code(), o.csv + ": " + e.what());
  }
  auto results = correlate(rows);
  emit(o, "correlation.csv", correlation_csv(results), log);
  emit(o, "scatter.csv", scatter_csv(rows), log);
  for (const auto& r : results)
    log << "D vs " << r.metric << ": r " << format_double(r.test.statistic) << ", p "
        << format_double(r.test.p_value) << " (" << rows.size() << " orders)\n";
}

void cmd_score_order(const Options& o, std::ostream& log) {
  if (o.model.empty()) throw UsageError("--model is required");
  FeatureModel fm = load_feature_model(o.model);
  auto sample = load_sample(o, fm);
  std::vector<std::size_t> order;
  if (!o.products.empty()) {
    for (const auto& id : o.products) order.push_back(parse_product_id(id, sample.size()));
  } else if (!o.order_file.empty()) {
    order = read_order(o.order_file, sample.size());
  } else {
    throw UsageError("give --order or --product");
  }
  auto f = new_feature_counts(fm, sample, order);
  log << "order: " << order_text(order) << "\nF:";
  for (auto x : f) log << ' ' << x;
  log << "\nD: " << format_double(order_score(f)) << '\n';
}

}  // namespace plstar::cli

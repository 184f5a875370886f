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

#include "plstar/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "plstar/sampling.hpp"

namespace plstar {

double metric_value(const LearningMetrics& m, std::string_view name) {
  if (name == "rounds") return static_cast<double>(m.rounds);
  if (name == "mq_resets") return static_cast<double>(m.mq_resets);
  if (name == "mq_symbols") return static_cast<double>(m.mq_symbols);
  if (name == "eq_resets") return static_cast<double>(m.eq_resets);
  if (name == "eq_symbols") return static_cast<double>(m.eq_symbols);
  if (name == "total_resets") return static_cast<double>(m.total_resets());
  if (name == "total_symbols") return static_cast<double>(m.total_symbols());
  throw Error(Errc::invalid_argument, "unknown metric '" + std::string(name) + "'");
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& f) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min(jobs, n);
  std::vector<std::exception_ptr> errors(n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::mutex m;
    std::size_t next = 0;
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard lock(m);
            if (next == n) return;
            i = next++;
          }
          try {
            f(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : workers) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

std::string order_text(const std::vector<std::size_t>& order) {
  std::string out;
  for (auto i : order) {
    if (!out.empty()) out += ' ';
    out += product_id(i);
  }
  return out;
}

stats::Description describe_or_nan(const std::vector<double>& xs) {
  stats::Description d;
  d.mean = stats::mean(xs);
  d.stddev = xs.size() >= 2 ? stats::sample_stddev(xs) : std::numeric_limits<double>::quiet_NaN();
  return d;
}

void metric_columns(std::ostringstream& out, const std::string& prefix) {
  for (auto name : kMetricNames) out << ',' << prefix << name;
}

void metric_values(std::ostringstream& out, const LearningMetrics& m) {
  for (auto name : kMetricNames) out << ',' << format_double(metric_value(m, name));
}

std::string test_cells(const std::optional<stats::TestResult>& t, const std::string& error) {
  if (!t) return "nan,nan,nan," + error;
  return format_double(t->statistic) + ',' + format_double(t->df) + ',' + format_double(t->p_value) + ',';
}

FamilyOptions family_options(const ExperimentConfig& config, bool adaptive, std::uint64_t seed) {
  FamilyOptions o;
  o.adaptive = adaptive;
  o.seed = seed;
  o.randomize = config.randomize;
  o.oracle = config.oracle;
  o.verify = config.verify;
  return o;
}

}  // namespace

Comparison run_compare(const ProductLine& spl, const std::vector<Configuration>& sample,
                       const ExperimentConfig& config) {
  const auto orders = generate_orders(sample.size(), config.orders, config.seed);
  std::vector<FamilyResult> adaptive(orders.size()), baseline(orders.size());
  parallel_for(orders.size(), config.jobs, [&](std::size_t i) {
    adaptive[i] = plstar_learn_family(spl, sample, orders[i], family_options(config, true, config.seed));
    if (!adaptive[i].error)
      baseline[i] =
          plstar_learn_family(spl, sample, orders[i], family_options(config, false, config.seed));
  });

  Comparison c;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (adaptive[i].error || baseline[i].error) {
      c.error = adaptive[i].error ? *adaptive[i].error : *baseline[i].error;
      break;
    }
    c.rows.push_back(CompareRow{i + 1, orders[i], order_score(spl.model(), sample, orders[i]),
                                adaptive[i].total, baseline[i].total});
  }
  for (const auto& row : c.rows) {
    if (!(row.baseline == c.rows.front().baseline))
      throw Error(Errc::invariant_violation, "non-adaptive costs of order " +
                                                 std::to_string(row.order_id) +
                                                 " differ from order 1");
  }
  if (c.rows.empty()) return c;

  for (auto name : kMetricNames) {
    std::vector<double> a, b;
    for (const auto& row : c.rows) {
      a.push_back(metric_value(row.plstar, name));
      b.push_back(metric_value(row.baseline, name));
    }
    MetricSummary s;
    s.metric = name;
    s.plstar = describe_or_nan(a);
    s.baseline = describe_or_nan(b);
    try {
      s.test = stats::paired_t_one_sided(a, b);
    } catch (const Error& e) {
      s.test_error = std::string(errc_name(e.code()));
    }
    if (s.baseline.mean > 0) s.improvement = stats::improvement_percentage(s.plstar.mean, s.baseline.mean);
    c.summary.push_back(std::move(s));
  }
  return c;
}

std::string compare_csv(const Comparison& c) {
  std::ostringstream out;
  out << "order_id,order,D";
  metric_columns(out, "plstar_");
  metric_columns(out, "lstar_");
  out << '\n';
  for (const auto& row : c.rows) {
    out << row.order_id << ',' << order_text(row.order) << ',' << format_double(row.d);
    metric_values(out, row.plstar);
    metric_values(out, row.baseline);
    out << '\n';
  }
  return out.str();
}

std::string compare_summary_csv(const std::vector<MetricSummary>& summary) {
  std::ostringstream out;
  out << "metric,plstar_mean,plstar_sd,lstar_mean,lstar_sd,t,df,p_one_sided,test_error,"
         "improvement_pct\n";
  for (const auto& s : summary) {
    out << s.metric << ',' << format_double(s.plstar.mean) << ',' << format_double(s.plstar.stddev)
        << ',' << format_double(s.baseline.mean) << ',' << format_double(s.baseline.stddev) << ','
        << test_cells(s.test, s.test_error) << ','
        << (s.improvement ? format_double(*s.improvement) : "nan") << '\n';
  }
  return out.str();
}

OrderEffect run_order_effect(const ProductLine& spl, const std::vector<Configuration>& sample,
                             const std::vector<std::size_t>& best,
                             const std::vector<std::size_t>& worst, const ExperimentConfig& config) {
  if (config.reps < 2)
    throw Error(Errc::invalid_argument, "order-effect tests need at least two repetitions");
  const std::size_t n = config.reps;
  std::vector<FamilyResult> runs(2 * n);
  parallel_for(2 * n, config.jobs, [&](std::size_t k) {
    const std::size_t rep = k / 2;
    const auto& order = k % 2 == 0 ? best : worst;
    runs[k] = plstar_learn_family(spl, sample, order,
                                  family_options(config, true, mix_seed(config.seed, rep)));
  });

  OrderEffect e;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    if (runs[k].error) {
      e.error = runs[k].error;
      break;
    }
    e.rows.push_back({k / 2 + 1, k % 2 == 0 ? "best" : "worst", runs[k].total});
  }
  if (e.error) return e;
  for (auto name : kMetricNames) {
    std::vector<double> b, w;
    for (const auto& row : e.rows) (row.label == "best" ? b : w).push_back(metric_value(row.metrics, name));
    EffectSummary s;
    s.metric = name;
    s.best = describe_or_nan(b);
    s.worst = describe_or_nan(w);
    try {
      s.test = stats::unpaired_t_two_sided(b, w);
    } catch (const Error& err) {
      s.test_error = std::string(errc_name(err.code()));
    }
    e.summary.push_back(std::move(s));
  }
  return e;
}

std::string order_effect_csv(const OrderEffect& e) {
  std::ostringstream out;
  out << "rep,order";
  metric_columns(out, "");
  out << '\n';
  for (const auto& row : e.rows) {
    out << row.rep << ',' << row.label;
    metric_values(out, row.metrics);
    out << '\n';
  }
  return out.str();
}

std::string order_effect_summary_csv(const std::vector<EffectSummary>& summary) {
  std::ostringstream out;
  out << "metric,best_mean,best_sd,worst_mean,worst_sd,t,df,p_two_sided,test_error\n";
  for (const auto& s : summary) {
    out << s.metric << ',' << format_double(s.best.mean) << ',' << format_double(s.best.stddev)
        << ',' << format_double(s.worst.mean) << ',' << format_double(s.worst.stddev) << ','
        << test_cells(s.test, s.test_error) << '\n';
  }
  return out.str();
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> extreme_orders(const Comparison& c) {
  if (c.rows.empty()) throw Error(Errc::invalid_argument, "comparison has no rows");
  const CompareRow* lo = &c.rows.front();
  const CompareRow* hi = &c.rows.front();
  for (const auto& row : c.rows) {
    if (row.plstar.total_resets() < lo->plstar.total_resets()) lo = &row;
    if (row.plstar.total_resets() > hi->plstar.total_resets()) hi = &row;
  }
  return {lo->order, hi->order};
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto end = line.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

double parse_number(std::string_view cell, std::size_t line) {
  double x = 0;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), x);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
    throw Error(Errc::malformed_csv,
                "line " + std::to_string(line) + ": '" + std::string(cell) + "' is not a number");
  return x;
}

}  // namespace

std::vector<CompareRow> parse_compare_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto l : split(text, '\n')) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (!l.empty()) lines.push_back(l);
  }
  if (lines.empty()) throw Error(Errc::malformed_csv, "empty CSV");
  const auto header = split(lines[0], ',');
  std::unordered_map<std::string_view, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col.emplace(header[i], i);
  auto need = [&](std::string_view name) {
    auto it = col.find(name);
    if (it == col.end())
      throw Error(Errc::malformed_csv, "line 1: missing column '" + std::string(name) + "'");
    return it->second;
  };
  const std::size_t c_id = need("order_id"), c_order = need("order"), c_d = need("D");
  std::vector<std::size_t> c_plstar, c_lstar;
  for (auto name : kMetricNames) {
    c_plstar.push_back(need("plstar_" + std::string(name)));
    c_lstar.push_back(need("lstar_" + std::string(name)));
  }

  std::vector<CompareRow> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto cells = split(lines[li], ',');
    if (cells.size() != header.size())
      throw Error(Errc::malformed_csv, "line " + std::to_string(li + 1) + ": expected " +
                                           std::to_string(header.size()) + " cells, found " +
                                           std::to_string(cells.size()));
    CompareRow row;
    row.order_id = static_cast<std::size_t>(parse_number(cells[c_id], li + 1));
    for (auto id : split(cells[c_order], ' ')) {
      if (id.size() < 2 || id[0] != 'p')
        throw Error(Errc::malformed_csv,
                    "line " + std::to_string(li + 1) + ": bad product id '" + std::string(id) + "'");
      row.order.push_back(static_cast<std::size_t>(parse_number(id.substr(1), li + 1)) - 1);
    }
    row.d = parse_number(cells[c_d], li + 1);
    auto fill = [&](LearningMetrics& m, const std::vector<std::size_t>& c) {
      auto get = [&](std::size_t k) { return static_cast<std::uint64_t>(parse_number(cells[c[k]], li + 1)); };
      m.rounds = get(0);
      m.mq_resets = get(1);
      m.mq_symbols = get(2);
      m.eq_resets = get(3);
      m.eq_symbols = get(4);
      if (m.total_resets() != get(5) || m.total_symbols() != get(6))
        throw Error(Errc::malformed_csv,
                    "line " + std::to_string(li + 1) + ": totals disagree with their parts");
    };
    fill(row.plstar, c_plstar);
    fill(row.baseline, c_lstar);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CorrelationResult> correlate(const std::vector<CompareRow>& rows) {
  if (rows.size() < 3) throw Error(Errc::malformed_csv, "correlation needs at least three rows");
  std::vector<double> d, resets, symbols;
  for (const auto& row : rows) {
    d.push_back(row.d);
    resets.push_back(static_cast<double>(row.plstar.total_resets()));
    symbols.push_back(static_cast<double>(row.plstar.total_symbols()));
  }
  return {{"total_resets", stats::pearson(d, resets)}, {"total_symbols", stats::pearson(d, symbols)}};
}

std::string correlation_csv(const std::vector<CorrelationResult>& results) {
  std::ostringstream out;
  out << "metric,r,df,p_two_sided\n";
  for (const auto& r : results)
    out << r.metric << ',' << format_double(r.test.statistic) << ',' << format_double(r.test.df)
        << ',' << format_double(r.test.p_value) << '\n';
  return out.str();
}

std::string scatter_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream out;
  out << "order_id,D,total_resets,total_symbols\n";
  for (const auto& row : rows)
    out << row.order_id << ',' << format_double(row.d) << ',' << row.plstar.total_resets() << ','
        << row.plstar.total_symbols() << '\n';
  return out.str();
}

}  // namespace plstar

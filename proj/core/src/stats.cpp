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

#include "plstar/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "plstar/error.hpp"

namespace plstar::stats {

namespace {

constexpr double kMinP = 1e-300;

double clamp_p(double p) { return std::clamp(p, kMinP, 1.0); }

double sum_sq_dev(std::span<const double> xs, double m) {
  double s = 0;
  for (double x : xs) s += (x - m) * (x - m);
  return s;
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw Error(Errc::singleton_series, "need at least two values");
  return sum_sq_dev(xs, mean(xs)) / static_cast<double>(xs.size() - 1);
}

// Continued fraction for I_x(a, b); converges for x < (a + 1) / (a + b + 2).
double beta_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300, eps = 1e-16;
  const double qab = a + b, qap = a + 1, qam = a - 1;
  double c = 1, d = 1 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < eps) break;
  }
  return h;
}

}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) throw Error(Errc::empty_series, "empty series");
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_stddev(std::span<const double> xs) {
  if (xs.empty()) throw Error(Errc::empty_series, "empty series");
  return std::sqrt(sample_variance(xs));
}

Description describe(std::span<const double> xs) { return {mean(xs), sample_stddev(xs)}; }

double incomplete_beta(double a, double b, double x) {
  if (a <= 0 || b <= 0) throw Error(Errc::invalid_argument, "incomplete beta needs a, b > 0");
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1) / (a + b + 2)) return front * beta_fraction(a, b, x) / a;
  return 1 - front * beta_fraction(b, a, 1 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0)) throw Error(Errc::invalid_argument, "degrees of freedom must be positive");
  if (t == 0) return 0.5;
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * incomplete_beta(df / 2, 0.5, df / (df + t * t));
  return t < 0 ? tail : 1 - tail;
}

TestResult paired_t_one_sided(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "paired series differ in length");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  const double sd = sample_stddev(d);
  if (sd == 0) throw Error(Errc::zero_variance_differences, "paired differences do not vary");
  const double n = static_cast<double>(d.size());
  TestResult r;
  r.kind = TestKind::paired_one_sided_t;
  r.statistic = mean(d) / (sd / std::sqrt(n));
  r.df = n - 1;
  r.p_value = clamp_p(student_t_cdf(r.statistic, r.df));
  return r;
}

TestResult unpaired_t_two_sided(std::span<const double> a, std::span<const double> b) {
  const double va = sample_variance(a), vb = sample_variance(b);
  if (va == 0 && vb == 0) throw Error(Errc::zero_variance, "neither series varies");
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double qa = va / na, qb = vb / nb;
  TestResult r;
  r.kind = TestKind::unpaired_two_sided_t;
  r.statistic = (mean(a) - mean(b)) / std::sqrt(qa + qb);
  r.df = (qa + qb) * (qa + qb) / (qa * qa / (na - 1) + qb * qb / (nb - 1));
  r.p_value = clamp_p(2 * student_t_cdf(-std::fabs(r.statistic), r.df));
  return r;
}

TestResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(Errc::length_mismatch, "series differ in length");
  if (x.size() < 3) throw Error(Errc::invalid_argument, "correlation needs at least three pairs");
  const double mx = mean(x), my = mean(y);
  double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my);
  const double sxx = sum_sq_dev(x, mx), syy = sum_sq_dev(y, my);
  if (sxx == 0 || syy == 0) throw Error(Errc::zero_variance, "a correlated series does not vary");
  TestResult res;
  res.kind = TestKind::pearson;
  res.statistic = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  res.df = static_cast<double>(x.size()) - 2;
  const double r2 = res.statistic * res.statistic;
  if (r2 >= 1) {
    res.p_value = kMinP;
  } else {
    const double t = res.statistic * std::sqrt(res.df / (1 - r2));
    res.p_value = clamp_p(2 * student_t_cdf(-std::fabs(t), res.df));
  }
  return res;
}

double improvement_percentage(double m, double m_prime) {
  if (m_prime == 0) throw Error(Errc::division_by_zero, "baseline metric is zero");
  return (1 - m / m_prime) * 100;
}

}  // namespace plstar::stats

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

#include <span>

namespace plstar::stats {

struct Description {
  double mean = 0;
  double stddev = 0;  // n - 1 denominator
};

/// Throws Errc::empty_series.
double mean(std::span<const double> xs);
/// Throws Errc::empty_series or Errc::singleton_series.
double sample_stddev(std::span<const double> xs);
Description describe(std::span<const double> xs);

enum class TestKind { paired_one_sided_t, unpaired_two_sided_t, pearson };

struct TestResult {
  double statistic = 0;  // t, or r for pearson
  double p_value = 1;
  double df = 0;
  TestKind kind = TestKind::paired_one_sided_t;
};

/// Paired t-test of H1: mean(a) < mean(b), on d = a - b with n - 1 degrees
/// of freedom. Throws Errc::length_mismatch, Errc::singleton_series, or
/// Errc::zero_variance_differences.
TestResult paired_t_one_sided(std::span<const double> a, std::span<const double> b);

/// Welch's t-test with Welch-Satterthwaite degrees of freedom, two-sided.
/// Throws Errc::singleton_series, or Errc::zero_variance when neither series
/// varies.
TestResult unpaired_t_two_sided(std::span<const double> a, std::span<const double> b);

/// Pearson r with the two-sided p of t = r sqrt((n-2)/(1-r^2)). Needs at
/// least three pairs. Throws Errc::length_mismatch, Errc::invalid_argument,
/// or Errc::zero_variance.
TestResult pearson(std::span<const double> x, std::span<const double> y);

/// Regularized incomplete beta I_x(a, b), continued fraction by Lentz's method.
double incomplete_beta(double a, double b, double x);
/// P(T <= t) for Student's t with `df` degrees of freedom.
double student_t_cdf(double t, double df);

/// (1 - m / m_prime) * 100. Throws Errc::division_by_zero when m_prime = 0.
double improvement_percentage(double m, double m_prime);

}  // namespace plstar::stats

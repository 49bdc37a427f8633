// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace ew::numeric {

// Compensated accumulator (Kahan). Used everywhere a long sum of doubles
// feeds a statistic, so results do not depend on summation order tricks.
struct KahanAccumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

double kahan_sum(const double* x, std::size_t n);

// n-th harmonic number. Exact summation below a crossover, asymptotic
// expansion above it; relative error < 1e-14 across the switch.
double harmonic(std::int64_t n);

struct MeanVar {
  double mean = 0.0;
  double var = 0.0;  // unbiased (n-1 denominator), 0 for n < 2
};
MeanVar mean_var(const double* x, std::size_t n);

// Linear-interpolation quantile of an ascending-sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double q);

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;  // residual-based standard error of the slope
};
OlsFit ols(const std::vector<double>& x, const std::vector<double>& y);

// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)| of two
// ascending-sorted samples; ties are resolved by advancing both sides past
// the tied value before comparing.
double ks_statistic_sorted(const std::vector<double>& a,
                           const std::vector<double>& b);

// Adaptive Gauss-Kronrod 7-15 quadrature over [a, b] to absolute tolerance.
// Throws DivergentIntegral when bisection cannot reach the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

// Integral over [a, inf) via the substitution x = a + t/(1-t).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol);

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

}  // namespace ew::numeric

// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <utility>

#include "ew/errors.hpp"

namespace ew::numeric {

double kahan_sum(const double* x, std::size_t n) {
  KahanAccumulator acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(x[i]);
  return acc.value();
}

double harmonic(std::int64_t n) {
  if (n <= 0) throw OutOfDomain("harmonic number needs n >= 1");
  constexpr std::int64_t kExactCutoff = 10000;
  if (n <= kExactCutoff) {
    // Summing small terms first keeps the rounding error near one ulp.
    KahanAccumulator acc;
    for (std::int64_t j = n; j >= 1; --j) acc.add(1.0 / static_cast<double>(j));
    return acc.value();
  }
  constexpr double kEulerGamma = 0.57721566490153286;
  const double nd = static_cast<double>(n);
  const double n2 = nd * nd;
  return std::log(nd) + kEulerGamma + 1.0 / (2.0 * nd) - 1.0 / (12.0 * n2) +
         1.0 / (120.0 * n2 * n2) - 1.0 / (252.0 * n2 * n2 * n2);
}

MeanVar mean_var(const double* x, std::size_t n) {
  MeanVar out;
  if (n == 0) return out;
  out.mean = kahan_sum(x, n) / static_cast<double>(n);
  if (n < 2) return out;
  KahanAccumulator ss;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - out.mean;
    ss.add(d * d);
  }
  out.var = ss.value() / static_cast<double>(n - 1);
  return out;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw BadIndices("quantile of empty sample");
  if (q < 0.0 || q > 1.0) throw OutOfDomain("quantile level outside [0,1]");
  if (sorted.size() == 1) return sorted[0];
  const double h = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

OlsFit ols(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw BadIndices("ols needs matching inputs with at least 3 points");
  const std::size_t n = x.size();
  const double xbar = kahan_sum(x.data(), n) / static_cast<double>(n);
  const double ybar = kahan_sum(y.data(), n) / static_cast<double>(n);
  KahanAccumulator sxx, sxy;
  for (std::size_t i = 0; i < n; ++i) {
    sxx.add((x[i] - xbar) * (x[i] - xbar));
    sxy.add((x[i] - xbar) * (y[i] - ybar));
  }
  if (sxx.value() <= 0.0) throw BadIndices("ols abscissae are all equal");
  OlsFit fit;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = ybar - fit.slope * xbar;
  KahanAccumulator rss;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    rss.add(r * r);
  }
  const double s2 = rss.value() / static_cast<double>(n - 2);
  fit.slope_se = std::sqrt(std::max(0.0, s2 / sxx.value()));
  return fit;
}

double ks_statistic_sorted(const std::vector<double>& a,
                           const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw BadIndices("ks statistic needs non-empty samples");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() || j < b.size()) {
    double v;
    if (j >= b.size() || (i < a.size() && a[i] <= b[j]))
      v = a[i];
    else
      v = b[j];
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1]; the embedded 7-point
// Gauss rule provides the error estimate.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct PanelResult {
  double value = 0.0;
  double error = 0.0;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double kron = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) kron += kWgk[i] * (fv[i] + fv[14 - i]);
  for (int i = 0; i < 3; ++i)
    gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  PanelResult r;
  r.value = kron * h;
  r.error = std::abs((kron - gauss) * h);
  return r;
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (!(abs_tol > 0.0)) throw OutOfDomain("integration tolerance must be positive");
  if (a == b) return 0.0;
  // Globally adaptive: keep splitting the panel with the largest error
  // estimate. This converges for integrable endpoint singularities where a
  // fixed per-level tolerance split would not.
  std::priority_queue<Panel> heap;
  const PanelResult first = gk15(f, a, b);
  if (!std::isfinite(first.value))
    throw DivergentIntegral("non-finite panel value");
  heap.push({a, b, first.value, first.error});
  double total_error = first.error;
  constexpr int kMaxPanels = 4000;
  int panels = 1;
  while (total_error > abs_tol && panels < kMaxPanels) {
    const Panel worst = heap.top();
    heap.pop();
    total_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw DivergentIntegral("panel width collapsed before tolerance");
    for (const auto& [lo, hi] :
         {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
      const PanelResult r = gk15(f, lo, hi);
      if (!std::isfinite(r.value))
        throw DivergentIntegral("non-finite panel value");
      heap.push({lo, hi, r.value, r.error});
      total_error += r.error;
    }
    ++panels;
  }
  if (total_error > abs_tol)
    throw DivergentIntegral("panel budget exhausted before tolerance");
  KahanAccumulator sum;
  while (!heap.empty()) {
    sum.add(heap.top().value);
    heap.pop();
  }
  return sum.value();
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol) {
  // x = a + t/(1-t) maps (0,1) onto (a,inf); dx = dt/(1-t)^2.
  auto g = [&f, a](double t) {
    const double omt = 1.0 - t;
    const double x = a + t / omt;
    return f(x) / (omt * omt);
  };
  // The transformed integrand must vanish at the right endpoint, otherwise
  // the original integral diverges.
  const double probe = g(1.0 - 1e-9);
  if (!std::isfinite(probe) || std::abs(probe) > 1e6)
    throw DivergentIntegral("integrand does not decay at infinity");
  return integrate(g, 0.0, 1.0 - 1e-12, abs_tol);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace ew::numeric

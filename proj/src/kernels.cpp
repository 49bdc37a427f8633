// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#include "ew/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ew/errors.hpp"
#include "ew/numeric.hpp"

namespace ew::kernels {

namespace {

double scalar_sum(const double* x, std::size_t n) {
  return numeric::kahan_sum(x, n);
}

void scalar_vexp(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

void scalar_vlog(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::log(x[i]);
}

void scalar_vpow(const double* x, double p, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(x[i], p);
}

void scalar_sincos_sum(const double* x, std::size_t n, double s,
                       double* cos_out, double* sin_out) {
  numeric::KahanAccumulator c, sn;
  for (std::size_t i = 0; i < n; ++i) {
    c.add(std::cos(s * x[i]));
    sn.add(std::sin(s * x[i]));
  }
  *cos_out = c.value();
  *sin_out = sn.value();
}

void scalar_mean_var(const double* x, std::size_t n, double* mean,
                     double* var) {
  const auto mv = numeric::mean_var(x, n);
  *mean = mv.mean;
  *var = mv.var;
}

constexpr Ops kScalarOps = {
    "scalar",        scalar_sum,        scalar_vexp, scalar_vlog,
    scalar_vpow, scalar_sincos_sum, scalar_mean_var,
};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

#if defined(EW_HAVE_AVX2_TU)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(EW_HAVE_AVX2_TU) && defined(__x86_64__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return avx2_ops_impl();
#endif
  return nullptr;
}

const Ops& active() {
  static const Ops* chosen = [] {
    const char* env = std::getenv("ECHOED_WALKS_KERNELS");
    const std::string want = env ? env : "auto";
    if (want == "scalar") return &scalar_ops();
    if (want == "avx2") {
      if (const Ops* v = avx2_ops()) return v;
      throw ConfigError("ECHOED_WALKS_KERNELS=avx2 but AVX2 is unavailable");
    }
    if (want != "auto")
      throw ConfigError("ECHOED_WALKS_KERNELS must be auto, scalar or avx2");
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
  }();
  return *chosen;
}

}  // namespace ew::kernels

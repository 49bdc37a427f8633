// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace ew::kernels {

// Bulk numeric primitives used by the pool iterations, the characteristic
// function residual, and ensemble summaries. Two implementations exist: a
// scalar reference and an AVX2 variant compiled in its own translation unit.
// The active set is chosen once per process at first use: the environment
// variable ECHOED_WALKS_KERNELS may force "scalar" or "avx2"; the default
// "auto" picks AVX2 when the CPU supports it. The recursive walk itself is
// not routed through here; each step depends on earlier output, so there is
// nothing to vectorise.
struct Ops {
  const char* name;
  // Compensated sum of n doubles.
  double (*sum)(const double* x, std::size_t n);
  // out[i] = exp(x[i]); handles -inf -> 0 and overflow -> inf.
  void (*vexp)(const double* x, double* out, std::size_t n);
  // out[i] = log(x[i]) for x[i] >= 0; log(0) = -inf.
  void (*vlog)(const double* x, double* out, std::size_t n);
  // out[i] = x[i]^p for x[i] >= 0, with 0^p = {0 for p>0, 1 for p=0}.
  void (*vpow)(const double* x, double p, double* out, std::size_t n);
  // cos_out = sum cos(s*x[i]), sin_out = sum sin(s*x[i]).
  void (*sincos_sum)(const double* x, std::size_t n, double s,
                     double* cos_out, double* sin_out);
  // Mean and unbiased variance in one call.
  void (*mean_var)(const double* x, std::size_t n, double* mean, double* var);
};

const Ops& scalar_ops();

// Null when the build or the CPU lacks AVX2+FMA.
const Ops* avx2_ops();

// The dispatched set, resolved once per process.
const Ops& active();

}  // namespace ew::kernels

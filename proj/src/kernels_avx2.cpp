// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA implementations of the bulk kernels. Compiled with vector flags
// only in this translation unit; callers reach it through runtime dispatch.
// Polynomial ranges: exp is reduced to |r| <= ln2/2, log to mantissa in
// [sqrt2/2, sqrt2], sin/cos to |r| <= pi/4 with a 3-term reduction that is
// accurate for |x| up to about 1e3 (all laboratory uses stay far below).
#include "ew/kernels.hpp"

#if defined(EW_HAVE_AVX2_TU) && defined(__x86_64__)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "ew/numeric.hpp"

namespace ew::kernels {

namespace {

inline __m256d load4(const double* p) { return _mm256_loadu_pd(p); }

struct Kahan4 {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  inline void add(__m256d x) {
    const __m256d y = _mm256_sub_pd(x, comp);
    const __m256d t = _mm256_add_pd(sum, y);
    comp = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
    sum = t;
  }
  // Lane i holds sum_i - comp_i; fold both into a scalar accumulator.
  double combine(numeric::KahanAccumulator& acc) const {
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, comp);
    for (int i = 0; i < 4; ++i) {
      acc.add(s[i]);
      acc.add(-c[i]);
    }
    return acc.value();
  }
};

double avx2_sum(const double* x, std::size_t n) {
  Kahan4 k;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) k.add(load4(x + i));
  numeric::KahanAccumulator acc;
  k.combine(acc);
  for (; i < n; ++i) acc.add(x[i]);
  return acc.value();
}

// exp core: 2^n * P(r) with x = n ln2 + r, P the degree-11 Taylor
// polynomial of e^r (relative error < 1e-14 on the reduced range).
constexpr double kLn2Inv = 1.4426950408889634074;
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;

inline __m256d exp_core(__m256d x) {
  const __m256d n =
      _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLn2Inv)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Hi), x);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Lo), r);

  __m256d p = _mm256_set1_pd(1.0 / 39916800.0);
  const double coef[] = {1.0 / 3628800.0, 1.0 / 362880.0, 1.0 / 40320.0,
                         1.0 / 5040.0,    1.0 / 720.0,    1.0 / 120.0,
                         1.0 / 24.0,      1.0 / 6.0,      0.5,
                         1.0,             1.0};
  for (double c : coef) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(c));

  // 2^n through the exponent field; n is within [-1075, 1025] after the
  // caller's clamping, and the biased value is kept in range below.
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i bits =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

void avx2_vexp(const double* x, double* out, std::size_t n) {
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d lo = _mm256_set1_pd(-708.0);
  const __m256d inf = _mm256_set1_pd(HUGE_VAL);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = load4(x + i);
    const __m256d clamped = _mm256_max_pd(_mm256_min_pd(v, hi), lo);
    __m256d r = exp_core(clamped);
    r = _mm256_blendv_pd(r, zero, _mm256_cmp_pd(v, lo, _CMP_LT_OQ));
    r = _mm256_blendv_pd(r, inf, _mm256_cmp_pd(v, hi, _CMP_GT_OQ));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = std::exp(x[i]);
}

// log core for strictly positive normal x: e*ln2 + 2*artanh(t) with
// t = (m-1)/(m+1), m the mantissa folded into [sqrt2/2, sqrt2].
inline __m256d log_core(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i expo_raw = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(
          _mm256_and_si256(expo_raw, _mm256_set1_epi64x(0x7FF)),
          _mm256_set1_epi64x(0x4330000000000000LL))),
      _mm256_set1_pd(4503599627370496.0 + 1023.0));
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FF0000000000000LL)));
  const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
  const __m256d big = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_blendv_pd(e, _mm256_add_pd(e, _mm256_set1_pd(1.0)), big);

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d t = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d t2 = _mm256_mul_pd(t, t);
  __m256d p = _mm256_set1_pd(1.0 / 15.0);
  const double coef[] = {1.0 / 13.0, 1.0 / 11.0, 1.0 / 9.0, 1.0 / 7.0,
                         1.0 / 5.0,  1.0 / 3.0,  1.0};
  for (double c : coef) p = _mm256_fmadd_pd(p, t2, _mm256_set1_pd(c));
  const __m256d series = _mm256_mul_pd(_mm256_add_pd(t, t), p);
  const __m256d tail = _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), series);
  return _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi), tail);
}

void avx2_vlog(const double* x, double* out, std::size_t n) {
  const __m256d tiny = _mm256_set1_pd(2.2250738585072014e-308);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = load4(x + i);
    // Subnormals, zeros and negatives take the scalar path.
    const int odd =
        _mm256_movemask_pd(_mm256_cmp_pd(v, tiny, _CMP_LT_OQ));
    if (odd) {
      for (int j = 0; j < 4; ++j) out[i + j] = std::log(x[i + j]);
      continue;
    }
    _mm256_storeu_pd(out + i, log_core(v));
  }
  for (; i < n; ++i) out[i] = std::log(x[i]);
}

void avx2_vpow(const double* x, double p, double* out, std::size_t n) {
  if (p == 0.0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 1.0;
    return;
  }
  const __m256d tiny = _mm256_set1_pd(2.2250738585072014e-308);
  const __m256d pv = _mm256_set1_pd(p);
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d lo = _mm256_set1_pd(-708.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = load4(x + i);
    const int odd =
        _mm256_movemask_pd(_mm256_cmp_pd(v, tiny, _CMP_LT_OQ));
    if (odd) {
      for (int j = 0; j < 4; ++j) out[i + j] = std::pow(x[i + j], p);
      continue;
    }
    __m256d ex = _mm256_mul_pd(pv, log_core(v));
    const __m256d over = _mm256_cmp_pd(ex, hi, _CMP_GT_OQ);
    const __m256d under = _mm256_cmp_pd(ex, lo, _CMP_LT_OQ);
    ex = _mm256_max_pd(_mm256_min_pd(ex, hi), lo);
    __m256d r = exp_core(ex);
    r = _mm256_blendv_pd(r, _mm256_setzero_pd(), under);
    r = _mm256_blendv_pd(r, _mm256_set1_pd(HUGE_VAL), over);
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = std::pow(x[i], p);
}

// 3-term Cody-Waite split of pi/2 for argument reduction.
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Mid = 6.07710050650619224932e-11;
constexpr double kPio2Lo = 2.02226624879595063154e-21;
constexpr double kTwoOverPi = 0.63661977236758134308;

void avx2_sincos_sum(const double* x, std::size_t n, double s,
                     double* cos_out, double* sin_out) {
  Kahan4 kc, ks;
  std::size_t i = 0;
  const __m256d sv = _mm256_set1_pd(s);
  for (; i + 4 <= n; i += 4) {
    const __m256d arg = _mm256_mul_pd(sv, load4(x + i));
    const __m256d j =
        _mm256_round_pd(_mm256_mul_pd(arg, _mm256_set1_pd(kTwoOverPi)),
                        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Hi), arg);
    r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Mid), r);
    r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Lo), r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    // sin r = r + r^3 S(r^2), cos r = 1 + r^2 C(r^2); Taylor tails are
    // below 1e-14 absolute on |r| <= pi/4.
    __m256d ps = _mm256_set1_pd(1.0 / 6227020800.0);
    const double scoef[] = {-1.0 / 39916800.0, 1.0 / 362880.0, -1.0 / 5040.0,
                            1.0 / 120.0, -1.0 / 6.0};
    for (double c : scoef) ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(c));
    const __m256d sin_full =
        _mm256_fmadd_pd(_mm256_mul_pd(ps, r2), r, r);

    __m256d pc = _mm256_set1_pd(-1.0 / 87178291200.0);
    const double ccoef[] = {1.0 / 479001600.0, -1.0 / 3628800.0,
                            1.0 / 40320.0,     -1.0 / 720.0,
                            1.0 / 24.0,        -0.5};
    for (double c : ccoef) pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(c));
    const __m256d cos_full =
        _mm256_add_pd(_mm256_mul_pd(pc, r2), _mm256_set1_pd(1.0));

    const __m128i j32 = _mm256_cvtpd_epi32(j);
    const __m256i q = _mm256_cvtepi32_epi64(j32);
    const __m256i swap_i = _mm256_and_si256(q, _mm256_set1_epi64x(1));
    const __m256d swap = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(swap_i, _mm256_set1_epi64x(1)));
    const __m256i q2 = _mm256_and_si256(q, _mm256_set1_epi64x(2));
    const __m256d neg_sin = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(q2, _mm256_set1_epi64x(2)));
    const __m256i q1p = _mm256_and_si256(
        _mm256_add_epi64(q, _mm256_set1_epi64x(1)), _mm256_set1_epi64x(2));
    const __m256d neg_cos = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(q1p, _mm256_set1_epi64x(2)));

    const __m256d signbit = _mm256_set1_pd(-0.0);
    __m256d sin_v = _mm256_blendv_pd(sin_full, cos_full, swap);
    sin_v = _mm256_xor_pd(sin_v, _mm256_and_pd(neg_sin, signbit));
    __m256d cos_v = _mm256_blendv_pd(cos_full, sin_full, swap);
    cos_v = _mm256_xor_pd(cos_v, _mm256_and_pd(neg_cos, signbit));

    ks.add(sin_v);
    kc.add(cos_v);
  }
  numeric::KahanAccumulator accc, accs;
  kc.combine(accc);
  ks.combine(accs);
  for (; i < n; ++i) {
    accc.add(std::cos(s * x[i]));
    accs.add(std::sin(s * x[i]));
  }
  *cos_out = accc.value();
  *sin_out = accs.value();
}

void avx2_mean_var(const double* x, std::size_t n, double* mean, double* var) {
  if (n == 0) {
    *mean = 0.0;
    *var = 0.0;
    return;
  }
  const double m = avx2_sum(x, n) / static_cast<double>(n);
  if (n < 2) {
    *mean = m;
    *var = 0.0;
    return;
  }
  Kahan4 k;
  const __m256d mv = _mm256_set1_pd(m);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(load4(x + i), mv);
    k.add(_mm256_mul_pd(d, d));
  }
  numeric::KahanAccumulator acc;
  k.combine(acc);
  for (; i < n; ++i) acc.add((x[i] - m) * (x[i] - m));
  *mean = m;
  *var = acc.value() / static_cast<double>(n - 1);
}

constexpr Ops kAvx2Ops = {
    "avx2",    avx2_sum,        avx2_vexp, avx2_vlog,
    avx2_vpow, avx2_sincos_sum, avx2_mean_var,
};

}  // namespace

const Ops* avx2_ops_impl() { return &kAvx2Ops; }

}  // namespace ew::kernels

#endif  // EW_HAVE_AVX2_TU && __x86_64__

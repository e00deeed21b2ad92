// AVX2+FMA variant of the series kernels.  Compiled with -mavx2 -mfma and
// only reached after a cpuid check in the dispatcher.
//
// exp and sincos are evaluated in-register: Cody-Waite reduction with the
// constant split across full-precision doubles (the FMA forms make the
// truncated-constant trick unnecessary), then the fdlibm minimax
// polynomials on the reduced interval.  Per-term error is ~2 ulp absolute,
// which the equivalence tests against the scalar kernel pin down.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstdint>

#include "etastrip/kernel.hpp"

namespace etastrip::kernels {
namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(kSignMask, x); }

// ---- exp(x) for x <= 0 (series arguments are -a * ln n with a > 0) ----

const double kInvLn2 = 1.4426950408889634;
const double kLn2Hi = 0.6931471805599453;
const double kLn2Lo = 2.3190468138462996e-17;

inline __m256d v_exp(__m256d x) {
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kInvLn2)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Hi), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Lo), r);
  // Taylor polynomial for e^r on [-ln2/2, ln2/2]; degree 13 keeps the
  // truncation term below 5e-18.
  __m256d p = _mm256_set1_pd(1.6059043836821613e-10);  // 1/13!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.08767569878681e-9));      // 1/12!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.505210838544172e-8));     // 1/11!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.7557319223985893e-7));    // 1/10!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.755731922398589e-6));     // 1/9!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(2.48015873015873e-5));      // 1/8!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.984126984126984e-4));     // 1/7!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.3888888888888889e-3));    // 1/6!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(8.333333333333333e-3));     // 1/5!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(4.1666666666666664e-2));    // 1/4!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.6666666666666666e-1));    // 1/3!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));                      // 1/2!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  // Scale by 2^k via the exponent field; k >= -1021 whenever x >= -708,
  // and anything below that is flushed to zero by the final mask.
  const __m128i ki = _mm256_cvtpd_epi32(k);
  const __m256i q = _mm256_cvtepi32_epi64(ki);
  const __m256i biased = _mm256_add_epi64(q, _mm256_set1_epi64x(1023));
  const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
  __m256d result = _mm256_mul_pd(p, scale);
  const __m256d tiny = _mm256_cmp_pd(x, _mm256_set1_pd(-708.0), _CMP_LT_OQ);
  return _mm256_andnot_pd(tiny, result);
}

// ---- sin/cos with a 3-step FMA reduction by pi/2 ----
//
// Valid for |x| up to ~2^20; the series arguments are |b| * ln n, bounded
// by the overflow guard (|beta| <= 700) times ln(kTermBudget) ~ 5.4e3.

const double kInvPio2 = 0.6366197723675814;
const double kPio2A = 1.5707963267948966;
const double kPio2B = 6.123233995736766e-17;
const double kPio2C = -1.497384905065873e-33;

inline __m256d sin_poly(__m256d r, __m256d r2) {
  __m256d p = _mm256_set1_pd(1.58969099521155010221e-10);
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(-2.50507602534068634195e-8));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(2.75573137070700676789e-6));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(-1.98412698298579493134e-4));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(8.33333333332248946124e-3));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(-1.66666666666666324348e-1));
  return _mm256_fmadd_pd(_mm256_mul_pd(r2, r), p, r);
}

inline __m256d cos_poly(__m256d r2) {
  __m256d p = _mm256_set1_pd(-1.13596475577881948265e-11);
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(2.08757232129817482790e-9));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(-2.75573143513906633035e-7));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(2.48015872894767294178e-5));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(-1.38888888888741095749e-3));
  p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(4.16666666666666019037e-2));
  const __m256d r4 = _mm256_mul_pd(r2, r2);
  return _mm256_add_pd(_mm256_fmadd_pd(r4, p, _mm256_set1_pd(1.0)),
                       _mm256_mul_pd(r2, _mm256_set1_pd(-0.5)));
}

inline void v_sincos(__m256d x, __m256d& s_out, __m256d& c_out) {
  const __m256d j = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kInvPio2)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2A), x);
  r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2B), r);
  r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2C), r);
  const __m256d r2 = _mm256_mul_pd(r, r);
  const __m256d sp = sin_poly(r, r2);
  const __m256d cp = cos_poly(r2);

  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(j));
  // quadrant q & 3:  sin -> {s, c, -s, -c},  cos -> {c, -s, -c, s}
  const __m256i swap = _mm256_and_si256(q, _mm256_set1_epi64x(1));
  const __m256d swap_mask =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(swap, _mm256_set1_epi64x(1)));
  const __m256d s_base = _mm256_blendv_pd(sp, cp, swap_mask);
  const __m256d c_base = _mm256_blendv_pd(cp, sp, swap_mask);
  const __m256d s_sign = _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_and_si256(q, _mm256_set1_epi64x(2)), 62));
  const __m256d c_sign = _mm256_castsi256_pd(_mm256_slli_epi64(
      _mm256_and_si256(_mm256_add_epi64(q, _mm256_set1_epi64x(1)),
                       _mm256_set1_epi64x(2)),
      62));
  s_out = _mm256_xor_pd(s_base, s_sign);
  c_out = _mm256_xor_pd(c_base, c_sign);
}

// ---- per-lane Neumaier accumulation ----

inline void vec_neumaier(__m256d& sum, __m256d& comp, __m256d v) {
  const __m256d t = _mm256_add_pd(sum, v);
  const __m256d sum_bigger = _mm256_cmp_pd(vabs(sum), vabs(v), _CMP_GE_OQ);
  const __m256d big = _mm256_blendv_pd(v, sum, sum_bigger);
  const __m256d small = _mm256_blendv_pd(sum, v, sum_bigger);
  comp = _mm256_add_pd(comp, _mm256_add_pd(_mm256_sub_pd(big, t), small));
  sum = t;
}

inline double reduce(__m256d sum, __m256d comp) {
  alignas(32) double s[4], c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);
  double acc = 0.0, acc_c = 0.0;
  for (int lane = 0; lane < 4; ++lane) neumaier_add(acc, acc_c, s[lane]);
  for (int lane = 0; lane < 4; ++lane) neumaier_add(acc, acc_c, c[lane]);
  return acc + acc_c;
}

PairSums dirichlet_avx2(std::span<const double> w, std::span<const double> log_n,
                        double a, double b) {
  const std::size_t n = w.size();
  const std::size_t main = n & ~std::size_t{3};
  const __m256d va = _mm256_set1_pd(-a);
  const __m256d vb = _mm256_set1_pd(b);
  __m256d sum_c = _mm256_setzero_pd(), comp_c = _mm256_setzero_pd();
  __m256d sum_s = _mm256_setzero_pd(), comp_s = _mm256_setzero_pd();
  for (std::size_t k = 0; k < main; k += 4) {
    const __m256d l = _mm256_loadu_pd(log_n.data() + k);
    const __m256d wv = _mm256_loadu_pd(w.data() + k);
    const __m256d wp = _mm256_mul_pd(wv, v_exp(_mm256_mul_pd(va, l)));
    __m256d s, c;
    v_sincos(_mm256_mul_pd(vb, l), s, c);
    vec_neumaier(sum_c, comp_c, _mm256_mul_pd(wp, c));
    vec_neumaier(sum_s, comp_s, _mm256_mul_pd(wp, s));
  }
  PairSums out{reduce(sum_c, comp_c), reduce(sum_s, comp_s)};
  for (std::size_t k = main; k < n; ++k) {  // unpadded tail, reference formulas
    const double l = log_n[k];
    const double p = w[k] * std::exp(-a * l);
    out.cos_sum += p * std::cos(b * l);
    out.sin_sum += p * std::sin(b * l);
  }
  return out;
}

PairSums dirichlet_diff_avx2(std::span<const double> w, std::span<const double> log_n,
                             double a1, double a2, double q, double b) {
  const std::size_t n = w.size();
  const std::size_t main = n & ~std::size_t{3};
  const __m256d va1 = _mm256_set1_pd(-a1);
  const __m256d va2 = _mm256_set1_pd(-a2);
  const __m256d vq = _mm256_set1_pd(q);
  const __m256d vb = _mm256_set1_pd(b);
  __m256d sum_c = _mm256_setzero_pd(), comp_c = _mm256_setzero_pd();
  __m256d sum_s = _mm256_setzero_pd(), comp_s = _mm256_setzero_pd();
  for (std::size_t k = 0; k < main; k += 4) {
    const __m256d l = _mm256_loadu_pd(log_n.data() + k);
    const __m256d wv = _mm256_loadu_pd(w.data() + k);
    const __m256d e1 = v_exp(_mm256_mul_pd(va1, l));
    const __m256d e2 = v_exp(_mm256_mul_pd(va2, l));
    const __m256d wp =
        _mm256_mul_pd(wv, _mm256_sub_pd(e1, _mm256_mul_pd(vq, e2)));
    __m256d s, c;
    v_sincos(_mm256_mul_pd(vb, l), s, c);
    vec_neumaier(sum_c, comp_c, _mm256_mul_pd(wp, c));
    vec_neumaier(sum_s, comp_s, _mm256_mul_pd(wp, s));
  }
  PairSums out{reduce(sum_c, comp_c), reduce(sum_s, comp_s)};
  for (std::size_t k = main; k < n; ++k) {
    const double l = log_n[k];
    const double p = w[k] * (std::exp(-a1 * l) - q * std::exp(-a2 * l));
    out.cos_sum += p * std::cos(b * l);
    out.sin_sum += p * std::sin(b * l);
  }
  return out;
}

}  // namespace

extern const Backend kAvx2Backend;
const Backend kAvx2Backend = {"avx2", dirichlet_avx2, dirichlet_diff_avx2};

}  // namespace etastrip::kernels

#endif  // x86_64

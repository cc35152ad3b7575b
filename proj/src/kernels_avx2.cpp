// AVX2/FMA variants of the amplitude kernels. This translation unit is
// compiled with -mavx2 -mfma; nothing here may run before the runtime CPU
// check in avx2_kernel_set().

#include "qaoabench/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace qaoabench::kernels {
namespace {

// sincos per element dominates; there is nothing useful to vectorize here
// without a vector math library, so the direct path stays scalar.
void phase_direct_avx2(cdouble* amps, const double* energies, double gamma,
                       std::uint64_t count) {
  for (std::uint64_t k = 0; k < count; ++k) {
    const double phi = gamma * energies[k];
    amps[k] *= cdouble(std::cos(phi), -std::sin(phi));
  }
}

void phase_lookup_avx2(cdouble* amps, const std::uint32_t* level_index,
                       const cdouble* phases, std::uint64_t count) {
  auto* ad = reinterpret_cast<double*>(amps);
  const auto* pd = reinterpret_cast<const double*>(phases);
  std::uint64_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const __m256d a = _mm256_loadu_pd(ad + 2 * k);
    const __m128d p0 = _mm_loadu_pd(pd + 2 * level_index[k]);
    const __m128d p1 = _mm_loadu_pd(pd + 2 * level_index[k + 1]);
    const __m256d b = _mm256_insertf128_pd(_mm256_castpd128_pd256(p0), p1, 1);
    const __m256d bre = _mm256_movedup_pd(b);
    const __m256d bim = _mm256_unpackhi_pd(b, b);
    const __m256d t = _mm256_mul_pd(_mm256_permute_pd(a, 0x5), bim);
    _mm256_storeu_pd(ad + 2 * k, _mm256_fmaddsub_pd(a, bre, t));
  }
  for (; k < count; ++k) {
    amps[k] *= phases[level_index[k]];
  }
}

inline void mixer_pair_scalar_one(cdouble* amps, std::uint64_t i0,
                                  std::uint64_t i1, double c, double s) {
  const cdouble a0 = amps[i0];
  const cdouble a1 = amps[i1];
  amps[i0] =
      cdouble(c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real());
  amps[i1] =
      cdouble(c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real());
}

void mixer_pair_rotation_avx2(cdouble* amps, std::uint64_t pair_begin,
                              std::uint64_t pair_end, int target, double c,
                              double s) {
  auto* ad = reinterpret_cast<double*>(amps);
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_setr_pd(s, -s, s, -s);

  if (target == 0) {
    // Pair p occupies one register: [x0 y0 x1 y1].
    for (std::uint64_t p = pair_begin; p < pair_end; ++p) {
      double* base = ad + 4 * p;
      const __m256d v = _mm256_loadu_pd(base);
      const __m256d rev = _mm256_permute4x64_pd(v, _MM_SHUFFLE(0, 1, 2, 3));
      _mm256_storeu_pd(base, _mm256_fmadd_pd(cv, v, _mm256_mul_pd(rev, sv)));
    }
    return;
  }

  const std::uint64_t mask = std::uint64_t{1} << target;
  const std::uint64_t lo_mask = mask - 1;
  const std::uint64_t hi_mask = ~lo_mask;
  std::uint64_t p = pair_begin;
  while (p < pair_end) {
    const std::uint64_t lo = p & lo_mask;
    const std::uint64_t i0 = ((p & hi_mask) << 1) | lo;
    if (lo + 1 < mask && p + 1 < pair_end) {
      double* b0 = ad + 2 * i0;
      double* b1 = ad + 2 * (i0 + mask);
      const __m256d v0 = _mm256_loadu_pd(b0);
      const __m256d v1 = _mm256_loadu_pd(b1);
      const __m256d g1 = _mm256_mul_pd(_mm256_permute_pd(v1, 0x5), sv);
      const __m256d g0 = _mm256_mul_pd(_mm256_permute_pd(v0, 0x5), sv);
      _mm256_storeu_pd(b0, _mm256_fmadd_pd(cv, v0, g1));
      _mm256_storeu_pd(b1, _mm256_fmadd_pd(cv, v1, g0));
      p += 2;
    } else {
      mixer_pair_scalar_one(amps, i0, i0 | mask, c, s);
      ++p;
    }
  }
}

double weighted_prob_sum_avx2(const cdouble* amps, const double* weights,
                              std::uint64_t count) {
  const auto* ad = reinterpret_cast<const double*>(amps);
  __m256d acc = _mm256_setzero_pd();
  std::uint64_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256d a01 = _mm256_loadu_pd(ad + 2 * k);
    const __m256d a23 = _mm256_loadu_pd(ad + 2 * k + 4);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a01, a01),
                                     _mm256_mul_pd(a23, a23));
    const __m256d probs = _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0));
    acc = _mm256_fmadd_pd(probs, _mm256_loadu_pd(weights + k), acc);
  }
  double lanes[4];
  _mm256_storeu_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < count; ++k) {
    const double re = amps[k].real();
    const double im = amps[k].imag();
    total += (re * re + im * im) * weights[k];
  }
  return total;
}

double prob_sum_avx2(const cdouble* amps, std::uint64_t count) {
  const auto* ad = reinterpret_cast<const double*>(amps);
  __m256d acc = _mm256_setzero_pd();
  std::uint64_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const __m256d a = _mm256_loadu_pd(ad + 2 * k);
    acc = _mm256_fmadd_pd(a, a, acc);
  }
  double lanes[4];
  _mm256_storeu_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < count; ++k) {
    const double re = amps[k].real();
    const double im = amps[k].imag();
    total += re * re + im * im;
  }
  return total;
}

constexpr KernelSet kAvx2Kernels{
    phase_direct_avx2,      phase_lookup_avx2, mixer_pair_rotation_avx2,
    weighted_prob_sum_avx2, prob_sum_avx2,     "avx2",
};

}  // namespace

namespace detail {
const KernelSet* avx2_kernel_set() {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2Kernels : nullptr;
}
}  // namespace detail

}  // namespace qaoabench::kernels

#else  // non-x86 builds expose no AVX2 set

namespace qaoabench::kernels::detail {
const KernelSet* avx2_kernel_set() { return nullptr; }
}  // namespace qaoabench::kernels::detail

#endif

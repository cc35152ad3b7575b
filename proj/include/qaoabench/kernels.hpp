#pragma once

#include "qaoabench/common.hpp"

#include <cstdint>

namespace qaoabench::kernels {

enum class Backend { kScalar, kAvx2 };

// Inner-loop kernel set, one instantiation per backend. Every function works
// on a caller-provided contiguous range and carries no internal parallelism;
// the statevector layer slices ranges and owns the threading.
struct KernelSet {
  // amps[k] *= exp(-i*gamma*energies[k])
  void (*phase_direct)(cdouble* amps, const double* energies, double gamma,
                       std::uint64_t count);
  // amps[k] *= phases[level_index[k]]
  void (*phase_lookup)(cdouble* amps, const std::uint32_t* level_index,
                       const cdouble* phases, std::uint64_t count);
  // Butterfly over pair indices [pair_begin, pair_end). Pair p addresses
  //   i0 = ((p & ~(mask-1)) << 1) | (p & (mask-1)),  i1 = i0 | mask
  // with mask = 1 << target, and applies
  //   a0' =    c*a0 - i*s*a1
  //   a1' = -i*s*a0 +   c*a1
  void (*mixer_pair_rotation)(cdouble* amps, std::uint64_t pair_begin,
                              std::uint64_t pair_end, int target, double c,
                              double s);
  // sum_k |amps[k]|^2 * weights[k]
  double (*weighted_prob_sum)(const cdouble* amps, const double* weights,
                              std::uint64_t count);
  // sum_k |amps[k]|^2
  double (*prob_sum)(const cdouble* amps, std::uint64_t count);
  const char* name;
};

// Kernel set selected at first use: AVX2 when the CPU supports it, scalar
// otherwise. QAOA_BENCH_SIMD={auto|scalar|avx2} overrides the choice.
const KernelSet& active();
Backend active_backend();

bool backend_available(Backend backend);
// Force a backend (tests, troubleshooting). Throws std::runtime_error when
// the backend is unavailable on this machine.
void select_backend(Backend backend);
// Direct access, for equivalence tests that pit backends against each other.
const KernelSet& backend_kernels(Backend backend);

namespace detail {
// Defined in kernels_avx2.cpp; returns nullptr when this build or CPU has no
// AVX2 path.
const KernelSet* avx2_kernel_set();
}  // namespace detail

}  // namespace qaoabench::kernels

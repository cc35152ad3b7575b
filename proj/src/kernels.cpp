#include "qaoabench/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace qaoabench::kernels {

namespace {

void phase_direct_scalar(cdouble* amps, const double* energies, double gamma,
                         std::uint64_t count) {
  for (std::uint64_t k = 0; k < count; ++k) {
    const double phi = gamma * energies[k];
    amps[k] *= cdouble(std::cos(phi), -std::sin(phi));
  }
}

void phase_lookup_scalar(cdouble* amps, const std::uint32_t* level_index,
                         const cdouble* phases, std::uint64_t count) {
  for (std::uint64_t k = 0; k < count; ++k) {
    amps[k] *= phases[level_index[k]];
  }
}

void mixer_pair_rotation_scalar(cdouble* amps, std::uint64_t pair_begin,
                                std::uint64_t pair_end, int target, double c,
                                double s) {
  const std::uint64_t mask = std::uint64_t{1} << target;
  const std::uint64_t lo_mask = mask - 1;
  const std::uint64_t hi_mask = ~lo_mask;
  for (std::uint64_t p = pair_begin; p < pair_end; ++p) {
    const std::uint64_t i0 = ((p & hi_mask) << 1) | (p & lo_mask);
    const std::uint64_t i1 = i0 | mask;
    const cdouble a0 = amps[i0];
    const cdouble a1 = amps[i1];
    // -i*s*(x+iy) = s*y - i*s*x
    amps[i0] = cdouble(c * a0.real() + s * a1.imag(),
                       c * a0.imag() - s * a1.real());
    amps[i1] = cdouble(c * a1.real() + s * a0.imag(),
                       c * a1.imag() - s * a0.real());
  }
}

double weighted_prob_sum_scalar(const cdouble* amps, const double* weights,
                                std::uint64_t count) {
  double acc = 0.0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const double re = amps[k].real();
    const double im = amps[k].imag();
    acc += (re * re + im * im) * weights[k];
  }
  return acc;
}

double prob_sum_scalar(const cdouble* amps, std::uint64_t count) {
  double acc = 0.0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const double re = amps[k].real();
    const double im = amps[k].imag();
    acc += re * re + im * im;
  }
  return acc;
}

constexpr KernelSet kScalarKernels{
    phase_direct_scalar,    phase_lookup_scalar, mixer_pair_rotation_scalar,
    weighted_prob_sum_scalar, prob_sum_scalar,   "scalar",
};

Backend detect_backend() {
  const char* env = std::getenv("QAOA_BENCH_SIMD");
  if (env != nullptr && std::strcmp(env, "auto") != 0) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!backend_available(Backend::kAvx2)) {
        throw std::runtime_error("QAOA_BENCH_SIMD=avx2 but this machine has "
                                 "no AVX2 support");
      }
      return Backend::kAvx2;
    }
    throw std::runtime_error(std::string("unknown QAOA_BENCH_SIMD value '") +
                             env + "' (use auto, scalar, or avx2)");
  }
  return backend_available(Backend::kAvx2) ? Backend::kAvx2
                                           : Backend::kScalar;
}

Backend& backend_slot() {
  static Backend backend = detect_backend();
  return backend;
}

}  // namespace

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
      return detail::avx2_kernel_set() != nullptr;
  }
  return false;
}

const KernelSet& backend_kernels(Backend backend) {
  if (backend == Backend::kAvx2) {
    const KernelSet* set = detail::avx2_kernel_set();
    if (set == nullptr) {
      throw std::runtime_error("AVX2 kernels unavailable on this machine");
    }
    return *set;
  }
  return kScalarKernels;
}

void select_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw std::runtime_error("requested kernel backend unavailable");
  }
  backend_slot() = backend;
}

Backend active_backend() { return backend_slot(); }

const KernelSet& active() { return backend_kernels(backend_slot()); }

}  // namespace qaoabench::kernels

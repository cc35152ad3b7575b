#pragma once

#include "qaoabench/common.hpp"
#include "qaoabench/ising.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qaoabench {

// 2^N complex amplitudes in the computational basis. Exclusively owned while
// mutated; the apply_* operations may parallelize internally over disjoint
// amplitude ranges.
class StateVector {
 public:
  StateVector() = default;

  int n_qubits() const { return n_qubits_; }
  std::uint64_t size() const { return amps_.size(); }
  std::span<cdouble> amplitudes() { return amps_; }
  std::span<const cdouble> amplitudes() const { return amps_; }
  const cdouble& operator[](std::uint64_t z) const { return amps_[z]; }
  cdouble& operator[](std::uint64_t z) { return amps_[z]; }

  static StateVector zeros(int n_qubits, int max_qubits = kMaxQubitsDefault);

 private:
  int n_qubits_ = 0;
  std::vector<cdouble> amps_;
};

// |+>^N, every amplitude 2^{-N/2}.
StateVector plus_state(int n_qubits, int max_qubits = kMaxQubitsDefault);
// Basis state |z>.
StateVector basis_state(int n_qubits, std::uint64_t z,
                        int max_qubits = kMaxQubitsDefault);
// Rewrites an existing state to |+>^N without reallocating.
void reset_to_plus(StateVector& state);

// a_z *= exp(-i*gamma*table[z]). The CostTable overload uses the
// distinct-energy index when available (one sincos per level).
void apply_cost_phase(StateVector& state, std::span<const double> table,
                      double gamma);
void apply_cost_phase(StateVector& state, const CostTable& table,
                      double gamma);

// exp(-i*beta*sum_i X_i): per-qubit pairwise rotation, all qubits.
void apply_mixer(StateVector& state, double beta);

// <state|H_C|state> = sum_z |a_z|^2 table[z].
double expectation(const StateVector& state, std::span<const double> table);
double expectation(const StateVector& state, const CostTable& table);

double norm_squared(const StateVector& state);

// Total probability weight on the listed basis states.
double success_probability(const StateVector& state,
                           std::span<const std::uint64_t> ground_states);

// count i.i.d. draws from |a_z|^2 via inverse-CDF on the cumulative array.
// Deterministic given the seed: the generator is std::mt19937_64 and each
// uniform deviate is (next() >> 11) * 2^-53.
std::vector<std::uint64_t> sample(const StateVector& state,
                                  std::uint64_t count, std::uint64_t seed);

// Arithmetic mean of table[z] over the samples.
double estimate_energy(std::span<const std::uint64_t> samples,
                       std::span<const double> table);

// Debug dump: one text header line "qstate v1 n=<N>" followed by 2^N
// little-endian (real, imag) double pairs.
void dump_state(const StateVector& state, const std::filesystem::path& path);
StateVector load_state(const std::filesystem::path& path);

}  // namespace qaoabench

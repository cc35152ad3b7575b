#pragma once

#include "qaoabench/common.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qaoabench {

// One symmetric coupling J_ij, normalized to i < j.
struct Coupling {
  int i;
  int j;
  double value;
};

// Diagonal Ising cost operator sum_i h_i Z_i + sum_{i<j} J_ij Z_i Z_j.
//
// Basis-index bit convention: bit i of the index (bit 0 least significant)
// equal to 0 encodes spin value z_i = +1, equal to 1 encodes z_i = -1.
class IsingInstance {
 public:
  IsingInstance() = default;
  explicit IsingInstance(int n_spins, std::string label = "");

  int n_spins() const { return n_spins_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  void set_field(int i, double h);
  void add_coupling(int i, int j, double value);

  double field(int i) const;
  std::span<const double> fields() const { return fields_; }
  std::span<const Coupling> couplings() const { return couplings_; }
  bool has_coupling(int i, int j) const;

  // True when every h_i and J_ij is an exact integer, which makes the
  // spectrum integer-valued and the cost phases 2pi-periodic in gamma.
  bool integer_valued() const;

 private:
  int n_spins_ = 0;
  std::vector<double> fields_;
  std::vector<Coupling> couplings_;
  std::string label_;
};

struct SpectrumSummary {
  double e_min = 0.0;
  double e_max = 0.0;
  std::vector<std::uint64_t> ground_states;
  std::uint64_t degeneracy_first_excited = 0;
  bool is_integer_spectrum = false;
};

// Diagonal matrix element <z|H_C|z>. Throws std::domain_error when z is out
// of range.
double cost(const IsingInstance& instance, std::uint64_t z);

// table[z] = cost(instance, z) for every z in [0, 2^N).
std::vector<double> energy_table(const IsingInstance& instance,
                                 int max_qubits = kMaxQubitsDefault);

// Exhaustive enumeration of the diagonal spectrum: exact extremes, all
// ground states, and the population of the second-lowest distinct energy.
SpectrumSummary spectrum(const IsingInstance& instance,
                         int max_qubits = kMaxQubitsDefault);
SpectrumSummary spectrum_of_table(const IsingInstance& instance,
                                  std::span<const double> table);

// Canonical bin key for grouping energies: exact for integer spectra,
// rounded to 1e-9 otherwise.
double energy_bin_key(double energy, bool integer_spectrum);

// Instance file format, one record per line, order-independent:
//   n <N>
//   h <i> <value>
//   J <i> <j> <value>
// '#' starts a comment. Unlisted entries are zero.
IsingInstance parse_instance(std::string_view text, std::string label = "");
IsingInstance load_instance_file(const std::filesystem::path& path);

// Directory with the bundled instances; QAOA_BENCH_INSTANCES overrides the
// built-in default.
std::filesystem::path instance_directory();

// Accepts a bundled name ("2sat8_A") or a path to an instance file.
IsingInstance resolve_instance(const std::string& name);
std::vector<std::string> bundled_instance_names();

// Per-basis-state energies plus a compact distinct-energy index. The index
// lets the phase kernels spend one sincos per distinct energy per layer
// instead of one per amplitude; it is dropped when the instance has more
// distinct energies than kMaxPhaseLevels.
class CostTable {
 public:
  static constexpr std::uint32_t kMaxPhaseLevels = 1u << 20;

  CostTable() = default;
  explicit CostTable(const IsingInstance& instance,
                     int max_qubits = kMaxQubitsDefault);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  bool integer_spectrum() const { return integer_spectrum_; }

  bool has_level_index() const { return !level_index_.empty(); }
  // Distinct energies, ascending. Distinctness is exact (bit-level), so the
  // indexed phase path is numerically identical to the direct one.
  std::span<const double> levels() const { return levels_; }
  std::span<const std::uint32_t> level_index() const { return level_index_; }

 private:
  int n_qubits_ = 0;
  bool integer_spectrum_ = false;
  std::vector<double> values_;
  std::vector<double> levels_;
  std::vector<std::uint32_t> level_index_;
};

}  // namespace qaoabench

#include "qaoabench/statevector.hpp"

#include "qaoabench/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <string>

namespace qaoabench {

namespace {

// Work is always split into the same fixed chunk grid, so reductions combine
// partial sums in an order independent of the thread count. That keeps every
// command bit-reproducible whether or not OpenMP is active.
constexpr int kReductionChunks = 64;
constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 13;

void check_capacity(int n_qubits, int max_qubits) {
  if (n_qubits < 1) {
    throw CapacityError("state needs at least one qubit");
  }
  if (n_qubits > max_qubits) {
    throw CapacityError("state of " + std::to_string(n_qubits) +
                        " qubits exceeds the bound of " +
                        std::to_string(max_qubits));
  }
}

void check_table_size(const StateVector& state, std::size_t table_size) {
  if (table_size != state.size()) {
    throw std::domain_error("energy table length " +
                            std::to_string(table_size) +
                            " does not match state size " +
                            std::to_string(state.size()));
  }
}

template <typename Fn>
double chunked_reduce(std::uint64_t count, Fn&& fn) {
  if (count < kParallelThreshold) {
    return fn(std::uint64_t{0}, count);
  }
  double partial[kReductionChunks];
#pragma omp parallel for schedule(static)
  for (int k = 0; k < kReductionChunks; ++k) {
    const std::uint64_t begin = count * k / kReductionChunks;
    const std::uint64_t end = count * (k + 1) / kReductionChunks;
    partial[k] = fn(begin, end);
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

StateVector StateVector::zeros(int n_qubits, int max_qubits) {
  check_capacity(n_qubits, max_qubits);
  StateVector s;
  s.n_qubits_ = n_qubits;
  s.amps_.assign(std::uint64_t{1} << n_qubits, cdouble{});
  return s;
}

StateVector plus_state(int n_qubits, int max_qubits) {
  StateVector s = StateVector::zeros(n_qubits, max_qubits);
  reset_to_plus(s);
  return s;
}

StateVector basis_state(int n_qubits, std::uint64_t z, int max_qubits) {
  StateVector s = StateVector::zeros(n_qubits, max_qubits);
  if (z >= s.size()) {
    throw std::domain_error("basis index out of range");
  }
  s[z] = cdouble(1.0, 0.0);
  return s;
}

void reset_to_plus(StateVector& state) {
  const double amp = std::pow(2.0, -0.5 * state.n_qubits());
  auto amps = state.amplitudes();
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= (1 << 14))
  for (std::int64_t z = 0; z < size; ++z) {
    amps[static_cast<std::uint64_t>(z)] = cdouble(amp, 0.0);
  }
}

void apply_cost_phase(StateVector& state, std::span<const double> table,
                      double gamma) {
  check_table_size(state, table.size());
  auto* amps = state.amplitudes().data();
  const auto& k = kernels::active();
  const std::uint64_t count = state.size();
  if (count < kParallelThreshold) {
    k.phase_direct(amps, table.data(), gamma, count);
    return;
  }
#pragma omp parallel for schedule(static)
  for (int c = 0; c < kReductionChunks; ++c) {
    const std::uint64_t begin = count * c / kReductionChunks;
    const std::uint64_t end = count * (c + 1) / kReductionChunks;
    k.phase_direct(amps + begin, table.data() + begin, gamma, end - begin);
  }
}

void apply_cost_phase(StateVector& state, const CostTable& table,
                      double gamma) {
  check_table_size(state, table.size());
  if (!table.has_level_index()) {
    apply_cost_phase(state, table.values(), gamma);
    return;
  }
  const auto levels = table.levels();
  std::vector<cdouble> phases(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const double phi = gamma * levels[l];
    phases[l] = cdouble(std::cos(phi), -std::sin(phi));
  }
  auto* amps = state.amplitudes().data();
  const auto* index = table.level_index().data();
  const auto& k = kernels::active();
  const std::uint64_t count = state.size();
  if (count < kParallelThreshold) {
    k.phase_lookup(amps, index, phases.data(), count);
    return;
  }
#pragma omp parallel for schedule(static)
  for (int c = 0; c < kReductionChunks; ++c) {
    const std::uint64_t begin = count * c / kReductionChunks;
    const std::uint64_t end = count * (c + 1) / kReductionChunks;
    k.phase_lookup(amps + begin, index + begin, phases.data(), end - begin);
  }
}

void apply_mixer(StateVector& state, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  auto* amps = state.amplitudes().data();
  const auto& k = kernels::active();
  const std::uint64_t pairs = state.size() / 2;
  for (int target = 0; target < state.n_qubits(); ++target) {
    if (pairs < kParallelThreshold) {
      k.mixer_pair_rotation(amps, 0, pairs, target, c, s);
      continue;
    }
#pragma omp parallel for schedule(static)
    for (int chunk = 0; chunk < kReductionChunks; ++chunk) {
      const std::uint64_t begin = pairs * chunk / kReductionChunks;
      const std::uint64_t end = pairs * (chunk + 1) / kReductionChunks;
      k.mixer_pair_rotation(amps, begin, end, target, c, s);
    }
  }
}

double expectation(const StateVector& state, std::span<const double> table) {
  check_table_size(state, table.size());
  const auto* amps = state.amplitudes().data();
  const auto& k = kernels::active();
  return chunked_reduce(state.size(), [&](std::uint64_t b, std::uint64_t e) {
    return k.weighted_prob_sum(amps + b, table.data() + b, e - b);
  });
}

double expectation(const StateVector& state, const CostTable& table) {
  return expectation(state, table.values());
}

double norm_squared(const StateVector& state) {
  const auto* amps = state.amplitudes().data();
  const auto& k = kernels::active();
  return chunked_reduce(state.size(), [&](std::uint64_t b, std::uint64_t e) {
    return k.prob_sum(amps + b, e - b);
  });
}

double success_probability(const StateVector& state,
                           std::span<const std::uint64_t> ground_states) {
  double p = 0.0;
  for (std::uint64_t z : ground_states) {
    if (z >= state.size()) {
      throw std::domain_error("ground-state index out of range");
    }
    p += std::norm(state[z]);
  }
  return p;
}

std::vector<std::uint64_t> sample(const StateVector& state,
                                  std::uint64_t count, std::uint64_t seed) {
  std::vector<double> cdf(state.size());
  double running = 0.0;
  for (std::uint64_t z = 0; z < state.size(); ++z) {
    running += std::norm(state[z]);
    cdf[z] = running;
  }
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> draws(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * running;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    draws[i] = static_cast<std::uint64_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(),
                                 static_cast<std::ptrdiff_t>(cdf.size()) - 1));
  }
  return draws;
}

double estimate_energy(std::span<const std::uint64_t> samples,
                       std::span<const double> table) {
  if (samples.empty()) {
    throw std::domain_error("cannot estimate energy from an empty sample");
  }
  double sum = 0.0;
  for (std::uint64_t z : samples) {
    if (z >= table.size()) {
      throw std::domain_error("sample index out of range");
    }
    sum += table[z];
  }
  return sum / static_cast<double>(samples.size());
}

void dump_state(const StateVector& state, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << "qstate v1 n=" << state.n_qubits() << "\n";
  out.write(reinterpret_cast<const char*>(state.amplitudes().data()),
            static_cast<std::streamsize>(state.size() * sizeof(cdouble)));
  if (!out) {
    throw std::runtime_error("short write to " + path.string());
  }
}

StateVector load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open state file " + path.string());
  }
  std::string header;
  std::getline(in, header);
  int n_qubits = 0;
  if (std::sscanf(header.c_str(), "qstate v1 n=%d", &n_qubits) != 1) {
    throw ParseError("bad state header in " + path.string());
  }
  StateVector state = StateVector::zeros(n_qubits);
  in.read(reinterpret_cast<char*>(state.amplitudes().data()),
          static_cast<std::streamsize>(state.size() * sizeof(cdouble)));
  if (in.gcount() !=
      static_cast<std::streamsize>(state.size() * sizeof(cdouble))) {
    throw ParseError("truncated state file " + path.string());
  }
  return state;
}

}  // namespace qaoabench

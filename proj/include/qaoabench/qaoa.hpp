#pragma once

#include "qaoabench/ising.hpp"
#include "qaoabench/optimizer.hpp"
#include "qaoabench/params.hpp"
#include "qaoabench/statevector.hpp"

#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace qaoabench {

// The three performance measures for one evaluated state: success
// probability (weight on the exact ground states), energy expectation, and
// the normalized ratio (energy - e_max) / (e_min - e_max) in [0, 1].
struct MeasureReport {
  double success_prob = 0.0;
  double energy = 0.0;
  double ratio = 0.0;
  double e_min = 0.0;
  double e_max = 0.0;
};

// Single-line JSON with keys success_prob, energy, ratio, e_min, e_max.
std::string measure_report_to_json(const MeasureReport& report);

// |gamma,beta> = U_B(beta_p) U_C(gamma_p) ... U_B(beta_1) U_C(gamma_1) |+>^N.
// p = 0 returns |+>^N.
StateVector prepare_state(const CostTable& cost, const ParamVector& params);
StateVector prepare_state(const IsingInstance& instance,
                          const ParamVector& params);
// Reuses an existing state of matching size as scratch.
void prepare_state_into(StateVector& state, const CostTable& cost,
                        const ParamVector& params);

MeasureReport measures(const CostTable& cost, const StateVector& state,
                       const SpectrumSummary& spectrum);
MeasureReport measures(const IsingInstance& instance, const StateVector& state,
                       const SpectrumSummary& spectrum);

// Closed-form E_1(gamma, beta) for instances whose coupling graph is
// triangle-free. Throws std::invalid_argument when a triangle exists.
double analytic_p1_energy(const IsingInstance& instance, double gamma,
                          double beta);
bool has_triangle(const IsingInstance& instance);

struct GridSpec {
  double gamma_min = 0.0;
  double gamma_max = 2.0 * std::numbers::pi;
  double beta_min = 0.0;
  double beta_max = std::numbers::pi;
  int gamma_resolution = 64;
  int beta_resolution = 64;
};

struct GridPoint {
  double gamma = 0.0;
  double beta = 0.0;
  double energy = 0.0;
  double success = 0.0;
};

// p=1 landscape over a regular grid; axes sample the half-open ranges
// [min, max) so periodic scans tile without duplicate edges.
struct GridScan {
  std::vector<double> gamma_axis;
  std::vector<double> beta_axis;
  // Row-major, gamma outer: value(ig, ib) = grid[ig * beta_resolution + ib].
  std::vector<double> energy_grid;
  std::vector<double> success_grid;
  GridPoint best_energy;   // argmin of the energy grid
  GridPoint best_success;  // argmax of the success grid
};

GridScan grid_scan(const CostTable& cost, const SpectrumSummary& spectrum,
                   const GridSpec& spec);

// Zoomed re-scan window around a point: same resolution, step divided by
// `factor` per axis.
GridSpec zoom_spec(const GridSpec& spec, double gamma, double beta,
                   int factor = 8);

// CSV "gamma,beta,energy,success_prob", row-major over the grid.
std::string grid_to_csv(const GridScan& scan);

// Frequencies of sampled energies <z|H_C|z>, keyed by exact energy for
// integer spectra and by 1e-9-rounded energy otherwise. Values are relative
// frequencies summing to 1.
std::map<double, double> energy_histogram(const CostTable& cost,
                                          const StateVector& state,
                                          std::uint64_t samples,
                                          std::uint64_t seed);
std::string histogram_to_csv(const std::map<double, double>& histogram);

enum class ObjectiveKind { kEnergy, kNegSuccess };

// Objective evaluation context: owns the scratch state so repeated calls do
// not reallocate. value = E_p (kEnergy) or -success (kNegSuccess); the
// companion is the other measure.
class QaoaObjective {
 public:
  QaoaObjective(const CostTable& cost, const SpectrumSummary& spectrum,
                ObjectiveKind kind);
  ObjectiveEval operator()(const ParamVector& params);
  ObjectiveKind kind() const { return kind_; }

 private:
  const CostTable* cost_;
  const SpectrumSummary* spectrum_;
  ObjectiveKind kind_;
  StateVector scratch_;
};

// Grid argmin/argmax for the objective, refined with Nelder-Mead. This is
// the "optimal p=1 angles" definition used by the benchmark reports.
struct P1Optimum {
  ParamVector params;
  MeasureReport report;
  GridPoint grid_incumbent;
};
P1Optimum p1_optimum(const CostTable& cost, const SpectrumSummary& spectrum,
                     ObjectiveKind kind, const GridSpec& grid,
                     const NelderMeadConfig& nm);

struct SweepEntry {
  int p = 0;
  ParamVector params;
  MeasureReport report;
  OptimizationTrace trace;
};

struct SweepOptions {
  int p_max = 1;
  ObjectiveKind objective = ObjectiveKind::kEnergy;
  GridSpec grid;
  NelderMeadConfig nm;
};

// Incremental-p protocol: p=1 from the refined grid optimum, each further p
// seeded with the previous optimum extended by a zero layer, then optimized.
std::vector<SweepEntry> incremental_p_sweep(const IsingInstance& instance,
                                            const SweepOptions& options);

}  // namespace qaoabench

#pragma once

#include "qaoabench/common.hpp"
#include "qaoabench/params.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qaoabench {

// Objective value plus the companion metric recorded alongside it (energy
// when minimizing negative success probability, success probability when
// minimizing energy).
struct ObjectiveEval {
  double value = 0.0;
  double companion = 0.0;
};

using ObjectiveFn = std::function<ObjectiveEval(const ParamVector&)>;
// Creates one objective per optimization run; runs in parallel trials each
// get their own instance (and thus their own scratch state).
using ObjectiveFactory = std::function<ObjectiveFn()>;

struct NelderMeadConfig {
  // Initial simplex: the init point plus 2p vertices displaced by
  // +simplex_scale along each coordinate.
  double simplex_scale = 0.1;
  // Converged when max-min objective over the simplex drops below this.
  double tolerance = 1e-8;
  int max_iterations = 20000;
  // On convergence with budget remaining, a fresh simplex is seeded around
  // the incumbent at simplex_scale * restart_decay^k.
  int restart_budget = 5;
  double restart_decay = 0.5;
};

struct TraceRecord {
  int iteration = 0;
  double objective = 0.0;  // best vertex of the current simplex
  double companion = 0.0;
  bool restart = false;
};

struct OptimizationTrace {
  std::vector<TraceRecord> records;
  ParamVector initial_params;
  ParamVector final_params;
  double initial_objective = 0.0;
  double final_objective = 0.0;
  double final_companion = 0.0;
  std::uint64_t evaluations = 0;
  int restarts = 0;
  bool converged = false;
  double mean_eval_ms = 0.0;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink
// 1/2) with deterministic convergence restarts. The returned final_params
// are the best parameters over every evaluation, so refinement never loses
// the incumbent. Throws std::runtime_error on a non-finite objective value.
OptimizationTrace nelder_mead(const ObjectiveFn& objective,
                              const ParamVector& init,
                              const NelderMeadConfig& config);

enum class InitStrategy {
  kP1SeededRandom,  // layer 1 from the p=1 optimum, the rest uniform random
  kLinearSchedule,  // annealing-schedule closed forms with the given tau
  kIncremental,     // previous-p optimum extended by a zero layer
};

struct MultiStartOptions {
  InitStrategy strategy = InitStrategy::kLinearSchedule;
  int p = 1;
  int trials = 1;
  std::uint64_t seed = kDefaultSeed;
  double tau = 1.0;
  // p=1 optimum for kP1SeededRandom; (p-1)-step optimum for kIncremental.
  std::optional<ParamVector> anchor;
  NelderMeadConfig nm;
  bool parallel = true;
};

// Runs `trials` independent optimizations and returns the trace with the
// best final objective (ties broken by trial index). Deterministic for a
// fixed seed; trial t uses its own generator regardless of scheduling.
OptimizationTrace multi_start(const ObjectiveFactory& factory,
                              const MultiStartOptions& options);

// The initial point strategy exposed for reuse and tests.
ParamVector make_initial_params(const MultiStartOptions& options, int trial);

// CSV "iter,objective,companion,restart_flag".
std::string trace_to_csv(const OptimizationTrace& trace);

}  // namespace qaoabench

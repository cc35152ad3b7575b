#pragma once

#include "qaoabench/params.hpp"
#include "qaoabench/statevector.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace qaoabench {

// Annealing schedule H(s) = A(s)(-H_0) + B(s)H_C, s in [0,1], discretized
// into `steps` time steps of size tau (total annealing time steps*tau).
// A and B are kept as callables so the midpoints s_n = (n-1/2)/steps are
// evaluated exactly rather than interpolated.
struct AnnealSchedule {
  std::function<double(double)> a_fn;
  std::function<double(double)> b_fn;
  int steps = 1;
  double tau = 0.0;
};

// A(s) = 1-s, B(s) = s.
AnnealSchedule linear_schedule(int steps, double tau);

// Rows (s, A, B) with s ascending; A and B are linearly interpolated and
// clamped at the ends.
AnnealSchedule tabulated_schedule(std::vector<std::array<double, 3>> rows,
                                  int steps, double tau);

// CLI/config schedule spec: "linear" or "table:<file>" with rows "s A B".
AnnealSchedule parse_schedule_spec(const std::string& spec, int steps,
                                   double tau);

// Second-order Trotter mapping of the schedule onto QAOA angles:
//   gamma_n = tau*B(s_n)
//   beta_n  = -tau*(A(s_{n+1})+A(s_n))/2          (n < steps)
//   beta_N  = -tau*A(s_N)/2
// The negative betas turn the QAOA mixer exp(-i*beta*H_0) into the annealing
// factor exp(+i|beta|*H_0).
ParamVector schedule_to_params(const AnnealSchedule& schedule);

// schedule_to_params of the linear schedule with steps = p.
ParamVector linear_init(int p, double tau);

// Applies the symmetric-product discretization literally, including the
// leading half-step mixer (a global phase on |+>^N). Equals the
// schedule-mapped QAOA state up to that phase.
StateVector trotter_evolve(const CostTable& cost,
                           const AnnealSchedule& schedule);
StateVector trotter_evolve(const IsingInstance& instance,
                           const AnnealSchedule& schedule);

}  // namespace qaoabench

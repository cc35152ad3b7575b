#include "qaoabench/annealing.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qaoabench {

namespace {

double midpoint(int n, int steps) {
  return (static_cast<double>(n) - 0.5) / static_cast<double>(steps);
}

void check_schedule(const AnnealSchedule& schedule) {
  if (schedule.steps < 1) {
    throw std::invalid_argument("schedule needs at least one step");
  }
  if (!schedule.a_fn || !schedule.b_fn) {
    throw std::invalid_argument("schedule functions not set");
  }
}

}  // namespace

AnnealSchedule linear_schedule(int steps, double tau) {
  AnnealSchedule s;
  s.a_fn = [](double x) { return 1.0 - x; };
  s.b_fn = [](double x) { return x; };
  s.steps = steps;
  s.tau = tau;
  return s;
}

AnnealSchedule tabulated_schedule(std::vector<std::array<double, 3>> rows,
                                  int steps, double tau) {
  if (rows.size() < 2) {
    throw std::invalid_argument("tabulated schedule needs at least two rows");
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  auto interpolate = [rows](int column) {
    return [rows, column](double s) {
      if (s <= rows.front()[0]) return rows.front()[column];
      if (s >= rows.back()[0]) return rows.back()[column];
      auto hi = std::upper_bound(
          rows.begin(), rows.end(), s,
          [](double v, const auto& row) { return v < row[0]; });
      const auto lo = hi - 1;
      const double t = ((*hi)[0] == (*lo)[0])
                           ? 0.0
                           : (s - (*lo)[0]) / ((*hi)[0] - (*lo)[0]);
      return (*lo)[column] + t * ((*hi)[column] - (*lo)[column]);
    };
  };
  AnnealSchedule s;
  s.a_fn = interpolate(1);
  s.b_fn = interpolate(2);
  s.steps = steps;
  s.tau = tau;
  return s;
}

AnnealSchedule parse_schedule_spec(const std::string& spec, int steps,
                                   double tau) {
  if (spec == "linear") {
    return linear_schedule(steps, tau);
  }
  if (spec.rfind("table:", 0) == 0) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open schedule table " + path);
    }
    std::vector<std::array<double, 3>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::array<double, 3> row{};
      if (!(ls >> row[0])) continue;
      if (!(ls >> row[1] >> row[2])) {
        throw ParseError("schedule table " + path + " line " +
                         std::to_string(line_no) + ": expected 's A B'");
      }
      rows.push_back(row);
    }
    return tabulated_schedule(std::move(rows), steps, tau);
  }
  throw ParseError("unknown schedule spec '" + spec +
                   "' (use linear or table:<file>)");
}

ParamVector schedule_to_params(const AnnealSchedule& schedule) {
  check_schedule(schedule);
  const int n_steps = schedule.steps;
  const double tau = schedule.tau;
  ParamVector params = ParamVector::zeros(n_steps);
  for (int n = 1; n <= n_steps; ++n) {
    params.gammas[n - 1] = tau * schedule.b_fn(midpoint(n, n_steps));
    if (n < n_steps) {
      params.betas[n - 1] = -tau *
                            (schedule.a_fn(midpoint(n + 1, n_steps)) +
                             schedule.a_fn(midpoint(n, n_steps))) /
                            2.0;
    } else {
      params.betas[n - 1] = -tau * schedule.a_fn(midpoint(n, n_steps)) / 2.0;
    }
  }
  return params;
}

ParamVector linear_init(int p, double tau) {
  return schedule_to_params(linear_schedule(p, tau));
}

StateVector trotter_evolve(const CostTable& cost,
                           const AnnealSchedule& schedule) {
  check_schedule(schedule);
  const int n_steps = schedule.steps;
  const double tau = schedule.tau;
  StateVector state = plus_state(cost.n_qubits());
  // exp(+i*theta*H_0) is the mixer with beta = -theta.
  apply_mixer(state, -tau * schedule.a_fn(midpoint(1, n_steps)) / 2.0);
  for (int n = 1; n <= n_steps; ++n) {
    apply_cost_phase(state, cost, tau * schedule.b_fn(midpoint(n, n_steps)));
    double theta;
    if (n < n_steps) {
      theta = tau *
              (schedule.a_fn(midpoint(n + 1, n_steps)) +
               schedule.a_fn(midpoint(n, n_steps))) /
              2.0;
    } else {
      theta = tau * schedule.a_fn(midpoint(n, n_steps)) / 2.0;
    }
    apply_mixer(state, -theta);
  }
  return state;
}

StateVector trotter_evolve(const IsingInstance& instance,
                           const AnnealSchedule& schedule) {
  return trotter_evolve(CostTable(instance), schedule);
}

}  // namespace qaoabench

#include "qaoabench/optimizer.hpp"

#include "qaoabench/annealing.hpp"
#include "qaoabench/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qaoabench {

namespace {

std::vector<double> flatten(const ParamVector& params) {
  std::vector<double> x;
  x.reserve(params.gammas.size() + params.betas.size());
  x.insert(x.end(), params.gammas.begin(), params.gammas.end());
  x.insert(x.end(), params.betas.begin(), params.betas.end());
  return x;
}

ParamVector unflatten(const std::vector<double>& x) {
  const std::size_t p = x.size() / 2;
  ParamVector params;
  params.gammas.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p));
  params.betas.assign(x.begin() + static_cast<std::ptrdiff_t>(p), x.end());
  return params;
}

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
  double companion = 0.0;
};

class Evaluator {
 public:
  explicit Evaluator(const ObjectiveFn& fn) : fn_(&fn) {}

  Vertex eval(std::vector<double> x) {
    const auto t0 = std::chrono::steady_clock::now();
    const ObjectiveEval e = (*fn_)(unflatten(x));
    elapsed_ms_ += std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    ++count_;
    if (!std::isfinite(e.value)) {
      throw std::runtime_error(
          "objective returned a non-finite value after " +
          std::to_string(count_) + " evaluations");
    }
    Vertex v{std::move(x), e.value, e.companion};
    if (!have_best_ || v.f < best_.f) {
      best_ = v;
      have_best_ = true;
    }
    return v;
  }

  const Vertex& best() const { return best_; }
  std::uint64_t count() const { return count_; }
  double mean_ms() const {
    return count_ == 0 ? 0.0 : elapsed_ms_ / static_cast<double>(count_);
  }

 private:
  const ObjectiveFn* fn_;
  Vertex best_;
  bool have_best_ = false;
  std::uint64_t count_ = 0;
  double elapsed_ms_ = 0.0;
};

std::vector<double> axpy(const std::vector<double>& a, double t,
                         const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * b[i];
  return r;
}

}  // namespace

OptimizationTrace nelder_mead(const ObjectiveFn& objective,
                              const ParamVector& init,
                              const NelderMeadConfig& config) {
  if (!init.consistent()) {
    throw std::invalid_argument("gammas and betas differ in length");
  }
  Evaluator eval(objective);
  OptimizationTrace trace;
  trace.initial_params = init;

  const std::vector<double> x0 = flatten(init);
  const std::size_t dim = x0.size();

  if (dim == 0) {
    const Vertex v = eval.eval(x0);
    trace.initial_objective = v.f;
    trace.final_params = init;
    trace.final_objective = v.f;
    trace.final_companion = v.companion;
    trace.evaluations = eval.count();
    trace.converged = true;
    return trace;
  }

  std::vector<Vertex> simplex;
  simplex.reserve(dim + 1);
  simplex.push_back(eval.eval(x0));
  trace.initial_objective = simplex.front().f;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<double> x = x0;
    x[k] += config.simplex_scale;
    simplex.push_back(eval.eval(std::move(x)));
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  auto record = [&](int iteration, bool restart) {
    const auto best =
        std::min_element(simplex.begin(), simplex.end(), by_value);
    trace.records.push_back(
        TraceRecord{iteration, best->f, best->companion, restart});
  };

  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  record(0, false);

  int restarts_used = 0;
  for (int iter = 1; iter <= config.max_iterations; ++iter) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    const double spread = simplex.back().f - simplex.front().f;
    if (spread < config.tolerance) {
      if (restarts_used >= config.restart_budget) {
        trace.converged = true;
        break;
      }
      ++restarts_used;
      // Fresh simplex around the incumbent at a decayed scale. The incumbent
      // itself is not a vertex, so the recorded objective may jump upward
      // here and only here.
      const double scale =
          config.simplex_scale * std::pow(config.restart_decay, restarts_used);
      const std::vector<double>& center = eval.best().x;
      simplex.clear();
      std::vector<double> ones(dim, 1.0);
      simplex.push_back(
          eval.eval(axpy(center, -scale / std::sqrt(double(dim)), ones)));
      for (std::size_t k = 0; k < dim; ++k) {
        std::vector<double> x = center;
        x[k] += scale;
        simplex.push_back(eval.eval(std::move(x)));
      }
      std::stable_sort(simplex.begin(), simplex.end(), by_value);
      record(iter, true);
      continue;
    }

    Vertex& worst = simplex.back();
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);
    std::vector<double> direction(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      direction[i] = centroid[i] - worst.x[i];
    }

    const Vertex reflected = eval.eval(axpy(centroid, 1.0, direction));
    if (reflected.f < simplex.front().f) {
      const Vertex expanded = eval.eval(axpy(centroid, 2.0, direction));
      worst = expanded.f < reflected.f ? expanded : reflected;
    } else if (reflected.f < simplex[dim - 1].f) {
      worst = reflected;
    } else if (reflected.f < worst.f) {
      const Vertex contracted = eval.eval(axpy(centroid, 0.5, direction));
      if (contracted.f <= reflected.f) {
        worst = contracted;
      } else {
        for (std::size_t v = 1; v <= dim; ++v) {
          simplex[v] = eval.eval(
              axpy(simplex[0].x, 0.5,
                   axpy(simplex[v].x, -1.0, simplex[0].x)));
        }
      }
    } else {
      const Vertex contracted = eval.eval(axpy(centroid, -0.5, direction));
      if (contracted.f < worst.f) {
        worst = contracted;
      } else {
        for (std::size_t v = 1; v <= dim; ++v) {
          simplex[v] = eval.eval(
              axpy(simplex[0].x, 0.5,
                   axpy(simplex[v].x, -1.0, simplex[0].x)));
        }
      }
    }
    record(iter, false);
  }

  trace.final_params = unflatten(eval.best().x);
  trace.final_objective = eval.best().f;
  trace.final_companion = eval.best().companion;
  trace.evaluations = eval.count();
  trace.restarts = restarts_used;
  trace.mean_eval_ms = eval.mean_ms();
  return trace;
}

ParamVector make_initial_params(const MultiStartOptions& options, int trial) {
  switch (options.strategy) {
    case InitStrategy::kLinearSchedule:
      return linear_init(options.p, options.tau);
    case InitStrategy::kIncremental: {
      if (!options.anchor || options.anchor->p() + 1 != options.p) {
        throw std::invalid_argument(
            "incremental init needs a (p-1)-step anchor");
      }
      return options.anchor->extended_by_zero_layer();
    }
    case InitStrategy::kP1SeededRandom: {
      if (!options.anchor || options.anchor->p() < 1) {
        throw std::invalid_argument(
            "p1-seeded-random init needs the p=1 optimum as anchor");
      }
      if (options.p < 1) {
        throw std::invalid_argument("p must be at least 1");
      }
      ParamVector params = ParamVector::zeros(options.p);
      params.gammas[0] = options.anchor->gammas[0];
      params.betas[0] = options.anchor->betas[0];
      std::mt19937_64 gen(options.seed +
                          0x9E3779B97F4A7C15ULL *
                              static_cast<std::uint64_t>(trial + 1));
      auto uniform = [&gen](double hi) {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53 * hi;
      };
      for (int k = 1; k < options.p; ++k) {
        params.gammas[static_cast<std::size_t>(k)] =
            uniform(2.0 * std::numbers::pi);
      }
      for (int k = 1; k < options.p; ++k) {
        params.betas[static_cast<std::size_t>(k)] = uniform(std::numbers::pi);
      }
      return params;
    }
  }
  throw std::invalid_argument("unknown init strategy");
}

OptimizationTrace multi_start(const ObjectiveFactory& factory,
                              const MultiStartOptions& options) {
  if (options.trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  std::vector<OptimizationTrace> traces(
      static_cast<std::size_t>(options.trials));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) \
    if (options.parallel && options.trials > 1)
  for (int t = 0; t < options.trials; ++t) {
    try {
      const ObjectiveFn fn = factory();
      traces[static_cast<std::size_t>(t)] =
          nelder_mead(fn, make_initial_params(options, t), options.nm);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::size_t best = 0;
  for (std::size_t t = 1; t < traces.size(); ++t) {
    if (traces[t].final_objective < traces[best].final_objective) best = t;
  }
  return traces[best];
}

std::string trace_to_csv(const OptimizationTrace& trace) {
  std::ostringstream out;
  out << "iter,objective,companion,restart_flag\n";
  for (const TraceRecord& r : trace.records) {
    out << r.iteration << ',' << format_double(r.objective) << ','
        << format_double(r.companion) << ',' << (r.restart ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace qaoabench

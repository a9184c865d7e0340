/* Copyright 2026 The viralcond authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vcond/sis.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <thread>
#include <vector>

#include "vcond/format.hpp"

namespace vcond {
namespace {

void validate_rate_and_options(double curing_rate, const SolverOptions& options) {
  if (curing_rate < 0.0) {
    throw ValidationError("curing rate must be non-negative");
  }
  if (!(options.tolerance > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  if (options.max_iterations < 1) {
    throw ValidationError("iteration cap must be positive");
  }
}

// Runs fn(i) for i in [0, count) across a few threads. Each index writes
// only its own output slot, so scheduling cannot change the result.
void parallel_for(Eigen::Index count, const std::function<void(Eigen::Index)>& fn) {
  const unsigned hardware = std::thread::hardware_concurrency();
  const unsigned workers = std::min<unsigned>(hardware == 0 ? 1 : hardware,
                                              static_cast<unsigned>(count));
  if (workers <= 1) {
    for (Eigen::Index i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (Eigen::Index i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

Eigen::VectorXd mean_field_sweep(const Graph& g, double curing_rate,
                                 const Eigen::Ref<const Eigen::VectorXd>& v) {
  Eigen::VectorXd pressure = g.adjacency() * v;
  return pressure.array() / (curing_rate + pressure.array());
}

SteadyState steady_state(const Graph& g, double curing_rate, double rho,
                         const SolverOptions& options) {
  validate_rate_and_options(curing_rate, options);
  require_connected(g);
  const Eigen::Index n = g.adjacency().rows();

  SteadyState state;
  if (curing_rate == 0.0) {
    // tau -> infinity limit: everyone infected.
    state.probabilities = Eigen::VectorXd::Ones(n);
    state.fraction = 1.0;
    return state;
  }
  if (curing_rate >= rho) {
    // Threshold theorem: no epidemic at or above rho.
    state.probabilities = Eigen::VectorXd::Zero(n);
    state.fraction = 0.0;
    return state;
  }

  // The all-ones start selects the epidemic branch: iterates decrease
  // monotonically to the largest fixed point (the all-zeros state is also
  // a fixed point, so the start matters).
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd pressure(n);
  Eigen::VectorXd next(n);
  double change = 1.0;
  long iteration = 0;
  while (iteration < options.max_iterations) {
    ++iteration;
    pressure.noalias() = g.adjacency() * v;
    next = pressure.array() / (curing_rate + pressure.array());
    change = (next - v).cwiseAbs().maxCoeff();
    v.swap(next);
    if (change <= options.tolerance) break;
  }
  state.probabilities = std::move(v);
  state.fraction = state.probabilities.mean();
  state.converged = change <= options.tolerance;
  state.iterations = iteration;
  state.residual = change;
  return state;
}

SteadyState steady_state(const Graph& g, double curing_rate,
                         const SolverOptions& options) {
  const double rho = spectral_radius(g, options.tolerance).rho;
  return steady_state(g, curing_rate, rho, options);
}

double steady_state_fraction(const Graph& g, double curing_rate,
                             const SolverOptions& options) {
  return steady_state(g, curing_rate, options).fraction;
}

bool InfectionCurve::all_converged() const {
  return std::all_of(converged.begin(), converged.end(),
                     [](bool flag) { return flag; });
}

InfectionCurve evaluate_on_grid(const Graph& g, double rho,
                                const Eigen::Ref<const Eigen::ArrayXd>& grid,
                                const SolverOptions& options) {
  InfectionCurve curve;
  curve.rho = rho;
  curve.s = grid;
  curve.y.resize(grid.size());
  curve.converged.assign(static_cast<std::size_t>(grid.size()), true);

  std::vector<char> flags(static_cast<std::size_t>(grid.size()), 1);
  parallel_for(grid.size(), [&](Eigen::Index i) {
    const SteadyState state = steady_state(g, grid[i], rho, options);
    curve.y[i] = state.fraction;
    flags[static_cast<std::size_t>(i)] = state.converged ? 1 : 0;
  });
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    curve.converged[static_cast<std::size_t>(i)] = flags[static_cast<std::size_t>(i)] != 0;
  }
  return curve;
}

InfectionCurve sample_curve(const Graph& g, double rho, int grid_points,
                            const SolverOptions& options) {
  if (grid_points < 3) {
    throw ValidationError("curve needs at least 3 grid points");
  }
  require_connected(g);

  Eigen::ArrayXd grid(grid_points);
  for (int j = 0; j < grid_points; ++j) {
    // j/(n-1) reaches exactly 1 at the last point, pinning s_last = rho.
    grid[j] = rho * (static_cast<double>(j) / (grid_points - 1));
  }
  return evaluate_on_grid(g, rho, grid, options);
}

InfectionCurve sample_curve(const Graph& g, int grid_points,
                            const SolverOptions& options) {
  const double rho = spectral_radius(g, options.tolerance).rho;
  return sample_curve(g, rho, grid_points, options);
}

void write_curve_csv(std::ostream& out, const InfectionCurve& curve) {
  out << "s,y,converged\n";
  for (Eigen::Index i = 0; i < curve.grid_points(); ++i) {
    out << format_double(curve.s[i]) << ',' << format_double(curve.y[i]) << ','
        << (curve.converged[static_cast<std::size_t>(i)] ? 1 : 0) << '\n';
  }
}

}  // namespace vcond

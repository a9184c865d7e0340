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

#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

#include "vcond/graph.hpp"
#include "vcond/spectral.hpp"

namespace vcond {

struct SolverOptions {
  double tolerance = 1e-10;      // max componentwise change per sweep
  long max_iterations = 1000000;
};

constexpr int kDefaultGridPoints = 101;

/// One synchronous sweep of the per-node mean-field map
///   v_i <- (A v)_i / (s + (A v)_i)
/// which is the fixed-point form of v_i = tau (A v)_i / (1 + tau (A v)_i)
/// with tau = 1/s. The map is monotone and maps [0,1]^N into itself, so
/// iterates started from the all-ones vector decrease componentwise to the
/// largest fixed point.
Eigen::VectorXd mean_field_sweep(const Graph& g, double curing_rate,
                                 const Eigen::Ref<const Eigen::VectorXd>& v);

/// Steady-state solution at one effective curing rate s.
struct SteadyState {
  Eigen::VectorXd probabilities;  // per-node infection probabilities v_i
  double fraction = 0.0;          // (1/N) sum v_i
  bool converged = true;
  long iterations = 0;
  double residual = 0.0;          // last max componentwise change
};

/// Largest mean-field fixed point at curing rate s, from the all-ones
/// start. s = 0 returns the all-ones state exactly; s >= rho returns the
/// zero state exactly (threshold theorem). Hitting the iteration cap flags
/// the result as non-converged instead of discarding it.
SteadyState steady_state(const Graph& g, double curing_rate, double rho,
                         const SolverOptions& options = {});

/// Convenience overload computing rho with spectral_radius(g, tolerance).
SteadyState steady_state(const Graph& g, double curing_rate,
                         const SolverOptions& options = {});

/// Steady-state infected fraction y(s); see steady_state().
double steady_state_fraction(const Graph& g, double curing_rate,
                             const SolverOptions& options = {});

/// y(s) sampled on an equidistant s-grid over [0, rho].
struct InfectionCurve {
  Eigen::ArrayXd s;            // strictly increasing, s[0] = 0, s[last] = rho
  Eigen::ArrayXd y;            // infected fraction per grid point
  std::vector<bool> converged;
  double rho = 0.0;

  Eigen::Index grid_points() const noexcept { return s.size(); }
  bool all_converged() const;
};

/// Evaluates y(s) on an arbitrary grid (samples are independent and are
/// evaluated concurrently). Grid values above rho yield exactly 0.
InfectionCurve evaluate_on_grid(const Graph& g, double rho,
                                const Eigen::Ref<const Eigen::ArrayXd>& grid,
                                const SolverOptions& options = {});

/// Samples the infection curve on `grid_points` equidistant values of s
/// covering [0, rho] inclusive; both endpoints are pinned analytically
/// (y(0) = 1, y(rho) = 0). Requires grid_points >= 3 and a connected graph.
InfectionCurve sample_curve(const Graph& g, int grid_points = kDefaultGridPoints,
                            const SolverOptions& options = {});

/// As above with a precomputed spectral radius.
InfectionCurve sample_curve(const Graph& g, double rho, int grid_points,
                            const SolverOptions& options = {});

/// CSV export: header "s,y,converged", one row per grid point, full
/// precision decimal floats.
void write_curve_csv(std::ostream& out, const InfectionCurve& curve);

}  // namespace vcond

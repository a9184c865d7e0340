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

#include "vcond/spectral.hpp"

#include <Eigen/Core>
#include <cmath>
#include <string>

namespace vcond {

SpectralSummary spectral_radius(const Graph& g, double tolerance,
                                long max_iterations) {
  if (!(tolerance > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  require_connected(g);

  const auto& adjacency = g.adjacency();
  const Eigen::Index n = adjacency.rows();

  Eigen::VectorXd b = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  Eigen::VectorXd shifted(n);

  double quotient = 0.0;
  double previous = 0.0;
  double residual = 1.0;
  int small_changes = 0;

  for (long iteration = 1; iteration <= max_iterations; ++iteration) {
    shifted.noalias() = adjacency * b;
    shifted += b;  // operator A + I keeps the Perron value strictly dominant
    quotient = b.dot(shifted);
    if (iteration > 1) {
      residual = std::abs(quotient - previous) / std::abs(quotient);
      small_changes = residual <= tolerance ? small_changes + 1 : 0;
    }
    previous = quotient;
    b = shifted / shifted.norm();
    if (small_changes >= 2) {
      SpectralSummary summary;
      summary.rho = quotient - 1.0;
      summary.threshold = 1.0 / summary.rho;
      summary.iterations = iteration;
      summary.residual = residual;
      return summary;
    }
  }
  throw NumericalError(
      "power iteration did not converge within " +
          std::to_string(max_iterations) +
          " iterations (last residual " + std::to_string(residual) + ")",
      residual);
}

}  // namespace vcond

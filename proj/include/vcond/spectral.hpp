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

#include "vcond/graph.hpp"

namespace vcond {

/// Spectral radius of the adjacency matrix and the epidemic threshold.
struct SpectralSummary {
  double rho = 0.0;        // largest adjacency eigenvalue
  double threshold = 0.0;  // 1 / rho
  long iterations = 0;
  double residual = 0.0;   // relative Rayleigh-quotient change at the stop
};

/// Power iteration on the shifted operator A + I with the normalized
/// all-ones start vector, reporting rho as the dominant shifted eigenvalue
/// minus one.
///
/// The shift matters: on bipartite graphs A has the eigenvalue pair
/// +/- rho, so raw power iteration oscillates; A + I makes the Perron value
/// strictly dominant. The all-ones start keeps results deterministic and is
/// exact immediately on regular graphs.
///
/// Stops once the relative change of the Rayleigh quotient stays below
/// `tolerance` for two consecutive iterations; throws NumericalError
/// (carrying the last residual) if the cap is hit first, ValidationError for
/// a disconnected graph or a non-positive tolerance.
SpectralSummary spectral_radius(const Graph& g, double tolerance = 1e-10,
                                long max_iterations = 1000000);

}  // namespace vcond

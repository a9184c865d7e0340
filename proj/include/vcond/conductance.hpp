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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcond/sis.hpp"

namespace vcond {

// Viral conductance V = integral of y(s) over the curing rate s: the area
// under the steady-state infection curve. Smaller V = more robust network.

/// Numeric value plus a warning flag set when any curve sample had not
/// converged.
struct ConductanceValue {
  double value = 0.0;
  bool warning = false;
};

/// Composite trapezoid over the curve's own grid. No endpoint
/// extrapolation: both curve endpoints are analytically pinned.
ConductanceValue viral_conductance_numeric(const InfectionCurve& curve);

/// Closed form for k-regular graphs: k/2.
double vc_regular(int k);

/// Closed form for the complete bipartite graph K_{M,N}, obtained by
/// integrating its steady-state fraction in the curing-rate variable via
/// partial fractions:
///   V = [(M+N) r - MN
///        + (M-N)(N ln(N+r) - M ln(M+r) + M ln M - N ln N)] / (M+N),
/// with r = sqrt(MN).
double vc_bipartite(std::int64_t m, std::int64_t n);

/// Closed-form steady-state fraction of K_{M,N} at curing rate s
/// (0 for s >= sqrt(MN)). Exposed for oracles and plotting.
double bipartite_fraction(std::int64_t m, std::int64_t n, double s);

// The two-line and non-linear approximations of the infection curve need
// only three statistics: rho, the mean degree E[d], and the inverse-degree
// mean sigma. All heuristic functions take them in that order. For a
// regular graph sigma*rho - 1 vanishes and both formulas turn 0/0; the
// curve is then exactly linear and the value is rho/2.

/// sigma*rho - 1 below this threshold selects the regular-graph branch.
constexpr double kRegularEps = 1e-9;

/// Area under the two tangent lines: 1 - sigma*s from the left and
/// (E[d]/rho)(1 - s/rho) from the right, meeting at s*.
double heuristic_vpl(double rho, double mean_degree, double sigma);

/// Area under the curve 1 - sigma*s + (sigma*rho - 1)(s/rho)^d that shares
/// both tangents with the true curve.
double heuristic_vnl(double rho, double mean_degree, double sigma);

/// Average of the two heuristics.
double heuristic_vh_value(double rho, double mean_degree, double sigma);

/// Intersection point s* of the two tangent lines.
double heuristic_intersection(double rho, double mean_degree, double sigma);

/// Exponent d of the non-linear model curve (> 1 for non-regular stats).
double nonlinear_exponent(double rho, double mean_degree, double sigma);

/// The non-linear model curve itself, for 0 <= s <= rho.
/// Throws RangeError outside that range.
double model_curve_nl(double rho, double mean_degree, double sigma, double s);

/// Everything a robustness report carries. `v_numeric` is present only when
/// the infection curve was actually sampled; `relative_error_vh` is
/// (v_h - v_numeric)/v_numeric when both are available.
struct ConductanceReport {
  std::string name;
  std::int64_t nodes = 0;
  std::int64_t links = 0;
  double mean_degree = 0.0;
  double sigma = 0.0;
  double rho = 0.0;
  double threshold = 0.0;
  double v_pl = 0.0;
  double v_nl = 0.0;
  double v_h = 0.0;
  std::optional<double> v_numeric;
  std::optional<double> relative_error_vh;
  int grid_points = 0;
  bool warning = false;  // some curve sample had not converged
};

/// Heuristic-only report: spectral radius, degree statistics, V_PL, V_NL,
/// V_H. No curve is sampled.
ConductanceReport heuristic_report(const Graph& g, const std::string& name = "",
                                   const SolverOptions& options = {});

/// Full report: heuristics plus the sampled curve and its trapezoid value.
/// When `out_curve` is non-null the sampled curve is copied there.
ConductanceReport full_report(const Graph& g, const std::string& name,
                              int grid_points = kDefaultGridPoints,
                              const SolverOptions& options = {},
                              InfectionCurve* out_curve = nullptr);

/// Which network is strictly lower on a maximal run of grid points.
struct DominanceInterval {
  double s_begin = 0.0;
  double s_end = 0.0;
  int lower = 0;  // 0 = first network, 1 = second
};

struct Comparison {
  SpectralSummary spectral_a;
  SpectralSummary spectral_b;
  double v_a = 0.0;
  double v_b = 0.0;
  bool warning_a = false;
  bool warning_b = false;
  Eigen::ArrayXd s;    // common grid over [0, max(rho_a, rho_b)]
  Eigen::ArrayXd y_a;  // 0 beyond the network's own rho
  Eigen::ArrayXd y_b;
  std::vector<bool> converged_a;
  std::vector<bool> converged_b;
  std::vector<DominanceInterval> dominance;  // at grid resolution
  bool curves_identical = false;  // every sample ties within tie_tolerance
};

/// Samples both networks on a common grid, computes both V values (each on
/// the network's own grid), and classifies per-sample dominance. Samples
/// closer than `tie_tolerance` count as ties and separate intervals.
Comparison compare_networks(const Graph& a, const Graph& b,
                            int grid_points = kDefaultGridPoints,
                            const SolverOptions& options = {},
                            double tie_tolerance = 1e-8);

/// Flat key-value text block. Includes the node index -> label map when the
/// graph carried labels (pass it as `label_source`).
std::string to_text(const ConductanceReport& report,
                    const Graph* label_source = nullptr);

/// One network per row, mirroring the report columns.
inline constexpr std::string_view kReportCsvHeader =
    "name,N,L,mean_degree,threshold,V,V_H,rel_error";

/// Full-precision CSV row under kReportCsvHeader. Missing numeric V and
/// rel_error render as empty fields; names containing commas are quoted.
std::string to_csv_row(const ConductanceReport& report);

}  // namespace vcond

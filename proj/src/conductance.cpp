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

#include "vcond/conductance.hpp"

#include <cmath>
#include <sstream>

#include "vcond/format.hpp"

namespace vcond {
namespace {

void validate_heuristic_stats(double rho, double mean_degree, double sigma) {
  if (!(rho > 0.0) || !(mean_degree >= 1.0) || !(sigma > 0.0)) {
    throw ValidationError("inconsistent statistics: need rho > 0, E[d] >= 1");
  }
  // AM-HM: sigma * E[d] >= 1 on any degree sequence; rho >= E[d] on any
  // connected graph. Small slack covers floating-point sums.
  if (sigma * mean_degree < 1.0 - kRegularEps) {
    throw ValidationError("inconsistent statistics: sigma * E[d] < 1");
  }
  if (rho < mean_degree * (1.0 - kRegularEps)) {
    throw ValidationError("inconsistent statistics: rho < E[d]");
  }
}

bool regular_branch(double rho, double sigma) {
  return sigma * rho - 1.0 <= kRegularEps;
}

}  // namespace

ConductanceValue viral_conductance_numeric(const InfectionCurve& curve) {
  const Eigen::Index n = curve.grid_points();
  if (n < 2) {
    throw ValidationError("curve needs at least 2 samples to integrate");
  }
  const auto ds = curve.s.tail(n - 1) - curve.s.head(n - 1);
  const auto pairs = curve.y.tail(n - 1) + curve.y.head(n - 1);
  ConductanceValue result;
  result.value = 0.5 * (ds * pairs).sum();
  result.warning = !curve.all_converged();
  return result;
}

double vc_regular(int k) {
  if (k < 1) throw ValidationError("degree must be positive");
  return k / 2.0;
}

double vc_bipartite(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) {
    throw ValidationError("bipartite sides must be positive");
  }
  const double mm = static_cast<double>(m);
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(mm * nn);
  const double log_terms = nn * std::log(nn + root) - mm * std::log(mm + root) +
                           mm * std::log(mm) - nn * std::log(nn);
  return ((mm + nn) * root - mm * nn + (mm - nn) * log_terms) / (mm + nn);
}

double bipartite_fraction(std::int64_t m, std::int64_t n, double s) {
  const double mm = static_cast<double>(m);
  const double nn = static_cast<double>(n);
  if (s <= 0.0) return 1.0;
  if (s * s >= mm * nn) return 0.0;
  return (mm * nn - s * s) * (mm + nn + 2.0 * s) /
         ((mm + nn) * (mm + s) * (nn + s));
}

double heuristic_vpl(double rho, double mean_degree, double sigma) {
  validate_heuristic_stats(rho, mean_degree, sigma);
  if (regular_branch(rho, sigma)) return rho / 2.0;
  return rho * ((sigma * rho - 2.0) * mean_degree + rho) /
         (2.0 * (sigma * rho * rho - mean_degree));
}

double heuristic_vnl(double rho, double mean_degree, double sigma) {
  validate_heuristic_stats(rho, mean_degree, sigma);
  if (regular_branch(rho, sigma)) return rho / 2.0;
  return rho * ((sigma * rho - 2.0) * mean_degree + sigma * rho * rho) /
         (2.0 * (2.0 * sigma * rho * rho - mean_degree - rho));
}

double heuristic_vh_value(double rho, double mean_degree, double sigma) {
  return (heuristic_vpl(rho, mean_degree, sigma) +
          heuristic_vnl(rho, mean_degree, sigma)) /
         2.0;
}

double heuristic_intersection(double rho, double mean_degree, double sigma) {
  validate_heuristic_stats(rho, mean_degree, sigma);
  if (regular_branch(rho, sigma)) return rho;  // the two lines coincide
  return rho * (rho - mean_degree) / (sigma * rho * rho - mean_degree);
}

double nonlinear_exponent(double rho, double mean_degree, double sigma) {
  validate_heuristic_stats(rho, mean_degree, sigma);
  if (regular_branch(rho, sigma)) {
    throw ValidationError("exponent undefined for regular statistics");
  }
  return (sigma * rho * rho - mean_degree) / (rho * (sigma * rho - 1.0));
}

double model_curve_nl(double rho, double mean_degree, double sigma, double s) {
  validate_heuristic_stats(rho, mean_degree, sigma);
  if (s < 0.0 || s > rho) {
    throw RangeError("s outside [0, rho]");
  }
  if (regular_branch(rho, sigma)) {
    return 1.0 - s / rho;  // exact infection curve of a regular graph
  }
  const double d = nonlinear_exponent(rho, mean_degree, sigma);
  return 1.0 - sigma * s + (sigma * rho - 1.0) * std::pow(s / rho, d);
}

ConductanceReport heuristic_report(const Graph& g, const std::string& name,
                                   const SolverOptions& options) {
  require_connected(g, name.empty() ? "graph" : name);
  const DegreeStats stats = degree_stats(g);
  const SpectralSummary spectral =
      spectral_radius(g, options.tolerance, options.max_iterations);

  ConductanceReport report;
  report.name = name;
  report.nodes = g.node_count();
  report.links = g.edge_count();
  report.mean_degree = stats.mean_degree;
  report.sigma = stats.inverse_degree_mean;
  report.rho = spectral.rho;
  report.threshold = spectral.threshold;
  report.v_pl = heuristic_vpl(spectral.rho, stats.mean_degree,
                              stats.inverse_degree_mean);
  report.v_nl = heuristic_vnl(spectral.rho, stats.mean_degree,
                              stats.inverse_degree_mean);
  report.v_h = (report.v_pl + report.v_nl) / 2.0;
  return report;
}

ConductanceReport full_report(const Graph& g, const std::string& name,
                              int grid_points, const SolverOptions& options,
                              InfectionCurve* out_curve) {
  ConductanceReport report = heuristic_report(g, name, options);
  const InfectionCurve curve = sample_curve(g, report.rho, grid_points, options);
  const ConductanceValue numeric = viral_conductance_numeric(curve);
  report.v_numeric = numeric.value;
  report.warning = numeric.warning;
  report.grid_points = grid_points;
  if (numeric.value != 0.0) {
    report.relative_error_vh = (report.v_h - numeric.value) / numeric.value;
  }
  if (out_curve) *out_curve = curve;
  return report;
}

Comparison compare_networks(const Graph& a, const Graph& b, int grid_points,
                            const SolverOptions& options,
                            double tie_tolerance) {
  if (grid_points < 3) {
    throw ValidationError("comparison needs at least 3 grid points");
  }
  require_connected(a, "first network");
  require_connected(b, "second network");

  Comparison cmp;
  cmp.spectral_a = spectral_radius(a, options.tolerance, options.max_iterations);
  cmp.spectral_b = spectral_radius(b, options.tolerance, options.max_iterations);

  // Each V comes from the network's own grid over [0, rho].
  const ConductanceValue va = viral_conductance_numeric(
      sample_curve(a, cmp.spectral_a.rho, grid_points, options));
  const ConductanceValue vb = viral_conductance_numeric(
      sample_curve(b, cmp.spectral_b.rho, grid_points, options));
  cmp.v_a = va.value;
  cmp.v_b = vb.value;
  cmp.warning_a = va.warning;
  cmp.warning_b = vb.warning;

  const double s_max = std::max(cmp.spectral_a.rho, cmp.spectral_b.rho);
  Eigen::ArrayXd grid(grid_points);
  for (int j = 0; j < grid_points; ++j) {
    grid[j] = s_max * (static_cast<double>(j) / (grid_points - 1));
  }
  const InfectionCurve curve_a =
      evaluate_on_grid(a, cmp.spectral_a.rho, grid, options);
  const InfectionCurve curve_b =
      evaluate_on_grid(b, cmp.spectral_b.rho, grid, options);
  cmp.s = grid;
  cmp.y_a = curve_a.y;
  cmp.y_b = curve_b.y;
  cmp.converged_a = curve_a.converged;
  cmp.converged_b = curve_b.converged;

  // Dominance at grid resolution: maximal runs of grid points where one
  // curve is lower by more than tie_tolerance.
  cmp.curves_identical = true;
  int run_state = 0;  // 0 tie, -1 first lower, +1 second lower
  Eigen::Index run_begin = 0;
  auto flush = [&](Eigen::Index end_index) {
    if (run_state != 0 && end_index > run_begin) {
      DominanceInterval interval;
      interval.s_begin = cmp.s[run_begin];
      interval.s_end = cmp.s[end_index - 1];
      interval.lower = run_state < 0 ? 0 : 1;
      cmp.dominance.push_back(interval);
    }
  };
  for (Eigen::Index i = 0; i < grid_points; ++i) {
    const double gap = cmp.y_a[i] - cmp.y_b[i];
    int state = 0;
    if (gap < -tie_tolerance) state = -1;
    if (gap > tie_tolerance) state = 1;
    if (state != 0) cmp.curves_identical = false;
    if (state != run_state) {
      flush(i);
      run_state = state;
      run_begin = i;
    }
  }
  flush(grid_points);
  return cmp;
}

std::string to_text(const ConductanceReport& report, const Graph* label_source) {
  std::ostringstream out;
  out << "name: " << report.name << '\n';
  out << "nodes: " << report.nodes << '\n';
  out << "links: " << report.links << '\n';
  out << "mean_degree: " << format_double(report.mean_degree) << '\n';
  out << "sigma: " << format_double(report.sigma) << '\n';
  out << "rho: " << format_double(report.rho) << '\n';
  out << "threshold: " << format_double(report.threshold) << '\n';
  if (report.v_numeric) {
    out << "grid_points: " << report.grid_points << '\n';
    out << "V: " << format_double(*report.v_numeric) << '\n';
  }
  out << "V_PL: " << format_double(report.v_pl) << '\n';
  out << "V_NL: " << format_double(report.v_nl) << '\n';
  out << "V_H: " << format_double(report.v_h) << '\n';
  if (report.relative_error_vh) {
    out << "rel_error_vh: " << format_double(*report.relative_error_vh * 100.0)
        << "%\n";
  }
  if (report.warning) {
    out << "warning: curve contains non-converged samples\n";
  }
  if (label_source && label_source->has_labels()) {
    out << "node_map:\n";
    for (NodeId i = 0; i < label_source->node_count(); ++i) {
      out << "  " << i << ' ' << label_source->labels()[static_cast<std::size_t>(i)]
          << '\n';
    }
  }
  return out.str();
}

std::string to_csv_row(const ConductanceReport& report) {
  std::ostringstream out;
  out << csv_escape(report.name) << ',' << report.nodes << ',' << report.links
      << ',' << format_double(report.mean_degree) << ','
      << format_double(report.threshold) << ',';
  if (report.v_numeric) out << format_double(*report.v_numeric);
  out << ',' << format_double(report.v_h) << ',';
  if (report.relative_error_vh) {
    out << format_double(*report.relative_error_vh * 100.0) << '%';
  }
  return out.str();
}

}  // namespace vcond

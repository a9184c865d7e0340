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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vcond/conductance.hpp"
#include "vcond/format.hpp"
#include "vcond/generate.hpp"

using namespace vcond;

namespace {

double bipartite_oracle(double m, double n, double s) {
  if (s <= 0.0) return 1.0;
  if (s * s >= m * n) return 0.0;
  return (m * n - s * s) * (m + n + 2.0 * s) / ((m + n) * (m + s) * (n + s));
}

// Independent quadrature oracle over the closed-form curve.
double bipartite_quad(int m, int n, int intervals) {
  const double rho = std::sqrt(double(m) * n);
  double sum = 0.0;
  for (int i = 0; i < intervals; ++i) {
    const double s0 = rho * i / intervals;
    const double s1 = rho * (i + 1) / intervals;
    sum += (s1 - s0) *
           (bipartite_oracle(m, n, s0) + bipartite_oracle(m, n, s1)) / 2.0;
  }
  return sum;
}

InfectionCurve exact_line_curve(int points) {
  InfectionCurve curve;
  curve.rho = 2.0;
  curve.s.resize(points);
  curve.y.resize(points);
  curve.converged.assign(static_cast<std::size_t>(points), true);
  for (int i = 0; i < points; ++i) {
    curve.s[i] = 2.0 * i / (points - 1);
    curve.y[i] = 1.0 - curve.s[i] / 2.0;
  }
  return curve;
}

struct BipartiteStats {
  double rho, mean_degree, sigma;
};

BipartiteStats stats_of(double m, double n) {
  return {std::sqrt(m * n), 2.0 * m * n / (m + n),
          (m * m + n * n) / (m * n * (m + n))};
}

}  // namespace

TEST_CASE("trapezoid quadrature") {
  for (const int points : {5, 33, 101}) {
    const ConductanceValue v = viral_conductance_numeric(exact_line_curve(points));
    CHECK(v.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(v.warning);
  }
  InfectionCurve flagged = exact_line_curve(9);
  flagged.converged[4] = false;
  CHECK(viral_conductance_numeric(flagged).warning);
}

TEST_CASE("closed forms") {
  SUBCASE("regular") {
    CHECK(vc_regular(2) == 1.0);
    CHECK(vc_regular(3) == 1.5);
    CHECK(vc_regular(50) == 25.0);
    CHECK_THROWS_AS(vc_regular(0), ValidationError);
  }
  SUBCASE("bipartite values") {
    CHECK(vc_bipartite(10, 90) == doctest::Approx(11.3772456724309).epsilon(1e-12));
    CHECK(vc_bipartite(30, 70) == doctest::Approx(21.8520765195857).epsilon(1e-12));
    CHECK(vc_bipartite(50, 50) == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(vc_bipartite(10, 990) == doctest::Approx(20.139187912342).epsilon(1e-12));
    CHECK(vc_bipartite(100, 900) == doctest::Approx(113.772456724309).epsilon(1e-12));
    CHECK(vc_bipartite(250, 750) == doctest::Approx(200.239371331895).epsilon(1e-12));
    CHECK(vc_bipartite(2, 8) == doctest::Approx(1.77210222748254).epsilon(1e-12));
    CHECK(vc_bipartite(8, 2) == vc_bipartite(2, 8));  // symmetric
    CHECK_THROWS_AS(vc_bipartite(0, 5), ValidationError);
  }
  SUBCASE("balanced bipartite reduces to the regular case") {
    for (int n = 1; n <= 60; ++n) {
      CHECK(vc_bipartite(n, n) == doctest::Approx(n / 2.0).epsilon(1e-14));
    }
  }
  SUBCASE("quadrature of the closed-form curve agrees for all M,N <= 30") {
    // library trapezoid over 10^4 closed-form samples vs the closed form
    for (int m = 1; m <= 30; ++m) {
      for (int n = m; n <= 30; ++n) {
        const double rho = std::sqrt(double(m) * n);
        const int points = 10001;
        InfectionCurve curve;
        curve.rho = rho;
        curve.s.resize(points);
        curve.y.resize(points);
        curve.converged.assign(points, true);
        for (int i = 0; i < points; ++i) {
          curve.s[i] = rho * i / (points - 1);
          curve.y[i] = bipartite_oracle(m, n, curve.s[i]);
        }
        const double numeric = viral_conductance_numeric(curve).value;
        CHECK(std::abs(numeric - vc_bipartite(m, n)) <= 1e-3);
      }
    }
    // and a fully hand-rolled integration route for two spot values
    CHECK(std::abs(bipartite_quad(2, 8, 100000) - 1.77210222748254) <= 1e-6);
    CHECK(std::abs(bipartite_quad(10, 90, 100000) - 11.3772456724309) <= 1e-5);
  }
  SUBCASE("ring conductance is 1 regardless of size") {
    for (const NodeId n : {3, 7, 20, 101}) {
      const ConductanceReport report =
          full_report(generate(Ring{n}), "ring", 41);
      CHECK(*report.v_numeric == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("heuristics") {
  const BipartiteStats k1090 = stats_of(10, 90);
  SUBCASE("frozen values for K(10,90)") {
    CHECK(heuristic_vpl(k1090.rho, k1090.mean_degree, k1090.sigma) ==
          doctest::Approx(10.125).epsilon(1e-12));
    CHECK(heuristic_vnl(k1090.rho, k1090.mean_degree, k1090.sigma) ==
          doctest::Approx(12.3103448275862).epsilon(1e-12));
    CHECK(heuristic_vh_value(k1090.rho, k1090.mean_degree, k1090.sigma) ==
          doctest::Approx(11.2176724137931).epsilon(1e-12));
  }
  SUBCASE("frozen values for K(10,990)") {
    const BipartiteStats s = stats_of(10, 990);
    const double vpl = heuristic_vpl(s.rho, s.mean_degree, s.sigma);
    const double vnl = heuristic_vnl(s.rho, s.mean_degree, s.sigma);
    CHECK(vpl == doctest::Approx(13.2068980367856).epsilon(1e-12));
    CHECK(vnl == doctest::Approx(30.6871982049451).epsilon(1e-12));
    CHECK((vpl + vnl) / 2 == doctest::Approx(21.9470481208654).epsilon(1e-12));
  }
  SUBCASE("frozen values for the 30x30 grid statistics") {
    const double rho = 4.0 * std::cos(std::numbers::pi / 31.0);
    const double mean_degree = 3480.0 / 900.0;
    const double sigma = (784 * 0.25 + 112.0 / 3.0 + 4 * 0.5) / 900.0;
    CHECK(heuristic_vpl(rho, mean_degree, sigma) ==
          doctest::Approx(1.9565380419252).epsilon(1e-12));
    CHECK(heuristic_vnl(rho, mean_degree, sigma) ==
          doctest::Approx(1.96883946334666).epsilon(1e-12));
    CHECK(heuristic_vh_value(rho, mean_degree, sigma) ==
          doctest::Approx(1.96268875263593).epsilon(1e-12));
  }
  SUBCASE("regular statistics take the degenerate branch") {
    CHECK(heuristic_vpl(3.0, 3.0, 1.0 / 3.0) == 1.5);
    CHECK(heuristic_vnl(3.0, 3.0, 1.0 / 3.0) == 1.5);
    CHECK(heuristic_vpl(2.0, 2.0, 0.5) == vc_regular(2));
  }
  SUBCASE("inconsistent statistics are rejected") {
    CHECK_THROWS_AS(heuristic_vpl(3.0, 2.0, 0.4), ValidationError);  // sigma E < 1
    CHECK_THROWS_AS(heuristic_vpl(2.5, 3.0, 0.5), ValidationError);  // rho < E
    CHECK_THROWS_AS(heuristic_vnl(3.0, 2.0, 0.4), ValidationError);
    CHECK_THROWS_AS(heuristic_vpl(-1.0, 2.0, 0.6), ValidationError);
  }
  SUBCASE("tangent-line geometry") {
    const double s_star =
        heuristic_intersection(k1090.rho, k1090.mean_degree, k1090.sigma);
    CHECK(s_star == doctest::Approx(5.625).epsilon(1e-12));
    // the two lines really do meet there
    const double left = 1.0 - k1090.sigma * s_star;
    const double right = k1090.mean_degree / k1090.rho *
                         (1.0 - s_star / k1090.rho);
    CHECK(left == doctest::Approx(right).epsilon(1e-12));
    // and the 2-segment area equals the closed-form V_PL
    const double area_left = s_star - k1090.sigma * s_star * s_star / 2.0;
    const double area_right = k1090.mean_degree *
                              (k1090.rho - s_star) * (k1090.rho - s_star) /
                              (2.0 * k1090.rho * k1090.rho);
    CHECK(area_left + area_right ==
          doctest::Approx(heuristic_vpl(k1090.rho, k1090.mean_degree,
                                        k1090.sigma)).epsilon(1e-12));
  }
}

TEST_CASE("non-linear model curve") {
  const BipartiteStats st = stats_of(10, 90);
  CHECK(nonlinear_exponent(st.rho, st.mean_degree, st.sigma) ==
        doctest::Approx(1.23076923076923).epsilon(1e-12));
  CHECK(model_curve_nl(st.rho, st.mean_degree, st.sigma, 0.0) == 1.0);
  CHECK(model_curve_nl(st.rho, st.mean_degree, st.sigma, st.rho) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(model_curve_nl(st.rho, st.mean_degree, st.sigma, 15.0) ==
        doctest::Approx(0.371889676904765).epsilon(1e-12));

  // Two-sided finite difference near rho: the analytic derivative there is
  // -sigma + (sigma rho - 1) d / rho = -E[d]/rho^2 = -0.02 by construction.
  const double h = 1e-4;
  const double fd = (model_curve_nl(st.rho, st.mean_degree, st.sigma, st.rho) -
                     model_curve_nl(st.rho, st.mean_degree, st.sigma,
                                    st.rho - 2 * h)) /
                    (2 * h);
  CHECK(fd == doctest::Approx(-0.02).epsilon(1e-4));

  CHECK_THROWS_AS(model_curve_nl(st.rho, st.mean_degree, st.sigma, -0.1),
                  RangeError);
  CHECK_THROWS_AS(model_curve_nl(st.rho, st.mean_degree, st.sigma, st.rho + 0.1),
                  RangeError);
  CHECK_THROWS_AS(nonlinear_exponent(3.0, 3.0, 1.0 / 3.0), ValidationError);
  // regular stats degenerate to the exact line
  CHECK(model_curve_nl(2.0, 2.0, 0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("table-1 sign pattern of the heuristic error") {
  const int rows[][2] = {{10, 90}, {30, 70}, {50, 50},
                         {10, 990}, {100, 900}, {250, 750}};
  const int expected_sign[] = {-1, -1, 0, +1, -1, -1};
  for (int i = 0; i < 6; ++i) {
    const BipartiteStats st = stats_of(rows[i][0], rows[i][1]);
    const double v = vc_bipartite(rows[i][0], rows[i][1]);
    const double vh = heuristic_vh_value(st.rho, st.mean_degree, st.sigma);
    const double rel = (vh - v) / v;
    if (expected_sign[i] == 0) {
      CHECK(std::abs(rel) <= 1e-12);
    } else {
      CHECK(rel * expected_sign[i] > 0.0);
    }
  }
}

TEST_CASE("reports") {
  SUBCASE("heuristic report on a regular graph") {
    const ConductanceReport report =
        heuristic_report(generate(RandomRegular{100, 3, 21}), "rr");
    CHECK(report.v_h == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(report.v_pl == doctest::Approx(report.v_nl).epsilon(1e-12));
    CHECK_FALSE(report.v_numeric.has_value());
    CHECK(report.v_h == (report.v_pl + report.v_nl) / 2);
  }
  SUBCASE("heuristic report on K(10,90) from the actual graph") {
    const ConductanceReport report =
        heuristic_report(generate(CompleteBipartite{10, 90}), "k1090");
    CHECK(report.v_h == doctest::Approx(11.2176724137931).epsilon(1e-6));
    CHECK(report.rho == doctest::Approx(30.0).epsilon(1e-8));
  }
  SUBCASE("heuristic report on K(250,750), the largest tabulated instance") {
    const ConductanceReport report =
        heuristic_report(generate(CompleteBipartite{250, 750}), "k250750");
    CHECK(report.v_h == doctest::Approx(199.07).epsilon(1e-4));
    CHECK(report.rho == doctest::Approx(std::sqrt(187500.0)).epsilon(1e-7));
  }
  SUBCASE("full report") {
    const ConductanceReport report =
        full_report(generate(CompleteBipartite{2, 8}), "k28", 101);
    REQUIRE(report.v_numeric.has_value());
    CHECK(*report.v_numeric == doctest::Approx(1.7721).epsilon(0.005));
    CHECK(report.threshold == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(report.grid_points == 101);
    REQUIRE(report.relative_error_vh.has_value());
    CHECK(*report.relative_error_vh ==
          doctest::Approx((report.v_h - *report.v_numeric) / *report.v_numeric)
              .epsilon(1e-12));
  }
  SUBCASE("serialization") {
    ConductanceReport report;
    report.name = "grid2d:30,30";
    report.nodes = 900;
    report.links = 1740;
    report.mean_degree = 3.8666666666666667;
    report.threshold = 0.25;
    report.v_numeric = 2.0;
    report.v_h = 1.96;
    report.relative_error_vh = -0.02;
    const std::string row = to_csv_row(report);
    CHECK(row == "\"grid2d:30,30\",900,1740,3.8666666666666667,0.25,2,1.96,-2%");
    const std::string text = to_text(report);
    CHECK(text.find("name: grid2d:30,30\n") != std::string::npos);
    CHECK(text.find("V: 2\n") != std::string::npos);
    CHECK(text.find("V_H: 1.96\n") != std::string::npos);
    CHECK(text.find("rel_error_vh: -2%\n") != std::string::npos);
  }
  SUBCASE("number formatting") {
    CHECK(format_fixed_trim(11.3772456724309, 2) == "11.38");
    CHECK(format_fixed_trim(25.0, 2) == "25");
    CHECK(format_fixed_trim(0.0, 2) == "0");
    CHECK(format_fixed_trim(-1.42249, 2) == "-1.42");
    CHECK(format_fixed_trim(-0.0001, 2) == "0");
    CHECK(format_double(0.25) == "0.25");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);  // round trip
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
  }
}

TEST_CASE("network comparison") {
  SUBCASE("petersen vs K(2,8)") {
    const Comparison cmp = compare_networks(generate(Petersen{}),
                                            generate(CompleteBipartite{2, 8}));
    CHECK(cmp.spectral_a.rho == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(cmp.spectral_b.rho == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(cmp.v_a == doctest::Approx(1.5).epsilon(0.005));
    CHECK(cmp.v_b == doctest::Approx(1.7721).epsilon(0.005));

    // the common grid over [0,4] contains s = 1 where both equal 2/3
    const Eigen::Index at_one = 25;
    CHECK(cmp.s[at_one] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(cmp.y_a[at_one] - cmp.y_b[at_one]) <= 1e-6);
    CHECK(cmp.y_a[at_one] == doctest::Approx(2.0 / 3.0).epsilon(1e-8));

    REQUIRE(cmp.dominance.size() == 2);
    CHECK(cmp.dominance[0].lower == 1);  // K(2,8) lower before the crossing
    CHECK(cmp.dominance[0].s_begin == doctest::Approx(0.04).epsilon(1e-9));
    CHECK(cmp.dominance[0].s_end == doctest::Approx(0.96).epsilon(1e-9));
    CHECK(cmp.dominance[1].lower == 0);  // petersen lower after it
    CHECK(cmp.dominance[1].s_begin == doctest::Approx(1.04).epsilon(1e-9));
    CHECK(cmp.dominance[1].s_end == doctest::Approx(3.96).epsilon(1e-9));

    // beyond the petersen threshold only K(2,8) stays epidemic
    for (Eigen::Index i = 0; i < cmp.s.size(); ++i) {
      if (cmp.s[i] > 3.0 + 1e-9 && cmp.s[i] < 4.0 - 1e-9) {
        CHECK(cmp.y_a[i] == 0.0);
        CHECK(cmp.y_b[i] > 0.0);
      }
    }
    CHECK_FALSE(cmp.curves_identical);
  }
  SUBCASE("a graph against itself") {
    const Graph g = generate(Grid2d{4, 5});
    const Comparison cmp = compare_networks(g, g, 51);
    CHECK(cmp.curves_identical);
    CHECK(cmp.dominance.empty());
    CHECK(cmp.v_a == cmp.v_b);
  }
  SUBCASE("two rings of different size have identical curves") {
    const Comparison cmp =
        compare_networks(generate(Ring{10}), generate(Ring{20}), 101);
    CHECK(cmp.curves_identical);
    CHECK(cmp.v_a == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(cmp.v_b == doctest::Approx(1.0).epsilon(1e-9));
  }
}

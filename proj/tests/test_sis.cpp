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
#include <sstream>

#include "vcond/generate.hpp"
#include "vcond/sis.hpp"

using namespace vcond;

namespace {

// Closed-form infected fraction of K_{M,N} in the curing-rate variable,
// written out independently of the library implementation.
double bipartite_oracle(double m, double n, double s) {
  if (s <= 0.0) return 1.0;
  if (s * s >= m * n) return 0.0;
  return (m * n - s * s) * (m + n + 2.0 * s) / ((m + n) * (m + s) * (n + s));
}

}  // namespace

TEST_CASE("steady state on regular graphs matches 1 - s/k") {
  const Graph ring = generate(Ring{10});
  CHECK(steady_state(ring, 1.0).fraction == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(steady_state(ring, 0.5).fraction == doctest::Approx(0.75).epsilon(1e-9));

  const Graph pet = generate(Petersen{});
  CHECK(steady_state(pet, 1.0).fraction ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("analytic endpoints") {
  const Graph g = generate(CompleteBipartite{2, 8});
  const SteadyState at_zero = steady_state(g, 0.0);
  CHECK(at_zero.fraction == 1.0);
  CHECK(at_zero.iterations == 0);
  CHECK(at_zero.converged);

  const double rho = spectral_radius(g).rho;
  const SteadyState at_rho = steady_state(g, rho, rho);
  CHECK(at_rho.fraction == 0.0);
  const SteadyState beyond = steady_state(g, rho + 2.5, rho);
  CHECK(beyond.fraction == 0.0);

  CHECK_THROWS_AS(steady_state(g, -0.1, rho), ValidationError);
}

TEST_CASE("bipartite steady state matches the closed form") {
  const Graph g = generate(CompleteBipartite{2, 8});
  CHECK(steady_state(g, 1.0).fraction ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));  // (MN-1)(M+N+2)/...
  for (const double s : {0.5, 1.5, 2.5, 3.5}) {
    CHECK(steady_state(g, s).fraction ==
          doctest::Approx(bipartite_oracle(2, 8, s)).epsilon(1e-8));
  }
}

TEST_CASE("iteration from all-ones decreases componentwise") {
  for (const NetworkSpec spec :
       {NetworkSpec{Petersen{}}, NetworkSpec{CompleteBipartite{2, 8}},
        NetworkSpec{Grid2d{3, 4}}}) {
    const Graph g = generate(spec);
    const double s = 0.5 * spectral_radius(g).rho;
    Eigen::VectorXd v = Eigen::VectorXd::Ones(g.node_count());
    for (int step = 0; step < 60; ++step) {
      const Eigen::VectorXd next = mean_field_sweep(g, s, v);
      CHECK((next.array() <= v.array() + 1e-15).all());
      CHECK((next.array() >= 0.0).all());
      v = next;
    }
  }
}

TEST_CASE("returned state is a fixed point within tolerance") {
  const Graph g = generate(CompleteBipartite{10, 90});
  const SolverOptions options{1e-10, 1000000};
  const double rho = spectral_radius(g).rho;
  const SteadyState state = steady_state(g, 3.0, rho, options);
  REQUIRE(state.converged);
  const Eigen::VectorXd mapped = mean_field_sweep(g, 3.0, state.probabilities);
  CHECK((mapped - state.probabilities).cwiseAbs().maxCoeff() <=
        options.tolerance);
  CHECK(state.residual <= options.tolerance);
}

TEST_CASE("iteration cap flags instead of throwing") {
  const Graph g = generate(Grid2d{5, 5});
  const double rho = spectral_radius(g).rho;
  const SteadyState state = steady_state(g, 0.95 * rho, rho, {1e-12, 3});
  CHECK_FALSE(state.converged);
  CHECK(state.iterations == 3);
  CHECK(state.fraction >= 0.0);
  CHECK(state.fraction <= 1.0);
}

TEST_CASE("curve sampling") {
  SUBCASE("ring curve is the exact line 1 - s/2") {
    const InfectionCurve curve = sample_curve(generate(Ring{10}), 101);
    REQUIRE(curve.grid_points() == 101);
    CHECK(curve.rho == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(curve.s[0] == 0.0);
    CHECK(curve.y[0] == 1.0);
    CHECK(curve.s[100] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(curve.y[100] == 0.0);
    for (Eigen::Index i = 0; i < curve.grid_points(); ++i) {
      CHECK(curve.y[i] ==
            doctest::Approx(1.0 - curve.s[i] / 2.0).epsilon(1e-8));
    }
    CHECK(curve.all_converged());
  }
  SUBCASE("equidistant grid") {
    const InfectionCurve curve = sample_curve(generate(Petersen{}), 25);
    const double step = curve.s[1] - curve.s[0];
    for (Eigen::Index i = 1; i < curve.grid_points(); ++i) {
      CHECK(curve.s[i] - curve.s[i - 1] == doctest::Approx(step).epsilon(1e-10));
    }
  }
  SUBCASE("bipartite curve matches the closed form pointwise") {
    const InfectionCurve curve =
        sample_curve(generate(CompleteBipartite{10, 90}), 101);
    for (Eigen::Index i = 0; i < curve.grid_points(); ++i) {
      CHECK(curve.y[i] ==
            doctest::Approx(bipartite_oracle(10, 90, curve.s[i])).epsilon(1e-6));
    }
  }
  SUBCASE("three points pin both endpoints") {
    const InfectionCurve curve = sample_curve(generate(CompleteBipartite{3, 7}), 3);
    CHECK(curve.y[0] == 1.0);
    CHECK(curve.s[1] == doctest::Approx(curve.rho / 2).epsilon(1e-12));
    CHECK(curve.y[2] == 0.0);
  }
  SUBCASE("monotone non-increasing in s") {
    const InfectionCurve curve = sample_curve(generate(Grid2d{6, 7}), 41);
    for (Eigen::Index i = 1; i < curve.grid_points(); ++i) {
      CHECK(curve.y[i] <= curve.y[i - 1] + 1e-9);
    }
  }
  SUBCASE("too few grid points") {
    CHECK_THROWS_AS(sample_curve(generate(Ring{5}), 2), ValidationError);
  }
  SUBCASE("disconnected input") {
    CHECK_THROWS_AS(sample_curve(Graph(4, {{0, 1}, {2, 3}}), 11),
                    ValidationError);
  }
  SUBCASE("non-convergence propagates as flags") {
    const Graph g = generate(Grid2d{5, 5});
    const InfectionCurve curve = sample_curve(g, 11, {1e-13, 2});
    CHECK_FALSE(curve.all_converged());
    CHECK(curve.converged.front());  // pinned endpoints stay exact
    CHECK(curve.converged.back());
  }
}

TEST_CASE("small-s slope approaches sigma") {
  // y(s) = 1 - sigma s + O(s^2); checked at h = rho/1000.
  for (const NetworkSpec spec :
       {NetworkSpec{Petersen{}}, NetworkSpec{CompleteBipartite{10, 90}}}) {
    const Graph g = generate(spec);
    const double sigma = degree_stats(g).inverse_degree_mean;
    const double rho = spectral_radius(g).rho;
    const double h = rho / 1000.0;
    const double y = steady_state(g, h, rho, {1e-12, 1000000}).fraction;
    const double slope = (1.0 - y) / h;
    CHECK(std::abs(slope - sigma) <= 0.05 * sigma);
  }
}

TEST_CASE("terminal slope approaches E[d]/rho^2 on regular and bipartite graphs") {
  // Exact property of these families; general graphs deviate (the
  // acceptance suite measures by how much).
  for (const NetworkSpec spec :
       {NetworkSpec{Petersen{}}, NetworkSpec{CompleteBipartite{10, 90}},
        NetworkSpec{CompleteBipartite{3, 17}}, NetworkSpec{Ring{24}}}) {
    const Graph g = generate(spec);
    const DegreeStats stats = degree_stats(g);
    const double rho = spectral_radius(g, 1e-12).rho;
    const double h = rho / 1000.0;
    const double y = steady_state(g, rho - h, rho, {1e-12, 1000000}).fraction;
    const double expected = stats.mean_degree / (rho * rho);
    CHECK(std::abs(y / h - expected) <= 0.10 * expected);
  }
}

TEST_CASE("curve CSV export") {
  const InfectionCurve curve = sample_curve(generate(Ring{10}), 5);
  std::ostringstream out;
  write_curve_csv(out, curve);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,y,converged");
  std::getline(in, line);
  CHECK(line == "0,1,1");
  int rows = 1;
  std::string last;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == 5);
  CHECK(last == "2,0,1");
}

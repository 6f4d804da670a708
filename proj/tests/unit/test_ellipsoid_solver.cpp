#include "helpers.hpp"
#include "oracles.hpp"

#include "entromax/bounds.hpp"
#include "entromax/ellipsoid_solver.hpp"
#include "entromax/errors.hpp"
#include "entromax/mc_reference.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

using namespace entromax;

namespace {

HermitianMatrix diag(std::initializer_list<double> values) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) d(i++) = v;
  return HermitianMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("uniform marginal is solved by Y = 0") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const DualSolution s = solve_dual(HermitianMatrix::diagonal(Eigen::VectorXd::Constant(n, double(k) / n)), k, 1e-6);
      CHECK(s.converged);
      CHECK(s.Y_diag.norm() == 0.0);
      CHECK(s.F_value.to_double() == 0.0);
      CHECK(s.certified_gap == 0.0);
    }
  }
}

TEST_CASE("two-level marginal matches the scalar Newton oracle") {
  const DualSolution s = solve_dual(diag({0.7, 0.3}), 1, 1e-6);
  const testing::ScalarOptimum ref = testing::scalar_newton_dual(0.2);
  REQUIRE(s.converged);
  CHECK(std::abs(s.F_value.to_double() - ref.value) <= 1e-6);
  CHECK(s.marginal_residual <= 1e-4);
  CHECK(s.certified_gap <= 1e-6);
  CHECK(s.Y_diag.norm() <= bound_pk(2, 1, 0.3));
  CHECK(s.Y_diag(0) - s.Y_diag(1) == doctest::Approx(ref.t).epsilon(1e-2));
  CHECK(std::abs(s.Y_diag.sum()) <= 1e-12 * s.Y_diag.norm());
  CHECK(s.kl_bound == s.certified_gap);
  CHECK(s.tv_bound == doctest::Approx(std::sqrt(2.0 * s.certified_gap)));
  MESSAGE("stationarity constant C = residual / sqrt(eps) = " << s.marginal_residual / std::sqrt(1e-6));
}

TEST_CASE("three-level marginal against the Monte-Carlo marginal") {
  const DualSolution s = solve_dual(diag({0.5, 0.3, 0.2}), 1, 1e-6);
  REQUIRE(s.converged);
  CHECK(s.Y_diag.norm() <= bound_pk(3, 1, 0.2));
  CHECK(s.marginal_residual <= 1e-3);
  const MarginalEstimate m = mc_marginal_with_error(s.Y_diag, 1, 200000, RngStream(77));
  const Eigen::Vector3d a(0.5, 0.3, 0.2);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(m.mean(i, i).real() - a(i)) <= 3.0 * m.diag_stderr(i));
  }
}

TEST_CASE("complementary marginals give the same optimum value") {
  const DualSolution s1 = solve_dual(diag({0.5, 0.3, 0.2}), 1, 1e-7);
  const DualSolution s2 = solve_dual(diag({0.8, 0.7, 0.5}), 2, 1e-7);
  CHECK(s1.F_value.to_double() == doctest::Approx(s2.F_value.to_double()).epsilon(1e-6));
}

TEST_CASE("non-diagonal marginal is solved in its eigenframe") {
  RngStream rng(12);
  const Eigen::MatrixXcd u = testing::random_unitary(rng, 3);
  const Eigen::Vector3d d(0.5, 0.3, 0.2);
  const HermitianMatrix a(Eigen::MatrixXcd(u * d.asDiagonal() * u.adjoint()));
  const DualSolution rotated = solve_dual(a, 1, 1e-6);
  const DualSolution plain = solve_dual(HermitianMatrix::diagonal(d), 1, 1e-6);
  CHECK(rotated.F_value.to_double() == doctest::Approx(plain.F_value.to_double()).epsilon(1e-5));
  const Eigen::MatrixXcd y = rotated.Y_full().entries();
  // Y commutes with A and has A's eigenvectors
  CHECK((y * a.entries() - a.entries() * y).norm() <= 1e-8);
  CHECK(std::abs(y.trace()) <= 1e-10);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(solve_dual(diag({0.7, 0.4}), 1, 1e-6), ValidationError);
  CHECK_THROWS_AS(solve_dual(diag({0.7, 0.3}), 1, 0.0), ValidationError);
  CHECK_THROWS_AS(solve_dual(diag({0.7, 0.3}), 3, 1e-6), ValidationError);
  CHECK_THROWS_AS(solve_dual(diag({1.0, 0.0}), 1, 1e-6), InteriorityError);
  CHECK_THROWS_AS(solve_dual(diag({1.0, 0.5, -0.5}), 1, 1e-6), InteriorityError);
}

TEST_CASE("oracle instability carries the iteration context") {
  FirstOrderOracle broken;
  broken.evaluate = [](const std::vector<double>&) -> ValueAndGradient {
    throw NumericInstabilityError("oracle failed", "1", "2");
  };
  try {
    solve_dual(diag({0.7, 0.3}), 1, 1e-6, broken);
    FAIL("expected an instability error");
  } catch (const NumericInstabilityError& e) {
    CHECK(std::string(e.what()).find("iteration 0") != std::string::npos);
    CHECK(e.last_estimate() == "1");
  }
}

TEST_CASE("certified gap is non-increasing and the budget is respected") {
  std::vector<double> gaps;
  SolveOptions options;
  options.observer = [&](const IterationRecord& r) {
    if (std::isfinite(r.gap)) gaps.push_back(r.gap);
  };
  const std::string path = "ellipsoid_trace_test.jsonl";
  options.trace_path = path;
  const DualSolution s = solve_dual(diag({0.45, 0.35, 0.2}), 1, 1e-6, options);
  REQUIRE(s.converged);
  for (std::size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i] <= gaps[i - 1]);
  const double d = 2.0;
  const double budget = 2.0 * (d + 1.0) * d * std::log(s.bounding_radius * std::sqrt(d) / s.beta) + 10 * d * d + 100;
  CHECK(s.iterations <= budget);
  CHECK(s.beta == doctest::Approx(1e-6 / (4.0 * s.bounding_radius * std::sqrt(d))));

  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    if (lines == 0) CHECK(line.rfind("{\"iter\":0,\"center_norm\":0,", 0) == 0);
    CHECK(line.find("\"gap\":") != std::string::npos);
    ++lines;
  }
  CHECK(lines == s.iterations);
  std::remove(path.c_str());
}

TEST_CASE("dual objective: trace shifts cancel and convexity holds") {
  const Eigen::Vector3d a(0.5, 0.3, 0.2);
  const FirstOrderOracle oracle = FirstOrderOracle::pk(1);
  RngStream rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> y1 = testing::uniform_vector(rng, 3, -4, 4);
    std::vector<double> y2 = testing::uniform_vector(rng, 3, -4, 4);
    std::vector<double> mid(3), shifted(3);
    for (int i = 0; i < 3; ++i) {
      mid[i] = 0.5 * (y1[i] + y2[i]);
      shifted[i] = y1[i] + 0.75;
    }
    const BigReal f1 = dual_objective(a, y1, oracle);
    const BigReal f2 = dual_objective(a, y2, oracle);
    CHECK((dual_objective(a, mid, oracle) - (f1 + f2) / 2.0).to_double() <= pow2(-128));
    CHECK(std::abs((dual_objective(a, shifted, oracle) - f1).to_double()) <= 1e-14);
  }
}

TEST_CASE("first-order oracle gradient matches finite differences") {
  const FirstOrderOracle oracle = FirstOrderOracle::pk(2);
  const std::vector<double> y{1.0, -0.5, 0.25, 0.25};
  const ValueAndGradient vg = oracle.evaluate(y);
  for (std::size_t l = 0; l < y.size(); ++l) {
    std::vector<double> up(y), down(y);
    up[l] += 1e-6;
    down[l] -= 1e-6;
    const double fd = ((oracle.evaluate(up).value - oracle.evaluate(down).value) / (up[l] - down[l])).to_double();
    CHECK(fd == doctest::Approx(vg.gradient[l].to_double()).epsilon(1e-6));
  }
}

TEST_CASE("barycentric entropy") {
  for (int n : {2, 3, 4}) {
    const BigReal h = barycentric_entropy(HermitianMatrix::diagonal(Eigen::VectorXd::Constant(n, 1.0 / n)), 1e-6);
    CHECK(std::abs(h.to_double()) <= 1e-6);
  }
  const BigReal h2 = barycentric_entropy(diag({0.7, 0.3}), 1e-6);
  CHECK(std::abs(h2.to_double() + testing::scalar_newton_dual(0.2).value) <= 1e-6);
  CHECK(h2.to_double() >= -1e-6);

  double previous = -1.0;
  for (double eta : {0.2, 0.1, 0.05}) {
    const double h = barycentric_entropy(diag({1.0 - eta, eta}), 1e-6).to_double();
    CHECK(h > previous);
    previous = h;
  }
}

TEST_CASE("closeness diagnostics") {
  CHECK(closeness_diagnostics(0.0).kl == 0.0);
  CHECK(closeness_diagnostics(0.0).tv == 0.0);
  CHECK(closeness_diagnostics(0.02).kl == 0.02);
  CHECK(closeness_diagnostics(0.02).tv == doctest::Approx(0.2));
  CHECK(closeness_diagnostics(2e-6).tv == doctest::Approx(2e-3));
  CHECK_THROWS_AS(closeness_diagnostics(-1e-9), ValidationError);
}

#include "entromax/bounds.hpp"
#include "entromax/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace entromax;

TEST_CASE("two-parameter bounding box") {
  CHECK(two_param_bound(1.0, std::exp(-1.0)) == doctest::Approx(1.0));
  CHECK(two_param_bound(0.7, 1.0) == 0.0);
  CHECK(two_param_bound(0.5, 0.01) == doctest::Approx(9.2103).epsilon(1e-5));
  CHECK(two_param_bound(0.5, 1e-300) > two_param_bound(0.5, 1e-10));
  CHECK_THROWS_AS(two_param_bound(0.0, 0.5), ValidationError);
  CHECK_THROWS_AS(two_param_bound(1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(two_param_bound(1.0, 1.5), ValidationError);
}

TEST_CASE("bound for rank-k projections") {
  CHECK(bound_pk(2, 1, 0.1) == doctest::Approx(80.0 * std::log(160.0)));
  CHECK(bound_pk(2, 1, 0.1) == doctest::Approx(406.01).epsilon(1e-5));
  CHECK(bound_pk(2, 1, 0.2) < bound_pk(2, 1, 0.1));
  CHECK(bound_pk(3, 1, 0.1) > bound_pk(2, 1, 0.1));
  CHECK(bound_pk(4, 2, 0.1) > bound_pk(4, 1, 0.1));
  CHECK_THROWS_AS(bound_pk(2, 3, 0.1), ValidationError);
  CHECK_THROWS_AS(bound_pk(2, 1, -0.1), ValidationError);
}

TEST_CASE("bound for convex bodies") {
  CHECK(bound_convex(1, 1.0, 0.25) == doctest::Approx(8.0 * std::log(16.0)));
  CHECK(bound_convex(1, 1.0, 0.25) == doctest::Approx(22.181).epsilon(1e-4));
  CHECK(bound_convex(3, 10.0, 1.0) == doctest::Approx(22.133).epsilon(1e-4));
  const double eta = 0.3;
  CHECK(bound_convex(2, 2.0, eta) - bound_convex(2, 1.0, eta) == doctest::Approx(4.0 / eta * std::log(2.0)));
  CHECK(bound_convex(2, 1.0, 0.1) > bound_convex(2, 1.0, 0.2));
  CHECK_THROWS_AS(bound_convex(0, 1.0, 0.1), ValidationError);
  CHECK_THROWS_AS(bound_convex(1, 0.05, 0.1), ValidationError);
}

TEST_CASE("balance function") {
  CHECK(balance_bound_pk(10.0, 2, 1) == doctest::Approx(4.0 * std::log(80.0)));
  CHECK(balance_bound_pk(20.0, 2, 1) > balance_bound_pk(10.0, 2, 1));
}

TEST_CASE("interiority estimate") {
  CHECK(eta_estimate_pk(Eigen::Vector3d(1.0 / 3, 1.0 / 3, 1.0 / 3), 1).eta == doctest::Approx(1.0 / 3));
  CHECK(eta_estimate_pk(Eigen::Vector4d(0.5, 0.5, 0.5, 0.5), 2).eta == doctest::Approx(0.5));
  CHECK(eta_estimate_pk(Eigen::Vector2d(0.9, 0.1), 1).eta == doctest::Approx(0.1));
  CHECK(eta_estimate_pk(Eigen::Vector2d(0.5, 0.5), 1).eta == doctest::Approx(0.5));
  // bounded by min(k, n - k) / sqrt(n)
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const double eta = eta_estimate_pk(Eigen::VectorXd::Constant(n, double(k) / n), k).eta;
      CHECK(eta <= std::min(k, n - k) / std::sqrt(double(n)) + 1e-15);
    }
  }
  CHECK_THROWS_AS(eta_estimate_pk(Eigen::Vector2d(1.0, 0.0), 1), InteriorityError);
  CHECK_THROWS_AS(eta_estimate_pk(Eigen::Vector2d(0.7, 0.4), 1), InteriorityError);
  CHECK_THROWS_AS(eta_estimate_pk(Eigen::Vector2d(1.2, -0.2), 1), InteriorityError);
}

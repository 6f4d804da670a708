#pragma once

#include <Eigen/Core>

namespace entromax {

/// Frobenius radius eta of a ball around the marginal that stays inside the
/// convex hull of the manifold (within the trace slice).
struct InteriorEstimate {
  double eta = 0.0;
};

/// ||Y*|| <= log(1/delta) / eta when every half-space through a point at
/// depth eta carries measure at least delta.
double two_param_bound(double eta, double delta);

/// Bounding box for the traceless dual optimum on rank-k projections:
/// (2 n^2 / eta) log(8 n sqrt(k) / eta).
double bound_pk(int n, int k, double eta);

/// Bounding box for the uniform measure on a d-dimensional convex body in a
/// ball of radius r_ball: (2 d / eta) log(4 r_ball / eta).
double bound_convex(int d, double r_ball, double eta);

/// Balance function of the uniform measure on rank-k projections: every
/// 2 delta ball around a projection has mass >= exp(-f), with
/// f = n^2 log(4 n sqrt(k) / delta).
double balance_bound_pk(double inverse_delta, int n, int k);

/// Conservative interiority radius for a marginal with eigenvalues `a` on
/// rank-k projections: min_i min(a_i, 1 - a_i). A Frobenius perturbation of
/// size eta moves every eigenvalue by at most eta, so 0 <= A + D <= I holds.
/// Throws InteriorityError when the marginal is not strictly interior.
InteriorEstimate eta_estimate_pk(const Eigen::VectorXd& a, int k);

}  // namespace entromax

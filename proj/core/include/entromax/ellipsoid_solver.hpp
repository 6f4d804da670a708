#pragma once

#include "entromax/big_real.hpp"
#include "entromax/hermitian.hpp"
#include "entromax/oracle_p1.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace entromax {

/// Value and per-coordinate gradient of E at a real diagonal Y.
struct FirstOrderOracle {
  std::function<ValueAndGradient(const std::vector<double>& y)> evaluate;
  mpfr_prec_t precision = BigReal::kDefaultPrecision;

  /// E_k on rank-k projections via the determinant formulas.
  static FirstOrderOracle pk(int k, const OracleOptions& options = {},
                             double cluster_tolerance = kDefaultClusterTolerance);
};

/// One row of the iteration trace.
struct IterationRecord {
  int iter = 0;
  double center_norm = 0.0;
  /// Objective at the center; NaN for feasibility cuts.
  double value = 0.0;
  /// Best value minus the best certified lower bound so far.
  double gap = 0.0;
  bool feasibility_cut = false;
};

struct SolveOptions {
  /// 0 picks the volumetric budget from R, d and epsilon.
  int max_iterations = 0;
  /// JSONL trace (iter, center_norm, value, gap), written when set.
  std::optional<std::string> trace_path;
  std::function<void(const IterationRecord&)> observer;
};

struct DualSolution {
  /// Traceless Y in the eigenframe of A (eigenvalues of A descending).
  Eigen::VectorXd Y_diag;
  BigReal F_value;
  double certified_gap = 0.0;
  double bounding_radius = 0.0;
  int iterations = 0;
  /// ||A + grad E(Y)|| in the eigenframe.
  double marginal_residual = 0.0;
  double kl_bound = 0.0;
  double tv_bound = 0.0;
  /// The tolerance beta = eps / (4 sqrt(k) R sqrt(d)) that sets the budget.
  double beta = 0.0;
  bool converged = false;
  DiagonalFrame frame;

  /// U diag(Y_diag) U*, the optimizer for the original (non-rotated) A.
  HermitianMatrix Y_full() const { return frame.rotate_back(Y_diag); }
};

/// <a, y> + E(y) for a diagonal marginal a (both in the same frame).
BigReal dual_objective(const Eigen::VectorXd& a, const std::vector<double>& y, const FirstOrderOracle& oracle);

/// Central-cut ellipsoid minimization of <Y, A> + E_k(Y) over traceless
/// diagonal Y in the ball ||Y|| <= bound_pk(n, k, eta). Stops once the
/// certified gap between the best center and the ellipsoid lower bound is
/// at most eps.
DualSolution solve_dual(const HermitianMatrix& a, int k, double eps, const FirstOrderOracle& oracle,
                        const SolveOptions& options = {});
DualSolution solve_dual(const HermitianMatrix& a, int k, double eps, const SolveOptions& options = {});

/// Minimal relative entropy to the uniform measure on pure states among
/// densities with marginal rho: minus the optimal dual value with k = 1.
BigReal barycentric_entropy(const HermitianMatrix& rho, double eps, const OracleOptions& oracle_options = {},
                            const SolveOptions& options = {});

struct ClosenessBounds {
  double kl = 0.0;
  double tv = 0.0;
};

/// KL and total-variation bounds implied by an additive dual gap.
ClosenessBounds closeness_diagnostics(double gap);

}  // namespace entromax

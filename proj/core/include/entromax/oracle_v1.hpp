#pragma once

#include "entromax/big_real.hpp"
#include "entromax/hermitian.hpp"
#include "entromax/rng.hpp"

#include <Eigen/Core>
#include <Eigen/Cholesky>

#include <optional>

namespace entromax {

/// Real symmetric positive definite matrix, validated by a successful
/// Cholesky factorization.
class SymmetricPD {
public:
  static constexpr double kSymmetryTolerance = 1e-12;

  explicit SymmetricPD(Eigen::MatrixXd entries);

  Eigen::Index n() const { return entries_.rows(); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  /// Lower-triangular V with V V^T = A.
  Eigen::MatrixXd cholesky_factor() const { return llt_.matrixL(); }
  Eigen::MatrixXd inverse() const;
  double log_det() const;

private:
  Eigen::MatrixXd entries_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// Log-integral over real rank-one outer products x x^T, base measure the
/// pushforward of Lebesgue measure on R^n. Empty when Y is not positive
/// definite (the integral diverges).
std::optional<BigReal> eval_Ev1(const Eigen::MatrixXd& y, mpfr_prec_t precision = BigReal::kDefaultPrecision);

/// Dual optimizer Y* = A^{-1} / 2 of the Gaussian-rounding max-entropy program.
SymmetricPD gw_optimum(const SymmetricPD& a);

/// ||A - Y^{-1}/2||_F, the dual gradient at Y.
double gw_stationarity_residual(const SymmetricPD& a, const SymmetricPD& y);

/// One Goemans-Williamson draw v = V g with V V^T = A and g standard normal.
Eigen::VectorXd gw_sample(const SymmetricPD& a, RngStream& rng);

/// Log density of the rank-one pushforward at v v^T, up to the constant:
/// -<A^{-1}/2, v v^T>.
double gw_log_density(const SymmetricPD& a, const Eigen::VectorXd& v);

/// <A, v1 v1*>^-n / <A, v2 v2*>^-n for unit vectors v1, v2: the density
/// ratio of the Gaussian measure projected to the unit sphere.
BigReal projected_density_ratio(const HermitianMatrix& a, const Eigen::VectorXcd& v1, const Eigen::VectorXcd& v2,
                                mpfr_prec_t precision = BigReal::kDefaultPrecision);

/// Least-squares fit of log <A, vv*>^-n by -<B, vv*> + c over the given unit
/// vectors, B Hermitian and c real. Returns the minimal sum of squared
/// residuals, which vanishes iff the projected density restricted to these
/// points has exponential-family form.
double exponential_family_fit_residual(const HermitianMatrix& a, const std::vector<Eigen::VectorXcd>& points);

}  // namespace entromax

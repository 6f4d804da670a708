#include "entromax/oracle_v1.hpp"

#include "entromax/errors.hpp"

#include <Eigen/QR>

#include <cmath>

namespace entromax {

namespace {

void require_symmetric(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw ValidationError(std::string(who) + ": expected a non-empty square matrix");
  }
  if (!m.allFinite()) throw ValidationError(std::string(who) + ": non-finite entry");
  const double tol = SymmetricPD::kSymmetryTolerance * std::max(1.0, m.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol) {
        throw ValidationError(std::string(who) + ": entries (" + std::to_string(i) + "," + std::to_string(j) +
                              ") and (" + std::to_string(j) + "," + std::to_string(i) + ") differ");
      }
    }
  }
}

}  // namespace

SymmetricPD::SymmetricPD(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  require_symmetric(entries_, "SymmetricPD");
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
  llt_.compute(entries_);
  if (llt_.info() != Eigen::Success || (llt_.matrixL().toDenseMatrix().diagonal().array() <= 0.0).any()) {
    throw ValidationError("SymmetricPD: matrix is not positive definite");
  }
}

Eigen::MatrixXd SymmetricPD::inverse() const {
  return llt_.solve(Eigen::MatrixXd::Identity(n(), n()));
}

double SymmetricPD::log_det() const {
  return 2.0 * llt_.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

std::optional<BigReal> eval_Ev1(const Eigen::MatrixXd& y, mpfr_prec_t precision) {
  require_symmetric(y, "eval_Ev1");
  Eigen::LLT<Eigen::MatrixXd> llt(y);
  if (llt.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd l = llt.matrixL().toDenseMatrix().diagonal();
  if ((l.array() <= 0.0).any()) return std::nullopt;

  // (n/2) log(pi) - (1/2) log det Y, with log det Y = 2 sum log L_ii
  BigReal out = log(pi(precision)) * (0.5 * static_cast<double>(y.rows()));
  for (Eigen::Index i = 0; i < l.size(); ++i) out -= log(BigReal(l(i), precision));
  return out;
}

SymmetricPD gw_optimum(const SymmetricPD& a) { return SymmetricPD(0.5 * a.inverse()); }

double gw_stationarity_residual(const SymmetricPD& a, const SymmetricPD& y) {
  return (a.entries() - 0.5 * y.inverse()).norm();
}

Eigen::VectorXd gw_sample(const SymmetricPD& a, RngStream& rng) {
  Eigen::VectorXd g(a.n());
  for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.normal();
  return a.cholesky_factor() * g;
}

double gw_log_density(const SymmetricPD& a, const Eigen::VectorXd& v) {
  return -0.5 * v.dot(a.inverse() * v);
}

BigReal projected_density_ratio(const HermitianMatrix& a, const Eigen::VectorXcd& v1, const Eigen::VectorXcd& v2,
                                mpfr_prec_t precision) {
  if (v1.size() != a.n() || v2.size() != a.n()) throw ValidationError("projected_density_ratio: dimension mismatch");
  for (const auto* v : {&v1, &v2}) {
    if (std::abs(v->norm() - 1.0) > 1e-12) throw ValidationError("projected_density_ratio: vectors must be unit");
  }
  const double q1 = v1.dot(a.entries() * v1).real();
  const double q2 = v2.dot(a.entries() * v2).real();
  if (!(q1 > 0.0) || !(q2 > 0.0)) {
    throw ValidationError("projected_density_ratio: <A, vv*> must be positive");
  }
  // (q1 / q2)^-n
  const BigReal ratio = BigReal(q2, precision) / BigReal(q1, precision);
  return pow(ratio, static_cast<long>(a.n()));
}

double exponential_family_fit_residual(const HermitianMatrix& a, const std::vector<Eigen::VectorXcd>& points) {
  const Eigen::Index n = a.n();
  // Features of <B, vv*> for Hermitian B: |v_i|^2, 2 Re(v_i conj v_j), 2 Im(v_i conj v_j); plus a constant.
  const Eigen::Index features = 1 + n * n;
  Eigen::MatrixXd design(static_cast<Eigen::Index>(points.size()), features);
  Eigen::VectorXd target(static_cast<Eigen::Index>(points.size()));
  for (std::size_t s = 0; s < points.size(); ++s) {
    const Eigen::VectorXcd& v = points[s];
    const auto row = static_cast<Eigen::Index>(s);
    Eigen::Index f = 0;
    design(row, f++) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) design(row, f++) = std::norm(v(i));
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const std::complex<double> c = v(i) * std::conj(v(j));
        design(row, f++) = 2.0 * c.real();
        design(row, f++) = 2.0 * c.imag();
      }
    }
    const double q = v.dot(a.entries() * v).real();
    target(row) = -static_cast<double>(n) * std::log(q);
  }
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(target);
  return (design * coef - target).squaredNorm();
}

}  // namespace entromax

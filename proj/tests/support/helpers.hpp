#pragma once

#include "entromax/hermitian.hpp"
#include "entromax/rng.hpp"

#include <Eigen/Dense>

#include <vector>

namespace entromax::testing {

inline std::vector<double> uniform_vector(RngStream& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = lo + (hi - lo) * rng.uniform();
  return v;
}

// Haar unitary via QR of a complex Gaussian matrix with the phase fix.
inline Eigen::MatrixXcd random_unitary(RngStream& rng, Eigen::Index n) {
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline double projection_defect(const HermitianMatrix& x) {
  const Eigen::MatrixXcd& m = x.entries();
  return (m * m - m).cwiseAbs().maxCoeff();
}

inline double hermitian_defect(const HermitianMatrix& x) {
  const Eigen::MatrixXcd& m = x.entries();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace entromax::testing

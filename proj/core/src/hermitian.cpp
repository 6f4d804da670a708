#include "entromax/hermitian.hpp"

#include "entromax/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace entromax {

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw ValidationError("HermitianMatrix: expected a non-empty square matrix");
  }
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_.data()[i].real()) || !std::isfinite(entries_.data()[i].imag())) {
      throw ValidationError("HermitianMatrix: non-finite entry");
    }
  }
  const double scale = entries_.cwiseAbs().maxCoeff();
  const double tol = kSymmetryTolerance * scale;
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > tol) {
        std::ostringstream msg;
        msg << "HermitianMatrix: entries (" << i << "," << j << ") and (" << j << "," << i
            << ") are not complex conjugates";
        throw ValidationError(msg.str());
      }
    }
  }
  Eigen::MatrixXcd sym = 0.5 * (entries_ + entries_.adjoint());
  for (Eigen::Index i = 0; i < n; ++i) sym(i, i) = {sym(i, i).real(), 0.0};
  entries_ = std::move(sym);
}

HermitianMatrix HermitianMatrix::from_real(const Eigen::MatrixXd& entries) {
  return HermitianMatrix(entries.cast<std::complex<double>>());
}

HermitianMatrix HermitianMatrix::diagonal(const Eigen::VectorXd& diag) {
  return from_real(diag.asDiagonal().toDenseMatrix());
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
  return from_real(Eigen::MatrixXd::Identity(n, n));
}

double HermitianMatrix::inner(const HermitianMatrix& other) const {
  // Tr(A B) for Hermitian A, B equals sum_ij A_ij conj(B_ij).
  return (entries_.array() * other.entries_.array().conjugate()).real().sum();
}

bool HermitianMatrix::is_diagonal(double tolerance) const {
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && std::abs(entries_(i, j)) > tolerance) return false;
    }
  }
  return true;
}

int Spectrum::n() const { return std::accumulate(mult.begin(), mult.end(), 0); }

Spectrum Spectrum::from_clusters(std::vector<double> distinct, std::vector<int> mult) {
  if (distinct.empty() || distinct.size() != mult.size()) {
    throw ValidationError("Spectrum: distinct values and multiplicities must be non-empty and aligned");
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (!std::isfinite(distinct[i])) throw ValidationError("Spectrum: non-finite value");
    if (mult[i] < 1) throw ValidationError("Spectrum: multiplicities must be positive");
    if (i > 0 && !(distinct[i] < distinct[i - 1])) {
      throw ValidationError("Spectrum: distinct values must be strictly descending");
    }
  }
  return Spectrum{std::move(distinct), std::move(mult), {}};
}

std::vector<double> Spectrum::expanded() const { return expand(distinct); }

EigenDecomposition eigh(const HermitianMatrix& h) {
  const Eigen::Index n = h.n();
  EigenDecomposition out;
  if (h.is_diagonal()) {
    // Exact: keep the diagonal values bit-for-bit and permute the basis.
    Eigen::VectorXd d = h.entries().diagonal().real();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return d(a) > d(b); });
    out.eigenvalues.resize(n);
    out.eigenvectors = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      out.eigenvalues(c) = d(order[static_cast<std::size_t>(c)]);
      out.eigenvectors(order[static_cast<std::size_t>(c)], c) = 1.0;
    }
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries());
  if (solver.info() != Eigen::Success) {
    throw NumericInstabilityError("eigh: self-adjoint eigensolver did not converge");
  }
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Spectrum cluster_spectrum(const std::vector<double>& y, double tolerance) {
  if (y.empty()) throw ValidationError("cluster_spectrum: empty input");
  if (!(tolerance > 0.0)) throw ValidationError("cluster_spectrum: tolerance must be positive");
  double scale = 0.0;
  for (double v : y) {
    if (!std::isfinite(v)) throw ValidationError("cluster_spectrum: non-finite value");
    scale = std::max(scale, std::abs(v));
  }
  const double gap = tolerance * (1.0 + scale);

  std::vector<std::size_t> order(y.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });

  Spectrum s;
  s.cluster_of.assign(y.size(), 0);
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && y[order[end - 1]] - y[order[end]] <= gap) ++end;
    // Mean as head + average deviation, so identical members reproduce
    // their common value exactly.
    const double head = y[order[start]];
    double deviation = 0.0;
    for (std::size_t i = start; i < end; ++i) {
      deviation += y[order[i]] - head;
      s.cluster_of[order[i]] = s.distinct.size();
    }
    const auto count = static_cast<int>(end - start);
    s.distinct.push_back(head + deviation / count);
    s.mult.push_back(count);
    start = end;
  }
  return s;
}

HermitianMatrix DiagonalFrame::rotate_back(const Eigen::VectorXd& diag) const {
  Eigen::MatrixXcd m = unitary * diag.cast<std::complex<double>>().asDiagonal() * unitary.adjoint();
  // Round-off can leave ~1e-16 asymmetry; the constructor tolerates and removes it.
  return HermitianMatrix(std::move(m));
}

DiagonalFrame diagonal_frame(const HermitianMatrix& a) {
  EigenDecomposition e = eigh(a);
  return DiagonalFrame{std::move(e.eigenvectors), std::move(e.eigenvalues)};
}

}  // namespace entromax

#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace entromax {

/// Dense self-adjoint complex matrix.
///
/// Construction validates conjugate symmetry to 1e-12 * max|entry| and then
/// symmetrizes, so the diagonal is exactly real afterwards.
class HermitianMatrix {
public:
  static constexpr double kSymmetryTolerance = 1e-12;

  explicit HermitianMatrix(Eigen::MatrixXcd entries);
  static HermitianMatrix from_real(const Eigen::MatrixXd& entries);
  static HermitianMatrix diagonal(const Eigen::VectorXd& diag);
  static HermitianMatrix identity(Eigen::Index n);

  Eigen::Index n() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::complex<double> operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  double trace() const { return entries_.diagonal().real().sum(); }
  /// Frobenius inner product <this, other> = Re Tr(this * other).
  double inner(const HermitianMatrix& other) const;
  double norm() const { return entries_.norm(); }
  bool is_diagonal(double tolerance = 0.0) const;

private:
  Eigen::MatrixXcd entries_;
};

/// Clustered eigenvalues: strictly descending distinct values with positive
/// multiplicities. `cluster_of[i]` names the cluster holding input coordinate
/// i when the spectrum came from cluster_spectrum (empty otherwise).
struct Spectrum {
  std::vector<double> distinct;
  std::vector<int> mult;
  std::vector<std::size_t> cluster_of;

  int n() const;
  std::size_t size() const { return distinct.size(); }

  /// Builds from explicit clusters; validates ordering and multiplicities.
  static Spectrum from_clusters(std::vector<double> distinct, std::vector<int> mult);

  /// One representative per coordinate, in cluster_of order when present,
  /// otherwise descending with repetition.
  std::vector<double> expanded() const;

  /// Spreads a per-cluster vector back to per-coordinate values.
  template <typename T>
  std::vector<T> expand(const std::vector<T>& per_cluster) const {
    std::vector<T> out;
    if (!cluster_of.empty()) {
      out.reserve(cluster_of.size());
      for (std::size_t c : cluster_of) out.push_back(per_cluster[c]);
      return out;
    }
    for (std::size_t c = 0; c < distinct.size(); ++c) {
      for (int r = 0; r < mult[c]; ++r) out.push_back(per_cluster[c]);
    }
    return out;
  }
};

inline constexpr double kDefaultClusterTolerance = 1e-9;

/// Self-adjoint eigendecomposition: H = U diag(w) U*, w descending.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

EigenDecomposition eigh(const HermitianMatrix& h);

/// Groups values lying within tolerance * (1 + max|y_i|) of each other
/// (single linkage on the sorted values); each cluster is represented by
/// its arithmetic mean.
Spectrum cluster_spectrum(const std::vector<double>& y, double tolerance = kDefaultClusterTolerance);

/// Eigenframe of a marginal: A = U diag(a) U*, a descending.
struct DiagonalFrame {
  Eigen::MatrixXcd unitary;
  Eigen::VectorXd eigenvalues;

  /// U diag(d) U*.
  HermitianMatrix rotate_back(const Eigen::VectorXd& diag) const;
};

DiagonalFrame diagonal_frame(const HermitianMatrix& a);

}  // namespace entromax

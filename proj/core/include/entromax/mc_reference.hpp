#pragma once

#include "entromax/hermitian.hpp"
#include "entromax/rng.hpp"

#include <Eigen/Core>

#include <cstddef>

namespace entromax {

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

/// n x k matrix with orthonormal columns spanning a uniformly random
/// k-dimensional subspace of C^n (complex Gaussian columns, modified
/// Gram-Schmidt with one re-orthogonalization pass).
Eigen::MatrixXcd sample_uniform_frame(int n, int k, RngStream& rng);

/// Uniform draw from rank-k projections: X = Q Q* for a uniform frame Q.
HermitianMatrix sample_uniform_pk(int n, int k, RngStream& rng);

/// Monte-Carlo estimate of the integral of exp(-<diag(y), X>) over rank-k
/// projections (not its log). Samples are drawn in fixed-size chunks, each
/// from its own substream, so results depend only on the seed.
MCEstimate mc_estimate_Ek(const Eigen::VectorXd& y, int k, std::size_t n_samples, const RngStream& rng);

struct MarginalEstimate {
  HermitianMatrix mean;
  /// Delta-method standard errors of the diagonal of `mean`.
  Eigen::VectorXd diag_stderr;
};

/// Self-normalized importance estimate of the marginal of the density
/// proportional to exp(-<diag(y), X>) on rank-k projections.
MarginalEstimate mc_marginal_with_error(const Eigen::VectorXd& y, int k, std::size_t n_samples,
                                        const RngStream& rng);

HermitianMatrix mc_marginal(const Eigen::VectorXd& y, int k, std::size_t n_samples, const RngStream& rng);

}  // namespace entromax

#pragma once

#include "entromax/big_real.hpp"
#include "entromax/hermitian.hpp"
#include "entromax/rng.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <vector>

namespace entromax {

/// Point of the standard simplex; coordinates are kept in BigReal so that
/// they sum to one at the sampling precision.
struct SimplexPoint {
  std::vector<BigReal> v;

  std::size_t size() const { return v.size(); }
  Eigen::VectorXd to_vector() const;
};

/// Unit-modulus phases z_1..z_n.
struct PhaseVector {
  std::vector<std::complex<double>> z;
};

struct SamplerOptions {
  mpfr_prec_t precision = BigReal::kDefaultPrecision;
  double cluster_tolerance = kDefaultClusterTolerance;
  /// Newton/bisection iterations per coordinate before giving up.
  int max_inversion_iterations = 128;
};

/// Unnormalized conditional CDF of coordinate `index` (0-based) of the
/// density proportional to exp(-<y, v>) on the simplex, given the earlier
/// coordinates fixed to `prefix` (prefix.size() == index):
///
///   F(beta) = (n-1)! * integral over {v_index <= beta, v_i = prefix_i for i < index}
///
/// so that the index-0 value at beta = 1 equals exp(E_1(diag(y))).
/// Defined for index < n - 1 and 0 <= beta <= 1 - sum(prefix).
BigReal conditional_cdf(const std::vector<double>& y, const std::vector<double>& prefix, std::size_t index,
                        double beta, const SamplerOptions& options = {});

/// Exact draw from exp(-<y, v>) on the simplex by sequential inversion of
/// the conditional CDFs.
SimplexPoint sample_simplex(const std::vector<double>& y, RngStream& rng, const SamplerOptions& options = {});

PhaseVector sample_phases(std::size_t n, RngStream& rng);

/// (z sqrt(v)) (z sqrt(v))*.
HermitianMatrix rank_one_projection(const SimplexPoint& v, const PhaseVector& z);

/// Draw from the density proportional to exp(-<Y, X>) on rank-one
/// projections. Non-diagonal Y is handled in its eigenframe.
HermitianMatrix sample_p1(const HermitianMatrix& y, RngStream& rng, const SamplerOptions& options = {});

/// `count` draws; draw i uses substream i of (seed, 0), so any subrange can
/// be reproduced independently.
std::vector<HermitianMatrix> sample_p1_batch(const HermitianMatrix& y, std::size_t count, std::uint64_t seed,
                                             const SamplerOptions& options = {});

}  // namespace entromax

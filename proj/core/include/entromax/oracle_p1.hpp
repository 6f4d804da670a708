#pragma once

#include "entromax/big_matrix.hpp"
#include "entromax/big_real.hpp"
#include "entromax/hermitian.hpp"

#include <vector>

namespace entromax {

/// Precision policy shared by the determinant oracles.
///
/// A value is computed at `precision` and again at twice that; it is
/// accepted once two successive estimates agree to 2^(-precision/2).
/// After `max_escalations` doublings without agreement the oracle gives up
/// with NumericInstabilityError.
struct OracleOptions {
  mpfr_prec_t precision = BigReal::kDefaultPrecision;
  int max_escalations = 4;
};

/// M(y, gamma) for the rank-one integral, built on the spectrum values in
/// the order given. Per cluster (lambda, m) it contributes m columns; column
/// j has C(r, j) lambda^(r-j) in rows r = 0..n-2 and
/// gamma^j e^(gamma lambda) / j! in the last row.
BigMatrix build_eval_matrix(const Spectrum& s, const BigReal& gamma);

/// M_p(y): M(y, 1) with the right-most column of cluster p replaced by the
/// next derivative pattern (C(r, m_p) lambda^(r-m_p), e^lambda / m_p!).
BigMatrix build_grad_matrix(const Spectrum& s, std::size_t p, mpfr_prec_t precision);

/// E_1(Y) = log of the integral of exp(-<Y, X>) over rank-one projections
/// with the unitarily invariant probability measure, for Y = diag(y).
BigReal eval_E1(const Spectrum& s, const OracleOptions& options = {});

/// Gradient of E_1, one entry per cluster of `s`; the entry for cluster p
/// is the partial derivative in any coordinate y_l equal to lambda_p.
std::vector<BigReal> grad_E1(const Spectrum& s, const OracleOptions& options = {});

/// Value and gradient from a single factorization, with the same
/// escalation policy applied to both.
struct ValueAndGradient {
  BigReal value;
  std::vector<BigReal> gradient;
};

ValueAndGradient eval_grad_E1(const Spectrum& s, const OracleOptions& options = {});

}  // namespace entromax

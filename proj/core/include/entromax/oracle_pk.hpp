#pragma once

#include "entromax/oracle_p1.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace entromax {

using Rational = boost::multiprecision::cpp_rational;

/// q_{i,j}(t) = e^-t (d/dt)^j / j! (t^i e^t)
///            = sum_{l=0}^{min(i,j)} C(i,l) t^(i-l) / (j-l)!
/// with exact rational coefficients; coefficients[d] multiplies t^d.
struct QPolynomial {
  int i = 0;
  int j = 0;
  std::vector<Rational> coefficients;

  static QPolynomial make(int i, int j);
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

BigReal q_eval(int i, int j, const BigReal& t);

/// M^(k)(y): n-k polynomial rows C(r, j) lambda^(r-j) on top and k rows
/// e^lambda q_{r,j}(lambda) below, m columns per cluster (lambda, m).
/// Negative powers of lambda are zero.
BigMatrix build_eval_matrix_k(const Spectrum& s, int k, mpfr_prec_t precision);

/// M^(k)_p(y): M^(k)(y) with the right-most column of cluster p advanced to
/// derivative order m_p.
BigMatrix build_grad_matrix_k(const Spectrum& s, int k, std::size_t p, mpfr_prec_t precision);

/// E_k(Y) = log of the integral of exp(-<Y, X>) over rank-k projections,
/// evaluated through the Harish-Chandra-Itzykson-Zuber determinant.
BigReal eval_Ek(const Spectrum& s, int k, const OracleOptions& options = {});

/// Per-cluster gradient of E_k; expanded components sum to -k.
std::vector<BigReal> grad_Ek(const Spectrum& s, int k, const OracleOptions& options = {});

ValueAndGradient eval_grad_Ek(const Spectrum& s, int k, const OracleOptions& options = {});

}  // namespace entromax

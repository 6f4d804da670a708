#include "entromax/oracle_pk.hpp"

#include "confluent.hpp"
#include "entromax/errors.hpp"

#include <algorithm>

namespace entromax {

namespace {

Rational rational_factorial(int n) {
  boost::multiprecision::cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

Rational rational_binomial(int n, int j) {
  boost::multiprecision::cpp_int b = 1;
  for (int i = 1; i <= j; ++i) {
    b *= n - j + i;
    b /= i;
  }
  return Rational(b);
}

std::vector<BigReal> spectrum_points(const Spectrum& s, mpfr_prec_t precision) {
  std::vector<BigReal> points;
  points.reserve(s.size());
  for (double lambda : s.distinct) points.emplace_back(lambda, precision);
  return points;
}

}  // namespace

QPolynomial QPolynomial::make(int i, int j) {
  if (i < 0 || j < 0) throw ValidationError("QPolynomial: indices must be non-negative");
  QPolynomial q{i, j, std::vector<Rational>(static_cast<std::size_t>(i) + 1, Rational(0))};
  for (int l = 0; l <= std::min(i, j); ++l) {
    q.coefficients[static_cast<std::size_t>(i - l)] += rational_binomial(i, l) / rational_factorial(j - l);
  }
  return q;
}

BigReal q_eval(int i, int j, const BigReal& t) {
  if (i < 0 || j < 0) throw ValidationError("q_eval: indices must be non-negative");
  const mpfr_prec_t prec = t.precision();
  BigReal sum(prec);
  for (int l = 0; l <= std::min(i, j); ++l) {
    sum += binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(l), prec) * pow(t, i - l) /
           factorial(static_cast<unsigned long>(j - l), prec);
  }
  return sum;
}

BigMatrix build_eval_matrix_k(const Spectrum& s, int k, mpfr_prec_t precision) {
  const int n = s.n();
  if (k < 1 || k > n) throw ValidationError("build_eval_matrix_k: need 1 <= k <= n");
  return detail::confluent_matrix(detail::hciz_layout(n, k), spectrum_points(s, precision), s.mult, precision);
}

BigMatrix build_grad_matrix_k(const Spectrum& s, int k, std::size_t p, mpfr_prec_t precision) {
  if (p >= s.size()) throw ValidationError("build_grad_matrix_k: cluster index out of range");
  const detail::RowLayout layout = detail::hciz_layout(s.n(), k);
  BigMatrix m = build_eval_matrix_k(s, k, precision);
  std::size_t col = 0;
  for (std::size_t i = 0; i <= p; ++i) col += static_cast<std::size_t>(s.mult[i]);
  const BigReal lambda(s.distinct[p], precision);
  m.set_column(col - 1, detail::confluent_column(layout, lambda, layout.factor(lambda), s.mult[p], precision));
  return m;
}

BigReal eval_Ek(const Spectrum& s, int k, const OracleOptions& options) {
  return detail::evaluate(s, k, detail::Flavor::kHciz, false, options).value;
}

std::vector<BigReal> grad_Ek(const Spectrum& s, int k, const OracleOptions& options) {
  return detail::evaluate(s, k, detail::Flavor::kHciz, true, options).gradient;
}

ValueAndGradient eval_grad_Ek(const Spectrum& s, int k, const OracleOptions& options) {
  return detail::evaluate(s, k, detail::Flavor::kHciz, true, options);
}

}  // namespace entromax

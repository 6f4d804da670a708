#include "entromax/oracle_p1.hpp"

#include "confluent.hpp"
#include "entromax/errors.hpp"

namespace entromax {

BigMatrix build_eval_matrix(const Spectrum& s, const BigReal& gamma) {
  const mpfr_prec_t prec = gamma.precision();
  std::vector<BigReal> points;
  for (double lambda : s.distinct) points.emplace_back(lambda, prec);
  return detail::confluent_matrix(detail::rank_one_layout(s.n(), gamma), points, s.mult, prec);
}

BigMatrix build_grad_matrix(const Spectrum& s, std::size_t p, mpfr_prec_t precision) {
  if (p >= s.size()) throw ValidationError("build_grad_matrix: cluster index out of range");
  const BigReal one(1L, precision);
  const detail::RowLayout layout = detail::rank_one_layout(s.n(), one);
  BigMatrix m = build_eval_matrix(s, one);
  std::size_t col = 0;
  for (std::size_t i = 0; i <= p; ++i) col += static_cast<std::size_t>(s.mult[i]);
  const BigReal lambda(s.distinct[p], precision);
  m.set_column(col - 1, detail::confluent_column(layout, lambda, layout.factor(lambda), s.mult[p], precision));
  return m;
}

BigReal eval_E1(const Spectrum& s, const OracleOptions& options) {
  return detail::evaluate(s, 1, detail::Flavor::kRankOne, false, options).value;
}

std::vector<BigReal> grad_E1(const Spectrum& s, const OracleOptions& options) {
  return detail::evaluate(s, 1, detail::Flavor::kRankOne, true, options).gradient;
}

ValueAndGradient eval_grad_E1(const Spectrum& s, const OracleOptions& options) {
  return detail::evaluate(s, 1, detail::Flavor::kRankOne, true, options);
}

}  // namespace entromax

#include "confluent.hpp"

#include "entromax/errors.hpp"
#include "entromax/oracle_pk.hpp"

#include <optional>
#include <sstream>

namespace entromax::detail {

std::vector<BigReal> confluent_column(const RowLayout& layout, const BigReal& z, const BigReal& cached_exp,
                                      int j, mpfr_prec_t precision) {
  std::vector<BigReal> col;
  col.reserve(static_cast<std::size_t>(layout.poly_rows + layout.exp_rows));
  for (int r = 0; r < layout.poly_rows; ++r) {
    if (j > r) {
      col.emplace_back(precision);
    } else {
      col.push_back(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(j), precision) *
                    pow(z.with_precision(precision), r - j));
    }
  }
  for (int r = 0; r < layout.exp_rows; ++r) {
    col.push_back(layout.entry(r, j, z, cached_exp));
  }
  return col;
}

BigMatrix confluent_matrix(const RowLayout& layout, const std::vector<BigReal>& z, const std::vector<int>& mult,
                           mpfr_prec_t precision) {
  const auto n = static_cast<std::size_t>(layout.poly_rows + layout.exp_rows);
  BigMatrix m(n, n, precision);
  std::size_t c = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const BigReal cached = layout.factor(z[i]);
    for (int j = 0; j < mult[i]; ++j) {
      m.set_column(c++, confluent_column(layout, z[i], cached, j, precision));
    }
  }
  if (c != n) throw ValidationError("confluent_matrix: multiplicities do not sum to the dimension");
  return m;
}

RowLayout rank_one_layout(int n, const BigReal& gamma) {
  RowLayout layout;
  layout.poly_rows = n - 1;
  layout.exp_rows = 1;
  layout.factor = [gamma](const BigReal& z) { return exp(gamma * z); };
  layout.entry = [gamma](int, int j, const BigReal& z, const BigReal& cached) {
    const mpfr_prec_t p = std::max(z.precision(), gamma.precision());
    return pow(gamma.with_precision(p), j) * cached / factorial(static_cast<unsigned long>(j), p);
  };
  return layout;
}

RowLayout hciz_layout(int n, int k) {
  RowLayout layout;
  layout.poly_rows = n - k;
  layout.exp_rows = k;
  layout.factor = [](const BigReal& z) { return exp(z); };
  layout.entry = [](int r, int j, const BigReal& z, const BigReal& cached) { return cached * q_eval(r, j, z); };
  return layout;
}

namespace {

struct Attempt {
  std::optional<ValueAndGradient> result;
  std::string failure;
};

BigReal log_prefactor(int n, int k, Flavor flavor, mpfr_prec_t prec) {
  if (flavor == Flavor::kRankOne) return log_factorial(static_cast<unsigned long>(n - 1), prec);
  // log( prod_{p<n} p! / (prod_{p<n-k} p! * prod_{p<k} p!) )
  BigReal out(prec);
  for (int p = 1; p <= n - 1; ++p) out += log_factorial(static_cast<unsigned long>(p), prec);
  for (int p = 1; p <= n - k - 1; ++p) out -= log_factorial(static_cast<unsigned long>(p), prec);
  for (int p = 1; p <= k - 1; ++p) out -= log_factorial(static_cast<unsigned long>(p), prec);
  return out;
}

Attempt evaluate_at(const Spectrum& s, int k, Flavor flavor, bool with_gradient, mpfr_prec_t prec) {
  const int n = s.n();
  const std::size_t kappa = s.size();

  std::vector<BigReal> z;
  z.reserve(kappa);
  for (double lambda : s.distinct) z.push_back(-BigReal(lambda, prec));

  const RowLayout layout = flavor == Flavor::kRankOne ? rank_one_layout(n, BigReal(1L, prec)) : hciz_layout(n, k);
  LuDecomposition lu(confluent_matrix(layout, z, s.mult, prec));
  if (lu.sign() <= 0) {
    return {std::nullopt, lu.sign() == 0 ? "singular evaluation matrix" : "negative determinant sign"};
  }

  // sum_{i<j} m_i m_j log(lambda_i - lambda_j), lambda descending
  BigReal log_vandermonde(prec);
  for (std::size_t i = 0; i < kappa; ++i) {
    for (std::size_t j = i + 1; j < kappa; ++j) {
      BigReal diff = BigReal(s.distinct[i], prec) - BigReal(s.distinct[j], prec);
      log_vandermonde += log(diff) * static_cast<double>(s.mult[i] * s.mult[j]);
    }
  }

  ValueAndGradient out{log_prefactor(n, k, flavor, prec) + lu.log_abs_det() - log_vandermonde, {}};
  if (!out.value.is_finite()) return {std::nullopt, "non-finite value"};

  if (with_gradient) {
    out.gradient.reserve(kappa);
    std::size_t offset = 0;
    for (std::size_t p = 0; p < kappa; ++p) {
      const int m_p = s.mult[p];
      const std::size_t col = offset + static_cast<std::size_t>(m_p) - 1;
      const std::vector<BigReal> advanced = confluent_column(layout, z[p], layout.factor(z[p]), m_p, prec);
      BigReal g = -lu.column_replacement_ratio(col, advanced);
      const BigReal lambda_p(s.distinct[p], prec);
      for (std::size_t i = 0; i < kappa; ++i) {
        if (i == p) continue;
        g -= BigReal(static_cast<long>(s.mult[i]), prec) / (lambda_p - BigReal(s.distinct[i], prec));
      }
      if (!g.is_finite()) return {std::nullopt, "non-finite gradient"};
      out.gradient.push_back(std::move(g));
      offset += static_cast<std::size_t>(m_p);
    }
  }
  return {std::move(out), {}};
}

bool agree(const BigReal& a, const BigReal& b, double tol) {
  const BigReal scale = max(BigReal(1L, b.precision()), abs(b));
  return abs(a - b) <= scale * tol;
}

bool agree(const ValueAndGradient& a, const ValueAndGradient& b, double tol) {
  if (!agree(a.value, b.value, tol)) return false;
  for (std::size_t i = 0; i < a.gradient.size(); ++i) {
    if (!agree(a.gradient[i], b.gradient[i], tol)) return false;
  }
  return true;
}

}  // namespace

ValueAndGradient evaluate(const Spectrum& s, int k, Flavor flavor, bool with_gradient,
                          const OracleOptions& options) {
  const int n = s.n();
  if (k < 1 || k > n) throw ValidationError("oracle: rank k must satisfy 1 <= k <= n");
  if (options.precision < 64) throw ValidationError("oracle: precision must be at least 64 bits");
  if (s.distinct.empty() || s.distinct.size() != s.mult.size()) throw ValidationError("oracle: malformed spectrum");

  const mpfr_prec_t prec = options.precision;

  // Closed forms: a single cluster is a multiple of I, and P_n = {I}.
  if (s.size() == 1 || k == n) {
    ValueAndGradient out{BigReal(prec), {}};
    if (k == n) {
      for (std::size_t i = 0; i < s.size(); ++i) out.value -= BigReal(s.distinct[i], prec) * double(s.mult[i]);
    } else {
      out.value = BigReal(s.distinct[0], prec) * double(-k);
    }
    if (with_gradient) {
      const BigReal g = BigReal(static_cast<long>(-k), prec) / static_cast<double>(n);
      out.gradient.assign(s.size(), g);
    }
    return out;
  }

  const double tol = pow2(-static_cast<long>(prec / 2));
  Attempt previous = evaluate_at(s, k, flavor, with_gradient, prec);
  mpfr_prec_t current = prec;
  std::string earlier;
  for (int step = 0; step <= options.max_escalations; ++step) {
    current *= 2;
    Attempt next = evaluate_at(s, k, flavor, with_gradient, current);
    if (previous.result && next.result && agree(*previous.result, *next.result, tol)) {
      ValueAndGradient out = std::move(*next.result);
      out.value.set_precision(prec);
      for (auto& g : out.gradient) g.set_precision(prec);
      return out;
    }
    earlier = previous.result ? previous.result->value.to_string() : previous.failure;
    previous = std::move(next);
  }

  std::ostringstream msg;
  msg << "oracle: estimate not stable after " << options.max_escalations << " precision escalations (n=" << n
      << ", k=" << k << ", clusters=" << s.size() << ")";
  if (!previous.failure.empty()) msg << ": " << previous.failure;
  std::string last = previous.result ? previous.result->value.to_string() : previous.failure;
  throw NumericInstabilityError(msg.str(), last, earlier);
}

}  // namespace entromax::detail

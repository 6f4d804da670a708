#include "entromax/sampler_p1.hpp"

#include "entromax/big_matrix.hpp"
#include "entromax/errors.hpp"
#include "entromax/oracle_p1.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace entromax {

namespace {

// Distinct values of the trailing coordinates with multiplicities, descending.
struct Suffix {
  std::vector<double> lambda;
  std::vector<int> mult;
};

Suffix suffix_of(const std::vector<double>& w, std::size_t first) {
  std::map<double, int, std::greater<>> counts;
  for (std::size_t i = first; i < w.size(); ++i) ++counts[w[i]];
  Suffix s;
  for (const auto& [value, count] : counts) {
    s.lambda.push_back(value);
    s.mult.push_back(count);
  }
  return s;
}

// Density on the simplex written as exp(<w, v>)
// with w = -(clustered y). Clustering replaces near-equal values by their
// representative so that equality below is exact comparison.
std::vector<double> clustered_exponents(const std::vector<double>& y, double tolerance) {
  const Spectrum s = cluster_spectrum(y, tolerance);
  std::vector<double> w(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) w[i] = -s.distinct[s.cluster_of[i]];
  return w;
}

// Extra bits to absorb cancellation in divided differences over nearby
// points: roughly (number of points) * log2(1 / smallest gap).
mpfr_prec_t guard_bits(const std::vector<double>& points, mpfr_prec_t precision) {
  std::vector<double> sorted(points);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  double min_gap = 1.0;
  for (std::size_t i = 1; i < sorted.size(); ++i) min_gap = std::min(min_gap, sorted[i] - sorted[i - 1]);
  const double bits = static_cast<double>(points.size() + 1) * std::max(0.0, std::ceil(-std::log2(min_gap)));
  return 32 + std::min<mpfr_prec_t>(static_cast<mpfr_prec_t>(bits), 4 * precision);
}

// Row of integrals over the current coordinate x in [0, beta] of
// exp(wk x) * (a - x)^j exp((a - x) lambda) / j!, one entry per column of
// the evaluation matrix of the suffix.
struct RowTerms {
  std::vector<BigReal> integral;
  std::vector<BigReal> integrand;
};

RowTerms row_terms(double wk, const Suffix& suffix, const BigReal& a, const BigReal& beta, bool want_integral,
                   bool want_integrand) {
  const mpfr_prec_t prec = a.precision();
  RowTerms out;
  const BigReal b = a - beta;
  for (std::size_t l = 0; l < suffix.lambda.size(); ++l) {
    const BigReal lambda(suffix.lambda[l], prec);
    const BigReal scale = exp(a * lambda);
    const double c_double = wk - suffix.lambda[l];
    const BigReal c = BigReal(wk, prec) - lambda;
    const BigReal e_cb = exp(c * beta);
    BigReal b_pow(1L, prec);  // b^i
    BigReal a_pow(1L, prec);  // a^i
    BigReal fact(1L, prec);   // i!
    BigReal partial(prec);    // sum_{i<=j} (b^i e^{c beta} - a^i) / (i! c^{j-i+1}), built incrementally
    for (int j = 0; j < suffix.mult[l]; ++j) {
      if (j > 0) {
        b_pow *= b;
        a_pow *= a;
        fact *= static_cast<double>(j);
      }
      if (want_integrand) out.integrand.push_back(scale * e_cb * b_pow / fact);
      if (!want_integral) continue;
      if (c_double == 0.0) {
        const BigReal fact_next = fact * static_cast<double>(j + 1);
        out.integral.push_back(scale * (a_pow * a - b_pow * b) / fact_next);
      } else {
        // S_j = S_{j-1} / c + (b^j e^{c beta} - a^j) / (j! c)
        partial = (partial + (b_pow * e_cb - a_pow) / fact) / c;
        out.integral.push_back(scale * partial);
      }
    }
  }
  return out;
}

BigReal signed_vandermonde(const Suffix& s, mpfr_prec_t prec) {
  BigReal out(1L, prec);
  for (std::size_t i = 0; i < s.lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < s.lambda.size(); ++j) {
      const BigReal diff = BigReal(s.lambda[j], prec) - BigReal(s.lambda[i], prec);
      out *= pow(diff, static_cast<long>(s.mult[i]) * s.mult[j]);
    }
  }
  return out;
}

BigMatrix suffix_matrix(const Suffix& s, const BigReal& gamma) {
  return build_eval_matrix(Spectrum::from_clusters(s.lambda, s.mult), gamma);
}

}  // namespace

Eigen::VectorXd SimplexPoint::to_vector() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_double();
  return out;
}

BigReal conditional_cdf(const std::vector<double>& y, const std::vector<double>& prefix, std::size_t index,
                        double beta, const SamplerOptions& options) {
  const std::size_t n = y.size();
  if (n < 2 || index + 1 >= n) throw ValidationError("conditional_cdf: index must be below n - 1");
  if (prefix.size() != index) throw ValidationError("conditional_cdf: prefix length must equal index");
  double alpha = 0.0;
  for (double p : prefix) {
    if (!(p >= 0.0)) throw ValidationError("conditional_cdf: prefix values must be non-negative");
    alpha += p;
  }
  if (alpha > 1.0) throw ValidationError("conditional_cdf: prefix exceeds the simplex");
  if (!(beta >= 0.0) || beta > 1.0 - alpha + 1e-15) throw ValidationError("conditional_cdf: beta out of range");
  beta = std::min(beta, 1.0 - alpha);

  const std::vector<double> w = clustered_exponents(y, options.cluster_tolerance);
  const Suffix suffix = suffix_of(w, index + 1);
  std::vector<double> points(suffix.lambda);
  points.push_back(w[index]);
  const mpfr_prec_t prec = options.precision + guard_bits(points, options.precision);

  const BigReal a = 1.0 - BigReal(alpha, prec);
  BigMatrix m = suffix_matrix(suffix, a);
  const RowTerms row = row_terms(w[index], suffix, a, BigReal(beta, prec), true, false);
  for (std::size_t c = 0; c < m.cols(); ++c) m(m.rows() - 1, c) = row.integral[c];
  const BigReal det = LuDecomposition(std::move(m)).determinant();

  BigReal prefix_exponent(prec);
  for (std::size_t i = 0; i < index; ++i) prefix_exponent += BigReal(w[i], prec) * prefix[i];
  const BigReal out = factorial(n - 1, prec) * exp(prefix_exponent) * det / signed_vandermonde(suffix, prec);
  return out.with_precision(options.precision);
}

SimplexPoint sample_simplex(const std::vector<double>& y, RngStream& rng, const SamplerOptions& options) {
  const std::size_t n = y.size();
  if (n == 0) throw ValidationError("sample_simplex: empty y");
  const std::vector<double> w = clustered_exponents(y, options.cluster_tolerance);
  const mpfr_prec_t prec = options.precision + guard_bits(w, options.precision);
  const double tol = pow2(-static_cast<long>(options.precision / 2));

  SimplexPoint point;
  point.v.reserve(n);
  BigReal remaining(1L, prec);
  for (std::size_t index = 0; index + 1 < n; ++index) {
    const double u = rng.uniform();
    if (remaining.sign() <= 0) {
      point.v.emplace_back(prec);
      continue;
    }
    const Suffix suffix = suffix_of(w, index + 1);
    const BigReal& a = remaining;

    // Cofactors of the last row: det(M with last row r) = sum_c x_c r_c * det(M).
    // Only the ratio G(beta) / G(a) matters, so the det(M) factor is dropped.
    const LuDecomposition lu(suffix_matrix(suffix, a));
    if (lu.singular()) throw NumericInstabilityError("sample_simplex: singular suffix matrix", "", "");
    std::vector<BigReal> e_last(n - index - 1, BigReal(prec));
    e_last.back() = BigReal(1L, prec);
    const std::vector<BigReal> cof = lu.solve(e_last);

    auto g_value = [&](const BigReal& beta) {
      const RowTerms t = row_terms(w[index], suffix, a, beta, true, false);
      BigReal s(prec);
      for (std::size_t c = 0; c < cof.size(); ++c) s += cof[c] * t.integral[c];
      return s;
    };
    auto g_both = [&](const BigReal& beta, BigReal& value, BigReal& slope) {
      const RowTerms t = row_terms(w[index], suffix, a, beta, true, true);
      value = BigReal(prec);
      slope = BigReal(prec);
      for (std::size_t c = 0; c < cof.size(); ++c) {
        value += cof[c] * t.integral[c];
        slope += cof[c] * t.integrand[c];
      }
    };

    const BigReal total = g_value(a);
    // G shares the sign of `total`; normalize so the CDF is increasing.
    const double orientation = total.sign() < 0 ? -1.0 : 1.0;
    const BigReal target = total * u;

    BigReal lo(prec), hi = a;
    BigReal beta = a * u;
    BigReal value(prec), slope(prec);
    bool converged = false;
    for (int iter = 0; iter < options.max_inversion_iterations; ++iter) {
      g_both(beta, value, slope);
      const BigReal f = (value - target) * orientation;
      if (f.sign() < 0) lo = beta; else hi = beta;
      BigReal next = beta;
      const BigReal d = slope * orientation;
      bool newton_ok = d.sign() > 0;
      if (newton_ok) {
        next = beta - f / d;
        newton_ok = next > lo && next < hi;
      }
      if (!newton_ok) next = (lo + hi) / 2.0;
      const BigReal step = abs(next - beta);
      beta = std::move(next);
      if (step <= a * tol || (hi - lo) <= a * tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "sample_simplex: CDF inversion did not converge for coordinate " << index << " (bracket ["
          << lo.to_string(20) << ", " << hi.to_string(20) << "])";
      throw NumericInstabilityError(msg.str(), lo.to_string(), hi.to_string());
    }
    if (beta.sign() < 0) beta = BigReal(prec);
    if (beta > a) beta = a;
    remaining = remaining - beta;
    point.v.push_back(beta);
  }
  if (remaining.sign() < 0) remaining = BigReal(prec);
  point.v.push_back(remaining);
  for (auto& v : point.v) v.set_precision(options.precision);
  return point;
}

PhaseVector sample_phases(std::size_t n, RngStream& rng) {
  PhaseVector z;
  z.z.reserve(n);
  for (std::size_t i = 0; i < n; ++i) z.z.push_back(rng.unit_phase());
  return z;
}

HermitianMatrix rank_one_projection(const SimplexPoint& v, const PhaseVector& z) {
  if (v.size() != z.z.size()) throw ValidationError("rank_one_projection: size mismatch");
  const auto n = static_cast<Eigen::Index>(v.size());
  Eigen::VectorXcd u(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    u(i) = z.z[static_cast<std::size_t>(i)] * std::sqrt(std::max(0.0, v.v[static_cast<std::size_t>(i)].to_double()));
  }
  Eigen::MatrixXcd x = u * u.adjoint();
  // |z_i|^2 v_i is v_i up to rounding; pin the diagonal to the simplex point.
  for (Eigen::Index i = 0; i < n; ++i) x(i, i) = v.v[static_cast<std::size_t>(i)].to_double();
  return HermitianMatrix(std::move(x));
}

HermitianMatrix sample_p1(const HermitianMatrix& y, RngStream& rng, const SamplerOptions& options) {
  const DiagonalFrame frame = diagonal_frame(y);
  const std::vector<double> diag(frame.eigenvalues.data(), frame.eigenvalues.data() + frame.eigenvalues.size());
  const SimplexPoint v = sample_simplex(diag, rng, options);
  const PhaseVector z = sample_phases(diag.size(), rng);
  const HermitianMatrix x = rank_one_projection(v, z);
  if (y.is_diagonal()) {
    // The frame is a permutation; apply it exactly.
    const auto n = y.n();
    Eigen::MatrixXcd out(n, n);
    std::vector<Eigen::Index> where(static_cast<std::size_t>(n));
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) {
        if (frame.unitary(r, c) != 0.0) where[static_cast<std::size_t>(c)] = r;
      }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        out(where[static_cast<std::size_t>(i)], where[static_cast<std::size_t>(j)]) = x(i, j);
      }
    }
    return HermitianMatrix(std::move(out));
  }
  return HermitianMatrix(frame.unitary * x.entries() * frame.unitary.adjoint());
}

std::vector<HermitianMatrix> sample_p1_batch(const HermitianMatrix& y, std::size_t count, std::uint64_t seed,
                                             const SamplerOptions& options) {
  const RngStream root(seed, 0);
  std::vector<HermitianMatrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RngStream stream = root.substream(i);
    out.push_back(sample_p1(y, stream, options));
  }
  return out;
}

}  // namespace entromax

#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entromax::testing {

Wide partial_fraction_E1(const std::vector<double>& y) {
  const std::size_t n = y.size();
  Wide fact = 1;
  for (std::size_t p = 2; p < n; ++p) fact *= static_cast<unsigned>(p);
  Wide sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Wide denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= Wide(y[j]) - Wide(y[i]);
    }
    sum += exp(-Wide(y[i])) / denom;
  }
  return log(fact * sum);
}

double two_point_E1(double y1, double y2) {
  if (y1 == y2) return -y1;
  return std::log((std::exp(-y2) - std::exp(-y1)) / (y1 - y2));
}

ScalarOptimum scalar_newton_dual(double c) {
  // F'(t) = c + coth(t/2)/2 - 1/t, F''(t) = 1/t^2 - 1/(4 sinh^2(t/2)).
  // Both have removable singularities at 0; use series there.
  auto d1 = [c](double t) {
    if (std::abs(t) < 1e-4) return c + t / 12.0;
    return c + 0.5 / std::tanh(0.5 * t) - 1.0 / t;
  };
  auto d2 = [](double t) {
    if (std::abs(t) < 1e-4) return 1.0 / 12.0 - t * t / 240.0;
    const double s = std::sinh(0.5 * t);
    return 1.0 / (t * t) - 0.25 / (s * s);
  };
  auto f = [c](double t) {
    if (std::abs(t) < 1e-8) return c * t;
    return c * t + std::log(2.0 * std::sinh(0.5 * t) / t);
  };
  // F' is increasing from c - 1/2 to c + 1/2; bracket the root.
  double lo = -1.0, hi = 1.0;
  while (d1(lo) > 0.0) lo *= 2.0;
  while (d1(hi) < 0.0) hi *= 2.0;
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = d1(t);
    if (g > 0.0) hi = t; else lo = t;
    double next = t - g / d2(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) < 1e-15 * (1.0 + std::abs(t))) {
      t = next;
      break;
    }
    t = next;
  }
  return {t, f(t)};
}

double simplex_cdf_quadrature3(const std::vector<double>& y, double beta) {
  if (y.size() != 3) throw std::invalid_argument("simplex_cdf_quadrature3: n must be 3");
  using boost::math::quadrature::gauss_kronrod;
  auto inner = [&](double v0) {
    const double top = 1.0 - v0;
    auto g = [&](double v1) { return std::exp(-(y[0] * v0 + y[1] * v1 + y[2] * (1.0 - v0 - v1))); };
    return gauss_kronrod<double, 31>::integrate(g, 0.0, top, 15, 1e-14);
  };
  return 2.0 * gauss_kronrod<double, 31>::integrate(inner, 0.0, beta, 15, 1e-13);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_p_value(double d, double n) {
  const double root = std::sqrt(n);
  const double lambda = (root + 0.12 + 0.11 / root) * d;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace entromax::testing

#include "entromax/mc_reference.hpp"

#include "entromax/big_real.hpp"
#include "entromax/errors.hpp"

#include <algorithm>
#include <cmath>

namespace entromax {

namespace {

constexpr std::size_t kChunk = 4096;
constexpr double kDegenerateNorm = 1e-300;
// Above this |y|_inf the weights are accumulated in BigReal.
constexpr double kWideWeightThreshold = 30.0;

void check_args(const Eigen::VectorXd& y, int k, std::size_t n_samples) {
  if (y.size() < 1 || k < 1 || k > y.size()) throw ValidationError("mc: need 1 <= k <= n");
  if (!y.allFinite()) throw ValidationError("mc: non-finite y");
  if (n_samples < 2) throw ValidationError("mc: need at least two samples");
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Visits every sample's frame in chunk order.
template <typename Visit>
void for_each_frame(int n, int k, std::size_t n_samples, const RngStream& rng, Visit&& visit) {
  for (std::size_t start = 0, chunk = 0; start < n_samples; start += kChunk, ++chunk) {
    RngStream stream = rng.substream(chunk);
    const std::size_t end = std::min(n_samples, start + kChunk);
    for (std::size_t i = start; i < end; ++i) visit(sample_uniform_frame(n, k, stream));
  }
}

double diag_inner(const Eigen::VectorXd& y, const Eigen::MatrixXcd& q) {
  return y.dot(q.rowwise().squaredNorm());
}

}  // namespace

Eigen::MatrixXcd sample_uniform_frame(int n, int k, RngStream& rng) {
  if (n < 1 || k < 1 || k > n) throw ValidationError("sample_uniform_frame: need 1 <= k <= n");
  Eigen::MatrixXcd q(n, k);
  for (int j = 0; j < k; ++j) {
    for (;;) {
      Eigen::VectorXcd v(n);
      for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
      for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < j; ++c) v -= q.col(c) * q.col(c).dot(v);
      }
      const double norm = v.norm();
      if (norm < kDegenerateNorm) continue;
      q.col(j) = v / norm;
      break;
    }
  }
  return q;
}

HermitianMatrix sample_uniform_pk(int n, int k, RngStream& rng) {
  const Eigen::MatrixXcd q = sample_uniform_frame(n, k, rng);
  return HermitianMatrix(q * q.adjoint());
}

MCEstimate mc_estimate_Ek(const Eigen::VectorXd& y, int k, std::size_t n_samples, const RngStream& rng) {
  check_args(y, k, n_samples);
  const int n = static_cast<int>(y.size());
  MCEstimate out;
  out.n_samples = n_samples;
  const double count = static_cast<double>(n_samples);

  if (y.cwiseAbs().maxCoeff() > kWideWeightThreshold) {
    BigReal sum(128L), sum_sq(128L);
    for_each_frame(n, k, n_samples, rng, [&](const Eigen::MatrixXcd& q) {
      const BigReal w = exp(BigReal(-diag_inner(y, q), 128));
      sum += w;
      sum_sq += w * w;
    });
    const BigReal mean = sum / count;
    const BigReal var = (sum_sq / count - mean * mean) * (count / (count - 1.0));
    out.mean = mean.to_double();
    out.std_error = var.sign() > 0 ? sqrt(var / count).to_double() : 0.0;
    return out;
  }

  // Welford on the weights, exact for constant weights.
  double mean = 0.0, m2 = 0.0;
  std::size_t seen = 0;
  for_each_frame(n, k, n_samples, rng, [&](const Eigen::MatrixXcd& q) {
    const double w = std::exp(-diag_inner(y, q));
    ++seen;
    const double delta = w - mean;
    mean += delta / static_cast<double>(seen);
    m2 += delta * (w - mean);
  });
  out.mean = mean;
  out.std_error = std::sqrt(std::max(0.0, m2) / (count - 1.0) / count);
  return out;
}

MarginalEstimate mc_marginal_with_error(const Eigen::VectorXd& y, int k, std::size_t n_samples,
                                        const RngStream& rng) {
  check_args(y, k, n_samples);
  const int n = static_cast<int>(y.size());
  // Shift log-weights by their largest possible value so exp() cannot overflow;
  // the shift cancels in the ratio.
  Eigen::VectorXd sorted = y;
  std::sort(sorted.data(), sorted.data() + n);
  const double shift = -sorted.head(k).sum();

  Eigen::MatrixXcd weighted = Eigen::MatrixXcd::Zero(n, n);
  CompensatedSum total;
  // Moments for the delta-method variance of w (d - ratio).
  double w2_sum = 0.0;
  Eigen::VectorXd w2d_sum = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd w2d2_sum = Eigen::VectorXd::Zero(n);
  for_each_frame(n, k, n_samples, rng, [&](const Eigen::MatrixXcd& q) {
    const Eigen::VectorXd d = q.rowwise().squaredNorm();
    const double w = std::exp(-y.dot(d) - shift);
    weighted.noalias() += w * (q * q.adjoint());
    total.add(w);
    w2_sum += w * w;
    w2d_sum += (w * w) * d;
    w2d2_sum += (w * w) * d.cwiseProduct(d);
  });
  const double wsum = total.value();
  Eigen::MatrixXcd mean = weighted / wsum;
  // Every sample has trace exactly k; restore it against accumulated rounding.
  mean *= static_cast<double>(k) / mean.trace().real();

  const Eigen::VectorXd ratio = mean.diagonal().real();
  const double count = static_cast<double>(n_samples);
  const double wbar = wsum / count;
  const Eigen::VectorXd var =
      ((w2d2_sum - 2.0 * ratio.cwiseProduct(w2d_sum) + w2_sum * ratio.cwiseProduct(ratio)) / (count - 1.0))
          .cwiseMax(0.0);
  const Eigen::VectorXd se = (var.array() / count).sqrt() / wbar;
  return MarginalEstimate{HermitianMatrix(mean), se};
}

HermitianMatrix mc_marginal(const Eigen::VectorXd& y, int k, std::size_t n_samples, const RngStream& rng) {
  return mc_marginal_with_error(y, k, n_samples, rng).mean;
}

}  // namespace entromax

#include "entromax/bounds.hpp"

#include "entromax/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entromax {

double two_param_bound(double eta, double delta) {
  if (!(eta > 0.0)) throw ValidationError("two_param_bound: eta must be positive");
  if (!(delta > 0.0) || delta > 1.0) throw ValidationError("two_param_bound: delta must lie in (0, 1]");
  return -std::log(delta) / eta;
}

double bound_pk(int n, int k, double eta) {
  if (n < 1 || k < 1 || k > n) throw ValidationError("bound_pk: need 1 <= k <= n");
  if (!(eta > 0.0)) throw ValidationError("bound_pk: eta must be positive");
  const double nn = n;
  return 2.0 * nn * nn / eta * std::log(8.0 * nn * std::sqrt(static_cast<double>(k)) / eta);
}

double bound_convex(int d, double r_ball, double eta) {
  if (d < 1) throw ValidationError("bound_convex: dimension must be positive");
  if (!(eta > 0.0) || !(r_ball >= eta)) throw ValidationError("bound_convex: need r_ball >= eta > 0");
  return 2.0 * d / eta * std::log(4.0 * r_ball / eta);
}

double balance_bound_pk(double inverse_delta, int n, int k) {
  if (n < 1 || k < 1 || k > n) throw ValidationError("balance_bound_pk: need 1 <= k <= n");
  if (!(inverse_delta > 0.0)) throw ValidationError("balance_bound_pk: inverse_delta must be positive");
  const double nn = n;
  return nn * nn * std::log(4.0 * nn * std::sqrt(static_cast<double>(k)) * inverse_delta);
}

InteriorEstimate eta_estimate_pk(const Eigen::VectorXd& a, int k) {
  if (a.size() < 1 || k < 1 || k > a.size()) throw ValidationError("eta_estimate_pk: need 1 <= k <= n");
  if (std::abs(a.sum() - k) > 1e-9) {
    std::ostringstream msg;
    msg << "eta_estimate_pk: marginal trace " << a.sum() << " differs from k = " << k << "; not in the interior";
    throw InteriorityError(msg.str());
  }
  double eta = 1.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!(a(i) > 0.0 && a(i) < 1.0)) {
      std::ostringstream msg;
      msg << "eta_estimate_pk: eigenvalue " << a(i) << " outside (0, 1); marginal is not in the interior";
      throw InteriorityError(msg.str());
    }
    eta = std::min({eta, a(i), 1.0 - a(i)});
  }
  return InteriorEstimate{eta};
}

}  // namespace entromax

#include "entromax/ellipsoid_solver.hpp"

#include "entromax/bounds.hpp"
#include "entromax/errors.hpp"
#include "entromax/oracle_pk.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace entromax {

namespace {

// Orthonormal basis of the traceless subspace of R^n (Helmert contrasts):
// column j has 1/sqrt(j(j+1)) in rows 0..j-1 and -j/sqrt(j(j+1)) in row j.
Eigen::MatrixXd traceless_basis(Eigen::Index n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n - 1);
  for (Eigen::Index c = 0; c + 1 < n; ++c) {
    const double j = static_cast<double>(c + 1);
    const double s = 1.0 / std::sqrt(j * (j + 1.0));
    for (Eigen::Index r = 0; r <= c; ++r) b(r, c) = s;
    b(c + 1, c) = -j * s;
  }
  return b;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

struct Evaluation {
  BigReal value;
  Eigen::VectorXd marginal_gap;  // a + grad E, per coordinate
};

Evaluation evaluate(const Eigen::VectorXd& a, const Eigen::VectorXd& y, const FirstOrderOracle& oracle) {
  ValueAndGradient vg = oracle.evaluate(to_std(y));
  if (static_cast<Eigen::Index>(vg.gradient.size()) != a.size()) {
    throw ValidationError("solve_dual: oracle gradient has the wrong length");
  }
  BigReal value = vg.value;
  Eigen::VectorXd gap(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    value += BigReal(a(i), oracle.precision) * y(i);
    gap(i) = a(i) + vg.gradient[static_cast<std::size_t>(i)].to_double();
  }
  return {std::move(value), std::move(gap)};
}

class TraceWriter {
public:
  explicit TraceWriter(const std::optional<std::string>& path) {
    if (!path) return;
    out_.open(*path, std::ios::out | std::ios::trunc);
    if (!out_) throw ValidationError("solve_dual: cannot open trace file " + *path);
    out_ << std::setprecision(17);
  }

  void write(const IterationRecord& r) {
    if (!out_.is_open()) return;
    out_ << "{\"iter\":" << r.iter << ",\"center_norm\":" << r.center_norm << ",\"value\":";
    if (std::isfinite(r.value)) out_ << r.value; else out_ << "null";
    out_ << ",\"gap\":";
    if (std::isfinite(r.gap)) out_ << r.gap; else out_ << "null";
    out_ << "}\n";
  }

private:
  std::ofstream out_;
};

}  // namespace

FirstOrderOracle FirstOrderOracle::pk(int k, const OracleOptions& options, double cluster_tolerance) {
  FirstOrderOracle oracle;
  oracle.precision = options.precision;
  oracle.evaluate = [k, options, cluster_tolerance](const std::vector<double>& y) {
    const Spectrum s = cluster_spectrum(y, cluster_tolerance);
    ValueAndGradient vg = eval_grad_Ek(s, k, options);
    vg.gradient = s.expand(vg.gradient);
    return vg;
  };
  return oracle;
}

BigReal dual_objective(const Eigen::VectorXd& a, const std::vector<double>& y, const FirstOrderOracle& oracle) {
  if (static_cast<Eigen::Index>(y.size()) != a.size()) throw ValidationError("dual_objective: size mismatch");
  BigReal value = oracle.evaluate(y).value;
  for (std::size_t i = 0; i < y.size(); ++i) value += BigReal(a(static_cast<Eigen::Index>(i)), oracle.precision) * y[i];
  return value;
}

DualSolution solve_dual(const HermitianMatrix& a, int k, double eps, const FirstOrderOracle& oracle,
                        const SolveOptions& options) {
  const Eigen::Index n = a.n();
  if (k < 1 || k > n) throw ValidationError("solve_dual: need 1 <= k <= n");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ValidationError("solve_dual: eps must be positive");
  if (std::abs(a.trace() - k) > 1e-9) {
    std::ostringstream msg;
    msg << "solve_dual: trace of the marginal is " << std::setprecision(17) << a.trace() << ", expected " << k;
    throw ValidationError(msg.str());
  }
  if (!oracle.evaluate) throw ValidationError("solve_dual: oracle has no evaluate function");

  DualSolution sol;
  sol.frame = diagonal_frame(a);
  const Eigen::VectorXd& diag = sol.frame.eigenvalues;
  const double eta = eta_estimate_pk(diag, k).eta;
  const double radius = bound_pk(static_cast<int>(n), k, eta);
  const Eigen::Index d = n - 1;
  const double dd = static_cast<double>(d);
  sol.bounding_radius = radius;
  sol.beta = eps / (4.0 * std::sqrt(static_cast<double>(k)) * radius * std::sqrt(dd));

  const int budget = options.max_iterations > 0
                         ? options.max_iterations
                         : static_cast<int>(std::ceil(2.0 * (dd + 1.0) * dd *
                                                      std::log(radius * std::sqrt(dd) / sol.beta))) +
                               static_cast<int>(10 * d * d) + 100;

  const Eigen::MatrixXd basis = traceless_basis(n);
  Eigen::VectorXd center = Eigen::VectorXd::Zero(d);
  Eigen::MatrixXd shape = Eigen::MatrixXd::Identity(d, d) * (radius * radius * dd);

  TraceWriter trace(options.trace_path);
  double upper = std::numeric_limits<double>::infinity();
  double lower = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x = center;
  std::optional<BigReal> best_value;
  Eigen::VectorXd best_gap_vector;

  int iter = 0;
  for (; iter < budget; ++iter) {
    IterationRecord record;
    record.iter = iter;
    record.center_norm = center.norm();

    Eigen::VectorXd g;
    if (record.center_norm > radius) {
      // Feasibility cut toward the ball.
      g = center / record.center_norm;
      record.feasibility_cut = true;
      record.value = std::numeric_limits<double>::quiet_NaN();
    } else {
      const Eigen::VectorXd y = basis * center;
      Evaluation ev;
      try {
        ev = evaluate(diag, y, oracle);
      } catch (const NumericInstabilityError& e) {
        std::ostringstream msg;
        msg << e.what() << " (solve_dual iteration " << iter << ", center norm " << record.center_norm << ")";
        throw NumericInstabilityError(msg.str(), e.last_estimate(), e.previous_estimate());
      }
      const double f = ev.value.to_double();
      record.value = f;
      g = basis.transpose() * ev.marginal_gap;
      if (f < upper) {
        upper = f;
        best_x = center;
        best_value = ev.value;
        best_gap_vector = ev.marginal_gap;
      }
      // Every minimizer in the current ellipsoid E satisfies
      // f* >= f(c) + g.(x - c) >= f(c) - sqrt(g' P g).
      const double width = std::sqrt(std::max(0.0, g.dot(shape * g)));
      lower = std::max(lower, f - width);
    }
    record.gap = upper - lower;
    trace.write(record);
    if (options.observer) options.observer(record);

    if (!record.feasibility_cut && (g.squaredNorm() == 0.0 || upper - lower <= eps)) {
      if (g.squaredNorm() == 0.0) lower = upper;
      ++iter;
      sol.converged = true;
      break;
    }

    const double gpg = g.dot(shape * g);
    if (!(gpg > 0.0)) break;  // degenerate ellipsoid: nothing left to cut
    if (d == 1) {
      // Central cut in one dimension is bisection of the interval.
      center(0) -= 0.5 * (g(0) > 0.0 ? 1.0 : -1.0) * std::sqrt(shape(0, 0));
      shape(0, 0) *= 0.25;
    } else {
      const Eigen::VectorXd step = shape * g / std::sqrt(gpg);
      center -= step / (dd + 1.0);
      shape = (dd * dd / (dd * dd - 1.0)) * (shape - (2.0 / (dd + 1.0)) * step * step.transpose());
      shape = 0.5 * (shape + shape.transpose());
    }
  }

  if (!best_value) {
    // Only feasibility cuts happened (cannot occur from a centered start,
    // but keep the result well-defined).
    const Evaluation ev = evaluate(diag, Eigen::VectorXd::Zero(n), oracle);
    best_x = Eigen::VectorXd::Zero(d);
    best_value = ev.value;
    best_gap_vector = ev.marginal_gap;
    upper = ev.value.to_double();
  }

  Eigen::VectorXd y = basis * best_x;
  y.array() -= y.mean();
  sol.Y_diag = y;
  sol.F_value = *best_value;
  sol.iterations = iter;
  sol.certified_gap = std::max(0.0, upper - lower);
  sol.marginal_residual = best_gap_vector.norm();
  const ClosenessBounds cb = closeness_diagnostics(std::isfinite(sol.certified_gap) ? sol.certified_gap : 0.0);
  sol.kl_bound = std::isfinite(sol.certified_gap) ? cb.kl : sol.certified_gap;
  sol.tv_bound = std::isfinite(sol.certified_gap) ? cb.tv : sol.certified_gap;
  return sol;
}

DualSolution solve_dual(const HermitianMatrix& a, int k, double eps, const SolveOptions& options) {
  return solve_dual(a, k, eps, FirstOrderOracle::pk(k), options);
}

BigReal barycentric_entropy(const HermitianMatrix& rho, double eps, const OracleOptions& oracle_options,
                            const SolveOptions& options) {
  const DualSolution sol = solve_dual(rho, 1, eps, FirstOrderOracle::pk(1, oracle_options), options);
  if (!sol.converged) {
    throw NumericInstabilityError("barycentric_entropy: solver did not reach the requested gap",
                                  sol.F_value.to_string(), "");
  }
  return -sol.F_value;
}

ClosenessBounds closeness_diagnostics(double gap) {
  if (!(gap >= 0.0)) throw ValidationError("closeness_diagnostics: gap must be non-negative");
  return {gap, std::sqrt(2.0 * gap)};
}

}  // namespace entromax

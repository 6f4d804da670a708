#include "cli.hpp"

#include "json_io.hpp"

#include "entromax/bounds.hpp"
#include "entromax/ellipsoid_solver.hpp"
#include "entromax/errors.hpp"
#include "entromax/oracle_pk.hpp"
#include "entromax/oracle_v1.hpp"
#include "entromax/sampler_p1.hpp"

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace entromax::cli {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int precision_from_env(int fallback) {
  const char* raw = std::getenv("ENTROMAX_PRECISION");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const int bits = std::stoi(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return bits;
  } catch (const std::exception&) {
    throw ValidationError(std::string("ENTROMAX_PRECISION is not an integer: ") + raw);
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.precision_bits < 64) throw ValidationError("precision must be at least 64 bits");
  if (!(cfg.epsilon > 0.0)) throw ValidationError("eps must be positive");
  if (!(cfg.cluster_tol > 0.0)) throw ValidationError("cluster tolerance must be positive");
}

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions o;
  o.precision = cfg.precision_bits;
  return o;
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions o;
  o.trace_path = cfg.trace_path;
  return o;
}

Json big_list(const std::vector<BigReal>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(big_to_json(v));
  return j;
}

Json eval_pk(const HermitianMatrix& y, int k, const RunConfig& cfg) {
  if (k < 1 || k > y.n()) throw ValidationError("eval: need 1 <= k <= n");
  Json j;
  if (y.is_diagonal()) {
    const Eigen::VectorXd d = y.entries().diagonal().real();
    const Spectrum s = cluster_spectrum(std::vector<double>(d.data(), d.data() + d.size()), cfg.cluster_tol);
    const ValueAndGradient vg = eval_grad_Ek(s, k, oracle_options(cfg));
    j["E"] = big_to_json(vg.value);
    j["grad"] = big_list(s.expand(vg.gradient));
    return j;
  }
  // E is unitarily invariant; the gradient is U diag(g) U*.
  const EigenDecomposition eig = eigh(y);
  const Spectrum s = cluster_spectrum(
      std::vector<double>(eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size()), cfg.cluster_tol);
  const ValueAndGradient vg = eval_grad_Ek(s, k, oracle_options(cfg));
  const std::vector<BigReal> g = s.expand(vg.gradient);
  Eigen::VectorXd gd(y.n());
  for (Eigen::Index i = 0; i < y.n(); ++i) gd(i) = g[static_cast<std::size_t>(i)].to_double();
  j["E"] = big_to_json(vg.value);
  j["grad"] = matrix_to_json(Eigen::MatrixXcd(eig.eigenvectors * gd.asDiagonal() * eig.eigenvectors.adjoint()));
  return j;
}

Eigen::MatrixXd real_part_checked(const HermitianMatrix& m, const char* what) {
  if (m.entries().imag().cwiseAbs().maxCoeff() != 0.0) {
    throw ValidationError(std::string(what) + " must be real symmetric");
  }
  return m.entries().real();
}

Json eval_v1(const HermitianMatrix& y, const RunConfig& cfg) {
  const Eigen::MatrixXd re = real_part_checked(y, "eval --manifold v1: Y");
  Json j;
  const std::optional<BigReal> e = eval_Ev1(re, cfg.precision_bits);
  if (!e) {
    j["E"] = "inf";
    j["grad"] = nullptr;
    return j;
  }
  // grad of -(1/2) log det Y is -(1/2) Y^{-1}
  const SymmetricPD spd(re);
  j["E"] = big_to_json(*e);
  j["grad"] = matrix_to_json(Eigen::MatrixXcd((-0.5 * spd.inverse()).cast<std::complex<double>>()));
  return j;
}

void write_samples(const HermitianMatrix& y, long long count, std::uint64_t seed, const std::string& path,
                   const RunConfig& cfg) {
  if (count < 0) throw ValidationError("sample: --n must be non-negative");
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw ValidationError("sample: cannot open " + path);
  SamplerOptions opts;
  opts.precision = cfg.precision_bits;
  opts.cluster_tolerance = cfg.cluster_tol;
  const RngStream root(seed, 0);
  for (long long i = 0; i < count; ++i) {
    RngStream stream = root.substream(static_cast<std::uint64_t>(i));
    Json line = matrix_to_json(sample_p1(y, stream, opts));
    line["seed"] = seed;
    line["index"] = i;
    out << line.dump() << '\n';
  }
  if (!out) throw ValidationError("sample: write to " + path + " failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum-entropy distributions on projection manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::optional<int> precision_flag;
  app.add_option("--precision", precision_flag, "Working precision in bits (default 256, or ENTROMAX_PRECISION)");
  app.add_option("--cluster-tol", cfg.cluster_tol, "Relative tolerance for merging equal eigenvalues");

  std::string manifold = "pk";
  int k = 1;
  std::string y_path;
  auto* eval = app.add_subcommand("eval", "Evaluate E and its gradient at Y");
  eval->add_option("--manifold", manifold, "pk or v1")->check(CLI::IsMember({"pk", "v1"}));
  eval->add_option("--k", k, "Rank of the projections");
  eval->add_option("--y", y_path, "Matrix JSON for Y")->required();

  std::string marginal_path;
  auto* solve = app.add_subcommand("solve", "Solve the dual program for marginal A");
  solve->add_option("--marginal", marginal_path, "Matrix JSON for A")->required();
  solve->add_option("--k", k, "Rank of the projections");
  solve->add_option("--eps", cfg.epsilon, "Certified additive gap");
  solve->add_option("--trace", cfg.trace_path, "Write the iteration trace as JSONL");

  std::string rho_path;
  auto* entropy = app.add_subcommand("entropy", "Barycentric entropy of a density matrix");
  entropy->add_option("--rho", rho_path, "Matrix JSON for rho")->required();
  entropy->add_option("--eps", cfg.epsilon, "Additive accuracy");
  entropy->add_option("--trace", cfg.trace_path, "Write the iteration trace as JSONL");

  long long count = 0;
  std::string out_path;
  auto* sample = app.add_subcommand("sample", "Draw rank-one projections from exp(-<Y, X>)");
  sample->add_option("--y", y_path, "Matrix JSON for Y")->required();
  sample->add_option("--n", count, "Number of samples")->required();
  sample->add_option("--seed", cfg.seed, "Random seed");
  sample->add_option("--out", out_path, "Output JSONL file")->required();

  std::string a_path;
  auto* gw = app.add_subcommand("gw", "Goemans-Williamson dual optimum for A");
  gw->add_option("--a", a_path, "Matrix JSON for A (real symmetric positive definite)")->required();

  int bound_n = 0;
  double eta = 0.0;
  auto* bound = app.add_subcommand("bound", "Bounding radius for the dual optimum");
  bound->add_option("--n", bound_n, "Dimension")->required();
  bound->add_option("--k", k, "Rank");
  bound->add_option("--eta", eta, "Interiority radius")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    cfg.precision_bits = precision_flag ? *precision_flag : precision_from_env(cfg.precision_bits);
    validate(cfg);

    if (*eval) {
      const HermitianMatrix y = read_matrix_file(y_path);
      emit(out, manifold == "pk" ? eval_pk(y, k, cfg) : eval_v1(y, cfg));
    } else if (*solve) {
      const HermitianMatrix a = read_matrix_file(marginal_path);
      const DualSolution s =
          solve_dual(a, k, cfg.epsilon, FirstOrderOracle::pk(k, oracle_options(cfg), cfg.cluster_tol), solve_options(cfg));
      emit(out, solution_to_json(s));
      if (!s.converged) {
        err << "error: ellipsoid budget exhausted before reaching the requested gap\n";
        return kNumericInstability;
      }
    } else if (*entropy) {
      const HermitianMatrix rho = read_matrix_file(rho_path);
      Json j;
      j["H_b"] = big_to_json(barycentric_entropy(rho, cfg.epsilon, oracle_options(cfg), solve_options(cfg)));
      emit(out, j);
    } else if (*sample) {
      const HermitianMatrix y = read_matrix_file(y_path);
      write_samples(y, count, cfg.seed, out_path, cfg);
      Json j;
      j["samples"] = count;
      j["seed"] = cfg.seed;
      j["out"] = out_path;
      emit(out, j);
    } else if (*gw) {
      const HermitianMatrix a = read_matrix_file(a_path);
      const Eigen::MatrixXd re = real_part_checked(a, "gw: A");
      if (Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(re, Eigen::EigenvaluesOnly).eigenvalues().minCoeff() <= 0.0) {
        throw InteriorityError("gw: A is not positive definite; the marginal lies on the boundary");
      }
      const SymmetricPD spd(re);
      const SymmetricPD y_star = gw_optimum(spd);
      Json j;
      j["Y_star"] = matrix_to_json(Eigen::MatrixXcd(y_star.entries().cast<std::complex<double>>()));
      j["E"] = big_to_json(*eval_Ev1(y_star.entries(), cfg.precision_bits));
      emit(out, j);
    } else if (*bound) {
      Json j;
      j["R"] = bound_pk(bound_n, k, eta);
      emit(out, j);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const InteriorityError& e) {
    err << "error: " << e.what() << '\n';
    return kInteriority;
  } catch (const NumericInstabilityError& e) {
    err << "error: " << e.what();
    if (!e.last_estimate().empty()) err << " (last " << e.last_estimate() << ", previous " << e.previous_estimate() << ")";
    err << '\n';
    return kNumericInstability;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericInstability;
  }
  return kOk;
}

}  // namespace entromax::cli

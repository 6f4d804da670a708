#include "json_io.hpp"

#include "entromax/errors.hpp"

#include <fstream>
#include <sstream>

namespace entromax::cli {

namespace {

Eigen::MatrixXd read_block(const Json& j, const char* key, std::size_t n) {
  const Json& rows = j.at(key);
  if (!rows.is_array() || rows.size() != n) {
    throw ValidationError(std::string("matrix JSON: \"") + key + "\" must have n rows");
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      std::ostringstream msg;
      msg << "matrix JSON: row " << r << " of \"" << key << "\" must have " << n << " entries";
      throw ValidationError(msg.str());
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_number()) throw ValidationError(std::string("matrix JSON: non-numeric entry in \"") + key + "\"");
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c].get<double>();
    }
  }
  return out;
}

Json block_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c) == 0.0 ? 0.0 : m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

HermitianMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("matrix JSON: expected an object with n, re and optional im");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ValidationError("matrix JSON: missing integer \"n\"");
  const auto n = j.at("n").get<long long>();
  if (n < 1) throw ValidationError("matrix JSON: n must be at least 1");
  if (!j.contains("re")) throw ValidationError("matrix JSON: missing \"re\"");
  const auto size = static_cast<std::size_t>(n);
  const Eigen::MatrixXd re = read_block(j, "re", size);
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
  if (j.contains("im")) im = read_block(j, "im", size);
  Eigen::MatrixXcd m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return HermitianMatrix(std::move(m));
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json j;
  j["n"] = m.rows();
  j["re"] = block_to_json(m.real());
  j["im"] = block_to_json(m.imag());
  return j;
}

Json matrix_to_json(const HermitianMatrix& m) { return matrix_to_json(m.entries()); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

HermitianMatrix read_matrix_file(const std::string& path) {
  try {
    return matrix_from_json(read_json_file(path));
  } catch (const Json::exception& e) {
    throw ValidationError("bad matrix in " + path + ": " + e.what());
  }
}

Json big_to_json(const BigReal& x) { return x.to_string(); }

BigReal big_from_json(const Json& j, mpfr_prec_t precision) {
  if (!j.is_string()) throw ValidationError("expected a decimal string");
  return BigReal(j.get<std::string>(), precision);
}

Json solution_to_json(const DualSolution& s) {
  Json j;
  j["Y_diag"] = Json(std::vector<double>(s.Y_diag.data(), s.Y_diag.data() + s.Y_diag.size()));
  j["Y_full"] = matrix_to_json(s.Y_full());
  j["F_value"] = big_to_json(s.F_value);
  j["certified_gap"] = s.certified_gap;
  j["bounding_radius"] = s.bounding_radius;
  j["iterations"] = s.iterations;
  j["marginal_residual"] = s.marginal_residual;
  j["kl_bound"] = s.kl_bound;
  j["tv_bound"] = s.tv_bound;
  j["beta"] = s.beta;
  j["converged"] = s.converged;
  Json frame;
  frame["unitary"] = matrix_to_json(s.frame.unitary);
  frame["eigenvalues"] =
      Json(std::vector<double>(s.frame.eigenvalues.data(), s.frame.eigenvalues.data() + s.frame.eigenvalues.size()));
  j["frame"] = std::move(frame);
  return j;
}

}  // namespace entromax::cli

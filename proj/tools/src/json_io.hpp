#pragma once

#include "entromax/big_real.hpp"
#include "entromax/ellipsoid_solver.hpp"
#include "entromax/hermitian.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace entromax::cli {

using Json = nlohmann::ordered_json;

/// {"n": n, "re": [[...]], "im": [[...]]}; "im" may be omitted on input.
HermitianMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const Eigen::MatrixXcd& m);
Json matrix_to_json(const HermitianMatrix& m);

/// Reads and parses a JSON file; failures raise ValidationError.
Json read_json_file(const std::string& path);
HermitianMatrix read_matrix_file(const std::string& path);

/// BigReal values travel as decimal strings with enough digits to round-trip.
Json big_to_json(const BigReal& x);
BigReal big_from_json(const Json& j, mpfr_prec_t precision);

Json solution_to_json(const DualSolution& s);

}  // namespace entromax::cli

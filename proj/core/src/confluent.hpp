#pragma once

// Shared machinery for the confluent-Vandermonde determinant oracles.

#include "entromax/big_matrix.hpp"
#include "entromax/hermitian.hpp"
#include "entromax/oracle_p1.hpp"

#include <functional>
#include <vector>

namespace entromax::detail {

/// Entry of an exponential row: (row r, derivative order j, point z, e^z-ish
/// cached factor) -> value.
using ExpEntry = std::function<BigReal(int r, int j, const BigReal& z, const BigReal& cached_exp)>;
/// Computes the cached exponential factor for a point z.
using ExpFactor = std::function<BigReal(const BigReal& z)>;

struct RowLayout {
  int poly_rows = 0;
  int exp_rows = 0;
  ExpFactor factor;
  ExpEntry entry;
};

/// Column (poly rows then exp rows) for derivative order j at point z.
std::vector<BigReal> confluent_column(const RowLayout& layout, const BigReal& z, const BigReal& cached_exp,
                                      int j, mpfr_prec_t precision);

/// Full matrix over points z (column order) with multiplicities.
BigMatrix confluent_matrix(const RowLayout& layout, const std::vector<BigReal>& z, const std::vector<int>& mult,
                           mpfr_prec_t precision);

/// Layout for M(y, gamma) of the rank-one integral.
RowLayout rank_one_layout(int n, const BigReal& gamma);
/// Layout for M^(k)(y).
RowLayout hciz_layout(int n, int k);

enum class Flavor { kRankOne, kHciz };

/// E_k and optionally its per-cluster gradient, with adaptive precision.
ValueAndGradient evaluate(const Spectrum& s, int k, Flavor flavor, bool with_gradient,
                          const OracleOptions& options);

}  // namespace entromax::detail

#pragma once

#include "entromax/big_real.hpp"

#include <cstddef>
#include <vector>

namespace entromax {

/// Dense row-major matrix of BigReal values.
class BigMatrix {
public:
  BigMatrix(std::size_t rows, std::size_t cols, mpfr_prec_t precision);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpfr_prec_t precision() const { return precision_; }

  BigReal& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigReal& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigReal> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<BigReal>& values);
  /// Copy with `values` substituted for column c.
  BigMatrix with_column(std::size_t c, const std::vector<BigReal>& values) const;

  std::vector<double> to_doubles() const;

private:
  std::size_t rows_;
  std::size_t cols_;
  mpfr_prec_t precision_;
  std::vector<BigReal> data_;
};

/// LU factorization with partial pivoting, PA = LU.
///
/// The determinant is carried as (sign, log|det|) so that products of
/// entries as large as e^{+-1000} never need to be formed as one number.
class LuDecomposition {
public:
  explicit LuDecomposition(BigMatrix m);

  /// -1, 0 or +1.
  int sign() const { return sign_; }
  bool singular() const { return sign_ == 0; }
  /// log|det|; meaningless when singular().
  const BigReal& log_abs_det() const { return log_abs_det_; }
  BigReal determinant() const;

  /// Solves M x = b.
  std::vector<BigReal> solve(const std::vector<BigReal>& b) const;

  /// det(M with column c replaced by v) / det(M), by Cramer's rule.
  BigReal column_replacement_ratio(std::size_t c, const std::vector<BigReal>& v) const;

private:
  BigMatrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
  BigReal log_abs_det_;
};

}  // namespace entromax

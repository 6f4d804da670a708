#include "entromax/big_matrix.hpp"

#include "entromax/errors.hpp"

#include <numeric>
#include <utility>

namespace entromax {

BigMatrix::BigMatrix(std::size_t rows, std::size_t cols, mpfr_prec_t precision)
    : rows_(rows), cols_(cols), precision_(precision), data_(rows * cols, BigReal(precision)) {}

std::vector<BigReal> BigMatrix::column(std::size_t c) const {
  std::vector<BigReal> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void BigMatrix::set_column(std::size_t c, const std::vector<BigReal>& values) {
  if (values.size() != rows_) throw ValidationError("BigMatrix::set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

BigMatrix BigMatrix::with_column(std::size_t c, const std::vector<BigReal>& values) const {
  BigMatrix out(*this);
  out.set_column(c, values);
  return out;
}

std::vector<double> BigMatrix::to_doubles() const {
  std::vector<double> out;
  out.reserve(data_.size());
  for (const auto& v : data_) out.push_back(v.to_double());
  return out;
}

LuDecomposition::LuDecomposition(BigMatrix m)
    : lu_(std::move(m)), perm_(lu_.rows()), log_abs_det_(lu_.precision()) {
  const std::size_t n = lu_.rows();
  if (n != lu_.cols()) throw ValidationError("LuDecomposition: matrix must be square");
  std::iota(perm_.begin(), perm_.end(), 0);

  BigReal factor(lu_.precision());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (mpfr_cmpabs(lu_(r, k).get(), lu_(pivot, k).get()) > 0) pivot = r;
    }
    if (lu_(pivot, k).is_zero()) {
      sign_ = 0;
      return;
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(pivot, c));
      std::swap(perm_[k], perm_[pivot]);
      sign_ = -sign_;
    }
    const BigReal& p = lu_(k, k);
    if (p.sign() < 0) sign_ = -sign_;
    log_abs_det_ += log(abs(p));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (lu_(r, k).is_zero()) continue;
      mpfr_div(factor.get(), lu_(r, k).get(), p.get(), MPFR_RNDN);
      lu_(r, k) = factor;
      for (std::size_t c = k + 1; c < n; ++c) {
        // lu(r,c) -= factor * lu(k,c), fused to one rounding
        mpfr_fms(lu_(r, c).get(), factor.get(), lu_(k, c).get(), lu_(r, c).get(), MPFR_RNDN);
        mpfr_neg(lu_(r, c).get(), lu_(r, c).get(), MPFR_RNDN);
      }
    }
  }
}

BigReal LuDecomposition::determinant() const {
  if (sign_ == 0) return BigReal(lu_.precision());
  BigReal out = exp(log_abs_det_);
  return sign_ < 0 ? -out : out;
}

std::vector<BigReal> LuDecomposition::solve(const std::vector<BigReal>& b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw ValidationError("LuDecomposition::solve: length mismatch");
  if (sign_ == 0) throw NumericInstabilityError("LuDecomposition::solve: singular matrix");
  std::vector<BigReal> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(b[perm_[i]].with_precision(lu_.precision()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!lu_(i, j).is_zero()) x[i] -= lu_(i, j) * x[j];
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (!lu_(ii, j).is_zero()) x[ii] -= lu_(ii, j) * x[j];
    }
    x[ii] /= lu_(ii, ii);
  }
  return x;
}

BigReal LuDecomposition::column_replacement_ratio(std::size_t c, const std::vector<BigReal>& v) const {
  return solve(v).at(c);
}

}  // namespace entromax

#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace entromax {

/// Arbitrary-precision real scalar backed by an MPFR value.
///
/// Every value carries its own binary precision. The result of a binary
/// operation takes the larger of the two operand precisions; plain `double`
/// and integer operands are exact and never lower it. All rounding is to
/// nearest, so a single operation has relative error at most 2^(1-p).
class BigReal {
public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit BigReal(mpfr_prec_t precision = kDefaultPrecision);
  BigReal(double value, mpfr_prec_t precision);
  BigReal(long value, mpfr_prec_t precision);
  BigReal(int value, mpfr_prec_t precision) : BigReal(static_cast<long>(value), precision) {}
  BigReal(std::string_view decimal, mpfr_prec_t precision);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Re-rounds to a new precision in place.
  void set_precision(mpfr_prec_t precision);
  BigReal with_precision(mpfr_prec_t precision) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

  /// Scientific decimal string carrying enough digits to round-trip at the
  /// value's precision, e.g. "-4.586751453870818...e-01".
  std::string to_string() const;
  std::string to_string(std::size_t digits) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_inf() const { return mpfr_inf_p(value_) != 0; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(double rhs);
  BigReal& operator-=(double rhs);
  BigReal& operator*=(double rhs);
  BigReal& operator/=(double rhs);

  BigReal operator-() const;

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator+(BigReal lhs, double rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, double rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, double rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, double rhs) { return lhs /= rhs; }
  friend BigReal operator+(double lhs, BigReal rhs) { return rhs += lhs; }
  friend BigReal operator*(double lhs, BigReal rhs) { return rhs *= lhs; }
  friend BigReal operator-(double lhs, const BigReal& rhs);
  friend BigReal operator/(double lhs, const BigReal& rhs);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, double b);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow(const BigReal& x, long exponent);
BigReal max(const BigReal& a, const BigReal& b);

/// n! at the given precision.
BigReal factorial(unsigned long n, mpfr_prec_t precision);
/// log(n!) at the given precision.
BigReal log_factorial(unsigned long n, mpfr_prec_t precision);
/// Binomial coefficient C(n, j), zero when j > n.
BigReal binomial(unsigned long n, unsigned long j, mpfr_prec_t precision);
BigReal pi(mpfr_prec_t precision);

/// 2^e as a double, for tolerance arithmetic like 2^(-prec/2).
double pow2(long e);

/// Decimal digits needed so that parse(format(x)) == x at `precision` bits.
std::size_t round_trip_digits(mpfr_prec_t precision);

}  // namespace entromax

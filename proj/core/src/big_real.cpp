#include "entromax/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entromax {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

void check_precision(mpfr_prec_t precision) {
  if (precision < MPFR_PREC_MIN || precision > (1L << 20)) {
    throw std::invalid_argument("BigReal: precision out of range");
  }
}

// Raises the precision of `target` to at least `wanted`, preserving its value.
void widen(mpfr_ptr target, mpfr_prec_t wanted) {
  if (mpfr_get_prec(target) < wanted) {
    mpfr_prec_round(target, wanted, kRnd);
  }
}

}  // namespace

BigReal::BigReal(mpfr_prec_t precision) {
  check_precision(precision);
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, mpfr_prec_t precision) {
  check_precision(precision);
  mpfr_init2(value_, precision);
  mpfr_set_d(value_, value, kRnd);
}

BigReal::BigReal(long value, mpfr_prec_t precision) {
  check_precision(precision);
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, kRnd);
}

BigReal::BigReal(std::string_view decimal, mpfr_prec_t precision) {
  check_precision(precision);
  mpfr_init2(value_, precision);
  std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, kRnd) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("BigReal: cannot parse '" + text + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Leave `other` valid at minimal precision; mpfr_swap needs two live values.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

void BigReal::set_precision(mpfr_prec_t precision) {
  check_precision(precision);
  mpfr_prec_round(value_, precision, kRnd);
}

BigReal BigReal::with_precision(mpfr_prec_t precision) const {
  BigReal out(precision);
  mpfr_set(out.value_, value_, kRnd);
  return out;
}

std::size_t round_trip_digits(mpfr_prec_t precision) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(precision) * std::log10(2.0))) + 1;
}

std::string BigReal::to_string() const { return to_string(round_trip_digits(precision())); }

std::string BigReal::to_string(std::size_t digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, std::max<std::size_t>(digits, 2), value_, kRnd);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  out.push_back(mantissa.front());
  out.push_back('.');
  out.append(mantissa, 1, std::string::npos);
  // mpfr_get_str returns 0.d1d2... * 10^exponent
  long e = static_cast<long>(exponent) - 1;
  out.push_back('e');
  out.push_back(e < 0 ? '-' : '+');
  std::string digits_e = std::to_string(e < 0 ? -e : e);
  if (digits_e.size() < 2) digits_e.insert(0, "0");
  out += digits_e;
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen(value_, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen(value_, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen(value_, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen(value_, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, kRnd);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, kRnd);
  return out;
}

BigReal operator-(double lhs, const BigReal& rhs) {
  BigReal out(rhs.precision());
  mpfr_d_sub(out.value_, lhs, rhs.value_, kRnd);
  return out;
}

BigReal operator/(double lhs, const BigReal& rhs) {
  BigReal out(rhs.precision());
  mpfr_d_div(out.value_, lhs, rhs.value_, kRnd);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  if (a.is_nan() || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.get(), x.get(), kRnd);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.get(), x.get(), kRnd);
  return out;
}

BigReal log(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log(out.get(), x.get(), kRnd);
  return out;
}

BigReal log1p(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log1p(out.get(), x.get(), kRnd);
  return out;
}

BigReal expm1(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_expm1(out.get(), x.get(), kRnd);
  return out;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sqrt(out.get(), x.get(), kRnd);
  return out;
}

BigReal pow(const BigReal& x, long exponent) {
  BigReal out(x.precision());
  mpfr_pow_si(out.get(), x.get(), exponent, kRnd);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }

BigReal factorial(unsigned long n, mpfr_prec_t precision) {
  BigReal out(precision);
  mpfr_fac_ui(out.get(), n, kRnd);
  return out;
}

BigReal log_factorial(unsigned long n, mpfr_prec_t precision) {
  BigReal out(precision);
  if (n < 2) return out;
  BigReal arg(static_cast<long>(n + 1), precision);
  mpfr_lngamma(out.get(), arg.get(), kRnd);
  return out;
}

BigReal binomial(unsigned long n, unsigned long j, mpfr_prec_t precision) {
  BigReal out(precision);
  if (j > n) return out;
  j = std::min(j, n - j);
  // Running product stays an exact integer as long as it fits the mantissa.
  mpfr_set_ui(out.get(), 1, kRnd);
  for (unsigned long i = 1; i <= j; ++i) {
    mpfr_mul_ui(out.get(), out.get(), n - j + i, kRnd);
    mpfr_div_ui(out.get(), out.get(), i, kRnd);
  }
  return out;
}

BigReal pi(mpfr_prec_t precision) {
  BigReal out(precision);
  mpfr_const_pi(out.get(), kRnd);
  return out;
}

double pow2(long e) { return std::ldexp(1.0, static_cast<int>(e)); }

}  // namespace entromax

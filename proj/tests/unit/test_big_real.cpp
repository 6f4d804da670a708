#include "entromax/big_matrix.hpp"
#include "entromax/big_real.hpp"

#include <doctest.h>

#include <cmath>

using namespace entromax;

TEST_CASE("arithmetic keeps the wider precision") {
  const BigReal a(1.0, 128);
  const BigReal b(3.0, 512);
  const BigReal c = a / b;
  CHECK(c.precision() == 512);
  CHECK(abs(c * 3.0 - 1.0).to_double() < 1e-150);
}

TEST_CASE("decimal strings round-trip at the declared precision") {
  for (mpfr_prec_t prec : {64, 256, 1024}) {
    const BigReal x = exp(BigReal(1.0, prec)) / 7.0;
    const BigReal y(x.to_string(), prec);
    CHECK(x == y);
    const BigReal z = -x * 1e-300;
    CHECK(BigReal(z.to_string(), prec) == z);
  }
  CHECK(BigReal(0L, 256).to_string() == "0");
  CHECK(BigReal(1.5, 64).to_string(4) == "1.500e+00");
}

TEST_CASE("elementary functions") {
  const BigReal two(2.0, 256);
  CHECK(abs(exp(log(two)) - two).to_double() < 1e-70);
  CHECK(abs(sqrt(two) * sqrt(two) - two).to_double() < 1e-70);
  CHECK(factorial(10, 256).to_double() == 3628800.0);
  CHECK(abs(log_factorial(10, 256) - log(factorial(10, 256))).to_double() < 1e-70);
  CHECK(binomial(10, 3, 256).to_double() == 120.0);
  CHECK(binomial(3, 10, 256).is_zero());
  CHECK(pi(256).to_double() == doctest::Approx(M_PI));
  CHECK(pow2(-3) == 0.125);
  CHECK((BigReal(2.0, 64) <=> 3.0) == std::partial_ordering::less);
}

TEST_CASE("LU determinant, solve and column replacement") {
  BigMatrix m(3, 3, 256);
  const double v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = BigReal(v[r][c], 256);
  }
  const LuDecomposition lu(m);
  CHECK(lu.sign() == 1);
  CHECK(lu.determinant().to_double() == doctest::Approx(18.0));
  std::vector<BigReal> b{BigReal(1.0, 256), BigReal(2.0, 256), BigReal(3.0, 256)};
  const std::vector<BigReal> x = lu.solve(b);
  for (int r = 0; r < 3; ++r) {
    BigReal s(256);
    for (int c = 0; c < 3; ++c) s += m(r, c) * x[c];
    CHECK(abs(s - b[r]).to_double() < 1e-70);
  }
  const BigReal ratio = lu.column_replacement_ratio(1, b);
  CHECK(abs(ratio - LuDecomposition(m.with_column(1, b)).determinant() / 18.0).to_double() < 1e-70);

  BigMatrix singular(2, 2, 128);
  singular(0, 0) = BigReal(1.0, 128);
  singular(0, 1) = BigReal(2.0, 128);
  singular(1, 0) = BigReal(2.0, 128);
  singular(1, 1) = BigReal(4.0, 128);
  CHECK(LuDecomposition(singular).singular());
}

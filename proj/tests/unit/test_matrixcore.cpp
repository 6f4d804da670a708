#include "helpers.hpp"

#include "entromax/errors.hpp"
#include "entromax/hermitian.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace entromax;
using entromax::testing::random_unitary;

TEST_CASE("hermitian matrix rejects non-conjugate pairs and names them") {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, std::complex<double>(0.0, 1.0), std::complex<double>(0.0, 1.0), 2.0;
  try {
    HermitianMatrix h(m);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("(0,1)") != std::string::npos);
    CHECK(what.find("(1,0)") != std::string::npos);
  }
}

TEST_CASE("hermitian matrix zeroes diagonal imaginary parts and accepts tiny asymmetry") {
  Eigen::MatrixXcd m(2, 2);
  m << std::complex<double>(1.0, 1e-14), 2.0, 2.0 + 1e-13, 3.0;
  const HermitianMatrix h(m);
  CHECK(h(0, 0).imag() == 0.0);
  CHECK(h(0, 1) == std::conj(h(1, 0)));
  CHECK_THROWS_AS(HermitianMatrix(Eigen::MatrixXcd(0, 0)), ValidationError);
}

TEST_CASE("inner product and trace") {
  const auto a = HermitianMatrix::diagonal(Eigen::Vector3d(1, 2, 3));
  const auto b = HermitianMatrix::identity(3);
  CHECK(a.inner(b) == doctest::Approx(6.0));
  CHECK(a.trace() == doctest::Approx(6.0));
  CHECK(a.is_diagonal());
}

TEST_CASE("eigh of the identity and of diagonal input") {
  const EigenDecomposition id = eigh(HermitianMatrix::identity(3));
  for (int i = 0; i < 3; ++i) CHECK(id.eigenvalues(i) == 1.0);

  const EigenDecomposition d = eigh(HermitianMatrix::diagonal(Eigen::Vector2d(1, 2)));
  CHECK(d.eigenvalues(0) == 2.0);
  CHECK(d.eigenvalues(1) == 1.0);
  CHECK(std::abs(d.eigenvectors(1, 0)) == 1.0);
  CHECK(std::abs(d.eigenvectors(0, 1)) == 1.0);
}

TEST_CASE("eigh of the swap matrix") {
  const EigenDecomposition e = eigh(HermitianMatrix::from_real((Eigen::Matrix2d() << 0, 1, 1, 0).finished()));
  CHECK(e.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(-1.0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(e.eigenvectors(0, 0)) == doctest::Approx(r));
  CHECK(std::abs(e.eigenvectors(1, 0)) == doctest::Approx(r));
  // eigenvector for +1 has equal entries, for -1 opposite ones
  CHECK(std::abs(e.eigenvectors(0, 0) - e.eigenvectors(1, 0)) < 1e-12);
  CHECK(std::abs(e.eigenvectors(0, 1) + e.eigenvectors(1, 1)) < 1e-12);
}

TEST_CASE("eigh round trip and unitarity on random Hermitian input") {
  RngStream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 1 + trial % 7;
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    }
    const HermitianMatrix h(Eigen::MatrixXcd(0.5 * (g + g.adjoint())));
    const EigenDecomposition e = eigh(h);
    const Eigen::MatrixXcd back = e.eigenvectors * e.eigenvalues.asDiagonal() * e.eigenvectors.adjoint();
    CHECK((back - h.entries()).norm() <= 1e-10 * std::max(1.0, h.norm()));
    CHECK((e.eigenvectors.adjoint() * e.eigenvectors - Eigen::MatrixXcd::Identity(n, n)).norm() <= 1e-10);
    for (Eigen::Index i = 1; i < n; ++i) CHECK(e.eigenvalues(i - 1) >= e.eigenvalues(i));
  }
}

TEST_CASE("cluster_spectrum merges repeated values") {
  const Spectrum s = cluster_spectrum({1.0, 1.0, 2.0}, 1e-9);
  REQUIRE(s.size() == 2);
  CHECK(s.distinct[0] == 2.0);
  CHECK(s.distinct[1] == 1.0);
  CHECK(s.mult[0] == 1);
  CHECK(s.mult[1] == 2);
  CHECK(s.n() == 3);
}

TEST_CASE("cluster_spectrum merges below tolerance with the mean as representative") {
  const Spectrum s = cluster_spectrum({0.0, 1e-12, 1.0}, 1e-9);
  REQUIRE(s.size() == 2);
  CHECK(s.distinct[0] == 1.0);
  CHECK(s.distinct[1] == doctest::Approx(5e-13).epsilon(1e-9));
  CHECK(s.mult[1] == 2);
  // the cluster index map points each input at its cluster
  CHECK(s.cluster_of == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("cluster_spectrum of a constant vector is one cluster with the exact value") {
  const double c = 0.1 + 0.2;
  const Spectrum s = cluster_spectrum({c, c, c});
  REQUIRE(s.size() == 1);
  CHECK(s.distinct[0] == c);
  CHECK(s.mult[0] == 3);
}

TEST_CASE("cluster_spectrum is idempotent and permutation invariant") {
  RngStream rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> y = testing::uniform_vector(rng, 6, -2, 2);
    y[3] = y[1];
    y[4] = y[1] + 1e-12;
    const Spectrum s = cluster_spectrum(y);
    const Spectrum again = cluster_spectrum(s.expanded());
    CHECK(again.distinct == s.distinct);
    CHECK(again.mult == s.mult);
    std::vector<double> shuffled(y.rbegin(), y.rend());
    std::rotate(shuffled.begin(), shuffled.begin() + 2, shuffled.end());
    const Spectrum p = cluster_spectrum(shuffled);
    CHECK(p.distinct == s.distinct);
    CHECK(p.mult == s.mult);
  }
}

TEST_CASE("cluster_spectrum keeps separated clusters apart") {
  const Spectrum s = cluster_spectrum({0.0, 5e-9, 1.0}, 1e-9);
  CHECK(s.size() == 3);
}

TEST_CASE("Spectrum::from_clusters validates ordering and multiplicities") {
  CHECK_THROWS_AS(Spectrum::from_clusters({1.0, 2.0}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(Spectrum::from_clusters({1.0}, {0}), ValidationError);
  CHECK_THROWS_AS(Spectrum::from_clusters({}, {}), ValidationError);
  const Spectrum s = Spectrum::from_clusters({2.0, 1.0}, {2, 1});
  CHECK(s.expanded() == std::vector<double>{2.0, 2.0, 1.0});
}

TEST_CASE("diagonal_frame of a diagonal descending matrix is the identity frame") {
  const DiagonalFrame f = diagonal_frame(HermitianMatrix::diagonal(Eigen::Vector2d(0.7, 0.3)));
  CHECK(f.eigenvalues(0) == 0.7);
  CHECK(f.eigenvalues(1) == 0.3);
  CHECK((f.unitary - Eigen::MatrixXcd::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("diagonal_frame of a rank-one projector") {
  const DiagonalFrame f = diagonal_frame(HermitianMatrix::from_real((Eigen::Matrix2d() << 0.5, 0.5, 0.5, 0.5).finished()));
  CHECK(f.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(std::abs(f.eigenvalues(1)) < 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f.unitary(0, 0)) == doctest::Approx(r));
  CHECK(std::abs(f.unitary(1, 0)) == doctest::Approx(r));
  CHECK(std::abs(f.unitary(0, 1) + f.unitary(1, 1)) < 1e-12);
}

TEST_CASE("diagonal_frame recovers the spectrum of U D U*") {
  RngStream rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const Eigen::MatrixXcd u = random_unitary(rng, n);
    std::vector<double> d = testing::uniform_vector(rng, static_cast<std::size_t>(n), -3, 3);
    Eigen::VectorXd dv = Eigen::Map<Eigen::VectorXd>(d.data(), n);
    const HermitianMatrix a(Eigen::MatrixXcd(u * dv.asDiagonal() * u.adjoint()));
    const DiagonalFrame f = diagonal_frame(a);
    std::sort(d.begin(), d.end(), std::greater<>());
    for (Eigen::Index i = 0; i < n; ++i) CHECK(f.eigenvalues(i) == doctest::Approx(d[i]).epsilon(1e-10));
    CHECK((f.rotate_back(f.eigenvalues).entries() - a.entries()).norm() <= 1e-10 * a.norm());
  }
}

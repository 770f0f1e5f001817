#include <doctest.h>

#include <cmath>

#include "entbound/error.hpp"
#include "entbound/linalg.hpp"
#include "entbound/states.hpp"

using namespace entbound;

namespace {

ComplexMatrix bell_density() {
  const double h = 0.5;
  return ComplexMatrix(4, 4, {h, 0, 0, h, 0, 0, 0, 0, 0, 0, 0, 0, h, 0, 0, h});
}

ComplexMatrix random_matrix(std::size_t n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_matrix(n, rng);
  return (g + g.adjoint()) * Complex(0.5);
}

ComplexMatrix random_density(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_matrix(n, rng);
  ComplexMatrix p = g.adjoint() * g;
  return p * Complex(1.0 / p.trace().real());
}

ComplexMatrix reconstruct(const HermitianSpectrum& s) {
  return s.eigenvectors * ComplexMatrix::diagonal(std::span<const double>(s.eigenvalues)) *
         s.eigenvectors.adjoint();
}

}  // namespace

TEST_CASE("matrix construction checks shape and finiteness") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(NAN, 0)}), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0, INFINITY)}), Error);
  ComplexMatrix z(2, 3);
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 3);
  CHECK(z.entries().size() == 6);
}

TEST_CASE("kron") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const double d1[] = {1, 2}, d2[] = {3, 4}, d12[] = {3, 4, 6, 8};
  const ComplexMatrix k = kron(ComplexMatrix::diagonal(d1), ComplexMatrix::diagonal(d2));
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 4);
  CHECK(max_abs_diff(k, ComplexMatrix::diagonal(d12)) == 0.0);

  // non-square factors
  const ComplexMatrix row(1, 2, {1, 2});
  const ComplexMatrix col(3, 1, {1, 1, 1});
  const ComplexMatrix rc = kron(row, col);
  CHECK(rc.rows() == 3);
  CHECK(rc.cols() == 2);
  CHECK(rc(2, 1) == Complex(2));
}

TEST_CASE("partial trace") {
  Rng rng(11);
  const ComplexMatrix ra = random_density(2, rng);
  const ComplexMatrix rb = random_density(3, rng);
  const ComplexMatrix rab = kron(ra, rb);
  CHECK(max_abs_diff(partial_trace(rab, {2, 3}, {0}), ra) < 1e-14);
  CHECK(max_abs_diff(partial_trace(rab, {2, 3}, {1}), rb) < 1e-14);

  SUBCASE("Bell state gives maximally mixed marginal") {
    const ComplexMatrix half = ComplexMatrix::identity(2) * Complex(0.5);
    CHECK(max_abs_diff(partial_trace(bell_density(), {2, 2}, {0}), half) < 1e-15);
    CHECK(max_abs_diff(partial_trace(bell_density(), {2, 2}, {1}), half) < 1e-15);
  }

  SUBCASE("keep order does not matter and factors stay ascending") {
    const ComplexMatrix rc = random_density(2, rng);
    const ComplexMatrix abc = kron(kron(ra, rb), rc);
    CHECK(max_abs_diff(partial_trace(abc, {2, 3, 2}, {2, 0}), kron(ra, rc)) < 1e-14);
    CHECK(max_abs_diff(partial_trace(abc, {2, 3, 2}, {0, 2}), kron(ra, rc)) < 1e-14);
  }

  SUBCASE("trace preserved") {
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix rho = random_density(8, rng);
      const Complex t = partial_trace(rho, {2, 2, 2}, {1}).trace();
      CHECK(std::abs(t - Complex(1.0)) < 1e-12);
    }
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(partial_trace(bell_density(), {2, 3}, {0}), Error);
    CHECK_THROWS_AS(partial_trace(bell_density(), {2, 2}, {2}), Error);
    CHECK_THROWS_AS(partial_trace(bell_density(), {2, 2}, {0, 0}), Error);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix(2, 3), {2}, {0}), Error);
  }
}

TEST_CASE("index convention: subsystem 0 is the leftmost factor") {
  // |1> (x) |0> lives at index 1*2+0 = 2
  const ComplexMatrix p1(2, 2, {0, 0, 0, 1});
  const ComplexMatrix p0(2, 2, {1, 0, 0, 0});
  const ComplexMatrix prod = kron(p1, p0);
  CHECK(prod(2, 2) == Complex(1.0));
  CHECK(max_abs_diff(partial_trace(prod, {2, 2}, {0}), p1) == 0.0);
  CHECK(max_abs_diff(partial_trace(prod, {2, 2}, {1}), p0) == 0.0);
}

TEST_CASE("partial transpose") {
  Rng rng(5);
  SUBCASE("real symmetric product unchanged") {
    const ComplexMatrix a(2, 2, {0.7, 0.2, 0.2, 0.3});
    const ComplexMatrix b(2, 2, {0.4, -0.1, -0.1, 0.6});
    const ComplexMatrix ab = kron(a, b);
    CHECK(max_abs_diff(partial_transpose(ab, {2, 2}, 0), ab) == 0.0);
    CHECK(max_abs_diff(partial_transpose(ab, {2, 2}, 1), ab) == 0.0);
  }
  SUBCASE("involution, trace and Hermiticity preserved") {
    for (int k = 0; k < 10; ++k) {
      const ComplexMatrix rho = random_density(6, rng);
      const ComplexMatrix pt = partial_transpose(rho, {2, 3}, 1);
      CHECK(max_abs_diff(partial_transpose(pt, {2, 3}, 1), rho) == 0.0);
      CHECK(std::abs(pt.trace() - rho.trace()) < 1e-15);
      CHECK(is_hermitian(pt));
    }
  }
  SUBCASE("full transpose from all parts") {
    const ComplexMatrix rho = random_density(4, rng);
    CHECK(max_abs_diff(partial_transpose(rho, {2, 2}, std::vector<std::size_t>{0, 1}), rho.transpose()) == 0.0);
  }
  SUBCASE("Bell spectrum") {
    const auto s = hermitian_eigen(partial_transpose(bell_density(), {2, 2}, 0));
    CHECK(s.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.eigenvalues[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.eigenvalues[3] == doctest::Approx(-0.5).epsilon(1e-14));
  }
  CHECK_THROWS_AS(partial_transpose(bell_density(), {2, 2}, 2), Error);
  CHECK_THROWS_AS(partial_transpose(bell_density(), {4, 2}, 0), Error);
}

TEST_CASE("hermitian_eigen small cases") {
  auto s = hermitian_eigen(ComplexMatrix::identity(2));
  CHECK(s.eigenvalues == std::vector<double>{1.0, 1.0});

  const double d[] = {3, 1, 2};
  s = hermitian_eigen(ComplexMatrix::diagonal(d));
  CHECK(s.eigenvalues == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(max_abs_diff(reconstruct(s), ComplexMatrix::diagonal(d)) < 1e-15);

  const ComplexMatrix sx(2, 2, {0, 1, 1, 0});
  s = hermitian_eigen(sx);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-15));

  const ComplexMatrix sy(2, 2, {0, Complex(0, -1), Complex(0, 1), 0});
  s = hermitian_eigen(sy);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_abs_diff(reconstruct(s), sy) < 1e-15);

  const auto empty = hermitian_eigen(ComplexMatrix(0, 0));
  CHECK(empty.eigenvalues.empty());
}

TEST_CASE("hermitian_eigen random matrices up to 64x64") {
  Rng rng(2024);
  for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 8u, 16u, 32u, 64u}) {
    CAPTURE(n);
    const ComplexMatrix m = random_hermitian(n, rng);
    const auto s = hermitian_eigen(m);
    REQUIRE(s.eigenvalues.size() == n);
    for (std::size_t k = 1; k < n; ++k) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
    double sum = 0.0;
    for (double l : s.eigenvalues) sum += l;
    CHECK(std::abs(sum - m.trace().real()) < 1e-10);
    CHECK(max_abs_diff(reconstruct(s), m) < 1e-9);
    CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, ComplexMatrix::identity(n)) < 1e-9);
  }
}

TEST_CASE("hermitian_eigen degenerate spectrum") {
  Rng rng(3);
  // U diag(1,1,1,-2) U^dagger
  const ComplexMatrix u = haar_random_unitary(4, rng);
  const double d[] = {1, 1, 1, -2};
  const ComplexMatrix m = u * ComplexMatrix::diagonal(d) * u.adjoint();
  const auto s = hermitian_eigen((m + m.adjoint()) * Complex(0.5));
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.eigenvalues[3] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, ComplexMatrix::identity(4)) < 1e-9);
}

TEST_CASE("hermitian_eigen rejects bad input") {
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 2, {0, 1, 0, 0})), Error);
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 3)), Error);
  // within tolerance is accepted
  CHECK_NOTHROW(hermitian_eigen(ComplexMatrix(2, 2, {1, 1e-11, 0, 1})));
  try {
    hermitian_eigen(ComplexMatrix(2, 2, {0, 1, 0, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
  LinalgConfig loose;
  loose.hermitian_tol = 2.0;
  CHECK_NOTHROW(hermitian_eigen(ComplexMatrix(2, 2, {0, 1, 0, 0}), loose));
}

TEST_CASE("trace norm") {
  Rng rng(8);
  CHECK(trace_norm(ComplexMatrix::identity(5)) == doctest::Approx(5.0).epsilon(1e-15));
  for (int k = 0; k < 10; ++k) {
    CHECK(trace_norm(random_density(4, rng)) == doctest::Approx(1.0).epsilon(1e-12));
    const ComplexMatrix h = random_hermitian(5, rng);
    CHECK(trace_norm(h) >= std::abs(h.trace()) - 1e-12);
  }
  CHECK(trace_norm(partial_transpose(bell_density(), {2, 2}, 0)) == doctest::Approx(2.0).epsilon(1e-14));

  // non-Hermitian: |0><1| has one singular value 1
  CHECK(trace_norm(ComplexMatrix(2, 2, {0, 3, 0, 0})) == doctest::Approx(3.0).epsilon(1e-14));
  // unitary: all singular values 1
  CHECK(trace_norm(haar_random_unitary(6, rng)) == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("psd sqrt") {
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) < 1e-15);
  const double d[] = {4, 9}, r[] = {2, 3};
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal(d)), ComplexMatrix::diagonal(r)) < 1e-14);

  Rng rng(77);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix m = random_density(5, rng);
    const ComplexMatrix root = psd_sqrt(m);
    CHECK(is_hermitian(root));
    CHECK(max_abs_diff(root * root, m) < 1e-8);
  }

  const double tiny[] = {1.0, -5e-11};
  CHECK_NOTHROW(psd_sqrt(ComplexMatrix::diagonal(tiny)));
  CHECK(psd_sqrt(ComplexMatrix::diagonal(tiny))(1, 1) == Complex(0.0));
  const double neg[] = {1.0, -1e-9};
  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal(neg)), Error);
}

TEST_CASE("arithmetic") {
  const ComplexMatrix a(2, 2, {1, 2, 3, 4});
  const ComplexMatrix b(2, 2, {0, 1, 1, 0});
  const ComplexMatrix ab = a * b;
  CHECK(ab(0, 0) == Complex(2));
  CHECK(ab(0, 1) == Complex(1));
  CHECK(ab(1, 0) == Complex(4));
  CHECK((a - a).trace() == Complex(0));
  CHECK((a + b)(0, 1) == Complex(3));
  CHECK(a.transpose()(0, 1) == Complex(3));
  const ComplexMatrix c(1, 1, {Complex(1, 2)});
  CHECK(c.adjoint()(0, 0) == Complex(1, -2));
  CHECK(c.conjugate()(0, 0) == Complex(1, -2));
  CHECK_THROWS_AS(a * ComplexMatrix(3, 1), Error);
  CHECK(hermiticity_defect(ComplexMatrix(2, 3)) == INFINITY);
  CHECK(hermiticity_defect(a) == doctest::Approx(1.0));
}

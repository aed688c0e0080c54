#include <doctest.h>

#include "lauricella/matrix.hpp"
#include "test_helpers.hpp"

using namespace lauricella;
using testutil::Rand;
using testutil::random_matrix;

TEST_CASE("add: identities and entrywise oracle") {
  Rand r(1);
  ComplexMatrix a = random_matrix(2, r);
  CHECK(add(a, ComplexMatrix::zero(2)) == a);

  ComplexMatrix two_i = add(ComplexMatrix::identity(3), ComplexMatrix::identity(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(two_i.at(i, j) == (i == j ? Complex(2.0) : Complex(0.0)));

  ComplexMatrix b = random_matrix(2, r);
  ComplexMatrix s = add(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(s.at(i, j) == a.at(i, j) + b.at(i, j));

  CHECK_THROWS_AS(add(a, ComplexMatrix::zero(3)), DimensionError);
}

TEST_CASE("matmul: identity, diagonal, triple-loop oracle") {
  Rand r(2);
  ComplexMatrix a = random_matrix(3, r);
  CHECK(matmul(a, ComplexMatrix::identity(3)) == a);

  ComplexMatrix d1 = ComplexMatrix::diagonal({{2, 0}, {3, 0}});
  ComplexMatrix d2 = ComplexMatrix::diagonal({{5, 0}, {7, 0}});
  ComplexMatrix d = matmul(d1, d2);
  CHECK(d.at(0, 0) == Complex(10.0));
  CHECK(d.at(1, 1) == Complex(21.0));
  CHECK(d.at(0, 1) == Complex(0.0));

  ComplexMatrix b = random_matrix(3, r);
  ComplexMatrix p = matmul(a, b);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
      CHECK(std::abs(p.at(i, j) - s) < 1e-14);
    }
}

TEST_CASE("add_shift: zero, scalar, exact inverse shifts and additivity") {
  Rand r(3);
  ComplexMatrix g = random_matrix(3, r);
  CHECK(add_shift(g, 0) == g);

  ComplexMatrix three_i = add_shift(ComplexMatrix::zero(2), 3);
  CHECK(three_i == scale(3.0, ComplexMatrix::identity(2)));

  // Integer shifts compose exactly on exactly-representable entries; draw
  // dyadic values so z + m never rounds.  (A general 53-bit mantissa picks
  // up one ulp when an integer lands on it, which is why the evaluator
  // always applies the net shift in a single addition.)
  ComplexMatrix a(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double re = static_cast<double>(static_cast<int64_t>(r.next() % 2097152) - 1048576);
      const double im = static_cast<double>(static_cast<int64_t>(r.next() % 2097152) - 1048576);
      a.at(i, j) = Complex(re, im) * 0x1.0p-20;
    }
  CHECK(add_shift(a, 0) == a);
  CHECK(add_shift(add_shift(a, 2), -2) == a);
  for (int m : {-3, 0, 2})
    for (int n : {-1, 1, 4}) CHECK(add_shift(a, m + n) == add_shift(add_shift(a, m), n));
}

TEST_CASE("inverse: identity, diagonal, residual, double inverse") {
  ToleranceConfig tol;
  CHECK(inverse(ComplexMatrix::identity(3), tol) == ComplexMatrix::identity(3));

  ComplexMatrix d = inverse(ComplexMatrix::diagonal({{2, 0}, {4, 0}}), tol);
  CHECK(d.at(0, 0) == Complex(0.5));
  CHECK(d.at(1, 1) == Complex(0.25));

  Rand r(4);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix a = add_shift(random_matrix(3, r), 4); // diagonally dominant enough
    ComplexMatrix x = inverse(a, tol);
    const double resid = frobenius_norm(sub(matmul(a, x), ComplexMatrix::identity(3)));
    CHECK(resid < 1e-12);
    // inverse of inverse returns within 10x of that residual scale
    ComplexMatrix back = inverse(x, tol);
    CHECK(frobenius_norm(sub(back, a)) < 1e-11 * (1.0 + frobenius_norm(a)));
    CHECK(x.dim() == a.dim());
  }
}

TEST_CASE("inverse: singular and ill-conditioned rejections") {
  ToleranceConfig tol;
  ComplexMatrix z(2); // zero matrix
  CHECK_THROWS_AS(inverse(z, tol), SingularityError);

  ComplexMatrix s(2); // rank one
  s.at(0, 0) = 1.0;
  s.at(0, 1) = 2.0;
  s.at(1, 0) = 2.0;
  s.at(1, 1) = 4.0;
  CHECK_THROWS_AS(inverse(s, tol), SingularityError);

  ToleranceConfig tight = tol;
  tight.invert_cond_max = 1.0;
  CHECK_THROWS_AS(inverse(ComplexMatrix::diagonal({{1, 0}, {1000, 0}}), tight),
                  SingularityError);
}

TEST_CASE("frobenius_norm: zero, identity, entrywise oracle") {
  CHECK(frobenius_norm(ComplexMatrix::zero(3)) == 0.0);
  CHECK(frobenius_norm(ComplexMatrix::identity(4)) == doctest::Approx(2.0));

  Rand r(5);
  ComplexMatrix a = random_matrix(3, r);
  double s = 0.0;
  for (const Complex& v : a.entries()) s += v.real() * v.real() + v.imag() * v.imag();
  CHECK(frobenius_norm(a) == doctest::Approx(std::sqrt(s)));
}

TEST_CASE("commutes: identity, polynomial in A, nilpotent counterexample") {
  ToleranceConfig tol;
  Rand r(6);
  ComplexMatrix a = random_matrix(3, r);
  CHECK(commutes(a, ComplexMatrix::identity(3), tol));
  CHECK(commutes(a, matmul(a, a), tol));

  ComplexMatrix up(2), down(2);
  up.at(0, 1) = 1.0;
  down.at(1, 0) = 1.0;
  CHECK_FALSE(commutes(up, down, tol));
  CHECK(commutator_norm(up, down) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("matmul associativity on random triples") {
  Rand r(7);
  for (int dim = 2; dim <= 4; ++dim) {
    ComplexMatrix a = random_matrix(dim, r), b = random_matrix(dim, r),
                  c = random_matrix(dim, r);
    ComplexMatrix lhs = matmul(matmul(a, b), c);
    ComplexMatrix rhs = matmul(a, matmul(b, c));
    CHECK(frobenius_norm(sub(lhs, rhs)) / (1.0 + frobenius_norm(lhs)) < 1e-12);
  }
}

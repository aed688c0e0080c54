#include <doctest.h>

#include "lauricella/pochhammer.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace lauricella;
using testutil::Rand;
using testutil::random_matrix;
using testutil::scalar;

TEST_CASE("pochhammer: base cases and the scalar rising factorial") {
  Rand r(11);
  ComplexMatrix a = random_matrix(3, r);
  CHECK(pochhammer(a, 0) == ComplexMatrix::identity(3));
  CHECK(pochhammer(a, 1) == a);

  CHECK(pochhammer(scalar(2.0), 3).at(0, 0) == Complex(24.0)); // 2*3*4

  for (int trial = 0; trial < 10; ++trial) {
    const Complex z = r.cx(-2.0, 2.0);
    for (int n = 0; n <= 10; ++n) {
      const Complex got = pochhammer(scalar(z), n).at(0, 0);
      const Complex want = oracle::rise(z, n);
      CHECK(std::abs(got - want) <= 1e-13 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("pochhammer: incremental step matches the product bitwise") {
  Rand r(12);
  ComplexMatrix a = random_matrix(3, r);
  for (int m = 0; m < 6; ++m)
    CHECK(pochhammer(a, m + 1) == matmul(pochhammer(a, m), add_shift(a, m)));
}

TEST_CASE("poch_step: chains") {
  Rand r(13);
  ComplexMatrix a = random_matrix(2, r);
  CHECK(poch_step(ComplexMatrix::identity(2), a, 0) == a);
  CHECK(poch_step(pochhammer(a, 2), a, 2) == pochhammer(a, 3));

  // 1x1 chain from [1] with A = [0.5]: 0.5, 0.5*1.5, ...
  ComplexMatrix p = ComplexMatrix::identity(1);
  Complex expect = 1.0;
  for (int n = 0; n < 8; ++n) {
    p = poch_step(p, scalar(0.5), n);
    expect *= (0.5 + n);
    CHECK(std::abs(p.at(0, 0) - expect) < 1e-14 * (1.0 + std::abs(expect)));
  }
}

TEST_CASE("pochhammer_inv: base case, scalar value, residual identity") {
  ToleranceConfig tol;
  Rand r(14);
  CHECK(pochhammer_inv(random_matrix(2, r), 0, tol) == ComplexMatrix::identity(2));

  CHECK(std::abs(pochhammer_inv(scalar(1.0), 2, tol).at(0, 0) - Complex(0.5)) < 1e-15);

  // right-half-plane spectra keep every factor invertible
  for (int trial = 0; trial < 6; ++trial) {
    ComplexMatrix c = add_shift(random_matrix(3, r), 3);
    for (int n = 0; n <= 6; ++n) {
      ComplexMatrix prod = matmul(pochhammer(c, n), pochhammer_inv(c, n, tol));
      CHECK(frobenius_norm(sub(prod, ComplexMatrix::identity(3))) < 1e-12);
    }
  }
}

TEST_CASE("pochhammer_inv: singular factor reports a violated hypothesis") {
  ToleranceConfig tol;
  // spectrum contains -2, so C + 2I is singular
  ComplexMatrix c = ComplexMatrix::diagonal({{-2.0, 0.0}, {1.5, 0.0}});
  CHECK_THROWS_AS(pochhammer_inv(c, 4, tol), SingularityError);
  CHECK_NOTHROW(pochhammer_inv(c, 2, tol));
}

TEST_CASE("pochhammer products over a commuting family commute") {
  ToleranceConfig tol;
  for (int trial = 0; trial < 4; ++trial) {
    FamilyDraw fam = generate_family(3, 2, SpectrumSpec{}, 900 + trial);
    ComplexMatrix pa = pochhammer(fam.matrices[0], 3);
    ComplexMatrix pb = pochhammer(fam.matrices[1], 4);
    CHECK(commutes(pa, pb, tol));
  }
}

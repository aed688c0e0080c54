#ifndef LAURICELLA_MATRIX_HPP
#define LAURICELLA_MATRIX_HPP

#include <complex>
#include <vector>

#include "lauricella/errors.hpp"

namespace lauricella {

using Complex = std::complex<double>;

// Numerical tolerances shared by the whole library.
struct ToleranceConfig {
  double commute_tol = 1e-10;     // relative Frobenius commutator bound
  double invert_cond_max = 1e10;  // ||A||_F * ||A^-1||_F ceiling
  double residual_tol = 1e-10;    // identity residual bound (0 = exact tests only)
};

// Dense square complex matrix, row-major.  Values are immutable in spirit:
// all operations below are pure functions returning fresh matrices, so
// instances can be shared across threads without synchronization.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {
    if (dim < 1) throw DimensionError("matrix dimension must be positive");
  }

  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  int dim() const { return dim_; }

  Complex& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

  const std::vector<Complex>& entries() const { return e_; }
  std::vector<Complex>& entries() { return e_; }

  bool operator==(const ComplexMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

private:
  int dim_ = 0;
  std::vector<Complex> e_;
};

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const Complex& s, const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// A + n*I, n may be negative.  Integer shifts on the diagonal are exact.
ComplexMatrix add_shift(const ComplexMatrix& a, int n);

double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

// LU inverse with partial pivoting.  A pivot below 1e-13 * max|entry|
// declares singularity; a condition estimate ||A||_F * ||X||_F above
// tol.invert_cond_max is also rejected.
ComplexMatrix inverse(const ComplexMatrix& a, const ToleranceConfig& tol);

// True iff ||AB - BA||_F <= commute_tol * (1 + ||A||_F * ||B||_F).
bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol);

// ||AB - BA||_F, exposed for diagnostics.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace lauricella

#endif

#include "lauricella/pochhammer.hpp"

namespace lauricella {

ComplexMatrix pochhammer(const ComplexMatrix& a, int n) {
  ComplexMatrix p = ComplexMatrix::identity(a.dim());
  for (int j = 0; j < n; ++j) p = poch_step(p, a, j);
  return p;
}

ComplexMatrix pochhammer_inv(const ComplexMatrix& c, int n, const ToleranceConfig& tol) {
  ComplexMatrix q = ComplexMatrix::identity(c.dim());
  for (int j = n - 1; j >= 0; --j) q = matmul(q, inverse(add_shift(c, j), tol));
  return q;
}

ComplexMatrix poch_step(const ComplexMatrix& p, const ComplexMatrix& a, int n) {
  return matmul(p, add_shift(a, n));
}

} // namespace lauricella

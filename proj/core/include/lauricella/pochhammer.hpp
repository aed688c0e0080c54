#ifndef LAURICELLA_POCHHAMMER_HPP
#define LAURICELLA_POCHHAMMER_HPP

#include "lauricella/matrix.hpp"

namespace lauricella {

// (A)_n = A (A+I) ... (A+(n-1)I), with (A)_0 = I.  Factors are multiplied
// ascending left to right, exactly as written, so non-commuting corner
// cases stay deterministic.
ComplexMatrix pochhammer(const ComplexMatrix& a, int n);

// Inverse of (C)_n, built as the descending product of factor inverses
// (C+(n-1)I)^{-1} ... C^{-1}.  Throws SingularityError when some C+jI is
// singular to working precision -- a violated shifted-invertibility
// hypothesis.
ComplexMatrix pochhammer_inv(const ComplexMatrix& c, int n, const ToleranceConfig& tol);

// One incremental step: given P = (A)_n, returns (A)_{n+1} = P * (A + nI).
ComplexMatrix poch_step(const ComplexMatrix& p, const ComplexMatrix& a, int n);

} // namespace lauricella

#endif

#include "lauricella/matrix.hpp"

#include <cmath>

namespace lauricella {

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

namespace {
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}
} // namespace

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "add");
  ComplexMatrix r(a.dim());
  for (size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = a.entries()[i] + b.entries()[i];
  return r;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "sub");
  ComplexMatrix r(a.dim());
  for (size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = a.entries()[i] - b.entries()[i];
  return r;
}

ComplexMatrix scale(const Complex& s, const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = s * a.entries()[i];
  return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  }
  return r;
}

ComplexMatrix add_shift(const ComplexMatrix& a, int n) {
  ComplexMatrix r = a;
  for (int i = 0; i < r.dim(); ++i) r.at(i, i) += static_cast<double>(n);
  return r;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

bool all_finite(const ComplexMatrix& a) {
  for (const Complex& z : a.entries())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix inverse(const ComplexMatrix& a, const ToleranceConfig& tol) {
  const int n = a.dim();
  const double pivot_floor = 1e-13 * max_abs(a);
  if (pivot_floor == 0.0) throw SingularityError("inverse: zero matrix");

  // In-place LU on a working copy augmented with the identity.
  ComplexMatrix lu = a;
  ComplexMatrix x = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(lu.at(r, col));
      if (v > best) { best = v; piv = r; }
    }
    if (best < pivot_floor)
      throw SingularityError("inverse: singular to working precision (pivot " +
                             std::to_string(best) + " at column " + std::to_string(col) + ")");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(lu.at(piv, j), lu.at(col, j));
        std::swap(x.at(piv, j), x.at(col, j));
      }
    }
    const Complex d = lu.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = lu.at(r, col) / d;
      if (f == Complex(0.0, 0.0)) continue;
      lu.at(r, col) = 0.0;
      for (int j = col + 1; j < n; ++j) lu.at(r, j) -= f * lu.at(col, j);
      for (int j = 0; j < n; ++j) x.at(r, j) -= f * x.at(col, j);
    }
  }
  // Back substitution.
  for (int col = n - 1; col >= 0; --col) {
    const Complex d = lu.at(col, col);
    for (int j = 0; j < n; ++j) x.at(col, j) /= d;
    for (int r = 0; r < col; ++r) {
      const Complex f = lu.at(r, col);
      if (f == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) x.at(r, j) -= f * x.at(col, j);
    }
  }

  const double cond = frobenius_norm(a) * frobenius_norm(x);
  if (!(cond <= tol.invert_cond_max))
    throw SingularityError("inverse: condition estimate " + std::to_string(cond) +
                           " exceeds ceiling " + std::to_string(tol.invert_cond_max));
  if (!all_finite(x)) throw SingularityError("inverse: non-finite result");
  return x;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return frobenius_norm(sub(matmul(a, b), matmul(b, a)));
}

bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& tol) {
  require_same_dim(a, b, "commutes");
  return commutator_norm(a, b) <= tol.commute_tol * (1.0 + frobenius_norm(a) * frobenius_norm(b));
}

} // namespace lauricella

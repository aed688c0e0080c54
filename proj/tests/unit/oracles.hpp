// Test-only scalar oracles, independent of the library's evaluation path.
// The coefficient of each kind is transcribed here a second time, straight
// from the defining series, and summed over a box of multi-indices with
// rising factorials built by plain loops.
#ifndef LAURICELLA_TEST_ORACLES_HPP
#define LAURICELLA_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Cx = std::complex<double>;

inline Cx rise(Cx z, int n) {
  Cx r = 1.0;
  for (int j = 0; j < n; ++j) r *= z + static_cast<double>(j);
  return r;
}

struct ScalarParams {
  std::vector<Cx> a, b, c;
};

// Coefficient of x1^m1 x2^m2 x3^m3 / (m1! m2! m3!), by kind name.
inline Cx coeff3(const std::string& kind, int m1, int m2, int m3,
                 const std::vector<std::vector<Cx>>& ra, const std::vector<std::vector<Cx>>& rb,
                 const std::vector<std::vector<Cx>>& rc) {
  const int mt = m1 + m2 + m3;
  if (kind == "GA") // (A)_{m1+m2+m3} (B1)_{m1}(B2)_{m2}(B3)_{m3} / (C1)_{m1}(C2)_{m2}(C3)_{m3}
    return ra[0][mt] * rb[0][m1] * rb[1][m2] * rb[2][m3] / (rc[0][m1] * rc[1][m2] * rc[2][m3]);
  if (kind == "GB")
    return ra[0][m1] * ra[1][m2] * ra[2][m3] * rb[0][m1] * rb[1][m2] * rb[2][m3] / rc[0][mt];
  if (kind == "GC")
    return ra[0][mt] * rb[0][mt] / (rc[0][m1] * rc[1][m2] * rc[2][m3]);
  if (kind == "GD")
    return ra[0][mt] * rb[0][m1] * rb[1][m2] * rb[2][m3] / rc[0][mt];
  if (kind == "F3")
    return ra[0][m1] * ra[1][m2 + m3] * rb[0][m1 + m3] * rb[1][m2] /
           (rc[0][m1] * rc[1][m2] * rc[2][m3]);
  if (kind == "F4")
    return ra[0][mt] * rb[0][m1] * rb[1][m2 + m3] / (rc[0][m1] * rc[1][m2] * rc[2][m3]);
  if (kind == "F6")
    return ra[0][m1] * ra[1][m2] * ra[2][m3] * rb[0][m1 + m3] * rb[1][m2] /
           (rc[0][m1] * rc[1][m2 + m3]);
  if (kind == "F7")
    return ra[0][m1] * ra[1][m2 + m3] * rb[0][m1] * rb[1][m2] * rb[2][m3] / rc[0][mt];
  if (kind == "F8")
    return ra[0][mt] * rb[0][m1] * rb[1][m2] * rb[2][m3] / (rc[0][m1] * rc[1][m2 + m3]);
  if (kind == "F10")
    return ra[0][m1 + m3] * ra[1][m2] * rb[0][m1 + m3] * rb[1][m2] /
           (rc[0][m1] * rc[1][m2 + m3]);
  if (kind == "F11")
    return ra[0][m1] * ra[1][m2 + m3] * rb[0][m1 + m3] * rb[1][m2] /
           (rc[0][m1] * rc[1][m2 + m3]);
  if (kind == "F12")
    return ra[0][m1 + m3] * ra[1][m2] * rb[0][m1 + m2] * rb[1][m3] /
           (rc[0][m1] * rc[1][m2 + m3]);
  if (kind == "F13")
    return ra[0][m1] * ra[1][m2 + m3] * rb[0][m1 + m3] * rb[1][m2] / rc[0][mt];
  if (kind == "F14")
    return ra[0][mt] * rb[0][m1 + m3] * rb[1][m2] / (rc[0][m1] * rc[1][m2 + m3]);
  throw std::runtime_error("oracle: unknown kind " + kind);
}

// Triple sum over total degree m1+m2+m3 <= cap.  Rising factorials are
// tabulated per slot by the plain loop above; powers and factorials go
// through std::pow and std::tgamma so no code is shared with the series
// engine.  (Truncating by total degree also keeps the rising-factorial
// magnitudes inside double range.)
inline Cx eval_box3(const std::string& kind, const ScalarParams& p, const std::vector<Cx>& x,
                    int cap) {
  const int top = cap + 1;
  auto tabulate = [&](const std::vector<Cx>& zs) {
    std::vector<std::vector<Cx>> t;
    for (Cx z : zs) {
      std::vector<Cx> row(static_cast<size_t>(top));
      for (int n = 0; n < top; ++n) row[static_cast<size_t>(n)] = rise(z, n);
      t.push_back(std::move(row));
    }
    return t;
  };
  const auto ra = tabulate(p.a), rb = tabulate(p.b), rc = tabulate(p.c);

  Cx sum = 0.0;
  for (int m1 = 0; m1 <= cap; ++m1)
    for (int m2 = 0; m2 <= cap - m1; ++m2)
      for (int m3 = 0; m3 <= cap - m1 - m2; ++m3) {
        const Cx xs = std::pow(x[0], m1) * std::pow(x[1], m2) * std::pow(x[2], m3) /
                      (std::tgamma(m1 + 1.0) * std::tgamma(m2 + 1.0) * std::tgamma(m3 + 1.0));
        sum += coeff3(kind, m1, m2, m3, ra, rb, rc) * xs;
      }
  return sum;
}

// One-variable Gauss-type reduction of GA (k = 1): sum (a)_m (b)_m / (c)_m x^m / m!.
inline Cx eval_gauss(Cx a, Cx b, Cx c, Cx x, int cap) {
  Cx sum = 0.0;
  for (int m = 0; m <= cap; ++m)
    sum += rise(a, m) * rise(b, m) / rise(c, m) * std::pow(x, m) / std::tgamma(m + 1.0);
  return sum;
}

// Two-variable GD reduction: sum (a)_{m1+m2}(b1)_{m1}(b2)_{m2}/(c)_{m1+m2} x^m / m!.
inline Cx eval_gd2(Cx a, Cx b1, Cx b2, Cx c, Cx x1, Cx x2, int cap) {
  Cx sum = 0.0;
  for (int m1 = 0; m1 <= cap; ++m1)
    for (int m2 = 0; m2 <= cap; ++m2)
      sum += rise(a, m1 + m2) * rise(b1, m1) * rise(b2, m2) / rise(c, m1 + m2) *
             std::pow(x1, m1) * std::pow(x2, m2) /
             (std::tgamma(m1 + 1.0) * std::tgamma(m2 + 1.0));
  return sum;
}

} // namespace oracle

#endif

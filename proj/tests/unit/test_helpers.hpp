#ifndef LAURICELLA_TEST_HELPERS_HPP
#define LAURICELLA_TEST_HELPERS_HPP

#include <cstdint>

#include "lauricella/harness.hpp"

namespace testutil {

using namespace lauricella;

// Small deterministic generator for test inputs.
struct Rand {
  uint64_t s;
  explicit Rand(uint64_t seed) : s(seed) {}
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }
  Complex cx(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
};

inline ComplexMatrix random_matrix(int dim, Rand& r, double lo = -1.0, double hi = 1.0) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = r.cx(lo, hi);
  return m;
}

inline ComplexMatrix scalar(Complex z) {
  ComplexMatrix m(1);
  m.at(0, 0) = z;
  return m;
}

// Parameters for one kind drawn from a shared commuting family.
inline ParameterSet commuting_params(const LauricellaKind& kind, int dim, uint64_t seed) {
  const KindSignature& sig = signature(kind);
  FamilyDraw fam = generate_family(dim, sig.n_a + sig.n_b + sig.n_c, SpectrumSpec{}, seed);
  ParameterSet p;
  size_t at = 0;
  for (int i = 0; i < sig.n_a; ++i) p.a.push_back(fam.matrices[at++]);
  for (int i = 0; i < sig.n_b; ++i) p.b.push_back(fam.matrices[at++]);
  for (int i = 0; i < sig.n_c; ++i) p.c.push_back(fam.matrices[at++]);
  return p;
}

inline ParameterSet scalar_params(const LauricellaKind& kind, Rand& r) {
  const KindSignature& sig = signature(kind);
  ParameterSet p;
  for (int i = 0; i < sig.n_a; ++i) p.a.push_back(scalar({r.uniform(0.6, 2.4), r.uniform(-0.4, 0.4)}));
  for (int i = 0; i < sig.n_b; ++i) p.b.push_back(scalar({r.uniform(0.6, 2.4), r.uniform(-0.4, 0.4)}));
  for (int i = 0; i < sig.n_c; ++i) p.c.push_back(scalar({r.uniform(0.7, 2.3), r.uniform(0.2, 0.45)}));
  return p;
}

} // namespace testutil

#endif

#include "lauricella/series.hpp"

#include <cmath>
#include <functional>

#include "lauricella/pochhammer.hpp"

namespace lauricella {

namespace {

bool sum_type_guard(KindTag t) { return t == KindTag::GA || t == KindTag::GC; }

// Rising tables for one parameter slot: plain holds (P)_0..(P)_D, inv
// holds the factor-inverse chain for C-group slots.  Extended lazily as
// shells advance so an early stop does no extra work.
struct PochTable {
  const ComplexMatrix* base = nullptr;
  bool inverted = false;
  std::string label;
  std::vector<ComplexMatrix> pow;
  ToleranceConfig tol;

  void extend(int degree) {
    if (pow.empty()) pow.push_back(ComplexMatrix::identity(base->dim()));
    while (static_cast<int>(pow.size()) <= degree) {
      const int j = static_cast<int>(pow.size()) - 1;
      if (inverted) {
        ComplexMatrix f;
        try {
          f = inverse(add_shift(*base, j), tol);
        } catch (const SingularityError& e) {
          throw SingularityError("parameter " + label + " + " + std::to_string(j) +
                                 "I is singular: " + e.what());
        }
        pow.push_back(matmul(f, pow.back()));
      } else {
        pow.push_back(poch_step(pow.back(), *base, j));
      }
    }
  }
};

// Walk all m >= 0 with m_1 + ... + m_k = degree, in lexicographic order.
void for_each_composition(int degree, int k, std::vector<int>& m, int pos,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == k - 1) {
    m[static_cast<size_t>(pos)] = degree;
    fn(m);
    return;
  }
  for (int v = 0; v <= degree; ++v) {
    m[static_cast<size_t>(pos)] = v;
    for_each_composition(degree - v, k, m, pos + 1, fn);
  }
}

int factor_degree(const FactorSpec& f, const std::vector<int>& m) {
  int d = 0;
  for (size_t i = 0; i < f.weights.size(); ++i) d += f.weights[i] * m[i];
  return d;
}

struct Workspace {
  const KindSignature* sig;
  ParameterSet shifted;
  std::vector<PochTable> num_tables;
  std::vector<PochTable> den_tables;
  std::vector<std::vector<Complex>> xpow; // xpow[i][m] = x_i^m / m!

  Workspace(const LauricellaKind& kind, const ParameterSet& params,
            const std::vector<ParamShift>& shifts, const Point& x, const ToleranceConfig& tol)
      : sig(&signature(kind)), shifted(apply_shifts(params, shifts)) {
    validate_parameters(kind, shifted);
    for (const FactorSpec& f : sig->numerator) {
      PochTable t;
      t.base = &shifted.get(f.param);
      t.inverted = false;
      t.label = format_param(kind, f.param);
      t.tol = tol;
      num_tables.push_back(std::move(t));
    }
    for (const FactorSpec& f : sig->denominator) {
      PochTable t;
      t.base = &shifted.get(f.param);
      t.inverted = true;
      t.label = format_param(kind, f.param);
      t.tol = tol;
      den_tables.push_back(std::move(t));
    }
    xpow.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) xpow[i].push_back(1.0);
  }

  void extend(const Point& x, int degree) {
    for (auto& t : num_tables) t.extend(degree);
    for (auto& t : den_tables) t.extend(degree);
    for (size_t i = 0; i < x.size(); ++i)
      while (static_cast<int>(xpow[i].size()) <= degree) {
        const double m = static_cast<double>(xpow[i].size());
        xpow[i].push_back(xpow[i].back() * x[i] / m);
      }
  }

  ComplexMatrix term(const std::vector<int>& m) {
    ComplexMatrix prod = ComplexMatrix::identity(shifted.dim());
    bool first = true;
    for (size_t f = 0; f < sig->numerator.size(); ++f) {
      const ComplexMatrix& p = num_tables[f].pow[static_cast<size_t>(
          factor_degree(sig->numerator[f], m))];
      prod = first ? p : matmul(prod, p);
      first = false;
    }
    for (size_t f = 0; f < sig->denominator.size(); ++f) {
      const ComplexMatrix& p = den_tables[f].pow[static_cast<size_t>(
          factor_degree(sig->denominator[f], m))];
      prod = first ? p : matmul(prod, p);
      first = false;
    }
    Complex s = 1.0;
    for (size_t i = 0; i < m.size(); ++i) s *= xpow[i][static_cast<size_t>(m[i])];
    return scale(s, prod);
  }
};

} // namespace

ParameterSet apply_shifts(const ParameterSet& params, const std::vector<ParamShift>& shifts) {
  ParameterSet out = params;
  for (const ParamShift& s : shifts) out.get(s.param) = add_shift(out.get(s.param), s.offset);
  return out;
}

void check_domain_guard(const LauricellaKind& kind, const Point& x, const SeriesConfig& cfg) {
  const double bound = 0.5 * cfg.domain_guard;
  if (sum_type_guard(kind.tag)) {
    double s = 0.0;
    for (const Complex& z : x) s += std::abs(z);
    if (!(s <= bound))
      throw GuardError(kind_name(kind) + ": point outside guard region (sum |x_i| = " +
                       std::to_string(s) + " > " + std::to_string(bound) + ")");
  } else {
    double mx = 0.0;
    for (const Complex& z : x) mx = std::max(mx, std::abs(z));
    if (!(mx <= bound))
      throw GuardError(kind_name(kind) + ": point outside guard region (max |x_i| = " +
                       std::to_string(mx) + " > " + std::to_string(bound) + ")");
  }
}

ComplexMatrix coefficient(const LauricellaKind& kind, const ParameterSet& params,
                          const std::vector<int>& m, const ToleranceConfig& tol) {
  if (static_cast<int>(m.size()) != kind.arity)
    throw DimensionError("multi-index length does not match kind arity");
  Workspace ws(kind, params, {}, Point(m.size(), 0.0), tol);
  int degree = 0;
  for (int mi : m) {
    if (mi < 0) throw InputError("multi-index entries must be nonnegative");
    degree += mi;
  }
  ws.extend(Point(m.size(), 0.0), degree);
  ComplexMatrix prod = ComplexMatrix::identity(params.dim());
  const KindSignature& sig = signature(kind);
  for (size_t f = 0; f < sig.numerator.size(); ++f)
    prod = matmul(prod, ws.num_tables[f].pow[static_cast<size_t>(factor_degree(sig.numerator[f], m))]);
  for (size_t f = 0; f < sig.denominator.size(); ++f)
    prod = matmul(prod, ws.den_tables[f].pow[static_cast<size_t>(factor_degree(sig.denominator[f], m))]);
  return prod;
}

SeriesResult evaluate_shifted(const LauricellaKind& kind, const ParameterSet& params,
                              const std::vector<ParamShift>& shifts, const Point& x,
                              const SeriesConfig& cfg, const ToleranceConfig& tol) {
  if (static_cast<int>(x.size()) != kind.arity)
    throw DimensionError("point length " + std::to_string(x.size()) +
                         " does not match kind arity " + std::to_string(kind.arity));
  check_domain_guard(kind, x, cfg);

  Workspace ws(kind, params, shifts, x, tol);
  const int k = kind.arity;
  SeriesResult res;
  res.value = ComplexMatrix::zero(params.dim());

  std::vector<int> m(static_cast<size_t>(k), 0);
  for (int degree = 0; degree <= cfg.max_degree; ++degree) {
    ws.extend(x, degree);
    ComplexMatrix shell = ComplexMatrix::zero(params.dim());
    for_each_composition(degree, k, m, 0,
                         [&](const std::vector<int>& idx) { shell = add(shell, ws.term(idx)); });
    res.value = add(res.value, shell);
    const double nrm = frobenius_norm(shell);
    if (!std::isfinite(nrm) || !all_finite(res.value))
      throw GuardError(kind_name(kind) + ": series overflow at total degree " +
                       std::to_string(degree) + "; point too close to divergence");
    res.last_shell_norm = nrm;
    if (nrm <= cfg.term_tol) {
      res.converged = true;
      break;
    }
    res.shells_used = degree + 1;
  }
  return res;
}

SeriesResult evaluate(const LauricellaKind& kind, const ParameterSet& params, const Point& x,
                      const SeriesConfig& cfg, const ToleranceConfig& tol) {
  return evaluate_shifted(kind, params, {}, x, cfg, tol);
}

} // namespace lauricella

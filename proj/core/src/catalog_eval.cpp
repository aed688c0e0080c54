#include "lauricella/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lauricella/pochhammer.hpp"

namespace lauricella {

namespace {

Complex ipow(const Complex& z, int e) {
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  return r;
}

// n! / (v_1! ... v_j! (n - sum v)!), exact for the magnitudes in use.
double term_weight(const RhsTerm& term, int n, const std::vector<int>& vars) {
  switch (term.sum) {
    case SumStyle::None:
    case SumStyle::UnitRaise:
    case SumStyle::UnitLower:
      return 1.0;
    case SumStyle::Binomial:
      return static_cast<double>(binomial_u64(n, vars[0]));
    case SumStyle::Simplex: {
      uint64_t w = 1;
      int rest = n;
      for (int v : vars) {
        w *= binomial_u64(rest, v);
        rest -= v;
      }
      return static_cast<double>(w);
    }
  }
  return 1.0;
}

void for_each_assignment(const RhsTerm& term, int n,
                         const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> vars(static_cast<size_t>(std::max(term.sum_vars, 0)), 0);
  switch (term.sum) {
    case SumStyle::None:
      fn(vars);
      break;
    case SumStyle::UnitRaise:
      for (int v = 1; v <= n; ++v) { vars[0] = v; fn(vars); }
      break;
    case SumStyle::UnitLower:
      for (int v = 0; v <= n - 1; ++v) { vars[0] = v; fn(vars); }
      break;
    case SumStyle::Binomial:
      for (int v = 0; v <= n; ++v) { vars[0] = v; fn(vars); }
      break;
    case SumStyle::Simplex: {
      // n_1 + ... + n_j <= n
      std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == term.sum_vars) { fn(vars); return; }
        for (int v = 0; v <= remaining; ++v) {
          vars[static_cast<size_t>(pos)] = v;
          rec(pos + 1, remaining - v);
        }
      };
      rec(0, n);
      break;
    }
  }
}

ComplexMatrix eval_factor(const Factor& f, const LauricellaKind& kind, const ParameterSet& params,
                          const std::vector<int>& vars, const ToleranceConfig& tol) {
  const ComplexMatrix& p = params.get(f.param);
  const int arg = f.arg.eval(vars);
  switch (f.kind) {
    case FactorKind::Plain:
      return arg == 0 ? p : add_shift(p, arg);
    case FactorKind::Poch:
      if (arg < 0) throw InputError("negative Pochhammer degree in catalog term");
      return pochhammer(p, arg);
    case FactorKind::PochInv:
      if (arg < 0) throw InputError("negative Pochhammer degree in catalog term");
      try {
        return pochhammer_inv(p, arg, tol);
      } catch (const SingularityError& e) {
        throw SingularityError("inverse Pochhammer of " + format_param(kind, f.param) +
                               " failed: " + e.what());
      }
    case FactorKind::Inv:
      try {
        return inverse(add_shift(p, arg), tol);
      } catch (const SingularityError& e) {
        throw SingularityError(format_param(kind, f.param) +
                               (arg >= 0 ? " + " : " - ") + std::to_string(std::abs(arg)) +
                               "I is singular: " + e.what());
      }
  }
  throw InputError("unreachable factor kind");
}

SideResult eval_rhs_terms(const IdentityEntry& entry, const std::vector<RhsTerm>& terms,
                          const ParameterSet& params, const Point& x, int n,
                          const SeriesConfig& cfg, const ToleranceConfig& tol) {
  SideResult out;
  out.value = ComplexMatrix::zero(params.dim());
  for (const RhsTerm& term : terms) {
    for_each_assignment(term, n, [&](const std::vector<int>& vars) {
      Complex scalar = static_cast<double>(term.sign) * term_weight(term, n, vars);
      for (const XPower& xp : term.x_powers) {
        const Complex base = term.negate_x ? -x[static_cast<size_t>(xp.axis)]
                                           : x[static_cast<size_t>(xp.axis)];
        scalar *= ipow(base, xp.exponent.eval(vars));
      }
      if (scalar == Complex(0.0, 0.0)) return;

      std::vector<ParamShift> shifts;
      shifts.reserve(term.shifts.size());
      for (const auto& [param, expr] : term.shifts) {
        const int off = expr.eval(vars);
        if (off != 0) shifts.push_back({param, off});
      }
      SeriesResult sr = evaluate_shifted(entry.kind, params, shifts, x, cfg, tol);
      if (!sr.converged) out.converged = false;

      ComplexMatrix acc = sr.value;
      for (auto it = term.left.rbegin(); it != term.left.rend(); ++it)
        acc = matmul(eval_factor(*it, entry.kind, params, vars, tol), acc);
      for (const Factor& f : term.right)
        acc = matmul(acc, eval_factor(f, entry.kind, params, vars, tol));
      out.value = add(out.value, scale(scalar, acc));
    });
  }
  return out;
}

bool is_invertible(const ComplexMatrix& m, const ToleranceConfig& tol) {
  try {
    inverse(m, tol);
    return true;
  } catch (const SingularityError&) {
    return false;
  }
}

} // namespace

void check_hypotheses(const IdentityEntry& entry, const ParameterSet& params, int n,
                      const ToleranceConfig& tol) {
  validate_parameters(entry.kind, params);
  for (const CommutePair& pair : entry.hypotheses) {
    const ComplexMatrix& p = params.get(pair.first);
    const ComplexMatrix& q = params.get(pair.second);
    if (!commutes(p, q, tol)) {
      const std::string pn = format_param(entry.kind, pair.first);
      const std::string qn = format_param(entry.kind, pair.second);
      throw HypothesisError("hypothesis violated: " + pn + " " + qn + " != " + qn + " " + pn +
                            " (commutator norm " + std::to_string(commutator_norm(p, q)) + ")");
    }
  }
  const ComplexMatrix& t = params.get(entry.lhs.target);
  const std::string tn = format_param(entry.kind, entry.lhs.target);
  if (entry.lhs.direction > 0) {
    for (int j = 0; j <= n; ++j)
      if (!is_invertible(add_shift(t, j), tol))
        throw HypothesisError("hypothesis violated: " + tn + " + " + std::to_string(j) +
                              "I is not invertible");
  } else {
    const int from = entry.lhs.target.group == ParamGroup::C ? 1 : 0;
    for (int j = from; j <= n; ++j)
      if (!is_invertible(add_shift(t, -j), tol))
        throw HypothesisError("hypothesis violated: " + tn + " - " + std::to_string(j) +
                              "I is not invertible");
  }
}

SideResult eval_lhs(const IdentityEntry& entry, const ParameterSet& params, const Point& x,
                    int n, const SeriesConfig& cfg, const ToleranceConfig& tol) {
  if (entry.fixed_n && n != *entry.fixed_n)
    throw InputError("entry " + entry.id + " is a single-step relation; use n = " +
                     std::to_string(*entry.fixed_n));
  check_hypotheses(entry, params, n, tol);
  SeriesResult sr = evaluate_shifted(entry.kind, params,
                                     {{entry.lhs.target, entry.lhs.direction * n}}, x, cfg, tol);
  return {sr.value, sr.converged};
}

SideResult eval_rhs(const IdentityEntry& entry, const ParameterSet& params, const Point& x,
                    int n, const SeriesConfig& cfg, const ToleranceConfig& tol,
                    bool use_printed) {
  if (entry.fixed_n && n != *entry.fixed_n)
    throw InputError("entry " + entry.id + " is a single-step relation; use n = " +
                     std::to_string(*entry.fixed_n));
  check_hypotheses(entry, params, n, tol);
  const std::vector<RhsTerm>& terms =
      use_printed && entry.printed_rhs ? *entry.printed_rhs : entry.rhs;
  return eval_rhs_terms(entry, terms, params, x, n, cfg, tol);
}

double residual(const IdentityEntry& entry, const ParameterSet& params, const Point& x, int n,
                const SeriesConfig& cfg, const ToleranceConfig& tol) {
  const SideResult l = eval_lhs(entry, params, x, n, cfg, tol);
  const SideResult r = eval_rhs(entry, params, x, n, cfg, tol);
  return frobenius_norm(sub(l.value, r.value)) / (1.0 + frobenius_norm(l.value));
}

IdentityCheck check_identity(const IdentityEntry& entry, const ParameterSet& params,
                             const Point& x, int n, const SeriesConfig& cfg,
                             const ToleranceConfig& tol, bool with_printed) {
  IdentityCheck out;
  const SideResult l = eval_lhs(entry, params, x, n, cfg, tol);
  const SideResult r = eval_rhs(entry, params, x, n, cfg, tol);
  out.residual = frobenius_norm(sub(l.value, r.value)) / (1.0 + frobenius_norm(l.value));
  out.conclusive = l.converged && r.converged;
  if (with_printed && entry.typo_candidate()) {
    try {
      const SideResult p = eval_rhs(entry, params, x, n, cfg, tol, /*use_printed=*/true);
      out.printed_residual =
          frobenius_norm(sub(l.value, p.value)) / (1.0 + frobenius_norm(l.value));
    } catch (const Error& e) {
      out.printed_error = e.what();
    }
  }
  return out;
}

const IdentityEntry* find_entry(const std::string& id) {
  for (const IdentityEntry& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

ParamId swap_param(const ParamId& p, const std::vector<std::pair<ParamId, ParamId>>& swaps) {
  for (const auto& [u, v] : swaps) {
    if (p == u) return v;
    if (p == v) return u;
  }
  return p;
}

bool signature_automorphism(const LauricellaKind& kind,
                            const std::vector<std::pair<ParamId, ParamId>>& swaps) {
  const KindSignature& sig = signature(kind);
  auto relabel_sorted = [&](const std::vector<FactorSpec>& fs, bool apply) {
    std::vector<std::pair<ParamId, std::vector<int>>> v;
    for (const FactorSpec& f : fs)
      v.emplace_back(apply ? swap_param(f.param, swaps) : f.param, f.weights);
    std::sort(v.begin(), v.end());
    return v;
  };
  // Swapping across the A/B groups is fine as long as the multiset of
  // (slot, degree pattern) pairs is preserved within numerator and within
  // denominator; then the series value is unchanged for commuting inputs.
  auto strip_group = [](std::vector<std::pair<ParamId, std::vector<int>>> v) {
    std::vector<std::vector<int>> w;
    for (auto& p : v) w.push_back(std::move(p.second));
    std::sort(w.begin(), w.end());
    return w;
  };
  for (const auto& [u, v] : swaps) {
    // Each swapped pair must carry identical degree patterns everywhere.
    std::vector<std::vector<int>> du, dv;
    for (const auto& fs : {sig.numerator, sig.denominator})
      for (const FactorSpec& f : fs) {
        if (f.param == u) du.push_back(f.weights);
        if (f.param == v) dv.push_back(f.weights);
      }
    std::sort(du.begin(), du.end());
    std::sort(dv.begin(), dv.end());
    if (du != dv) return false;
  }
  return strip_group(relabel_sorted(sig.numerator, true)) ==
             strip_group(relabel_sorted(sig.numerator, false)) &&
         strip_group(relabel_sorted(sig.denominator, true)) ==
             strip_group(relabel_sorted(sig.denominator, false));
}

} // namespace

IdentityEntry interchange(const IdentityEntry& entry,
                          const std::vector<std::pair<ParamId, ParamId>>& swaps,
                          const std::string& new_id) {
  if (!signature_automorphism(entry.kind, swaps))
    throw InputError("interchange: swap is not a signature automorphism of " +
                     kind_name(entry.kind));
  IdentityEntry out = entry;
  out.id = new_id;
  out.derived_from = entry.id;
  out.lhs.target = swap_param(out.lhs.target, swaps);
  auto relabel_terms = [&](std::vector<RhsTerm>& terms) {
    for (RhsTerm& t : terms) {
      for (Factor& f : t.left) f.param = swap_param(f.param, swaps);
      for (Factor& f : t.right) f.param = swap_param(f.param, swaps);
      for (auto& s : t.shifts) s.first = swap_param(s.first, swaps);
    }
  };
  relabel_terms(out.rhs);
  if (out.printed_rhs) relabel_terms(*out.printed_rhs);
  for (CommutePair& p : out.hypotheses) {
    p.first = swap_param(p.first, swaps);
    p.second = swap_param(p.second, swaps);
  }
  return out;
}

} // namespace lauricella

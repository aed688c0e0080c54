// Internal helpers for transcribing catalog entries.  Each theorem becomes
// a handful of builder calls; the short names below keep one entry readable
// next to its source equation.
#ifndef LAURICELLA_CATALOG_BUILDER_HPP
#define LAURICELLA_CATALOG_BUILDER_HPP

#include <utility>

#include "lauricella/catalog.hpp"

namespace lauricella::builder {

// Parameter handles, 1-based like the source equations.
inline ParamId A(int i = 1) { return {ParamGroup::A, i - 1}; }
inline ParamId B(int i = 1) { return {ParamGroup::B, i - 1}; }
inline ParamId C(int i = 1) { return {ParamGroup::C, i - 1}; }

inline LinExpr K(int v) { return LinExpr{v, {0, 0, 0}}; }
inline const LinExpr N1{0, {1, 0, 0}};
inline const LinExpr N2{0, {0, 1, 0}};
inline const LinExpr N3{0, {0, 0, 1}};

inline LinExpr operator+(LinExpr a, const LinExpr& b) {
  a.constant += b.constant;
  for (size_t i = 0; i < a.coeff.size(); ++i) a.coeff[i] += b.coeff[i];
  return a;
}
inline LinExpr operator+(LinExpr a, int v) { a.constant += v; return a; }
inline LinExpr operator-(LinExpr a) {
  a.constant = -a.constant;
  for (auto& c : a.coeff) c = -c;
  return a;
}
inline LinExpr operator-(const LinExpr& a, const LinExpr& b) { return a + (-b); }
inline LinExpr operator-(LinExpr a, int v) { a.constant -= v; return a; }

using Shift = std::pair<ParamId, LinExpr>;
using Shifts = std::vector<Shift>;
using Factors = std::vector<Factor>;

inline Shift Sh(ParamId p, LinExpr e) { return {p, std::move(e)}; }
inline Shift Sh(ParamId p, int v) { return {p, LinExpr{v, {0, 0, 0}}}; }

inline Factor plain(ParamId p) { return {FactorKind::Plain, p, {}}; }
inline Factor poch(ParamId p, LinExpr d) { return {FactorKind::Poch, p, std::move(d)}; }
inline Factor pinv(ParamId p, LinExpr d) { return {FactorKind::PochInv, p, std::move(d)}; }
inline Factor inv(ParamId p) { return {FactorKind::Inv, p, {}}; }
inline Factor inv_off(ParamId p, LinExpr off) { return {FactorKind::Inv, p, std::move(off)}; }

// (C - n_1 I)^{-1} (C - (n_1 - 1) I)^{-1}, the trailing pair of every
// C-lowering term.
inline Factors step_down_invs(ParamId c) { return {inv_off(c, -N1), inv_off(c, K(1) - N1)}; }

inline RhsTerm bare() { return RhsTerm{}; }

inline RhsTerm unit_raise(int axis, Factors left, Shifts shifts, Factors right) {
  RhsTerm t;
  t.sum = SumStyle::UnitRaise;
  t.sum_vars = 1;
  t.x_powers = {{axis - 1, K(1)}};
  t.left = std::move(left);
  t.shifts = std::move(shifts);
  t.right = std::move(right);
  return t;
}

inline RhsTerm unit_lower(int axis, Factors left, Shifts shifts, Factors right) {
  RhsTerm t = unit_raise(axis, std::move(left), std::move(shifts), std::move(right));
  t.sign = -1;
  t.sum = SumStyle::UnitLower;
  return t;
}

inline RhsTerm binom(int axis, bool negate, Factors left, Shifts shifts, Factors right) {
  RhsTerm t;
  t.sum = SumStyle::Binomial;
  t.sum_vars = 1;
  t.negate_x = negate;
  t.x_powers = {{axis - 1, N1}};
  t.left = std::move(left);
  t.shifts = std::move(shifts);
  t.right = std::move(right);
  return t;
}

// axes_exponents: (1-based axis, exponent) pairs, e.g. {{2, N1}, {3, N2}}.
inline RhsTerm simplex(int nvars, std::vector<std::pair<int, LinExpr>> axes_exponents,
                       bool negate, Factors left, Shifts shifts, Factors right) {
  RhsTerm t;
  t.sum = SumStyle::Simplex;
  t.sum_vars = nvars;
  t.negate_x = negate;
  for (auto& [axis, e] : axes_exponents) t.x_powers.push_back({axis - 1, std::move(e)});
  t.left = std::move(left);
  t.shifts = std::move(shifts);
  t.right = std::move(right);
  return t;
}

// x_axis * left * sum_{n_1=1}^{n} F[..., c+(2-n_1)I] * mid * step-down inverses
inline RhsTerm c_lower(int axis, Factors left, Shifts shifts, ParamId c, Factors mid = {}) {
  Factors right = std::move(mid);
  for (Factor& f : step_down_invs(c)) right.push_back(std::move(f));
  RhsTerm t = unit_raise(axis, std::move(left), std::move(shifts), std::move(right));
  return t;
}

inline CommutePair comm(ParamId p, ParamId q) { return {p, q}; }

inline std::vector<CommutePair> operator+(std::vector<CommutePair> a,
                                          const std::vector<CommutePair>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<CommutePair> pairs_within(const std::vector<ParamId>& ps) {
  std::vector<CommutePair> out;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j) out.push_back({ps[i], ps[j]});
  return out;
}

inline std::vector<CommutePair> each_with(const std::vector<ParamId>& ps, ParamId q) {
  std::vector<CommutePair> out;
  for (const ParamId& p : ps) out.push_back({p, q});
  return out;
}

inline ShiftSpec raise(ParamId p) { return {p, +1}; }
inline ShiftSpec lower(ParamId p) { return {p, -1}; }

struct EntryBuilder {
  std::vector<IdentityEntry>* out;

  IdentityEntry& add(std::string id, LauricellaKind kind, std::string equation, ShiftSpec lhs,
                     std::vector<RhsTerm> rhs, std::vector<CommutePair> hyps) {
    IdentityEntry e;
    e.id = std::move(id);
    e.kind = kind;
    e.equation = std::move(equation);
    e.lhs = lhs;
    e.rhs = std::move(rhs);
    e.hypotheses = std::move(hyps);
    out->push_back(std::move(e));
    return out->back();
  }
};

void append_generalized(std::vector<IdentityEntry>& cat);
void append_three_variable(std::vector<IdentityEntry>& cat);

} // namespace lauricella::builder

#endif

#include "catalog_builder.hpp"

#include <set>

namespace lauricella {

namespace {

// Construction-time checks: every referenced slot must exist in the kind's
// signature and no expression may use a summation index the term lacks.
void verify_entry(const IdentityEntry& e) {
  const KindSignature& sig = signature(e.kind);
  auto check_param = [&](const ParamId& p) {
    if (p.index < 0 || p.index >= group_size(sig, p.group))
      throw InputError("catalog entry " + e.id + ": parameter reference out of range");
  };
  auto check_expr = [&](const LinExpr& ex, int nvars) {
    for (size_t i = static_cast<size_t>(nvars); i < ex.coeff.size(); ++i)
      if (ex.coeff[i] != 0)
        throw InputError("catalog entry " + e.id + ": expression uses absent summation index");
  };
  check_param(e.lhs.target);
  auto check_terms = [&](const std::vector<RhsTerm>& terms) {
    for (const RhsTerm& t : terms) {
      for (const Factor& f : t.left) { check_param(f.param); check_expr(f.arg, t.sum_vars); }
      for (const Factor& f : t.right) { check_param(f.param); check_expr(f.arg, t.sum_vars); }
      for (const auto& [p, ex] : t.shifts) { check_param(p); check_expr(ex, t.sum_vars); }
      for (const XPower& xp : t.x_powers) {
        if (xp.axis < 0 || xp.axis >= e.kind.arity)
          throw InputError("catalog entry " + e.id + ": x power axis out of range");
        check_expr(xp.exponent, t.sum_vars);
      }
    }
  };
  check_terms(e.rhs);
  if (e.printed_rhs) check_terms(*e.printed_rhs);
  for (const CommutePair& p : e.hypotheses) {
    check_param(p.first);
    check_param(p.second);
  }
}

} // namespace

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = [] {
    std::vector<IdentityEntry> c;
    builder::append_generalized(c);
    builder::append_three_variable(c);
    std::set<std::string> ids;
    for (const IdentityEntry& e : c) {
      verify_entry(e);
      if (!ids.insert(e.id).second) throw InputError("duplicate catalog id: " + e.id);
    }
    return c;
  }();
  return entries;
}

} // namespace lauricella

#ifndef LAURICELLA_CATALOG_HPP
#define LAURICELLA_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lauricella/series.hpp"

namespace lauricella {

// ---------------------------------------------------------------------------
// Identity catalog: every recursion/contiguous relation is stored as a
// declarative record and run through one interpreter.  A record fixes the
// left-hand shift and a list of right-hand terms whose factors, series
// shifts and scalar weights are linear expressions in the summation
// indices n_1..n_j and the outer magnitude n.
// ---------------------------------------------------------------------------

// constant + sum_i coeff[i] * n_i  (n_i are the term's summation indices).
struct LinExpr {
  int constant = 0;
  std::array<int, 3> coeff{0, 0, 0};

  int eval(const std::vector<int>& vars) const {
    int v = constant;
    for (size_t i = 0; i < vars.size() && i < coeff.size(); ++i)
      v += coeff[i] * vars[i];
    return v;
  }

  bool operator==(const LinExpr&) const = default;
};

// How a term's summation indices range given the outer magnitude n.
//   None      -- no sum; the bare function term.
//   UnitRaise -- one index, n_1 = 1..n, weight 1.
//   UnitLower -- one index, n_1 = 0..n-1, weight 1.
//   Binomial  -- one index, n_1 = 0..n, weight C(n, n_1).
//   Simplex   -- j indices, n_1+...+n_j <= n, weight n!/(n_1!..n_j!(n-N_j)!).
enum class SumStyle { None, UnitRaise, UnitLower, Binomial, Simplex };

enum class FactorKind {
  Plain,   // the parameter matrix itself, P + arg*I
  Poch,    // (P)_{arg}
  PochInv, // inverse of (P)_{arg}
  Inv      // (P + arg*I)^{-1}
};

struct Factor {
  FactorKind kind = FactorKind::Plain;
  ParamId param;
  LinExpr arg;

  bool operator==(const Factor&) const = default;
};

// axis (0-based variable index) and exponent of one x power.
struct XPower {
  int axis = 0;
  LinExpr exponent;

  bool operator==(const XPower&) const = default;
};

// One summand of a right-hand side:
//   sign * weight * prod (s*x_i)^{e_i} * [left factors] * F[shifts] * [right factors]
// with s = -1 when negate_x is set.  Factor lists keep the printed order.
struct RhsTerm {
  int sign = +1;
  SumStyle sum = SumStyle::None;
  int sum_vars = 0;
  bool negate_x = false;
  std::vector<XPower> x_powers;
  std::vector<Factor> left;
  std::vector<std::pair<ParamId, LinExpr>> shifts; // series call displacements
  std::vector<Factor> right;

  bool operator==(const RhsTerm&) const = default;
};

struct ShiftSpec {
  ParamId target;
  int direction = +1; // +1 raise, -1 lower; magnitude n supplied at evaluation

  bool operator==(const ShiftSpec&) const = default;
};

struct CommutePair {
  ParamId first, second;

  bool operator==(const CommutePair&) const = default;
};

struct IdentityEntry {
  std::string id;        // e.g. "FA.A.raise.unit"
  LauricellaKind kind;
  std::string equation;  // source equation label, e.g. "c4eq1"
  ShiftSpec lhs;
  std::vector<RhsTerm> rhs;
  std::vector<CommutePair> hypotheses;

  // Contiguous seeds are single-step relations; they validate at n = 1 only.
  std::optional<int> fixed_n;

  // When the printed equation fails numerical validation, `rhs` holds the
  // corrected variant and `printed_rhs` the equation exactly as printed.
  // The note names the discrepancy.
  std::optional<std::vector<RhsTerm>> printed_rhs;
  std::string note;

  // Set when the entry was materialized from an interchange remark.
  std::string derived_from;

  bool typo_candidate() const { return printed_rhs.has_value(); }
};

// The full identity catalog, built once.  Entries are immutable; validate
// them in parallel freely.
const std::vector<IdentityEntry>& catalog();
const IdentityEntry* find_entry(const std::string& id);

// Relabels every parameter reference through the given swaps.  The swap
// must be a signature automorphism of the entry's kind (the series is
// symmetric under it); otherwise InputError.
IdentityEntry interchange(const IdentityEntry& entry,
                          const std::vector<std::pair<ParamId, ParamId>>& swaps,
                          const std::string& new_id);

// Verifies the entry's commutativity pairs and the shifted-invertibility
// requirements implied by its ShiftSpec at magnitude n.  Throws
// HypothesisError naming the failed pair / matrix.
void check_hypotheses(const IdentityEntry& entry, const ParameterSet& params, int n,
                      const ToleranceConfig& tol);

struct SideResult {
  ComplexMatrix value;
  bool converged = true; // every series call converged
};

SideResult eval_lhs(const IdentityEntry& entry, const ParameterSet& params, const Point& x,
                    int n, const SeriesConfig& cfg, const ToleranceConfig& tol);
SideResult eval_rhs(const IdentityEntry& entry, const ParameterSet& params, const Point& x,
                    int n, const SeriesConfig& cfg, const ToleranceConfig& tol,
                    bool use_printed = false);

// ||lhs - rhs||_F / (1 + ||lhs||_F).  Hypotheses are checked first.
double residual(const IdentityEntry& entry, const ParameterSet& params, const Point& x, int n,
                const SeriesConfig& cfg, const ToleranceConfig& tol);

struct IdentityCheck {
  double residual = 0.0;
  bool conclusive = true; // both sides converged
  std::optional<double> printed_residual;
  std::string printed_error;
};

// residual() plus convergence bookkeeping and, for typo candidates, the
// printed variant's residual on the same inputs.
IdentityCheck check_identity(const IdentityEntry& entry, const ParameterSet& params,
                             const Point& x, int n, const SeriesConfig& cfg,
                             const ToleranceConfig& tol, bool with_printed = true);

} // namespace lauricella

#endif

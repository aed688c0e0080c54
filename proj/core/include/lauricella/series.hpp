#ifndef LAURICELLA_SERIES_HPP
#define LAURICELLA_SERIES_HPP

#include "lauricella/kinds.hpp"

namespace lauricella {

// Truncation and domain-guard settings for one evaluation.
//
// The series is summed by total-degree shells: shell D collects every term
// with m_1 + ... + m_k = D.  Summation stops at the first shell whose
// Frobenius norm drops to term_tol, or at max_degree with converged=false.
struct SeriesConfig {
  int max_degree = 64;
  double term_tol = 1e-14;
  double domain_guard = 1.0; // in (0,1]; scales the accepted region
};

struct SeriesResult {
  ComplexMatrix value;
  double last_shell_norm = 0.0;
  int shells_used = 0; // shells whose norm still exceeded term_tol
  bool converged = false;
};

// Parameter displacement: slot -> slot + offset * I.
struct ParamShift {
  ParamId param;
  int offset = 0;
};

// Series coefficient of prod_i x_i^{m_i}/m_i! at multi-index m, factors in
// the defining equation's printed order.
ComplexMatrix coefficient(const LauricellaKind& kind, const ParameterSet& params,
                          const std::vector<int>& m, const ToleranceConfig& tol);

// Guard region check.  GA/GC-type coefficient growth admits
// sum_i |x_i| <= 0.5 * domain_guard; GB/GD and the three-variable kinds
// use max_i |x_i| <= 0.5 * domain_guard.  Throws GuardError outside.
void check_domain_guard(const LauricellaKind& kind, const Point& x, const SeriesConfig& cfg);

SeriesResult evaluate(const LauricellaKind& kind, const ParameterSet& params, const Point& x,
                      const SeriesConfig& cfg, const ToleranceConfig& tol);

// evaluate() with displaced parameters; shifts apply before any checks.
SeriesResult evaluate_shifted(const LauricellaKind& kind, const ParameterSet& params,
                              const std::vector<ParamShift>& shifts, const Point& x,
                              const SeriesConfig& cfg, const ToleranceConfig& tol);

ParameterSet apply_shifts(const ParameterSet& params, const std::vector<ParamShift>& shifts);

} // namespace lauricella

#endif

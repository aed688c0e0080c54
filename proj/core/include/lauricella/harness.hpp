#ifndef LAURICELLA_HARNESS_HPP
#define LAURICELLA_HARNESS_HPP

#include <cstdint>
#include <optional>

#include "lauricella/catalog.hpp"

namespace lauricella {

// Eigenvalue region for random parameter draws.  Diagonal seeds keep every
// exclusion by construction: an eigenvalue whose imaginary part is small
// must stay min_separation away from the integers, so C + jI and C - jI
// stay invertible throughout a sweep.
struct SpectrumSpec {
  double real_min = 0.6;
  double real_max = 2.4;
  double imag_min = -0.5;
  double imag_max = 0.5;
  bool forbid_integer_reals = true;
  double min_separation = 0.1;   // distance kept from integer real parts
  double imag_escape = 0.2;      // |Im| at or above this lifts the exclusion
};

// A commuting family built as S D_j S^{-1} with one shared similarity.
struct FamilyDraw {
  ComplexMatrix similarity;
  ComplexMatrix similarity_inv;
  std::vector<ComplexMatrix> matrices;
  std::vector<std::vector<Complex>> spectra;
};

// Deterministic for a fixed seed; redraws S until its condition estimate
// is at most 50.
FamilyDraw generate_family(int dim, int count, const SpectrumSpec& spec, uint64_t seed);

// A point strictly inside the kind's guard region, scaled by radius_scale,
// and inside the sub-region where every family in the catalog converges
// fast enough for the residual tolerances (sum-, box- or sqrt-shaped per
// kind; see sample_shape in the implementation).
Point sample_point(const LauricellaKind& kind, double radius_scale, uint64_t seed);

struct RunOptions {
  double residual_tol_r1 = 1e-10; // applied at r = 1
  double residual_tol_rk = 1e-8;  // applied at r >= 2
  std::optional<double> residual_tol_override;
  int max_redraws = 20;
  SpectrumSpec spectrum;

  double tol_for_dim(int dim) const {
    if (residual_tol_override) return *residual_tol_override;
    return dim == 1 ? residual_tol_r1 : residual_tol_rk;
  }
};

struct EntryReport {
  std::string id;
  std::string equation;
  int trials = 0;
  int inconclusive = 0;
  int redraws = 0;
  double max_residual = 0.0; // over conclusive trials
  bool pass = true;
  std::optional<double> printed_variant_residual;
  std::vector<std::string> errors;
  std::string failure_inputs_json; // first failing trial, when any
};

struct ValidationReport {
  uint64_t seed = 0;
  std::string config_json;
  int matched_entries = 0;
  std::vector<EntryReport> entries;

  bool all_pass() const {
    for (const EntryReport& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Validates every catalog entry matching the glob (simple * and ?
// wildcards) at each dim x n <= n_max x trial.  Per trial: draw a family,
// re-draw while hypotheses fail (counted), sample a point with radius
// 1/(1+n), compute the residual.  Typo candidates record the printed
// variant's residual separately.  Trials with a non-converged side are
// inconclusive, not failures.
ValidationReport run_suite(const std::string& filter, int trials, const std::vector<int>& dims,
                           int n_max, const SeriesConfig& cfg, const ToleranceConfig& tol,
                           uint64_t seed, const RunOptions& opts = {});

bool glob_match(const std::string& pattern, const std::string& text);

} // namespace lauricella

#endif

#include "lauricella/harness.hpp"

#include <cmath>

#include "lauricella/json_io.hpp"

namespace lauricella {

namespace {

// splitmix64: deterministic across platforms, unlike <random> distributions.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

uint64_t mix(uint64_t a, uint64_t b) {
  a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
  Rng r(a);
  return r.next();
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Complex draw_eigenvalue(Rng& rng, const SpectrumSpec& spec) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double re = rng.uniform(spec.real_min, spec.real_max);
    const double im = rng.uniform(spec.imag_min, spec.imag_max);
    if (spec.forbid_integer_reals && std::abs(im) < spec.imag_escape) {
      const double d = std::abs(re - std::round(re));
      if (d < spec.min_separation) continue;
    }
    return {re, im};
  }
  throw InputError("spectrum spec infeasible: eigenvalue region is empty");
}

// Per-kind sampling shape.  The guard regions of the spec admit points
// where some families converge too slowly for the residual tolerances, so
// the harness draws from tighter sub-regions:
//   Sum  : sum |x_i| <= 0.30 r            (GA)
//   Box  : each |x_i| <= 0.20 r           (GB, GD and most of F3..F14)
//   Sqrt : sum sqrt|x_i| <= 0.55 sqrt(r)  (GC and the kinds with an
//          F4-Appell-like cross-section: F4, F10, F14)
enum class SampleShape { Sum, Box, Sqrt };

SampleShape sample_shape(KindTag t) {
  switch (t) {
    case KindTag::GA: return SampleShape::Sum;
    case KindTag::GC:
    case KindTag::F4:
    case KindTag::F10:
    case KindTag::F14: return SampleShape::Sqrt;
    default: return SampleShape::Box;
  }
}

} // namespace

FamilyDraw generate_family(int dim, int count, const SpectrumSpec& spec, uint64_t seed) {
  if (dim < 1) throw InputError("generate_family: dim must be >= 1");
  Rng rng(mix(seed, 0x66616d696c79ull));
  FamilyDraw out;

  for (int j = 0; j < count; ++j) {
    std::vector<Complex> eig;
    eig.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) eig.push_back(draw_eigenvalue(rng, spec));
    out.spectra.push_back(std::move(eig));
  }

  if (dim == 1) {
    out.similarity = ComplexMatrix::identity(1);
    out.similarity_inv = out.similarity;
  } else {
    ToleranceConfig loose;
    loose.invert_cond_max = 1e12;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100) throw InputError("generate_family: no well-conditioned similarity");
      ComplexMatrix s(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          s.at(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      try {
        ComplexMatrix sinv = inverse(s, loose);
        if (frobenius_norm(s) * frobenius_norm(sinv) > 50.0) continue;
        out.similarity = std::move(s);
        out.similarity_inv = std::move(sinv);
        break;
      } catch (const SingularityError&) {
        continue;
      }
    }
  }

  for (int j = 0; j < count; ++j) {
    const ComplexMatrix d = ComplexMatrix::diagonal(out.spectra[static_cast<size_t>(j)]);
    out.matrices.push_back(matmul(matmul(out.similarity, d), out.similarity_inv));
  }
  return out;
}

Point sample_point(const LauricellaKind& kind, double radius_scale, uint64_t seed) {
  if (!(radius_scale > 0.0 && radius_scale <= 1.0))
    throw InputError("sample_point: radius_scale must be in (0, 1]");
  Rng rng(mix(seed, 0x706f696e74ull));
  const int k = kind.arity;

  std::vector<double> w(static_cast<size_t>(k));
  double wsum = 0.0;
  for (double& v : w) {
    v = rng.uniform(0.2, 1.0);
    wsum += v;
  }

  std::vector<double> mag(static_cast<size_t>(k));
  switch (sample_shape(kind.tag)) {
    case SampleShape::Sum:
      for (int i = 0; i < k; ++i) mag[i] = 0.30 * radius_scale * (w[i] / wsum);
      break;
    case SampleShape::Box:
      for (int i = 0; i < k; ++i) mag[i] = 0.20 * radius_scale * w[i];
      break;
    case SampleShape::Sqrt:
      for (int i = 0; i < k; ++i) {
        const double root = 0.55 * (w[i] / wsum) * std::sqrt(radius_scale);
        mag[i] = root * root;
      }
      break;
  }

  Point x(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    x[static_cast<size_t>(i)] = Complex(mag[i] * std::cos(theta), mag[i] * std::sin(theta));
  }
  return x;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

ParameterSet assign_family(const LauricellaKind& kind, const FamilyDraw& fam) {
  const KindSignature& sig = signature(kind);
  ParameterSet params;
  size_t at = 0;
  for (int i = 0; i < sig.n_a; ++i) params.a.push_back(fam.matrices[at++]);
  for (int i = 0; i < sig.n_b; ++i) params.b.push_back(fam.matrices[at++]);
  for (int i = 0; i < sig.n_c; ++i) params.c.push_back(fam.matrices[at++]);
  return params;
}

} // namespace

ValidationReport run_suite(const std::string& filter, int trials, const std::vector<int>& dims,
                           int n_max, const SeriesConfig& cfg, const ToleranceConfig& tol,
                           uint64_t seed, const RunOptions& opts) {
  ValidationReport report;
  report.seed = seed;
  report.config_json = suite_config_json(filter, trials, dims, n_max, cfg, opts);

  for (const IdentityEntry& entry : catalog()) {
    if (!filter.empty() && !glob_match(filter, entry.id)) continue;
    ++report.matched_entries;

    EntryReport er;
    er.id = entry.id;
    er.equation = entry.equation;
    const uint64_t entry_key = mix(seed, fnv1a(entry.id));
    const KindSignature& sig = signature(entry.kind);
    const int count = sig.n_a + sig.n_b + sig.n_c;

    for (int dim : dims) {
      const double dim_tol = opts.tol_for_dim(dim);
      for (int n = 1; n <= n_max; ++n) {
        if (entry.fixed_n && n != *entry.fixed_n) continue;
        for (int trial = 0; trial < trials; ++trial) {
          const uint64_t trial_key =
              mix(entry_key, (static_cast<uint64_t>(dim) << 40) ^
                                 (static_cast<uint64_t>(n) << 20) ^
                                 static_cast<uint64_t>(trial));
          ++er.trials;

          ParameterSet params;
          bool have_params = false;
          for (int attempt = 0; attempt <= opts.max_redraws; ++attempt) {
            FamilyDraw fam =
                generate_family(dim, count, opts.spectrum, mix(trial_key, attempt));
            params = assign_family(entry.kind, fam);
            try {
              check_hypotheses(entry, params, n, tol);
              have_params = true;
              break;
            } catch (const HypothesisError&) {
              ++er.redraws;
            }
          }
          if (!have_params) {
            er.errors.push_back("trial " + std::to_string(trial) + " dim " +
                                std::to_string(dim) + " n " + std::to_string(n) +
                                ": hypothesis redraw limit exceeded");
            continue;
          }

          const Point x = sample_point(entry.kind, 1.0 / (1.0 + n), mix(trial_key, 0x78ull));
          try {
            IdentityCheck chk = check_identity(entry, params, x, n, cfg, tol);
            if (!chk.conclusive) {
              ++er.inconclusive;
            } else {
              er.max_residual = std::max(er.max_residual, chk.residual);
              if (chk.residual > dim_tol && er.pass) {
                er.pass = false;
                er.failure_inputs_json =
                    trial_inputs_json(entry, params, x, n, chk.residual);
              }
            }
            if (chk.printed_residual)
              er.printed_variant_residual =
                  std::max(er.printed_variant_residual.value_or(0.0), *chk.printed_residual);
            if (!chk.printed_error.empty())
              er.errors.push_back("printed variant: " + chk.printed_error);
          } catch (const Error& e) {
            er.errors.push_back("trial " + std::to_string(trial) + " dim " +
                                std::to_string(dim) + " n " + std::to_string(n) + ": " +
                                e.what());
          }
        }
      }
    }
    report.entries.push_back(std::move(er));
  }
  return report;
}

} // namespace lauricella

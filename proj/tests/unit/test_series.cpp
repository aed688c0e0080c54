#include <doctest.h>

#include <algorithm>

#include "lauricella/series.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace lauricella;
using testutil::Rand;
using testutil::scalar;
using testutil::scalar_params;

namespace {

const std::vector<std::string> kAllKinds = {"GA", "GB", "GC", "GD", "F3", "F4",  "F6",
                                            "F7", "F8", "F10", "F11", "F12", "F13", "F14"};

oracle::ScalarParams to_oracle(const ParameterSet& p) {
  oracle::ScalarParams o;
  for (const auto& m : p.a) o.a.push_back(m.at(0, 0));
  for (const auto& m : p.b) o.b.push_back(m.at(0, 0));
  for (const auto& m : p.c) o.c.push_back(m.at(0, 0));
  return o;
}

} // namespace

TEST_CASE("coefficient: multi-index zero gives the identity for every kind") {
  ToleranceConfig tol;
  Rand r(21);
  for (const std::string& name : kAllKinds) {
    const LauricellaKind kind = parse_kind(name, 3);
    ParameterSet p = scalar_params(kind, r);
    CHECK(coefficient(kind, p, {0, 0, 0}, tol) == ComplexMatrix::identity(1));
  }
}

TEST_CASE("coefficient: GA k=2 scalar example equals 2") {
  ToleranceConfig tol;
  const LauricellaKind kind = parse_kind("GA", 2);
  ParameterSet p;
  p.a = {scalar(1.0)};
  p.b = {scalar(1.0), scalar(1.0)};
  p.c = {scalar(1.0), scalar(1.0)};
  // (1)_2 * (1)_1 * (1)_1 / ((1)_1 (1)_1) = 2
  CHECK(std::abs(coefficient(kind, p, {1, 1}, tol).at(0, 0) - Complex(2.0)) < 1e-15);
}

TEST_CASE("coefficient: F3 pattern at m=(0,1,1) matches the scalar oracle") {
  ToleranceConfig tol;
  Rand r(22);
  const LauricellaKind kind = parse_kind("F3");
  ParameterSet p = scalar_params(kind, r);
  const Complex got = coefficient(kind, p, {0, 1, 1}, tol).at(0, 0);
  // (a2)_2 (b1)_1 (b2)_0... the (0,1,1) coefficient is
  // (a1)_0 (a2)_{2} (b1)_{1} (b2)_{1} / ((c2)_1 (c3)_1)
  const Complex want = oracle::rise(p.a[1].at(0, 0), 2) * oracle::rise(p.b[0].at(0, 0), 1) *
                       oracle::rise(p.b[1].at(0, 0), 1) /
                       (oracle::rise(p.c[1].at(0, 0), 1) * oracle::rise(p.c[2].at(0, 0), 1));
  CHECK(std::abs(got - want) < 1e-13 * (1.0 + std::abs(want)));
}

TEST_CASE("evaluate: x = 0 returns the identity after one shell") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  Rand r(23);
  for (const char* cname : {"GA", "F7", "F12"}) {
    const std::string name = cname;
    const LauricellaKind kind = parse_kind(name, 3);
    ParameterSet p = testutil::commuting_params(kind, 2, 300 + name.size());
    SeriesResult res = evaluate(kind, p, {0.0, 0.0, 0.0}, cfg, tol);
    CHECK(res.value == ComplexMatrix::identity(2));
    CHECK(res.shells_used == 1);
    CHECK(res.converged);
  }
}

TEST_CASE("evaluate: GA at k=1 with a=c is the binomial series") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  const LauricellaKind kind = parse_kind("GA", 1);
  ParameterSet p;
  p.a = {scalar(0.8)};
  p.b = {scalar(0.5)};
  p.c = {scalar(0.8)};
  SeriesResult res = evaluate(kind, p, {0.25}, cfg, tol);
  const Complex want = std::pow(Complex(0.75), Complex(-0.5));
  CHECK(std::abs(res.value.at(0, 0) - want) < 1e-10);
  CHECK(res.converged);
}

TEST_CASE("evaluate: GD scalar with a=c is a product of binomials") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  const LauricellaKind kind = parse_kind("GD", 2);
  ParameterSet p;
  p.a = {scalar(1.3)};
  p.b = {scalar(0.4), scalar(0.9)};
  p.c = {scalar(1.3)};
  const Point x{0.1, 0.2};
  SeriesResult res = evaluate(kind, p, x, cfg, tol);
  const Complex want =
      std::pow(Complex(0.9), Complex(-0.4)) * std::pow(Complex(0.8), Complex(-0.9));
  CHECK(std::abs(res.value.at(0, 0) - want) < 1e-10);

  // cross-check by the brute-force double sum
  const Complex brute = oracle::eval_gd2(1.3, 0.4, 0.9, 1.3, 0.1, 0.2, 40);
  CHECK(std::abs(res.value.at(0, 0) - brute) < 1e-12);
}

TEST_CASE("evaluate_shifted: empty shift list, origin invisibility, manual equivalence") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  const LauricellaKind kind = parse_kind("GA", 3);
  ParameterSet p = testutil::commuting_params(kind, 2, 42);
  const Point x{0.05, 0.04, 0.03};

  CHECK(evaluate_shifted(kind, p, {}, x, cfg, tol).value == evaluate(kind, p, x, cfg, tol).value);

  SeriesResult at_origin =
      evaluate_shifted(kind, p, {{{ParamGroup::A, 0}, 1}}, {0.0, 0.0, 0.0}, cfg, tol);
  CHECK(at_origin.value == ComplexMatrix::identity(2));

  ParameterSet shifted = p;
  shifted.a[0] = add_shift(shifted.a[0], 2);
  CHECK(evaluate_shifted(kind, p, {{{ParamGroup::A, 0}, 2}}, x, cfg, tol).value ==
        evaluate(kind, shifted, x, cfg, tol).value);
}

TEST_CASE("evaluate: scalar reduction matches the naive box oracle for every kind") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  cfg.max_degree = 40;
  Rand r(24);
  for (const std::string& name : kAllKinds) {
    const LauricellaKind kind = parse_kind(name, 3);
    for (int trial = 0; trial < 3; ++trial) {
      ParameterSet p = scalar_params(kind, r);
      Point x = sample_point(kind, 0.8, 5000 + 17 * trial + name.size());
      for (Complex& z : x) // keep |x_i| <= 0.1 per the stated invariant
        if (std::abs(z) > 0.1) z *= 0.1 / std::abs(z);
      SeriesResult res = evaluate(kind, p, x, cfg, tol);
      REQUIRE(res.converged);
      const oracle::Cx want = oracle::eval_box3(name, to_oracle(p), {x[0], x[1], x[2]}, 36);
      CHECK(std::abs(res.value.at(0, 0) - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("evaluate: permutation symmetry of the generalized kinds") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  const int dim = 2;

  auto relative_gap = [](const ComplexMatrix& u, const ComplexMatrix& v) {
    return frobenius_norm(sub(u, v)) / (1.0 + frobenius_norm(u));
  };

  // GA and GC: permute (B_i, C_i, x_i); GB: (A_i, B_i, x_i); GD: (B_i, x_i).
  for (const char* cname : {"GA", "GB", "GC", "GD"}) {
    const std::string name = cname;
    const LauricellaKind kind = parse_kind(name, 3);
    ParameterSet p = testutil::commuting_params(kind, dim, 770 + name.size());
    const Point x = sample_point(kind, 1.0, 771);
    SeriesResult base = evaluate(kind, p, x, cfg, tol);

    ParameterSet q = p;
    Point y = x;
    std::swap(y[0], y[2]);
    if (name == "GA") {
      std::swap(q.b[0], q.b[2]);
      std::swap(q.c[0], q.c[2]);
    } else if (name == "GB") {
      std::swap(q.a[0], q.a[2]);
      std::swap(q.b[0], q.b[2]);
    } else if (name == "GC") {
      std::swap(q.c[0], q.c[2]);
    } else {
      std::swap(q.b[0], q.b[2]);
    }
    SeriesResult perm = evaluate(kind, q, y, cfg, tol);
    CHECK(relative_gap(base.value, perm.value) < 1e-12);
  }
}

TEST_CASE("evaluate: F1/F2/F5/F9 are the generalized kinds at k=3, same code path") {
  CHECK(parse_kind("F1") == parse_kind("GA", 3));
  CHECK(parse_kind("F2") == parse_kind("GB", 3));
  CHECK(parse_kind("F5") == parse_kind("GC", 3));
  CHECK(parse_kind("F9") == parse_kind("GD", 3));

  ToleranceConfig tol;
  SeriesConfig cfg;
  const LauricellaKind f1 = parse_kind("F1");
  ParameterSet p = testutil::commuting_params(f1, 2, 88);
  const Point x = sample_point(f1, 1.0, 89);
  CHECK(evaluate(f1, p, x, cfg, tol).value ==
        evaluate(parse_kind("GA", 3), p, x, cfg, tol).value);
}

TEST_CASE("guard region: refusals and scaling") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  Rand r(25);
  ParameterSet pga = scalar_params(parse_kind("GA", 3), r);
  // sum-type guard for GA
  CHECK_THROWS_AS(evaluate(parse_kind("GA", 3), pga, {0.3, 0.2, 0.1}, cfg, tol), GuardError);
  // max-type guard for F6
  ParameterSet pf6 = scalar_params(parse_kind("F6"), r);
  CHECK_THROWS_AS(evaluate(parse_kind("F6"), pf6, {0.6, 0.0, 0.0}, cfg, tol), GuardError);
  CHECK_NOTHROW(evaluate(parse_kind("F6"), pf6, {0.45, 0.1, 0.1}, cfg, tol));

  SeriesConfig tight = cfg;
  tight.domain_guard = 0.2;
  CHECK_THROWS_AS(evaluate(parse_kind("F6"), pf6, {0.45, 0.1, 0.1}, tight, tol), GuardError);
}

TEST_CASE("evaluate: truncation decay sanity (soft)") {
  ToleranceConfig tol;
  Rand r(26);
  const LauricellaKind kind = parse_kind("GA", 3);
  ParameterSet p = scalar_params(kind, r);
  const Point x = sample_point(kind, 1.0, 4242);

  double prev = 0.0;
  bool warned = false;
  for (int cap = 4; cap <= 16; cap += 4) {
    SeriesConfig cfg;
    cfg.max_degree = cap;
    cfg.term_tol = 0.0; // force the full depth
    SeriesResult res = evaluate(kind, p, x, cfg, tol);
    if (cap > 4 && prev > 0.0 && res.last_shell_norm > 10.0 * prev) warned = true;
    prev = res.last_shell_norm;
  }
  WARN_MESSAGE(!warned, "shell norms grew by more than 10x between truncation depths");
}

TEST_CASE("evaluate: non-convergence is reported, not thrown") {
  ToleranceConfig tol;
  SeriesConfig cfg;
  cfg.max_degree = 3;
  Rand r(27);
  const LauricellaKind kind = parse_kind("GA", 3);
  ParameterSet p = scalar_params(kind, r);
  SeriesResult res = evaluate(kind, p, {0.1, 0.05, 0.05}, cfg, tol);
  CHECK_FALSE(res.converged);
  CHECK(res.shells_used == 4);
  CHECK(res.last_shell_norm > 0.0);
}

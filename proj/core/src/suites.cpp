#include "bchyper/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "bchyper/coherent.hpp"
#include "bchyper/errors.hpp"
#include "bchyper/gamma.hpp"
#include "bchyper/hyper.hpp"
#include "bchyper/identities.hpp"
#include "bchyper/io.hpp"
#include "bchyper/quad.hpp"

namespace bchyper {

namespace {

struct Reject {};

struct Outcome {
  std::string params;
  std::string z;
  double r1 = 0.0;
  double r2 = 0.0;
  bool passed = false;
  std::string note;
};

using Attempt = std::function<Outcome(Rng&, double tol, int nodes)>;

void admit(bool ok) {
  if (!ok) throw Reject{};
}

std::string describe(const std::vector<BiComplex>& a, const std::vector<BiComplex>& b) {
  std::string out = "a:";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "|" : "") + to_string(a[i]);
  out += ";b:";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "|" : "") + to_string(b[i]);
  return out;
}

std::string describe(const PfqParams& p) { return describe(p.alphas(), p.betas()); }

PfqParams make_params(std::vector<BiComplex> a, std::vector<BiComplex> b) {
  try {
    return {std::move(a), std::move(b)};
  } catch (const InvalidParams&) {
    throw Reject{};
  }
}

// Real parts of both idempotent components land in [lo - spread, hi + spread].
BiComplex draw_param(Rng& rng, double lo, double hi, double spread = 0.25) {
  const Complex re1(rng.uniform(lo, hi), rng.uniform(-spread, spread));
  const Complex re2(rng.uniform(-spread, spread), rng.uniform(-spread, spread));
  return {re1, re2};
}

BiComplex draw_z(Rng& rng, double rmax) {
  Complex c[2];
  for (auto& x : c) {
    const double r = rmax * std::sqrt(rng.uniform());
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    x = std::polar(r, phi);
  }
  return BiComplex::from_idempotent(c[0], c[1]);
}

std::vector<BiComplex> draw_params(Rng& rng, int count, double lo, double hi) {
  std::vector<BiComplex> v;
  for (int i = 0; i < count; ++i) v.push_back(draw_param(rng, lo, hi));
  return v;
}

// Shape (p, q) with p <= q + 1.
std::pair<int, int> draw_shape(Rng& rng, int max_q = 3) {
  const int q = rng.integer(0, max_q);
  const int p = rng.integer(0, q + 1);
  return {p, q};
}

PfqParams draw_pfq(Rng& rng, int p, int q) {
  return make_params(draw_params(rng, p, 0.2, 3.0), draw_params(rng, q, 0.5, 3.5));
}

double radius_for(int p, int q) { return p == q + 1 ? 0.7 : 1.5; }

bool near_pole(const BiComplex& x, double gap) {
  for (int s = 1; s <= 2; ++s) {
    const Complex c = x.idem(s);
    if (c.real() < 0.5 && std::abs(c - std::round(c.real())) < gap) return true;
  }
  return false;
}

Outcome from_report(const IdentityReport& r, std::string params, const BiComplex& z) {
  return {std::move(params), to_string(z), r.residual.h1(), r.residual.h2(), r.passed, {}};
}

Outcome thm21(Rng& rng, double tol, int) {
  const auto [p, q] = draw_shape(rng);
  const PfqParams params = draw_pfq(rng, p, q);
  const BiComplex z = draw_z(rng, p == q + 1 ? 0.9 : 3.0);
  const BiComplex value = pfq_value(params, z);
  double r[2];
  for (int s = 1; s <= 2; ++s) {
    const Complex o = oracle_pfq_complex(params.alpha_parts(s), params.beta_parts(s), z.idem(s));
    const Complex v = value.idem(s);
    const double scale = std::max(std::abs(o), std::abs(v));
    r[s - 1] = scale == 0.0 ? 0.0 : std::abs(o - v) / scale;
  }
  return {describe(params), to_string(z), r[0], r[1], r[0] <= tol && r[1] <= tol, {}};
}

Outcome thm22(Rng& rng, double, int) {
  const int q = rng.integer(0, 3);
  const int p = rng.integer(0, q + 3);
  const PfqParams params = draw_pfq(rng, p, q);
  const ConvergenceClass cls = classify(params);
  bool class_ok = false;
  if (p <= q) class_ok = cls.kind == ConvergenceKind::Entire;
  else if (p == q + 1) {
    class_ok = cls.kind == (cls.margin() > 0.0 ? ConvergenceKind::UnitBallBoundaryConvergent
                                               : ConvergenceKind::UnitBall);
  } else {
    class_ok = cls.kind == ConvergenceKind::DivergentEverywhere;
  }
  Complex c[2];
  double moduli[2];
  for (int s = 0; s < 2; ++s) {
    double r = rng.uniform(0.0, 1.6);
    if (std::abs(r - 1.0) < 0.01) r = 0.5;
    moduli[s] = r;
    c[s] = std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  const BiComplex z = BiComplex::from_idempotent(c[0], c[1]);
  bool expect_error = false;
  if (p > q + 1) expect_error = true;
  if (p == q + 1) expect_error = moduli[0] > 1.0 || moduli[1] > 1.0;
  bool threw = false;
  try {
    check_domain(params, z);
  } catch (const DomainError&) {
    threw = true;
  }
  const bool domain_ok = threw == expect_error;
  return {describe(params), to_string(z), class_ok ? 0.0 : 1.0, domain_ok ? 0.0 : 1.0,
          class_ok && domain_ok, to_string(cls.kind)};
}

Outcome thm31(Rng& rng, double tol, int nodes) {
  static const std::pair<int, int> shapes[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 2}};
  const auto [p, q] = shapes[rng.integer(0, 4)];
  std::vector<BiComplex> a{draw_param(rng, 0.5, 2.0, 0.15)};
  std::vector<BiComplex> b{a[0] + draw_param(rng, 0.5, 2.0, 0.15)};
  for (int i = 1; i < p; ++i) a.push_back(draw_param(rng, 0.2, 2.5));
  for (int j = 1; j < q; ++j) b.push_back(draw_param(rng, 0.5, 3.0));
  const PfqParams params = make_params(std::move(a), std::move(b));
  const BiComplex z = draw_z(rng, 0.7);
  const ProductCurve curve{CurveKind::UnitInterval, nodes > 0 ? nodes : 64};
  const IdentityReport r = euler_integral(params, z, curve, tol);
  return from_report(r, describe(params), z);
}

Outcome thm35(Rng& rng, double tol, int nodes) {
  static const std::pair<int, int> shapes[] = {{0, 0}, {1, 1}, {0, 1}, {1, 2}, {2, 2}};
  const auto [p, q] = shapes[rng.integer(0, 4)];
  const BiComplex v = draw_param(rng, 0.6, 3.0, 0.2);
  const PfqParams params = draw_pfq(rng, p, q);
  const BiComplex z = draw_z(rng, p == q ? 0.6 : 0.8);
  const ProductCurve curve{CurveKind::HalfLine, nodes > 0 ? nodes : 64};
  const IdentityReport r = laplace_integral(v, params, z, curve, tol);
  return from_report(r, "v:" + to_string(v) + ";" + describe(params), z);
}

Outcome thm38(Rng& rng, double tol, int nodes) {
  static const std::pair<int, int> shapes[] = {{0, 0}, {1, 1}, {2, 1}, {1, 2}};
  const auto [p, q] = shapes[rng.integer(0, 3)];
  const BiComplex m = draw_param(rng, 0.6, 2.5, 0.1);
  const BiComplex n = draw_param(rng, 0.6, 2.5, 0.1);
  const PfqParams params = draw_pfq(rng, p, q);
  const BiComplex z = draw_z(rng, 0.7);
  const IdentityReport r = double_integral(m, n, params, z, nodes > 0 ? nodes : 128, tol);
  return from_report(r, "m:" + to_string(m) + ";n:" + to_string(n) + ";" + describe(params), z);
}

Outcome thm41(Rng& rng, double tol, int) {
  const auto [p, q] = draw_shape(rng);
  const PfqParams params = draw_pfq(rng, p, q);
  const BiComplex z = draw_z(rng, radius_for(p, q));
  return from_report(quad_even(params, z, tol), describe(params), z);
}

Outcome thm42(Rng& rng, double tol, int) {
  const auto [p, q] = draw_shape(rng);
  const PfqParams params = draw_pfq(rng, p, q);
  const BiComplex z = draw_z(rng, radius_for(p, q));
  return from_report(quad_odd(params, z, tol), describe(params), z);
}

Outcome thm43(Rng& rng, double tol, int) {
  const int n = rng.integer(0, 8);
  const BiComplex a1 = draw_param(rng, 0.2, 3.0);
  const BiComplex a2 = draw_param(rng, 0.2, 3.0);
  const BiComplex b = draw_param(rng, 0.5, 4.0);
  const BiComplex extra = 1.0 + a1 + a2 - b - static_cast<double>(n);
  admit(!near_pole(b, 0.05) && !near_pole(extra, 0.05));
  admit(!near_pole(b - a1 - a2, 0.05));
  const IdentityReport r = saalschutz(n, a1, a2, b, tol);
  return from_report(r, "n:" + std::to_string(n) + ";" + describe({a1, a2}, {b}),
                     BiComplex(1.0));
}

Outcome thm51(Rng& rng, double tol, int) {
  const auto [p, q] = draw_shape(rng);
  const int k = rng.integer(0, 3);
  const PfqParams params = draw_pfq(rng, p, q);
  const BiComplex z = draw_z(rng, radius_for(p, q));
  return from_report(derivative_relation(params, z, k, tol),
                     "k:" + std::to_string(k) + ";" + describe(params), z);
}

ShiftM draw_shift(Rng& rng) { return {rng.integer(0, 3), rng.integer(0, 3)}; }

std::string describe_shift(ShiftM m) {
  return "M:" + std::to_string(m.m) + "e1+" + std::to_string(m.n) + "e2;";
}

Outcome thm61(Rng& rng, double tol, int) {
  const int q = rng.integer(0, 2);
  const int p = rng.integer(1, q + 1);
  const PfqParams params = draw_pfq(rng, p, q);
  const ShiftM shift = draw_shift(rng);
  const BiComplex z = draw_z(rng, radius_for(p, q));
  return from_report(contiguous_alpha_plus(params, z, shift, tol),
                     describe_shift(shift) + describe(params), z);
}

Outcome thm62(Rng& rng, double tol, int) {
  const int q = rng.integer(0, 2);
  const int p = rng.integer(1, q + 1);
  const PfqParams params = draw_pfq(rng, p, q);
  const ShiftM shift = draw_shift(rng);
  const BiComplex z = draw_z(rng, radius_for(p, q));
  return from_report(contiguous_alpha_minus(params, z, shift, tol),
                     describe_shift(shift) + describe(params), z);
}

Outcome thm63(Rng& rng, double tol, int) {
  const int q = rng.integer(1, 3);
  const int p = rng.integer(0, q + 1);
  std::vector<BiComplex> b{draw_param(rng, 0.5, 6.0)};
  for (int j = 1; j < q; ++j) b.push_back(draw_param(rng, 0.5, 3.5));
  const ShiftM shift = draw_shift(rng);
  for (int k = 0; k <= std::max(shift.m, shift.n); ++k) {
    admit(!near_pole(b[0] - static_cast<double>(k), 0.05));
  }
  const PfqParams params = make_params(draw_params(rng, p, 0.2, 3.0), std::move(b));
  const BiComplex z = draw_z(rng, radius_for(p, q));
  return from_report(contiguous_beta_minus(params, z, shift, tol),
                     describe_shift(shift) + describe(params), z);
}

Outcome thm64(Rng& rng, double tol, int) {
  const int q = rng.integer(1, 3);
  const int p = rng.integer(0, q + 1);
  const PfqParams params = draw_pfq(rng, p, q);
  const ShiftM shift = draw_shift(rng);
  const BiComplex z = draw_z(rng, radius_for(p, q));
  return from_report(contiguous_beta_plus(params, z, shift, tol),
                     describe_shift(shift) + describe(params), z);
}

Outcome thm71(Rng& rng, double tol, int) {
  const auto [p, q] = draw_shape(rng);
  const PfqParams params = draw_pfq(rng, p, q);
  const BiComplex z = draw_z(rng, radius_for(p, q));
  const Hyperbolic ulps = ode_recurrence_ulps(params, 200);
  const OdeResidual ode = ode_residual(params, z, 200);
  const bool ok = ulps.h1() <= tol && ulps.h2() <= tol && ode.within_bound();
  return {describe(params), to_string(z), ulps.h1(), ulps.h2(), ok,
          ode.within_bound() ? "" : "ode residual above bound"};
}

CoherentSpec draw_coherent(Rng& rng) {
  const auto [p, q] = draw_shape(rng, 2);
  auto hyperbolic = [&](double lo, double hi) {
    return BiComplex::from_idempotent(rng.uniform(lo, hi), rng.uniform(lo, hi));
  };
  std::vector<BiComplex> a;
  std::vector<BiComplex> b;
  for (int i = 0; i < p; ++i) a.push_back(hyperbolic(0.3, 3.0));
  for (int j = 0; j < q; ++j) b.push_back(hyperbolic(0.3, 3.0));
  CoherentSpec spec;
  spec.params = make_params(std::move(a), std::move(b));
  spec.z = draw_z(rng, p == q + 1 ? 0.9 : 2.0);
  return spec;
}

Outcome cs_eigen(Rng& rng, double, int) {
  const CoherentSpec spec = draw_coherent(rng);
  const EigenReport r = annihilate(spec);
  return {describe(spec.params), to_string(spec.z), r.residual.h1(), r.residual.h2(), r.passed,
          "bound " + to_string(r.bound)};
}

Outcome cs_norm(Rng& rng, double tol, int) {
  const CoherentSpec spec = draw_coherent(rng);
  const BiComplex ip = inner_product(spec, spec);
  const double r1 = std::abs(ip.idem1() - 1.0);
  const double r2 = std::abs(ip.idem2() - 1.0);
  return {describe(spec.params), to_string(spec.z), r1, r2, r1 <= tol && r2 <= tol, {}};
}

Outcome thm52(Rng& rng, double, int) {
  const bool in_alpha = rng.integer(0, 1) == 1;
  PfqParams params;
  BiComplex z;
  if (in_alpha) {
    params = make_params({draw_param(rng, 0.2, 0.6, 0.05)}, {draw_param(rng, 1.0, 2.0, 0.1)});
    z = BiComplex::from_idempotent(std::polar(rng.uniform(3.0, 5.0), rng.uniform(-0.3, 0.3)),
                                   std::polar(rng.uniform(3.0, 5.0), rng.uniform(-0.3, 0.3)));
  } else {
    params = make_params({draw_param(rng, 4.0, 8.0, 0.2)}, {draw_param(rng, 0.7, 1.5, 0.1)});
    z = draw_z(rng, 1.5);
  }
  const CrVariable var = in_alpha ? CrVariable::Alpha : CrVariable::Argument;
  const double hs[] = {1e-3, 1e-4, 1e-5};
  double r[2][3];
  for (int i = 0; i < 3; ++i) {
    const IdentityReport rep = cauchy_riemann_check(params, z, hs[i], var);
    r[0][i] = rep.residual.h1();
    r[1][i] = rep.residual.h2();
  }
  bool ok = true;
  double slope[2];
  for (int s = 0; s < 2; ++s) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < 3; ++i) {
      const double x = std::log10(hs[i]);
      const double y = std::log10(r[s][i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    slope[s] = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    ok = ok && std::abs(slope[s] - 2.0) <= 0.2;
  }
  return {std::string(in_alpha ? "var:alpha1;" : "var:Z;") + describe(params), to_string(z),
          r[0][1], r[1][1], ok,
          "slopes " + std::to_string(slope[0]) + " " + std::to_string(slope[1])};
}

struct Entry {
  Attempt attempt;
  int samples;
  double tol;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = {
      {"thm2.1", {thm21, 1000, 1e-12}}, {"thm2.2", {thm22, 200, 0.5}},
      {"thm3.1", {thm31, 100, 1e-7}},   {"thm3.5", {thm35, 100, 1e-7}},
      {"thm3.8", {thm38, 100, 1e-6}},   {"thm4.1", {thm41, 500, 1e-9}},
      {"thm4.2", {thm42, 500, 1e-9}},   {"thm4.3", {thm43, 500, 1e-9}},
      {"thm5.1", {thm51, 500, 1e-9}},   {"thm5.2", {thm52, 20, 0.2}},
      {"thm6.1", {thm61, 500, 1e-9}},   {"thm6.2", {thm62, 500, 1e-9}},
      {"thm6.3", {thm63, 500, 1e-9}},   {"thm6.4", {thm64, 500, 1e-9}},
      {"thm7.1", {thm71, 100, 2.0}},    {"cs-eigen", {cs_eigen, 100, 0.0}},
      {"cs-norm", {cs_norm, 100, 1e-12}},
  };
  return r;
}

const Entry& lookup(const std::string& id) {
  const auto& r = registry();
  auto it = r.find(id);
  if (it == r.end()) throw InvalidParams("unknown theorem id '" + id + "'");
  return it->second;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, int index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "thm2.1", "thm2.2", "thm3.1", "thm3.5", "thm3.8", "thm4.1", "thm4.2", "thm4.3", "thm5.1",
      "thm5.2", "thm6.1", "thm6.2", "thm6.3", "thm6.4", "thm7.1", "cs-eigen", "cs-norm"};
  return ids;
}

bool is_theorem_id(const std::string& id) { return registry().count(id) != 0; }

int default_samples(const std::string& id) { return lookup(id).samples; }

double default_tolerance(const std::string& id) { return lookup(id).tol; }

SuiteResult run_suite(const std::string& id, const SuiteConfig& config) {
  const Entry& entry = lookup(id);
  SuiteResult result;
  result.theorem = id;
  result.seed = config.seed;
  result.samples = config.samples > 0 ? config.samples : entry.samples;
  result.tol = config.tol > 0.0 ? config.tol : entry.tol;
  for (int i = 0; i < result.samples; ++i) {
    SuiteCase c;
    c.seed = case_seed(config.seed, i);
    Rng rng(c.seed);
    bool done = false;
    for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
      try {
        Outcome o = entry.attempt(rng, result.tol, config.nodes);
        c.params = std::move(o.params);
        c.z = std::move(o.z);
        c.residual1 = o.r1;
        c.residual2 = o.r2;
        c.passed = o.passed;
        c.note = std::move(o.note);
        done = true;
      } catch (const Reject&) {
      } catch (const Error& e) {
        c.passed = false;
        c.note = e.what();
        done = true;
      }
    }
    if (!done) {
      c.skipped = true;
      c.note = "no admissible draw in " + std::to_string(kMaxAttempts) + " attempts";
      ++result.skipped;
    } else if (c.passed) {
      ++result.passed;
    } else {
      ++result.failed;
    }
    result.cases.push_back(std::move(c));
  }
  return result;
}

}  // namespace bchyper

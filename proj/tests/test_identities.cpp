#include <gtest/gtest.h>

#include <cmath>

#include "bchyper/errors.hpp"
#include "bchyper/gamma.hpp"
#include "bchyper/identities.hpp"
#include "support/oracles.hpp"

namespace {

using namespace bchyper;
using oracle::Gen;

BiComplex idem(Complex a, Complex b) { return BiComplex::from_idempotent(a, b); }

double worst(const Hyperbolic& h) { return std::max(h.h1(), h.h2()); }

std::vector<Complex> part(const std::vector<BiComplex>& v, int s) {
  std::vector<Complex> out;
  for (const auto& x : v) out.push_back(x.idem(s));
  return out;
}

std::vector<BiComplex> draw(Gen& g, int count, double lo, double hi) {
  std::vector<BiComplex> v;
  for (int i = 0; i < count; ++i) v.push_back(g.param(lo, hi));
  return v;
}

/// Oracle value of the doubled 2pF2q+1 from the even quadratic transform.
BiComplex even_side(const PfqParams& params, const BiComplex& z) {
  const int p = params.p();
  const int q = params.q();
  const double scale = std::pow(4.0, q + 1 - p);
  Complex out[2];
  for (int s = 1; s <= 2; ++s) {
    std::vector<Complex> a;
    std::vector<Complex> b{0.5};
    for (Complex x : params.alpha_parts(s)) {
      a.push_back(x / 2.0);
      a.push_back((x + 1.0) / 2.0);
    }
    for (Complex x : params.beta_parts(s)) {
      b.push_back(x / 2.0);
      b.push_back((x + 1.0) / 2.0);
    }
    const Complex zs = z.idem(s);
    out[s - 1] = 2.0 * oracle::pfq(a, b, zs * zs / scale);
  }
  return idem(out[0], out[1]);
}

BiComplex split_pfq(const PfqParams& params, const BiComplex& z) {
  const auto [a, b] = oracle::pfq_split(params.alphas(), params.betas(), z);
  return idem(a, b);
}

TEST(QuadraticTransforms, EvenExamples) {
  const PfqParams p11({BiComplex(1.3, 0.2)}, {2.1});
  const IdentityReport zero = quad_even(p11, 0.0);
  EXPECT_LT(oracle::rel(zero.lhs, 2.0), 1e-15);
  EXPECT_LT(oracle::rel(zero.rhs, 2.0), 1e-15);
  EXPECT_TRUE(zero.passed);

  const BiComplex z = idem(0.35, 0.15);
  const IdentityReport r = quad_even(p11, z);
  EXPECT_LT(worst(r.residual), 1e-10);
  EXPECT_LT(oracle::rel(r.lhs, even_side(p11, z)), 1e-13);

  const PfqParams gauss({0.7, 1.2}, {1.9});
  const BiComplex zg(0.3, 0.1);
  EXPECT_LT(worst(quad_even(gauss, zg).residual), 1e-10);
}

TEST(QuadraticTransforms, OddExamples) {
  const PfqParams p11({BiComplex(1.3, 0.2)}, {2.1});
  const IdentityReport zero = quad_odd(p11, 0.0);
  EXPECT_EQ(zero.lhs, BiComplex(0.0));
  EXPECT_EQ(zero.rhs, BiComplex(0.0));
  EXPECT_LT(worst(quad_odd(p11, idem(0.35, 0.15)).residual), 1e-10);

  const BiComplex z = idem(0.5, 0.2);
  const IdentityReport exp = quad_odd(PfqParams({}, {}), z);
  const BiComplex sinh2 = bc_exp(z) - bc_exp(-1.0 * z);
  EXPECT_LT(oracle::rel(exp.lhs, sinh2), 1e-14);
  EXPECT_LT(oracle::rel(exp.rhs, sinh2), 1e-14);
}

TEST(Saalschutz, Examples) {
  const IdentityReport n0 = saalschutz(0, 0.3, 0.7, 1.9);
  EXPECT_EQ(n0.lhs, BiComplex(1.0));
  EXPECT_EQ(n0.rhs, BiComplex(1.0));

  const double a1 = 0.3;
  const double a2 = 0.7;
  const double b = 1.9;
  const double lhs = 1.0 - a1 * a2 / (b * (a1 + a2 - b));
  const double rhs = (b - a1) * (b - a2) / (b * (b - a1 - a2));
  EXPECT_NEAR(lhs, rhs, 1e-15);
  const IdentityReport n1 = saalschutz(1, a1, a2, b);
  EXPECT_LT(oracle::rel(n1.lhs, BiComplex(lhs)), 1e-14);
  EXPECT_LT(worst(n1.residual), 1e-13);

  const IdentityReport n3 = saalschutz(3, idem(0.5, 0.2), 1.1, BiComplex(2.4, 0.3));
  EXPECT_LT(worst(n3.residual), 1e-12);
  EXPECT_TRUE(n3.passed);
}

TEST(Derivative, Examples) {
  const PfqParams gauss({0.7, 1.2}, {1.9});
  const BiComplex z = idem(0.2, 0.3);
  const IdentityReport k0 = derivative_relation(gauss, z, 0);
  EXPECT_LT(worst(k0.residual), 1e-15);

  const BiComplex w(0.4, 0.3);
  const IdentityReport e = derivative_relation(PfqParams({}, {}), w, 1);
  EXPECT_LT(oracle::rel(e.lhs, bc_exp(w)), 1e-14);
  EXPECT_LT(oracle::rel(e.rhs, bc_exp(w)), 1e-14);

  const IdentityReport k2 = derivative_relation(gauss, z, 2);
  EXPECT_LT(worst(k2.residual), 1e-9);
  // d^2/dz^2 2F1(a, b; c; z) = a(a+1) b(b+1) / (c(c+1)) 2F1(a+2, b+2; c+2; z)
  const double pre = 0.7 * 1.7 * 1.2 * 2.2 / (1.9 * 2.9);
  for (int s = 1; s <= 2; ++s) {
    const Complex ref = pre * oracle::pfq({2.7, 3.2}, {3.9}, z.idem(s));
    EXPECT_LT(oracle::rel(k2.lhs.idem(s), ref), 1e-12);
  }
}

TEST(Derivative, SeriesDerivativeMatchesDifferentiatedExp) {
  const Complex z(0.3, -0.2);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_LT(oracle::rel(series_derivative({}, {}, z, k), std::exp(z)), 1e-14) << k;
  }
}

TEST(CauchyRiemann, Examples) {
  const IdentityReport e = cauchy_riemann_check(PfqParams({}, {}), BiComplex(0.3, 0.2), 1e-5);
  EXPECT_LT(worst(e.residual), 1e-8);
  const PfqParams gauss({0.7, 1.2}, {1.9});
  EXPECT_LT(worst(cauchy_riemann_check(gauss, BiComplex(0.1, 0.05), 1e-5).residual), 1e-7);
  const PfqParams p11({1.2}, {2.5});
  const IdentityReport a = cauchy_riemann_check(p11, idem(0.3, 0.4), 1e-5, CrVariable::Alpha, 0);
  EXPECT_LT(worst(a.residual), 1e-7);
}

TEST(Contiguous, Examples) {
  const BiComplex z1 = idem(0.2, 0.4);
  const PfqParams p11({2.0}, {3.0});
  for (auto* fn : {&contiguous_alpha_plus, &contiguous_alpha_minus, &contiguous_beta_minus,
                   &contiguous_beta_plus}) {
    const IdentityReport t = fn(p11, z1, {0, 0}, kIdentityTol);
    EXPECT_LT(worst(t.residual), 1e-12);
    EXPECT_LT(oracle::rel(t.lhs, 2.0 * split_pfq(p11, z1)), 1e-13);
  }
  EXPECT_LT(worst(contiguous_alpha_plus(p11, z1, {1, 0}).residual), 1e-10);
  const PfqParams g({2.0, 1.5}, {2.5});
  EXPECT_LT(worst(contiguous_alpha_plus(g, BiComplex(0.15, 0.1), {2, 1}).residual), 1e-9);

  const PfqParams g2({2.5, 1.5}, {3.2});
  const BiComplex zg(0.15, 0.1);
  EXPECT_LT(worst(contiguous_alpha_minus(g2, zg, {1, 1}).residual), 1e-10);
  const PfqParams p32({2.6, 1.4, 1.8}, {3.1, 1.8});
  EXPECT_LT(worst(contiguous_alpha_minus(p32, zg, {2, 0}).residual), 1e-9);

  const PfqParams b11({1.2}, {3.7});
  EXPECT_LT(worst(contiguous_beta_minus(b11, idem(0.3, 0.1), {1, 0}).residual), 1e-10);
  EXPECT_LT(worst(contiguous_beta_minus(g2, zg, {1, 1}).residual), 1e-9);

  const PfqParams c11({1.2}, {2.5});
  EXPECT_LT(worst(contiguous_beta_plus(c11, idem(0.3, 0.1), {1, 0}).residual), 1e-10);
  EXPECT_LT(worst(contiguous_beta_plus(g2, zg, {2, 2}).residual), 1e-9);
}

TEST(Contiguous, ShiftConjugate) {
  const ShiftM m{2, 5};
  EXPECT_EQ(m.conj().m, 5);
  EXPECT_EQ(m.conj().n, 2);
  EXPECT_EQ(m.value(), idem(2.0, 5.0));
}

TEST(Ode, Examples) {
  const OdeResidual e = ode_residual(PfqParams({}, {}), 0.5, 40);
  EXPECT_LT(worst(e.residual), 1e-13);
  EXPECT_TRUE(e.within_bound());

  const OdeResidual k = ode_residual(PfqParams({1.3}, {2.2}), idem(0.4, 0.2), 60);
  EXPECT_LT(worst(k.residual), 1e-11);
  EXPECT_TRUE(k.within_bound());

  const OdeResidual g = ode_residual(PfqParams({0.7, 1.2}, {1.9}), BiComplex(0.2, 0.1), 200);
  EXPECT_LT(worst(g.residual), 1e-10);
  EXPECT_TRUE(g.within_bound());
}

TEST(Ode, ConfluentOperatorForm) {
  // z y'' + (b - z) y' - a y = 0 with y, y', y'' from the oracle.
  const Complex a = 1.3;
  const Complex b = 2.2;
  const Complex z(0.4, 0.2);
  const Complex y = oracle::pfq({a}, {b}, z);
  const Complex y1 = a / b * oracle::pfq({a + 1.0}, {b + 1.0}, z);
  const Complex y2 = a * (a + 1.0) / (b * (b + 1.0)) * oracle::pfq({a + 2.0}, {b + 2.0}, z);
  EXPECT_LT(std::abs(z * y2 + (b - z) * y1 - a * y), 1e-14);
  const auto c = series_coefficients({a}, {b}, 60);
  ASSERT_EQ(c.size(), 61u);
  Complex sum = 0.0;
  Complex pw = 1.0;
  for (const Complex& cn : c) {
    sum += cn * pw;
    pw *= z;
  }
  EXPECT_LT(oracle::rel(sum, y), 1e-14);
}

TEST(IdentityReport, ResidualIsRelativePerComponent) {
  const BiComplex lhs = idem(1.0, 100.0);
  const BiComplex rhs = idem(1.0 + 1e-6, 100.0);
  const Hyperbolic r = relative_residual(lhs, rhs);
  EXPECT_NEAR(r.h1(), 1e-6, 1e-10);
  EXPECT_LT(r.h2(), 1e-13);
  EXPECT_TRUE(make_report(lhs, rhs, 1e-5).passed);
  EXPECT_FALSE(make_report(lhs, rhs, 1e-7).passed);
  EXPECT_TRUE(r.nonnegative());
}

TEST(IdentityProperty, QuadraticSidesMatchOracle) {
  Gen g(401);
  for (int i = 0; i < 200; ++i) {
    const int q = g.integer(0, 2);
    const int p = g.integer(0, q + 1);
    const PfqParams params(draw(g, p, 0.2, 3.0), draw(g, q, 0.5, 3.0));
    const BiComplex z = g.in_ball(0.0, p == q + 1 ? 0.8 : 1.5);
    const IdentityReport even = quad_even(params, z);
    const IdentityReport odd = quad_odd(params, z);
    EXPECT_TRUE(even.passed) << i;
    EXPECT_TRUE(odd.passed) << i;
    EXPECT_LT(oracle::scaled_gap(even.lhs, even_side(params, z)), 1e-12) << i;
    const BiComplex two = 2.0 * split_pfq(params, z);
    EXPECT_LT(oracle::scaled_gap(even.rhs + odd.rhs, two), 1e-12) << i;
  }
}

TEST(IdentityProperty, SaalschutzMatchesDirectSum) {
  Gen g(402);
  for (int i = 0; i < 300; ++i) {
    const int n = g.integer(0, 8);
    const BiComplex a1 = g.param(0.2, 3.0);
    const BiComplex a2 = g.param(0.2, 3.0);
    const BiComplex b = g.param(0.5, 4.0);
    const IdentityReport r = saalschutz(n, a1, a2, b);
    Complex sums[2];
    Complex prods[2];
    double allowance[2];
    for (int s = 1; s <= 2; ++s) {
      const oracle::cld x1 = oracle::to_ld(a1.idem(s));
      const oracle::cld x2 = oracle::to_ld(a2.idem(s));
      const oracle::cld y = oracle::to_ld(b.idem(s));
      const oracle::cld c = 1.0L + x1 + x2 - y - static_cast<long double>(n);
      oracle::cld t = 1.0L;
      oracle::cld sum = 1.0L;
      oracle::cld rhs = 1.0L;
      long double largest = 1.0L;
      for (int k = 0; k < n; ++k) {
        const long double kk = k;
        t *= (kk - n) * (x1 + kk) * (x2 + kk) / ((y + kk) * (c + kk) * (kk + 1.0L));
        sum += t;
        largest = std::max(largest, std::abs(t));
        rhs *= (y - x1 + kk) * (y - x2 + kk) / ((y + kk) * (y - x1 - x2 + kk));
      }
      // The terminating sum cancels; its error scales with the largest term.
      EXPECT_LT(std::abs(sum - rhs), 1e-16L * largest) << i;
      sums[s - 1] = oracle::to_d(sum);
      prods[s - 1] = oracle::to_d(rhs);
      allowance[s - 1] = static_cast<double>(1e-16L * largest);
    }
    const BiComplex lhs = idem(sums[0], sums[1]);
    const double scale = std::max(std::abs(lhs.idem1()), std::abs(lhs.idem2()));
    for (int s = 1; s <= 2; ++s) {
      EXPECT_LT(std::abs(r.lhs.idem(s) - sums[s - 1]), allowance[s - 1] + 1e-14 * scale) << i;
    }
    EXPECT_LT(oracle::scaled_gap(r.rhs, idem(prods[0], prods[1])), 1e-14) << i;
  }
}

TEST(IdentityProperty, DerivativeMatchesShiftedOracle) {
  Gen g(403);
  for (int i = 0; i < 200; ++i) {
    const int q = g.integer(0, 2);
    const int p = g.integer(0, q + 1);
    const std::vector<BiComplex> a = draw(g, p, 0.2, 3.0);
    const std::vector<BiComplex> b = draw(g, q, 0.5, 3.0);
    const BiComplex z = g.in_ball(0.0, p == q + 1 ? 0.7 : 1.5);
    const int k = g.integer(0, 4);
    const IdentityReport r = derivative_relation(PfqParams(a, b), z, k);
    EXPECT_TRUE(r.passed) << i;
    for (int s = 1; s <= 2; ++s) {
      std::vector<Complex> as = part(a, s);
      std::vector<Complex> bs = part(b, s);
      Complex pre = 1.0;
      for (auto& x : as) {
        for (int j = 0; j < k; ++j) pre *= x + static_cast<double>(j);
        x += static_cast<double>(k);
      }
      for (auto& x : bs) {
        for (int j = 0; j < k; ++j) pre /= x + static_cast<double>(j);
        x += static_cast<double>(k);
      }
      const Complex ref = pre * oracle::pfq(as, bs, z.idem(s));
      EXPECT_LT(oracle::rel(r.rhs.idem(s), ref), 1e-11) << i;
    }
  }
}

TEST(IdentityProperty, EachComponentIsAClassicalIdentity) {
  // Embedding one idempotent component on both sides yields the same sides.
  Gen g(404);
  for (int i = 0; i < 200; ++i) {
    const std::vector<BiComplex> a = draw(g, 1, 0.2, 3.0);
    const std::vector<BiComplex> b = draw(g, 1, 0.5, 3.0);
    const BiComplex z = g.in_ball(0.05, 1.5);
    const IdentityReport full = derivative_relation(PfqParams(a, b), z, 1);
    for (int s = 1; s <= 2; ++s) {
      const PfqParams emb({BiComplex(a[0].idem(s))}, {BiComplex(b[0].idem(s))});
      const IdentityReport one = derivative_relation(emb, BiComplex(z.idem(s)), 1);
      EXPECT_LT(oracle::rel(one.lhs.idem1(), full.lhs.idem(s)), 1e-13) << i;
      EXPECT_LT(oracle::rel(one.rhs.idem1(), full.rhs.idem(s)), 1e-13) << i;
      EXPECT_EQ(one.lhs.idem1(), one.lhs.idem2());
    }
  }
}

TEST(IdentityProperty, OdeRecurrenceHoldsToRounding) {
  Gen g(405);
  for (int i = 0; i < 300; ++i) {
    const int q = g.integer(0, 3);
    const int p = g.integer(0, q + 1);
    const PfqParams params(draw(g, p, 0.2, 3.0), draw(g, q, 0.5, 3.0));
    const Hyperbolic u = ode_recurrence_ulps(params, 64);
    EXPECT_LE(worst(u), 2.0) << i;
  }
}

TEST(IdentityErrors, InvalidShiftsThrow) {
  const PfqParams p11({1.2}, {2.0});
  EXPECT_THROW(contiguous_beta_minus(p11, BiComplex(0.1), {2, 0}), InvalidParams);
  EXPECT_THROW(derivative_relation(PfqParams({1.0, 1.0}, {1.0}), BiComplex(1.5), 1),
               DomainError);
}

}  // namespace

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bchyper/errors.hpp"
#include "bchyper/io.hpp"
#include "bchyper/numbers.hpp"
#include "support/oracles.hpp"

namespace {

using namespace bchyper;
using oracle::Gen;

constexpr double kEps = std::numeric_limits<double>::epsilon();

void expect_bc_eq(const BiComplex& a, const BiComplex& b, double tol = 0.0) {
  EXPECT_NEAR(a.re1().real(), b.re1().real(), tol);
  EXPECT_NEAR(a.re1().imag(), b.re1().imag(), tol);
  EXPECT_NEAR(a.re2().real(), b.re2().real(), tol);
  EXPECT_NEAR(a.re2().imag(), b.re2().imag(), tol);
}

// Largest cartesian-part gap, in ulps of `scale`.
double ulps(const BiComplex& a, const BiComplex& b, double scale) {
  const double d = std::max({std::abs(a.re1() - b.re1()), std::abs(a.re2() - b.re2())});
  return d / (kEps * std::max(scale, 1e-300));
}

TEST(Numbers, AddExamples) {
  EXPECT_EQ(units::e1 + units::e2, BiComplex(1.0));
  const BiComplex z(Complex(0.3, -1.2), Complex(2.0, 0.5));
  EXPECT_EQ(z + BiComplex(), z);
  EXPECT_EQ(BiComplex(1.0, 1.0) + BiComplex(2.0, 3.0), BiComplex(3.0, 4.0));
}

TEST(Numbers, MulExamples) {
  EXPECT_EQ(units::e1 * units::e2, BiComplex());
  EXPECT_EQ(units::e1 * units::e1, units::e1);
  EXPECT_EQ(units::e2 * units::e2, units::e2);
  EXPECT_EQ(units::i2 * units::i2, BiComplex(-1.0));
  EXPECT_EQ(units::i1 * units::i1, BiComplex(-1.0));
  EXPECT_EQ(units::i1 * units::i2, units::k);
  EXPECT_EQ(units::k * units::k, BiComplex(1.0));
}

TEST(Numbers, IdempotentUnitIdentities) {
  EXPECT_EQ(units::e1 - units::e2, units::k);
  EXPECT_EQ(units::e1 + units::e2, units::one);
}

TEST(Numbers, Conjugates) {
  const Conjugates c = conjugates(BiComplex(2.5));
  EXPECT_EQ(c.bar, BiComplex(2.5));
  EXPECT_EQ(c.tilde, BiComplex(2.5));
  EXPECT_EQ(c.star, BiComplex(2.5));
  EXPECT_EQ(conjugates(units::i2).tilde, -units::i2);
  // 1 + i2 i1 = 1 + k
  const BiComplex x = units::one + units::k;
  EXPECT_EQ(conjugates(x).star, x);

  const BiComplex z(Complex(1, 2), Complex(3, 4));
  const Conjugates cz = conjugates(z);
  EXPECT_EQ(cz.bar, BiComplex(Complex(1, -2), Complex(3, -4)));
  EXPECT_EQ(cz.tilde, BiComplex(Complex(1, 2), Complex(-3, -4)));
  EXPECT_EQ(cz.star, BiComplex(Complex(1, -2), Complex(-3, 4)));
  EXPECT_EQ(bar(z), cz.bar);
}

TEST(Numbers, IdempotentSplitExamples) {
  const Complex z(0.7, -0.2);
  auto [a, b] = idempotent_split(BiComplex(z));
  EXPECT_EQ(a, z);
  EXPECT_EQ(b, z);
  std::tie(a, b) = idempotent_split(units::e1);
  EXPECT_EQ(a, Complex(1.0));
  EXPECT_EQ(b, Complex(0.0));
  std::tie(a, b) = idempotent_split(units::i2);
  EXPECT_EQ(a, Complex(0.0, -1.0));
  EXPECT_EQ(b, Complex(0.0, 1.0));
}

TEST(Numbers, InverseExamples) {
  EXPECT_EQ(inverse(BiComplex(1.0)), BiComplex(1.0));
  EXPECT_THROW(inverse(units::e1), NullConeError);
  EXPECT_THROW(inverse(BiComplex()), NullConeError);
  const BiComplex w = inverse(BiComplex::from_idempotent(2.0, 4.0));
  expect_bc_eq(w, BiComplex::from_idempotent(0.5, 0.25), 1e-16);
  EXPECT_THROW(BiComplex(1.0) / units::e2, NullConeError);
}

TEST(Numbers, NormsExamples) {
  Norms n = norms(BiComplex());
  EXPECT_EQ(n.euclidean, 0.0);
  EXPECT_EQ(n.hyperbolic, Hyperbolic(0.0));

  n = norms(units::e1);
  EXPECT_NEAR(n.euclidean, 1.0 / std::sqrt(2.0), 2 * kEps);
  EXPECT_EQ(n.hyperbolic.h1(), 1.0);
  EXPECT_EQ(n.hyperbolic.h2(), 0.0);

  n = norms(BiComplex::from_idempotent(3.0, 4.0));
  EXPECT_NEAR(n.euclidean, std::sqrt(12.5), 1e-15);
  EXPECT_NEAR(n.hyperbolic.h1(), 3.0, 1e-15);
  EXPECT_NEAR(n.hyperbolic.h2(), 4.0, 1e-15);
}

TEST(Numbers, HLessExamples) {
  EXPECT_EQ(h_less(Hyperbolic(0.0), Hyperbolic(1.0)), HOrder::less);
  EXPECT_EQ(h_less(Hyperbolic::from_idempotent(1, 0), Hyperbolic::from_idempotent(0, 1)),
            HOrder::incomparable);
  EXPECT_EQ(h_less(Hyperbolic::from_idempotent(0.5, 0.5), Hyperbolic(1.0)), HOrder::less);
  EXPECT_EQ(h_less(Hyperbolic(1.0), Hyperbolic(1.0)), HOrder::not_less);
  EXPECT_EQ(h_less(Hyperbolic::from_idempotent(0.5, 1.0), Hyperbolic(1.0)), HOrder::not_less);
}

TEST(Numbers, HyperbolicViews) {
  const Hyperbolic h = Hyperbolic::from_xy(2.0, 0.5);
  EXPECT_EQ(h.h1(), 2.5);
  EXPECT_EQ(h.h2(), 1.5);
  EXPECT_EQ(h.x(), 2.0);
  EXPECT_EQ(h.y(), 0.5);
  EXPECT_TRUE(h.strictly_positive());
  EXPECT_FALSE(Hyperbolic::from_xy(0.0, 1.0).strictly_positive());
  EXPECT_TRUE(Hyperbolic::from_xy(1.0, 1.0).nonnegative());
  EXPECT_FALSE(Hyperbolic::from_xy(0.0, 1.0).nonnegative());
}

TEST(Numbers, ExpAndPowExamples) {
  EXPECT_EQ(bc_exp(BiComplex()), BiComplex(1.0));
  const BiComplex z(Complex(0.3, -0.4), Complex(1.1, 0.2));
  EXPECT_LT(ulps(bc_pow(z, 2), z * z, euclidean_norm(z) * euclidean_norm(z)), 4.0);
  EXPECT_LT(ulps(bc_pow(z, BiComplex(2.0)), z * z, euclidean_norm(z) * euclidean_norm(z)), 4.0);
  const BiComplex r = bc_pow(BiComplex::from_idempotent(4.0, 9.0), BiComplex(0.5));
  EXPECT_NEAR(std::abs(r.idem1() - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.idem2() - 3.0), 0.0, 1e-15);
}

TEST(Numbers, PowErrors) {
  EXPECT_THROW(bc_pow(units::e1, BiComplex(0.5)), NullConeError);
  EXPECT_THROW(bc_pow(BiComplex::from_idempotent(-2.0, 3.0), BiComplex(0.5)), BranchCutError);
  EXPECT_EQ(bc_pow(BiComplex::from_idempotent(-2.0, 3.0), 2), BiComplex::from_idempotent(4, 9));
  EXPECT_EQ(bc_pow(units::e1, 3), units::e1);
}

TEST(Numbers, NullConeAndZeroDivisors) {
  EXPECT_TRUE(in_null_cone(BiComplex()));
  EXPECT_FALSE(is_zero_divisor(BiComplex()));
  EXPECT_TRUE(is_zero_divisor(units::e1));
  EXPECT_TRUE(is_zero_divisor(BiComplex::from_idempotent(0.0, Complex(2, 3))));
  EXPECT_FALSE(is_zero_divisor(BiComplex(1.0)));
  // z^2 + z'^2 = 0 with z = 1, z' = i1
  EXPECT_TRUE(in_null_cone(BiComplex(1.0, Complex(0.0, 1.0))));
  EXPECT_TRUE(component_vanishes(BiComplex::from_idempotent(1e-16, 1.0), 1));
  EXPECT_FALSE(component_vanishes(BiComplex::from_idempotent(1e-12, 1.0), 1));
}

TEST(Numbers, HBall) {
  const HBall ball(BiComplex(), Hyperbolic(1.0));
  EXPECT_TRUE(ball.contains(BiComplex::from_idempotent(0.5, Complex(0, 0.9))));
  EXPECT_FALSE(ball.contains(BiComplex::from_idempotent(0.5, 1.0)));
  EXPECT_FALSE(ball.contains(BiComplex::from_idempotent(1.2, 0.1)));
  EXPECT_THROW(HBall(BiComplex(), Hyperbolic::from_idempotent(1.0, 0.0)), PreconditionError);
}

TEST(NumbersProperty, RingAxioms) {
  Gen g(101);
  for (int i = 0; i < 2000; ++i) {
    const BiComplex a = g.bicomplex(-3, 3);
    const BiComplex b = g.bicomplex(-3, 3);
    const BiComplex c = g.bicomplex(-3, 3);
    const double na = euclidean_norm(a);
    const double nb = euclidean_norm(b);
    const double nc = euclidean_norm(c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_LE(ulps((a + b) + c, a + (b + c), na + nb + nc), 4.0);
    EXPECT_LE(ulps((a * b) * c, a * (b * c), 2.0 * na * nb * nc), 4.0);
    EXPECT_LE(ulps(a * (b + c), a * b + a * c, 2.0 * na * (nb + nc)), 4.0);
  }
}

TEST(NumbersProperty, IdempotentHomomorphism) {
  Gen g(102);
  for (int i = 0; i < 2000; ++i) {
    const BiComplex a = g.bicomplex(-3, 3);
    const BiComplex b = g.bicomplex(-3, 3);
    const double scale = 4.0 * euclidean_norm(a) * euclidean_norm(b);
    for (int s = 1; s <= 2; ++s) {
      EXPECT_LE(std::abs((a + b).idem(s) - (a.idem(s) + b.idem(s))),
                4 * kEps * (euclidean_norm(a) + euclidean_norm(b)));
      EXPECT_LE(std::abs((a * b).idem(s) - a.idem(s) * b.idem(s)), 4 * kEps * scale);
    }
  }
}

TEST(NumbersProperty, IdempotentRoundTrip) {
  Gen g(103);
  for (int i = 0; i < 2000; ++i) {
    const BiComplex a = g.bicomplex(-5, 5);
    const BiComplex back = BiComplex::from_idempotent(a.idem1(), a.idem2());
    EXPECT_LE(ulps(back, a, euclidean_norm(a)), 2.0);
  }
}

TEST(NumbersProperty, HyperbolicNormMultiplicative) {
  Gen g(104);
  for (int i = 0; i < 2000; ++i) {
    const BiComplex a = g.bicomplex(-3, 3);
    const BiComplex b = g.bicomplex(-3, 3);
    const Hyperbolic lhs = hnorm(a * b);
    const Hyperbolic rhs = hnorm(a) * hnorm(b);
    EXPECT_TRUE(lhs.nonnegative());
    const double scale = 4.0 * euclidean_norm(a) * euclidean_norm(b);
    EXPECT_NEAR(lhs.h1(), rhs.h1(), 8 * kEps * scale);
    EXPECT_NEAR(lhs.h2(), rhs.h2(), 8 * kEps * scale);
  }
}

TEST(NumbersProperty, InverseErrorsExactlyOnNullCone) {
  Gen g(105);
  for (int i = 0; i < 1000; ++i) {
    Complex z1 = g.complex(-2, 2);
    Complex z2 = g.complex(-2, 2);
    const int pick = g.integer(0, 3);
    if (pick == 1) z1 = 0.0;
    if (pick == 2) z2 = 0.0;
    const BiComplex a = BiComplex::from_idempotent(z1, z2);
    const bool singular = z1 == 0.0 || z2 == 0.0;
    EXPECT_EQ(in_null_cone(a), singular);
    EXPECT_EQ(is_zero_divisor(a), pick == 1 || pick == 2);
    if (singular) {
      EXPECT_THROW(inverse(a), NullConeError);
    } else {
      EXPECT_LT(oracle::rel(a * inverse(a), BiComplex(1.0)), 1e-14);
    }
  }
}

TEST(NumbersProperty, PrincipalPowerMatchesComplexPow) {
  Gen g(106);
  for (int i = 0; i < 500; ++i) {
    const BiComplex a = BiComplex::from_idempotent(g.polar(0.1, 3.0), g.polar(0.1, 3.0));
    const BiComplex w = g.bicomplex(-2, 2);
    if (std::abs(a.idem1().imag()) < 1e-3 && a.idem1().real() < 0) continue;
    if (std::abs(a.idem2().imag()) < 1e-3 && a.idem2().real() < 0) continue;
    const BiComplex p = bc_pow(a, w);
    const Complex ref[2] = {std::pow(a.idem1(), w.idem1()), std::pow(a.idem2(), w.idem2())};
    const double scale = std::max(std::abs(ref[0]), std::abs(ref[1]));
    for (int s = 1; s <= 2; ++s) {
      EXPECT_LT(std::abs(p.idem(s) - ref[s - 1]), 1e-13 * scale);
    }
  }
}

TEST(Io, PrintParseRoundTrip) {
  Gen g(107);
  for (int i = 0; i < 500; ++i) {
    const BiComplex a = g.bicomplex(-1e3, 1e3);
    EXPECT_EQ(parse_bicomplex(to_string(a)), a);
    EXPECT_EQ(parse_bicomplex(to_json(a)), a);
  }
}

TEST(Io, Grammar) {
  expect_bc_eq(parse_bicomplex("1+2i1-0.5i2+3k"),
               BiComplex(Complex(1, 2), Complex(-0.5, 3)));
  expect_bc_eq(parse_bicomplex("0.5e1+0.25e2"), BiComplex::from_idempotent(0.5, 0.25), 1e-16);
  expect_bc_eq(parse_bicomplex("(1+2i)*e1 + 3*e2"),
               BiComplex::from_idempotent(Complex(1, 2), 3.0), 1e-16);
  expect_bc_eq(parse_bicomplex("2.5e-1"), BiComplex(0.25));
  expect_bc_eq(parse_bicomplex("1e1"), units::e1);
  expect_bc_eq(parse_bicomplex("1e+1"), BiComplex(10.0));
  expect_bc_eq(parse_bicomplex("2e10"), BiComplex(2e10));
  expect_bc_eq(parse_bicomplex("j"), units::i2);
  expect_bc_eq(parse_bicomplex("{\"idem1\":[1,0],\"idem2\":[0,0]}"), units::e1);
  expect_bc_eq(parse_bicomplex("{\"re1\":[1,2],\"re2\":[3,4]}"),
               BiComplex(Complex(1, 2), Complex(3, 4)));
  EXPECT_THROW(parse_bicomplex("1+"), ParseError);
  EXPECT_THROW(parse_bicomplex("2q"), ParseError);
  EXPECT_THROW(parse_bicomplex(""), ParseError);
  EXPECT_THROW(parse_bicomplex("{\"re1\":[1]}"), ParseError);
}

}  // namespace

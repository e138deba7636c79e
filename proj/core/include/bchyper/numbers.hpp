#pragma once

#include <complex>
#include <utility>

namespace bchyper {

using Complex = std::complex<double>;

/// Bicomplex number Z = z + i2 z' with z, z' in C(i1).
///
/// The cartesian pair is the stored truth. The idempotent components
/// z1 = z - i1 z' and z2 = z + i1 z' (so that Z = z1 e1 + z2 e2) are
/// recomputed on every access.
class BiComplex {
 public:
  constexpr BiComplex() = default;
  constexpr BiComplex(double x) : re1_(x, 0.0) {}  // NOLINT: implicit real embedding
  constexpr BiComplex(Complex z, Complex z_prime = {}) : re1_(z), re2_(z_prime) {}  // NOLINT

  static BiComplex from_idempotent(Complex z1, Complex z2);

  constexpr Complex re1() const { return re1_; }
  constexpr Complex re2() const { return re2_; }
  Complex idem1() const {
    return {re1_.real() + re2_.imag(), re1_.imag() - re2_.real()};
  }
  Complex idem2() const {
    return {re1_.real() - re2_.imag(), re1_.imag() + re2_.real()};
  }
  /// Idempotent component s in {1, 2}.
  Complex idem(int s) const { return s == 1 ? idem1() : idem2(); }

  BiComplex& operator+=(const BiComplex& o) {
    re1_ += o.re1_;
    re2_ += o.re2_;
    return *this;
  }
  BiComplex& operator-=(const BiComplex& o) {
    re1_ -= o.re1_;
    re2_ -= o.re2_;
    return *this;
  }
  BiComplex& operator*=(const BiComplex& o);
  BiComplex& operator/=(const BiComplex& o);

  friend bool operator==(const BiComplex& a, const BiComplex& b) {
    return a.re1_ == b.re1_ && a.re2_ == b.re2_;
  }

 private:
  Complex re1_{};
  Complex re2_{};
};

BiComplex operator+(BiComplex a, const BiComplex& b);
BiComplex operator-(BiComplex a, const BiComplex& b);
BiComplex operator-(const BiComplex& a);
BiComplex operator*(const BiComplex& a, const BiComplex& b);
/// Throws NullConeError when `b` is not invertible.
BiComplex operator/(const BiComplex& a, const BiComplex& b);

namespace units {
inline const BiComplex one{1.0};
inline const BiComplex i1{Complex(0.0, 1.0)};
inline const BiComplex i2{Complex(0.0, 0.0), Complex(1.0, 0.0)};
inline const BiComplex k{Complex(0.0, 0.0), Complex(0.0, 1.0)};
inline const BiComplex e1{Complex(0.5, 0.0), Complex(0.0, 0.5)};
inline const BiComplex e2{Complex(0.5, 0.0), Complex(0.0, -0.5)};
}  // namespace units

/// Hyperbolic number x + k y, held by its idempotent pair (x + y, x - y).
class Hyperbolic {
 public:
  constexpr Hyperbolic() = default;
  constexpr Hyperbolic(double x) : h1_(x), h2_(x) {}  // NOLINT
  static constexpr Hyperbolic from_idempotent(double h1, double h2) {
    Hyperbolic h;
    h.h1_ = h1;
    h.h2_ = h2;
    return h;
  }
  static constexpr Hyperbolic from_xy(double x, double y) {
    return from_idempotent(x + y, x - y);
  }

  constexpr double h1() const { return h1_; }
  constexpr double h2() const { return h2_; }
  constexpr double idem(int s) const { return s == 1 ? h1_ : h2_; }
  constexpr double x() const { return 0.5 * (h1_ + h2_); }
  constexpr double y() const { return 0.5 * (h1_ - h2_); }

  /// Membership in D+ (both idempotent components >= 0).
  constexpr bool nonnegative() const { return h1_ >= 0.0 && h2_ >= 0.0; }
  constexpr bool strictly_positive() const { return h1_ > 0.0 && h2_ > 0.0; }

  BiComplex to_bicomplex() const {
    return BiComplex::from_idempotent(h1_, h2_);
  }

  friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) {
    return from_idempotent(a.h1_ + b.h1_, a.h2_ + b.h2_);
  }
  friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
    return from_idempotent(a.h1_ * b.h1_, a.h2_ * b.h2_);
  }
  friend constexpr bool operator==(Hyperbolic a, Hyperbolic b) {
    return a.h1_ == b.h1_ && a.h2_ == b.h2_;
  }

 private:
  double h1_ = 0.0;
  double h2_ = 0.0;
};

enum class HOrder { less, not_less, incomparable };

/// Partial order <_h: `less` iff both idempotent components are strictly
/// smaller; `incomparable` iff one is strictly smaller and the other strictly
/// larger.
HOrder h_less(const Hyperbolic& a, const Hyperbolic& b);

struct Conjugates {
  BiComplex bar;    // conj(z) + i2 conj(z')
  BiComplex tilde;  // z - i2 z'
  BiComplex star;   // conj(z) - i2 conj(z')
};

Conjugates conjugates(const BiComplex& a);
BiComplex bar(const BiComplex& a);

std::pair<Complex, Complex> idempotent_split(const BiComplex& a);

struct Norms {
  double euclidean;
  Hyperbolic hyperbolic;
};

Norms norms(const BiComplex& a);
Hyperbolic hnorm(const BiComplex& a);
double euclidean_norm(const BiComplex& a);

/// Relative threshold for treating an idempotent component as zero.
inline constexpr double kNullConeRelTol = 1e-14;

/// True when idempotent component `s` is zero up to the relative threshold.
bool component_vanishes(const BiComplex& a, int s);
/// Some idempotent component vanishes (includes Z = 0).
bool in_null_cone(const BiComplex& a);
/// Exactly one idempotent component vanishes.
bool is_zero_divisor(const BiComplex& a);

/// Throws NullConeError on the null cone.
BiComplex inverse(const BiComplex& a);

BiComplex bc_exp(const BiComplex& a);
/// Principal-branch power per idempotent component. Integer exponent
/// components use repeated multiplication and accept any base (a zero base
/// component only with a nonnegative exponent). Throws NullConeError or
/// BranchCutError otherwise.
BiComplex bc_pow(const BiComplex& a, const BiComplex& w);
BiComplex bc_pow(const BiComplex& a, int n);

/// Open ball B_h(c, R) = { Z : |Z - c|_h <_h R }.
class HBall {
 public:
  /// Throws PreconditionError unless both radius components are > 0.
  HBall(BiComplex center, Hyperbolic radius);
  const BiComplex& center() const { return center_; }
  const Hyperbolic& radius() const { return radius_; }
  bool contains(const BiComplex& z) const;

 private:
  BiComplex center_;
  Hyperbolic radius_;
};

}  // namespace bchyper

#include "bchyper/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "bchyper/errors.hpp"

namespace bchyper {

namespace {

Complex times_i(Complex z) { return {-z.imag(), z.real()}; }

Complex ipow(Complex base, long long n) {
  bool invert = n < 0;
  unsigned long long e = invert ? static_cast<unsigned long long>(-n)
                                : static_cast<unsigned long long>(n);
  Complex result = 1.0;
  Complex b = base;
  while (e != 0) {
    if (e & 1ULL) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return invert ? 1.0 / result : result;
}

bool integral_exponent(Complex w, long long& n) {
  if (w.imag() != 0.0) return false;
  double r = w.real();
  if (std::abs(r) > 1e9 || std::nearbyint(r) != r) return false;
  n = static_cast<long long>(r);
  return true;
}

Complex component_pow(Complex base, Complex w, bool vanishes, int s) {
  long long n = 0;
  if (integral_exponent(w, n)) {
    if (vanishes && n < 0) {
      throw NullConeError("bc_pow: negative power of a vanishing component " +
                          std::to_string(s));
    }
    if (vanishes) return n == 0 ? Complex(1.0) : Complex(0.0);
    return ipow(base, n);
  }
  if (vanishes) {
    throw NullConeError("bc_pow: non-integer power of a vanishing component " +
                        std::to_string(s));
  }
  if (base.imag() == 0.0 && base.real() < 0.0) {
    throw BranchCutError("bc_pow: component " + std::to_string(s) +
                         " lies on the negative real cut");
  }
  return std::pow(base, w);
}

}  // namespace

BiComplex BiComplex::from_idempotent(Complex z1, Complex z2) {
  Complex sum = z1 + z2;
  Complex diff = z1 - z2;
  return {0.5 * sum, 0.5 * times_i(diff)};
}

BiComplex& BiComplex::operator*=(const BiComplex& o) {
  Complex r1 = re1_ * o.re1_ - re2_ * o.re2_;
  Complex r2 = re2_ * o.re1_ + re1_ * o.re2_;
  re1_ = r1;
  re2_ = r2;
  return *this;
}

BiComplex& BiComplex::operator/=(const BiComplex& o) {
  *this *= inverse(o);
  return *this;
}

BiComplex operator+(BiComplex a, const BiComplex& b) { return a += b; }
BiComplex operator-(BiComplex a, const BiComplex& b) { return a -= b; }
BiComplex operator-(const BiComplex& a) { return {-a.re1(), -a.re2()}; }
BiComplex operator*(const BiComplex& a, const BiComplex& b) {
  BiComplex r = a;
  return r *= b;
}
BiComplex operator/(const BiComplex& a, const BiComplex& b) {
  return a * inverse(b);
}

HOrder h_less(const Hyperbolic& a, const Hyperbolic& b) {
  bool l1 = a.h1() < b.h1();
  bool l2 = a.h2() < b.h2();
  if (l1 && l2) return HOrder::less;
  bool g1 = a.h1() > b.h1();
  bool g2 = a.h2() > b.h2();
  if ((l1 && g2) || (l2 && g1)) return HOrder::incomparable;
  return HOrder::not_less;
}

Conjugates conjugates(const BiComplex& a) {
  Complex z = a.re1();
  Complex zp = a.re2();
  return {BiComplex(std::conj(z), std::conj(zp)), BiComplex(z, -zp),
          BiComplex(std::conj(z), -std::conj(zp))};
}

BiComplex bar(const BiComplex& a) {
  return {std::conj(a.re1()), std::conj(a.re2())};
}

std::pair<Complex, Complex> idempotent_split(const BiComplex& a) {
  return {a.idem1(), a.idem2()};
}

double euclidean_norm(const BiComplex& a) {
  double x = std::abs(a.re1());
  double y = std::abs(a.re2());
  return std::hypot(x, y);
}

Hyperbolic hnorm(const BiComplex& a) {
  return Hyperbolic::from_idempotent(std::abs(a.idem1()), std::abs(a.idem2()));
}

Norms norms(const BiComplex& a) { return {euclidean_norm(a), hnorm(a)}; }

bool component_vanishes(const BiComplex& a, int s) {
  double scale = std::max(1.0, euclidean_norm(a));
  return std::abs(a.idem(s)) < kNullConeRelTol * scale;
}

bool in_null_cone(const BiComplex& a) {
  return component_vanishes(a, 1) || component_vanishes(a, 2);
}

bool is_zero_divisor(const BiComplex& a) {
  return component_vanishes(a, 1) != component_vanishes(a, 2);
}

BiComplex inverse(const BiComplex& a) {
  if (in_null_cone(a)) throw NullConeError("inverse: argument on the null cone");
  return BiComplex::from_idempotent(1.0 / a.idem1(), 1.0 / a.idem2());
}

BiComplex bc_exp(const BiComplex& a) {
  return BiComplex::from_idempotent(std::exp(a.idem1()), std::exp(a.idem2()));
}

BiComplex bc_pow(const BiComplex& a, const BiComplex& w) {
  Complex r1 = component_pow(a.idem1(), w.idem1(), component_vanishes(a, 1), 1);
  Complex r2 = component_pow(a.idem2(), w.idem2(), component_vanishes(a, 2), 2);
  return BiComplex::from_idempotent(r1, r2);
}

BiComplex bc_pow(const BiComplex& a, int n) {
  if (n < 0) return bc_pow(inverse(a), -n);
  BiComplex result = 1.0;
  BiComplex b = a;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

HBall::HBall(BiComplex center, Hyperbolic radius)
    : center_(center), radius_(radius) {
  if (!radius.strictly_positive()) {
    throw PreconditionError("HBall: radius must have positive components");
  }
}

bool HBall::contains(const BiComplex& z) const {
  return h_less(hnorm(z - center_), radius_) == HOrder::less;
}

}  // namespace bchyper

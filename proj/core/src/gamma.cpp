#include "bchyper/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bchyper/errors.hpp"

namespace bchyper {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kEulerGamma = 0.57721566490153286061;

Complex lanczos_sum(Complex x) {
  Complex a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (x + static_cast<double>(i));
  }
  return a;
}

// Gamma(w) for Re w >= 1/2.
Complex gamma_right(Complex w) {
  Complex x = w - 1.0;
  Complex t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) *
         std::exp(-t) * lanczos_sum(x);
}

Complex lgamma_right(Complex w) {
  Complex x = w - 1.0;
  Complex t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(x));
}

void check_pole(Complex w, int component) {
  if (is_nonpositive_integer(w)) {
    std::string where =
        component == 0 ? "" : " in idempotent component " + std::to_string(component);
    throw PoleError("gamma: pole at " + std::to_string(std::round(w.real())) + where,
                    component);
  }
}

Complex gamma_checked(Complex w, int component) {
  check_pole(w, component);
  if (w.real() < 0.5) {
    Complex s = std::sin(std::numbers::pi * w);
    return std::numbers::pi / (s * gamma_right(1.0 - w));
  }
  return gamma_right(w);
}

// log(1+x) - x, accurate for small |x|.
Complex log1p_minus(Complex x) {
  if (std::abs(x) < 1e-3) {
    Complex term = -x * x / 2.0;
    Complex sum = term;
    Complex power = x * x;
    for (int k = 3; k < 12; ++k) {
      power *= x;
      double sign = (k % 2 == 0) ? -1.0 : 1.0;
      sum += sign * power / static_cast<double>(k);
    }
    return sum;
  }
  return std::log(1.0 + x) - x;
}

Complex product_oracle_component(Complex z, long terms, int component) {
  check_pole(z, component);
  Complex log_sum = -kEulerGamma * z - std::log(z);
  for (long k = 1; k <= terms; ++k) {
    log_sum -= log1p_minus(z / static_cast<double>(k));
  }
  return std::exp(log_sum);
}

}  // namespace

bool is_nonpositive_integer(Complex w, double tol) {
  if (std::abs(w.imag()) > tol) return false;
  double r = w.real();
  if (r > 0.5) return false;
  return std::abs(r - std::round(r)) <= tol;
}

Complex complex_gamma(Complex w) { return gamma_checked(w, 0); }

Complex complex_lgamma(Complex w) {
  check_pole(w, 0);
  if (w.real() < 0.5) {
    return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * w)) -
           lgamma_right(1.0 - w);
  }
  return lgamma_right(w);
}

BiComplex bc_gamma(const BiComplex& z) {
  Complex g1 = gamma_checked(z.idem1(), 1);
  Complex g2 = gamma_checked(z.idem2(), 2);
  return BiComplex::from_idempotent(g1, g2);
}

Complex complex_pochhammer(Complex a, int n) {
  Complex r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + static_cast<double>(k);
  return r;
}

BiComplex bc_pochhammer(const BiComplex& a, int n) {
  if (n < 0) throw InvalidParams("bc_pochhammer: n must be nonnegative");
  BiComplex r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + BiComplex(static_cast<double>(k));
  return r;
}

BiComplex gamma_product_oracle(const BiComplex& z, long terms) {
  if (terms < 1000) throw InvalidParams("gamma_product_oracle: terms must be >= 1000");
  Complex g1 = product_oracle_component(z.idem1(), terms, 1);
  Complex g2 = product_oracle_component(z.idem2(), terms, 2);
  return BiComplex::from_idempotent(g1, g2);
}

PochhammerTable::PochhammerTable(BiComplex base, int upto) : base_(base) {
  if (upto < 0) throw InvalidParams("PochhammerTable: upto must be nonnegative");
  values_.reserve(static_cast<std::size_t>(upto) + 1);
  values_.emplace_back(1.0);
  for (int n = 0; n < upto; ++n) {
    values_.push_back(values_.back() * (base + BiComplex(static_cast<double>(n))));
  }
}

}  // namespace bchyper

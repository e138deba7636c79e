#include "bchyper/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bchyper/errors.hpp"
#include "bchyper/gamma.hpp"

namespace bchyper {

namespace {

using LComplex = std::complex<long double>;

constexpr long double kUlp = 0x1p-52L;

double component_residual(Complex l, Complex r) {
  const double scale = std::max(std::abs(l), std::abs(r));
  if (scale == 0.0) return 0.0;
  return std::abs(l - r) / scale;
}

BiComplex product(const std::vector<BiComplex>& v, std::size_t from = 0) {
  BiComplex r = 1.0;
  for (std::size_t i = from; i < v.size(); ++i) r *= v[i];
  return r;
}

BiComplex poch_product(const std::vector<BiComplex>& v, int s, std::size_t from = 0) {
  BiComplex r = 1.0;
  for (std::size_t i = from; i < v.size(); ++i) r *= bc_pochhammer(v[i], s);
  return r;
}

double binomial(int m, int s) {
  double r = 1.0;
  for (int i = 1; i <= s; ++i) r = r * (m - s + i) / i;
  return r;
}

BiComplex scalar(double x) { return BiComplex(x); }

PfqParams with_alpha(const PfqParams& p, std::size_t i, const BiComplex& value) {
  std::vector<BiComplex> a = p.alphas();
  a.at(i) = value;
  return {std::move(a), p.betas()};
}

PfqParams with_beta(const PfqParams& p, std::size_t j, const BiComplex& value) {
  std::vector<BiComplex> b = p.betas();
  b.at(j) = value;
  return {p.alphas(), std::move(b)};
}

double scale_for_quadratic(const PfqParams& params) {
  const int e = params.q() + 1 - params.p();
  return std::ldexp(1.0, -2 * e);
}

void require_quadratic_shape(const PfqParams& params) {
  if (params.p() > params.q() + 1) {
    throw DomainError("quadratic transform: p > q + 1 has no convergence region");
  }
}

LComplex lc(Complex z) { return {z.real(), z.imag()}; }

LComplex lprod_shift(const std::vector<Complex>& v, long double n) {
  LComplex r = 1.0L;
  for (const auto& x : v) r *= lc(x) + n;
  return r;
}

struct Scaled {
  Complex mantissa;
  int exp2 = 0;
};

Scaled normalize(LComplex q, int exp2) {
  const long double big = std::max(std::fabs(q.real()), std::fabs(q.imag()));
  if (big == 0.0L) return {Complex(0.0), exp2};
  const int e = std::ilogb(big) + 1;
  const LComplex m(std::ldexp(q.real(), -e), std::ldexp(q.imag(), -e));
  return {Complex(static_cast<double>(m.real()), static_cast<double>(m.imag())),
          exp2 + e};
}

std::vector<Scaled> scaled_coefficients(const std::vector<Complex>& a,
                                        const std::vector<Complex>& b, int n) {
  std::vector<Scaled> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  c.push_back({Complex(0.5), 1});
  for (int k = 0; k < n; ++k) {
    const long double dk = k;
    const LComplex num = lprod_shift(a, dk) * lc(c.back().mantissa);
    const LComplex den = (dk + 1.0L) * lprod_shift(b, dk);
    c.push_back(normalize(num / den, c.back().exp2));
  }
  return c;
}

LComplex value_of(const Scaled& s) {
  return {std::ldexp(static_cast<long double>(s.mantissa.real()), s.exp2),
          std::ldexp(static_cast<long double>(s.mantissa.imag()), s.exp2)};
}

}  // namespace

Hyperbolic relative_residual(const BiComplex& lhs, const BiComplex& rhs) {
  return Hyperbolic::from_idempotent(component_residual(lhs.idem1(), rhs.idem1()),
                                     component_residual(lhs.idem2(), rhs.idem2()));
}

IdentityReport make_report(const BiComplex& lhs, const BiComplex& rhs, double tol) {
  IdentityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = relative_residual(lhs, rhs);
  r.tol = tol;
  r.passed = h_less(r.residual, Hyperbolic(tol)) == HOrder::less;
  return r;
}

BiComplex ShiftM::value() const {
  if (m < 0 || n < 0) throw InvalidParams("ShiftM: m and n must be nonnegative");
  return static_cast<double>(m) * units::e1 + static_cast<double>(n) * units::e2;
}

IdentityReport quad_even(const PfqParams& params, const BiComplex& z, double tol) {
  require_quadratic_shape(params);
  std::vector<BiComplex> na;
  std::vector<BiComplex> nb{scalar(0.5)};
  for (const auto& a : params.alphas()) {
    na.push_back(0.5 * a);
    na.push_back(0.5 * (a + 1.0));
  }
  for (const auto& b : params.betas()) {
    nb.push_back(0.5 * b);
    nb.push_back(0.5 * (b + 1.0));
  }
  const PfqParams derived(std::move(na), std::move(nb));
  const BiComplex arg = z * z * scale_for_quadratic(params);
  const BiComplex rhs = pfq_value(params, z) + pfq_value(params, -z);
  const BiComplex lhs = 2.0 * pfq_value(derived, arg);
  return make_report(lhs, rhs, tol);
}

IdentityReport quad_odd(const PfqParams& params, const BiComplex& z, double tol) {
  require_quadratic_shape(params);
  std::vector<BiComplex> na;
  std::vector<BiComplex> nb{scalar(1.5)};
  for (const auto& a : params.alphas()) {
    na.push_back(0.5 * (a + 1.0));
    na.push_back(0.5 * (a + 2.0));
  }
  for (const auto& b : params.betas()) {
    nb.push_back(0.5 * (b + 1.0));
    nb.push_back(0.5 * (b + 2.0));
  }
  const PfqParams derived(std::move(na), std::move(nb));
  const BiComplex prefactor = 2.0 * z * product(params.alphas()) / product(params.betas());
  const BiComplex arg = z * z * scale_for_quadratic(params);
  const BiComplex rhs = pfq_value(params, z) - pfq_value(params, -z);
  const BiComplex lhs = prefactor * pfq_value(derived, arg);
  return make_report(lhs, rhs, tol);
}

IdentityReport saalschutz(int n, const BiComplex& a1, const BiComplex& a2,
                          const BiComplex& b, double tol) {
  if (n < 0) throw InvalidParams("saalschutz: n must be nonnegative");
  const double dn = static_cast<double>(n);
  static_cast<void>(PfqParams({scalar(-dn), a1, a2}, {b, 1.0 + a1 + a2 - b - dn}));
  Complex sums[2];
  Complex ratios[2];
  for (int s = 1; s <= 2; ++s) {
    const LComplex x1 = lc(a1.idem(s));
    const LComplex x2 = lc(a2.idem(s));
    const LComplex y = lc(b.idem(s));
    const LComplex c = 1.0L + x1 + x2 - y - static_cast<long double>(n);
    LComplex term = 1.0L;
    LComplex total = 1.0L;
    LComplex ratio = 1.0L;
    for (int k = 0; k < n; ++k) {
      const long double dk = k;
      term *= (dk - n) * (x1 + dk) * (x2 + dk) / ((dk + 1.0L) * (y + dk) * (c + dk));
      total += term;
      ratio *= (y - x1 + dk) * (y - x2 + dk) / ((y + dk) * (y - x1 - x2 + dk));
    }
    sums[s - 1] = Complex(static_cast<double>(total.real()), static_cast<double>(total.imag()));
    ratios[s - 1] =
        Complex(static_cast<double>(ratio.real()), static_cast<double>(ratio.imag()));
    if (!std::isfinite(std::abs(ratios[s - 1]))) {
      throw NullConeError("saalschutz: vanishing Pochhammer denominator (idempotent component " +
                          std::to_string(s) + ")");
    }
  }
  return make_report(BiComplex::from_idempotent(sums[0], sums[1]),
                     BiComplex::from_idempotent(ratios[0], ratios[1]), tol);
}

Complex series_derivative(const std::vector<Complex>& a,
                          const std::vector<Complex>& b, Complex z, int k,
                          const SeriesOptions& opt) {
  if (k < 0) throw InvalidParams("series_derivative: k must be nonnegative");
  const int degree = terminating_degree(a);
  Complex coeff = 1.0;
  for (int n = 0; n < k; ++n) {
    Complex num = 1.0;
    Complex den = static_cast<double>(n + 1);
    for (const auto& ai : a) num *= ai + static_cast<double>(n);
    for (const auto& bj : b) den *= bj + static_cast<double>(n);
    coeff *= num / den;
  }
  if (degree >= 0 && degree < k) return 0.0;
  double falling = 1.0;
  for (int i = 1; i <= k; ++i) falling *= i;
  Complex power = 1.0;
  Complex sum = coeff * falling;
  if (z == Complex(0.0)) return sum;
  int small = 0;
  for (int n = k;; ++n) {
    if (degree >= 0 && n >= degree) return sum;
    if (n - k + 1 >= opt.cap) {
      throw NoConvergence("series_derivative: cap reached");
    }
    Complex num = 1.0;
    Complex den = static_cast<double>(n + 1);
    for (const auto& ai : a) num *= ai + static_cast<double>(n);
    for (const auto& bj : b) den *= bj + static_cast<double>(n);
    coeff *= num / den;
    falling = falling * (n + 1) / (n + 1 - k);
    power *= z;
    const Complex term = coeff * falling * power;
    sum += term;
    small = std::abs(term) <= opt.tol * std::abs(sum) ? small + 1 : 0;
    if (small >= 3 && n + 1 - k >= 8) return sum;
  }
}

IdentityReport derivative_relation(const PfqParams& params, const BiComplex& z,
                                   int k, double tol) {
  if (k < 0) throw InvalidParams("derivative_relation: k must be nonnegative");
  check_domain(params, z);
  const Complex d1 = series_derivative(params.alpha_parts(1), params.beta_parts(1),
                                       z.idem1(), k);
  const Complex d2 = series_derivative(params.alpha_parts(2), params.beta_parts(2),
                                       z.idem2(), k);
  const BiComplex lhs = BiComplex::from_idempotent(d1, d2);
  const BiComplex ratio = poch_product(params.alphas(), k) / poch_product(params.betas(), k);
  const BiComplex rhs = ratio * pfq_value(params.shifted(scalar(k)), z);
  return make_report(lhs, rhs, tol);
}

IdentityReport cauchy_riemann_check(const PfqParams& params, const BiComplex& z,
                                    double h, CrVariable var, int index, double tol) {
  if (!(h > 0.0)) throw PreconditionError("cauchy_riemann_check: h must be positive");
  const std::size_t idx = static_cast<std::size_t>(index);
  if (var == CrVariable::Alpha && idx >= params.alphas().size()) {
    throw InvalidParams("cauchy_riemann_check: alpha index out of range");
  }
  check_domain(params, z);
  const BiComplex x0 = var == CrVariable::Argument ? z : params.alphas()[idx];
  auto eval = [&](const BiComplex& x) {
    if (var == CrVariable::Argument) return pfq_value(params, x);
    return pfq_value(with_alpha(params, idx, x), z);
  };
  auto partial = [&](bool second) {
    const Complex base = second ? x0.re2() : x0.re1();
    const Complex up = base + h;
    const Complex down = base - h;
    const double step = (up.real() - down.real()) / 2.0;
    const BiComplex xp = second ? BiComplex(x0.re1(), up) : BiComplex(up, x0.re2());
    const BiComplex xm = second ? BiComplex(x0.re1(), down) : BiComplex(down, x0.re2());
    const BiComplex fp = eval(xp);
    const BiComplex fm = eval(xm);
    return BiComplex((fp.re1() - fm.re1()) / (2.0 * step),
                     (fp.re2() - fm.re2()) / (2.0 * step));
  };
  const BiComplex dx = partial(false);
  const BiComplex dy = partial(true);
  const BiComplex lhs(dx.re1(), dy.re1());
  const BiComplex rhs(dy.re2(), -dx.re2());
  return make_report(lhs, rhs, tol);
}

IdentityReport contiguous_alpha_plus(const PfqParams& params, const BiComplex& z,
                                     ShiftM shift, double tol) {
  if (params.p() < 1) throw InvalidParams("contiguous_alpha_plus: needs p >= 1");
  const BiComplex a1 = params.alphas()[0];
  const BiComplex lhs = pfq_value(with_alpha(params, 0, a1 + shift.value()), z) +
                        pfq_value(with_alpha(params, 0, a1 + shift.conj().value()), z);
  const BiComplex gamma_a1 = bc_gamma(a1);
  auto sum = [&](int mm) {
    BiComplex acc;
    for (int s = 0; s <= mm; ++s) {
      const BiComplex w = binomial(mm, s) * (gamma_a1 / bc_gamma(a1 + s)) *
                          poch_product(params.alphas(), s) /
                          poch_product(params.betas(), s) * bc_pow(z, s);
      acc += w * pfq_value(params.shifted(scalar(s)), z);
    }
    return acc;
  };
  return make_report(lhs, sum(shift.m) + sum(shift.n), tol);
}

IdentityReport contiguous_alpha_minus(const PfqParams& params, const BiComplex& z,
                                      ShiftM shift, double tol) {
  if (params.p() < 1) throw InvalidParams("contiguous_alpha_minus: needs p >= 1");
  const BiComplex a1 = params.alphas()[0];
  const BiComplex lhs = pfq_value(with_alpha(params, 0, a1 - shift.value()), z) +
                        pfq_value(with_alpha(params, 0, a1 - shift.conj().value()), z);
  auto sum = [&](int mm) {
    BiComplex acc;
    for (int s = 0; s <= mm; ++s) {
      PfqParams shifted = params.shifted(scalar(s));
      shifted = with_alpha(shifted, 0, a1);
      const BiComplex w = binomial(mm, s) * poch_product(params.alphas(), s, 1) /
                          poch_product(params.betas(), s) * bc_pow(-z, s);
      acc += w * pfq_value(shifted, z);
    }
    return acc;
  };
  return make_report(lhs, sum(shift.m) + sum(shift.n), tol);
}

IdentityReport contiguous_beta_minus(const PfqParams& params, const BiComplex& z,
                                     ShiftM shift, double tol) {
  if (params.q() < 1) throw InvalidParams("contiguous_beta_minus: needs q >= 1");
  const BiComplex b1 = params.betas()[0];
  const BiComplex lhs = pfq_value(with_beta(params, 0, b1 - shift.value()), z) +
                        pfq_value(with_beta(params, 0, b1 - shift.conj().value()), z);
  auto sum = [&](int mm) {
    BiComplex acc;
    const BiComplex base = b1 - static_cast<double>(mm);
    const BiComplex gamma_base = bc_gamma(base);
    for (int s = 0; s <= mm; ++s) {
      const BiComplex w = (gamma_base / bc_gamma(base + s)) * binomial(mm, s) *
                          poch_product(params.alphas(), s) /
                          poch_product(params.betas(), s) * bc_pow(z, s);
      acc += w * pfq_value(params.shifted(scalar(s)), z);
    }
    return acc;
  };
  return make_report(lhs, sum(shift.m) + sum(shift.n), tol);
}

IdentityReport contiguous_beta_plus(const PfqParams& params, const BiComplex& z,
                                    ShiftM shift, double tol) {
  if (params.q() < 1) throw InvalidParams("contiguous_beta_plus: needs q >= 1");
  const BiComplex b1 = params.betas()[0];
  const BiComplex lhs = pfq_value(with_beta(params, 0, b1 + shift.value()), z) +
                        pfq_value(with_beta(params, 0, b1 + shift.conj().value()), z);
  const BiComplex alpha_prod = product(params.alphas());
  const BiComplex rest = product(params.betas(), 1);
  const PfqParams raised = params.shifted(scalar(1.0));
  auto sum = [&](int mm) {
    BiComplex acc;
    for (int s = 1; s <= mm; ++s) {
      const BiComplex den = (b1 + (s - 1.0)) * (b1 + static_cast<double>(s)) * rest;
      const PfqParams inner = with_beta(raised, 0, b1 + (s + 1.0));
      acc += alpha_prod / den * pfq_value(inner, z);
    }
    return acc;
  };
  const BiComplex rhs = 2.0 * pfq_value(params, z) - z * (sum(shift.m) + sum(shift.n));
  return make_report(lhs, rhs, tol);
}

std::vector<Complex> series_coefficients(const std::vector<Complex>& a,
                                         const std::vector<Complex>& b, int n) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (const auto& s : scaled_coefficients(a, b, n)) {
    out.emplace_back(std::ldexp(s.mantissa.real(), s.exp2),
                     std::ldexp(s.mantissa.imag(), s.exp2));
  }
  return out;
}

Hyperbolic ode_recurrence_ulps(const PfqParams& params, int n_max) {
  double worst[2] = {0.0, 0.0};
  for (int s = 1; s <= 2; ++s) {
    const auto a = params.alpha_parts(s);
    const auto b = params.beta_parts(s);
    const auto c = scaled_coefficients(a, b, n_max);
    for (int n = 0; n < n_max; ++n) {
      const long double dn = n;
      const LComplex lhs_raw = lc(c[n].mantissa) * lprod_shift(a, dn);
      if (lhs_raw == LComplex(0.0L)) continue;
      const LComplex next(std::ldexp(static_cast<long double>(c[n + 1].mantissa.real()),
                                     c[n + 1].exp2 - c[n].exp2),
                          std::ldexp(static_cast<long double>(c[n + 1].mantissa.imag()),
                                     c[n + 1].exp2 - c[n].exp2));
      const LComplex rhs_raw = (dn + 1.0L) * lprod_shift(b, dn) * next;
      const long double ulps = std::abs(rhs_raw - lhs_raw) / (kUlp * std::abs(lhs_raw));
      worst[s - 1] = std::max(worst[s - 1], static_cast<double>(ulps));
    }
  }
  return Hyperbolic::from_idempotent(worst[0], worst[1]);
}

bool OdeResidual::within_bound() const {
  return residual.h1() <= bound.h1() && residual.h2() <= bound.h2();
}

OdeResidual ode_residual(const PfqParams& params, const BiComplex& z, int n) {
  if (n < 1) throw InvalidParams("ode_residual: N must be positive");
  check_domain(params, z);
  double res[2];
  double bnd[2];
  const int terms = params.p() + params.q() + 2;
  for (int s = 1; s <= 2; ++s) {
    const auto a = params.alpha_parts(s);
    const auto b = params.beta_parts(s);
    const auto scaled = scaled_coefficients(a, b, n + 1);
    std::vector<LComplex> c;
    c.reserve(scaled.size());
    for (const auto& x : scaled) c.push_back(value_of(x));
    const LComplex zs = lc(z.idem(s));
    const long double az = std::abs(zs);
    LComplex total = 0.0L;
    LComplex power = 1.0L;
    long double mag = 0.0L;
    long double apow = 1.0L;
    for (int k = 0; k < n; ++k) {
      const long double dk = k;
      const LComplex up = c[k + 1] * (dk + 1.0L) * lprod_shift(b, dk);
      const LComplex down = c[k] * lprod_shift(a, dk);
      total += (up - down) * power;
      mag += (std::abs(up) + std::abs(down)) * apow;
      power *= zs;
      apow *= az;
    }
    const long double dn = n;
    const LComplex last = c[n] * lprod_shift(a, dn);
    total -= last * power;
    mag += std::abs(last) * apow;
    const LComplex dropped_up = c[n + 1] * (dn + 1.0L) * lprod_shift(b, dn) * power;
    const LComplex dropped_down = c[n + 1] * lprod_shift(a, dn + 1.0L) * power * zs;
    res[s - 1] = static_cast<double>(std::abs(total));
    bnd[s - 1] = static_cast<double>(std::abs(dropped_up) + std::abs(dropped_down) +
                                     2.0L * terms * kUlp * mag);
  }
  return {Hyperbolic::from_idempotent(res[0], res[1]),
          Hyperbolic::from_idempotent(bnd[0], bnd[1])};
}

}  // namespace bchyper

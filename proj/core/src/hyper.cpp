#include "bchyper/hyper.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "bchyper/errors.hpp"
#include "bchyper/gamma.hpp"

namespace bchyper {

namespace {

std::vector<Complex> parts(const std::vector<BiComplex>& v, int s) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.idem(s));
  return out;
}

using cld = std::complex<long double>;

cld widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(cld z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

cld term_ratio(const std::vector<cld>& a, const std::vector<cld>& b, cld z, int n) {
  cld num = 1.0L;
  cld den = static_cast<long double>(n + 1);
  const long double dn = n;
  for (const auto& ai : a) num *= ai + dn;
  for (const auto& bj : b) den *= bj + dn;
  return num / den * z;
}

std::vector<cld> widen(const std::vector<Complex>& v) {
  std::vector<cld> out;
  out.reserve(v.size());
  for (Complex x : v) out.push_back(widen(x));
  return out;
}

}  // namespace

PfqParams::PfqParams(std::vector<BiComplex> alphas, std::vector<BiComplex> betas)
    : alphas_(std::move(alphas)), betas_(std::move(betas)) {
  for (std::size_t j = 0; j < betas_.size(); ++j) {
    for (int s = 1; s <= 2; ++s) {
      if (is_nonpositive_integer(betas_[j].idem(s))) {
        throw InvalidParams("beta_" + std::to_string(j + 1) +
                            " has a nonpositive integer in idempotent component " +
                            std::to_string(s));
      }
    }
  }
}

std::vector<Complex> PfqParams::alpha_parts(int s) const { return parts(alphas_, s); }
std::vector<Complex> PfqParams::beta_parts(int s) const { return parts(betas_, s); }

PfqParams PfqParams::shifted(const BiComplex& k) const {
  std::vector<BiComplex> a = alphas_;
  std::vector<BiComplex> b = betas_;
  for (auto& x : a) x += k;
  for (auto& x : b) x += k;
  return {std::move(a), std::move(b)};
}

std::string to_string(ConvergenceKind k) {
  switch (k) {
    case ConvergenceKind::Entire:
      return "entire";
    case ConvergenceKind::UnitBall:
      return "unit-ball";
    case ConvergenceKind::UnitBallBoundaryConvergent:
      return "unit-ball-boundary-convergent";
    case ConvergenceKind::DivergentEverywhere:
      return "divergent-everywhere";
  }
  return "unknown";
}

ConvergenceClass classify(const PfqParams& params) {
  ConvergenceClass c;
  const int p = params.p();
  const int q = params.q();
  if (p <= q) {
    c.kind = ConvergenceKind::Entire;
    return c;
  }
  if (p > q + 1) {
    c.kind = ConvergenceKind::DivergentEverywhere;
    return c;
  }
  BiComplex d;
  for (const auto& b : params.betas()) d += b;
  for (const auto& a : params.alphas()) d -= a;
  c.eta1 = d.idem1().real();
  c.eta2 = d.idem2().real();
  c.kind = c.margin() > 0.0 ? ConvergenceKind::UnitBallBoundaryConvergent
                            : ConvergenceKind::UnitBall;
  return c;
}

int terminating_degree(const std::vector<Complex>& a) {
  int best = -1;
  for (const auto& ai : a) {
    if (is_nonpositive_integer(ai)) {
      int m = static_cast<int>(-std::round(ai.real()));
      if (best < 0 || m < best) best = m;
    }
  }
  return best;
}

ComponentSum sum_component(const std::vector<Complex>& a,
                           const std::vector<Complex>& b, Complex z,
                           const SeriesOptions& opt) {
  ComponentSum out;
  const int m = terminating_degree(a);
  out.terminating = m >= 0;
  if (z == Complex(0.0)) {
    out.value = 1.0;
    out.terms = 1;
    return out;
  }
  const std::vector<cld> al = widen(a);
  const std::vector<cld> bl = widen(b);
  const cld zl = widen(z);
  cld t = 1.0L;
  cld sum = 1.0L;
  if (m >= 0) {
    for (int n = 0; n < m; ++n) {
      t *= term_ratio(al, bl, zl, n);
      sum += t;
    }
    out.value = narrow(sum);
    out.terms = m + 1;
    return out;
  }
  int small = 0;
  int terms = 1;
  double ratio = 0.0;
  for (int n = 0;; ++n) {
    if (terms >= opt.cap) {
      throw NoConvergence("pfq: series did not converge within " +
                          std::to_string(opt.cap) + " terms");
    }
    const cld next = t * term_ratio(al, bl, zl, n);
    const long double at = std::abs(t);
    ratio = at > 0.0L ? static_cast<double>(std::abs(next) / at) : 0.0;
    t = next;
    sum += t;
    ++terms;
    small = std::abs(t) <= opt.tol * std::abs(sum) ? small + 1 : 0;
    if (small >= 3 && n + 1 >= 8) break;
  }
  out.value = narrow(sum);
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw NoConvergence("pfq: series sum overflows double range");
  }
  out.terms = terms;
  const double at = static_cast<double>(std::abs(t));
  if (at == 0.0) {
    out.tail_bound = 0.0;
  } else if (ratio < 1.0) {
    out.tail_bound = at * ratio / (1.0 - ratio);
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

void check_domain(const PfqParams& params, const BiComplex& z) {
  const ConvergenceClass cls = classify(params);
  const int p = params.p();
  const int q = params.q();
  for (int s = 1; s <= 2; ++s) {
    const Complex zs = z.idem(s);
    if (zs == Complex(0.0) || p <= q) continue;
    if (terminating_degree(params.alpha_parts(s)) >= 0) continue;
    const std::string comp = " (idempotent component " + std::to_string(s) + ")";
    if (p > q + 1) {
      throw DomainError("pfq: p > q + 1 diverges for nonzero argument" + comp);
    }
    const double r = std::abs(zs);
    if (r < 1.0 - kBoundaryBand) continue;
    if (r <= 1.0 + kBoundaryBand) {
      if (cls.margin() > kBoundaryMargin) continue;
      throw DomainError("pfq: boundary point without the convergence margin" + comp);
    }
    throw DomainError("pfq: argument outside the unit ball" + comp);
  }
}

SeriesEval pfq(const PfqParams& params, const BiComplex& z, const SeriesOptions& opt) {
  check_domain(params, z);
  SeriesEval out;
  out.cls = classify(params);
  ComponentSum c1 = sum_component(params.alpha_parts(1), params.beta_parts(1),
                                  z.idem1(), opt);
  ComponentSum c2 = sum_component(params.alpha_parts(2), params.beta_parts(2),
                                  z.idem2(), opt);
  out.value = BiComplex::from_idempotent(c1.value, c2.value);
  out.terms_used = {c1.terms, c2.terms};
  out.tail_bound = Hyperbolic::from_idempotent(c1.tail_bound, c2.tail_bound);
  return out;
}

BiComplex pfq_value(const PfqParams& params, const BiComplex& z,
                    const SeriesOptions& opt) {
  return pfq(params, z, opt).value;
}

BiComplex hyp0f0(const BiComplex& z) { return pfq_value(PfqParams({}, {}), z); }

BiComplex hyp1f1(const BiComplex& a, const BiComplex& b, const BiComplex& z) {
  return pfq_value(PfqParams({a}, {b}), z);
}

BiComplex hyp2f1(const BiComplex& a1, const BiComplex& a2, const BiComplex& b,
                 const BiComplex& z) {
  return pfq_value(PfqParams({a1, a2}, {b}), z);
}

BiComplex hyp1f0(const BiComplex& v, const BiComplex& z) {
  return pfq_value(PfqParams({v}, {}), z);
}

Complex oracle_pfq_complex(const std::vector<Complex>& a,
                           const std::vector<Complex>& b, Complex z, double tol,
                           int cap) {
  int degree = -1;
  for (const auto& ai : a) {
    const double r = std::round(ai.real());
    if (r <= 0.0 && std::abs(ai.real() - r) <= 1e-12 && std::abs(ai.imag()) <= 1e-12) {
      const int m = static_cast<int>(-r);
      if (degree < 0 || m < degree) degree = m;
    }
  }
  Complex coeff = 1.0;
  Complex power = 1.0;
  Complex total = 1.0;
  int below = 0;
  for (int n = 1; n < cap; ++n) {
    if (degree >= 0 && n > degree) return total;
    for (const auto& ai : a) coeff *= ai + static_cast<double>(n - 1);
    for (const auto& bj : b) coeff /= bj + static_cast<double>(n - 1);
    coeff /= static_cast<double>(n);
    power *= z;
    const Complex term = coeff * power;
    total += term;
    if (degree < 0) {
      below = std::abs(term) <= tol * std::abs(total) ? below + 1 : 0;
      if (below >= 3 && n >= 8) return total;
    }
  }
  if (degree >= 0 && cap > degree) return total;
  throw NoConvergence("oracle_pfq_complex: cap reached");
}

}  // namespace bchyper

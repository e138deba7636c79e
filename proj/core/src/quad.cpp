#include "bchyper/quad.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "bchyper/errors.hpp"
#include "bchyper/gamma.hpp"

namespace bchyper {

namespace {

void require_nodes(int n) {
  if (n < kMinNodes) {
    throw PreconditionError("quadrature needs at least " + std::to_string(kMinNodes) +
                            " nodes");
  }
}

bool is_real(Complex z) { return z.imag() == 0.0; }

using LComplex = std::complex<long double>;

// Newton step on the monic characteristic polynomials P_k of the leading
// k x k blocks, carried as ratios r_k = P_k/P_{k-1} and s_k = P_k'/P_k.
LComplex polish_node(LComplex x, const std::vector<LComplex>& d,
                     const std::vector<LComplex>& e2) {
  const int n = static_cast<int>(d.size());
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  for (int it = 0; it < 4; ++it) {
    LComplex r = x - d[0];
    LComplex s_prev = 0.0L;
    LComplex s = 1.0L / r;
    for (int k = 1; k < n; ++k) {
      const LComplex rn = (x - d[k]) - e2[k - 1] / r;
      const LComplex sn = (1.0L + (x - d[k]) * s - e2[k - 1] * s_prev / r) / rn;
      s_prev = s;
      s = sn;
      r = rn;
    }
    const LComplex step = 1.0L / s;
    if (!std::isfinite(std::abs(step))) return x;
    x -= step;
    if (std::abs(step) <= 4.0L * eps * std::abs(x)) break;
  }
  return x;
}

// Christoffel weight mu0 / sum_k q_k(x)^2 with q_k the orthonormal
// polynomials of the Jacobi matrix.
LComplex christoffel_weight(LComplex x, const std::vector<LComplex>& d,
                            const std::vector<LComplex>& e, LComplex mu0) {
  const int n = static_cast<int>(d.size());
  LComplex q_prev = 0.0L;
  LComplex q = 1.0L;
  LComplex sum = 1.0L;
  for (int k = 0; k + 1 < n; ++k) {
    const LComplex next = ((x - d[k]) * q - (k > 0 ? e[k - 1] * q_prev : 0.0L)) / e[k];
    q_prev = q;
    q = next;
    sum += q * q;
  }
  return mu0 / sum;
}

// Implicit QL on a complex symmetric tridiagonal matrix for the nodes, then a
// Newton polish and Christoffel weights in long double.
QuadratureRule complex_golub_welsch(std::vector<Complex> d,
                                    const std::vector<Complex>& e2, Complex mu0) {
  const int n = static_cast<int>(d.size());
  std::vector<LComplex> dl(d.begin(), d.end());
  std::vector<LComplex> e2l(e2.begin(), e2.end());
  std::vector<LComplex> el(e2l.size());
  for (std::size_t i = 0; i < e2l.size(); ++i) el[i] = std::sqrt(e2l[i]);
  std::vector<Complex> e(n, Complex(0.0));
  for (int i = 0; i < n - 1; ++i) e[i] = std::sqrt(e2[i]);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 100) throw NoConvergence("quadrature: QL iteration did not converge");
      Complex g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      Complex r = std::sqrt(g * g + 1.0);
      if (std::real(std::conj(g) * r) < 0.0) r = -r;
      g = d[m] - d[l] + e[l] / (g + r);
      Complex s = 1.0;
      Complex c = 1.0;
      Complex p = 0.0;
      int i = m - 1;
      bool deflated = false;
      for (; i >= l; --i) {
        const Complex f = s * e[i];
        const Complex b = c * e[i];
        r = std::sqrt(f * f + g * g);
        e[i + 1] = r;
        if (r == Complex(0.0)) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const LComplex mu0l(mu0.real(), mu0.imag());
  for (int i = 0; i < n; ++i) {
    const LComplex x = polish_node(LComplex(d[i].real(), d[i].imag()), dl, e2l);
    const LComplex w = christoffel_weight(x, dl, el, mu0l);
    rule.nodes[i] = Complex(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    rule.weights[i] = Complex(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  }
  return rule;
}

// Eigen-decomposition of the symmetric tridiagonal Jacobi matrix with
// diagonal d and squared off-diagonal e2.
QuadratureRule golub_welsch(const std::vector<Complex>& d,
                            const std::vector<Complex>& e2, Complex mu0) {
  const int n = static_cast<int>(d.size());
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const bool real = std::all_of(d.begin(), d.end(), is_real) &&
                    std::all_of(e2.begin(), e2.end(), is_real) && is_real(mu0);
  if (real) {
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n - 1);
    for (int i = 0; i < n; ++i) diag(i) = d[i].real();
    for (int i = 0; i < n - 1; ++i) sub(i) = std::sqrt(e2[i].real());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    for (int i = 0; i < n; ++i) {
      const double v0 = es.eigenvectors()(0, i);
      rule.nodes[i] = es.eigenvalues()(i);
      rule.weights[i] = mu0.real() * v0 * v0;
    }
    return rule;
  }
  return complex_golub_welsch(d, e2, mu0);
}

void sort_by_real(QuadratureRule& rule) {
  std::vector<std::size_t> order(rule.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return rule.nodes[i].real() < rule.nodes[j].real();
  });
  QuadratureRule out;
  for (auto i : order) {
    out.nodes.push_back(rule.nodes[i]);
    out.weights.push_back(rule.weights[i]);
  }
  rule = std::move(out);
}

std::vector<Complex> tail(const std::vector<Complex>& v) {
  return {v.begin() + 1, v.end()};
}

Complex integrate(const QuadratureRule& rule, auto&& f) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

void require_positive_real(const BiComplex& x, const char* what) {
  if (!(x.idem1().real() > 0.0 && x.idem2().real() > 0.0)) {
    throw PreconditionError(std::string(what) +
                            " needs positive real part in both idempotent components");
  }
}

}  // namespace

QuadratureRule gauss_jacobi_unit(int n, Complex a, Complex b) {
  if (n < 1) throw PreconditionError("gauss_jacobi_unit: n must be positive");
  if (!(a.real() > -1.0 && b.real() > -1.0)) {
    throw PreconditionError("gauss_jacobi_unit: exponents need real part > -1");
  }
  // Jacobi weight (1-x)^ja (1+x)^jb on [-1, 1] with t = (1+x)/2.
  const Complex ja = b;
  const Complex jb = a;
  const Complex s = ja + jb;
  std::vector<Complex> d(n);
  std::vector<Complex> e2(n > 0 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double dk = k;
    if (k == 0) {
      d[k] = (jb - ja) / (s + 2.0);
    } else {
      const Complex t = 2.0 * dk + s;
      d[k] = (jb * jb - ja * ja) / (t * (t + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    const double dk = k;
    const Complex t = 2.0 * dk + s;
    if (k == 1) {
      e2[0] = 4.0 * (1.0 + ja) * (1.0 + jb) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    } else {
      e2[k - 1] = 4.0 * dk * (dk + ja) * (dk + jb) * (dk + s) /
                  (t * t * (t + 1.0) * (t - 1.0));
    }
  }
  const Complex mu0 = std::exp(complex_lgamma(a + 1.0) + complex_lgamma(b + 1.0) -
                               complex_lgamma(a + b + 2.0));
  QuadratureRule rule = golub_welsch(d, e2, 1.0);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= mu0;
  }
  return rule;
}

QuadratureRule gauss_laguerre(int n, Complex a) {
  if (n < 1) throw PreconditionError("gauss_laguerre: n must be positive");
  if (!(a.real() > -1.0)) {
    throw PreconditionError("gauss_laguerre: exponent needs real part > -1");
  }
  std::vector<Complex> d(n);
  std::vector<Complex> e2(n - 1);
  for (int k = 0; k < n; ++k) d[k] = 2.0 * k + a + 1.0;
  for (int k = 1; k < n; ++k) e2[k - 1] = static_cast<double>(k) * (static_cast<double>(k) + a);
  QuadratureRule rule = golub_welsch(d, e2, complex_gamma(a + 1.0));
  sort_by_real(rule);
  return rule;
}

IdentityReport euler_integral(const PfqParams& params, const BiComplex& z,
                              const ProductCurve& curve, double tol) {
  require_nodes(curve.nodes);
  if (curve.kind != CurveKind::UnitInterval) {
    throw PreconditionError("euler_integral runs over the unit interval");
  }
  if (params.p() < 1 || params.q() < 1) {
    throw PreconditionError("euler_integral needs p >= 1 and q >= 1");
  }
  const BiComplex a1 = params.alphas()[0];
  const BiComplex b1 = params.betas()[0];
  require_positive_real(a1, "euler_integral: alpha_1");
  require_positive_real(b1 - a1, "euler_integral: beta_1 - alpha_1");
  check_domain(params, z);
  Complex out[2];
  for (int s = 1; s <= 2; ++s) {
    const Complex a = a1.idem(s);
    const Complex b = b1.idem(s);
    const auto inner_a = tail(params.alpha_parts(s));
    const auto inner_b = tail(params.beta_parts(s));
    const Complex zs = z.idem(s);
    const QuadratureRule rule = gauss_jacobi_unit(curve.nodes, a - 1.0, b - a - 1.0);
    const Complex integral = integrate(rule, [&](Complex t) {
      return sum_component(inner_a, inner_b, zs * t).value;
    });
    const Complex norm = std::exp(complex_lgamma(b) - complex_lgamma(a) -
                                  complex_lgamma(b - a));
    out[s - 1] = norm * integral;
  }
  const BiComplex lhs = BiComplex::from_idempotent(out[0], out[1]);
  return make_report(lhs, pfq_value(params, z), tol);
}

IdentityReport laplace_integral(const BiComplex& v, const PfqParams& params,
                                const BiComplex& z, const ProductCurve& curve,
                                double tol) {
  require_nodes(curve.nodes);
  if (curve.kind != CurveKind::HalfLine) {
    throw PreconditionError("laplace_integral runs over the half line");
  }
  if (params.p() > params.q()) {
    throw PreconditionError("laplace_integral needs p <= q for the inner function");
  }
  require_positive_real(v, "laplace_integral: v");
  std::vector<BiComplex> outer_a{v};
  outer_a.insert(outer_a.end(), params.alphas().begin(), params.alphas().end());
  const PfqParams outer(std::move(outer_a), params.betas());
  check_domain(outer, z);
  Complex out[2];
  for (int s = 1; s <= 2; ++s) {
    const Complex vs = v.idem(s);
    const auto a = params.alpha_parts(s);
    const auto b = params.beta_parts(s);
    const Complex zs = z.idem(s);
    const double lambda =
        params.p() == params.q() ? 1.0 - std::max(0.0, zs.real()) : 1.0;
    const QuadratureRule rule = gauss_laguerre(curve.nodes, vs - 1.0);
    Complex sum = 0.0;
    int negligible = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const Complex t = rule.nodes[i] / lambda;
      const Complex damp = std::exp(-rule.nodes[i] * (1.0 / lambda - 1.0));
      const Complex term = rule.weights[i] * damp * sum_component(a, b, zs * t).value;
      sum += term;
      negligible = std::abs(term) < 1e-16 * std::abs(sum) ? negligible + 1 : 0;
      if (negligible >= 2) break;
    }
    if (!std::isfinite(std::abs(sum))) {
      throw NoConvergence("laplace_integral: integrand overflows at the quadrature nodes");
    }
    out[s - 1] = std::pow(Complex(lambda), -vs) * sum / complex_gamma(vs);
  }
  const BiComplex lhs = BiComplex::from_idempotent(out[0], out[1]);
  return make_report(lhs, pfq_value(outer, z), tol);
}

IdentityReport double_integral(const BiComplex& m, const BiComplex& n,
                               const PfqParams& params, const BiComplex& z,
                               int nodes, double tol) {
  require_nodes(nodes);
  require_positive_real(m, "double_integral: m");
  require_positive_real(n, "double_integral: n");
  std::vector<BiComplex> ra = params.alphas();
  std::vector<BiComplex> rb = params.betas();
  ra.emplace_back(1.0);
  rb.push_back(m + n + 1.0);
  const PfqParams outer(std::move(ra), std::move(rb));
  check_domain(params, z);
  check_domain(outer, z);
  Complex out[2];
  for (int s = 1; s <= 2; ++s) {
    const Complex ms = m.idem(s);
    const Complex ns = n.idem(s);
    const auto a = params.alpha_parts(s);
    const auto b = params.beta_parts(s);
    const Complex zs = z.idem(s);
    const QuadratureRule ru = gauss_jacobi_unit(nodes, ms - 1.0, ns);
    const QuadratureRule rv = gauss_jacobi_unit(nodes, ns - 1.0, 0.0);
    // The tensor rule applied to the k-th series term factorizes into
    // (sum_i wu_i (1-u_i)^k) (sum_j wv_j (1-v_j)^k).
    std::vector<Complex> pu(ru.weights);
    std::vector<Complex> pv(rv.weights);
    const int degree = terminating_degree(a);
    Complex coeff = 1.0;
    Complex sum = 0.0;
    int small = 0;
    for (int k = 0;; ++k) {
      const Complex mu = std::accumulate(pu.begin(), pu.end(), Complex(0.0));
      const Complex mv = std::accumulate(pv.begin(), pv.end(), Complex(0.0));
      const Complex term = coeff * mu * mv;
      sum += term;
      if (degree >= 0 && k >= degree) break;
      small = std::abs(term) <= 1e-17 * std::abs(sum) ? small + 1 : 0;
      if (small >= 3 && k >= 8) break;
      if (k + 1 >= SeriesOptions{}.cap) throw NoConvergence("double_integral: series cap reached");
      Complex num = 1.0;
      Complex den = static_cast<double>(k + 1);
      for (const auto& ai : a) num *= ai + static_cast<double>(k);
      for (const auto& bj : b) den *= bj + static_cast<double>(k);
      coeff *= num / den * zs;
      for (std::size_t i = 0; i < pu.size(); ++i) pu[i] *= 1.0 - ru.nodes[i];
      for (std::size_t j = 0; j < pv.size(); ++j) pv[j] *= 1.0 - rv.nodes[j];
    }
    out[s - 1] = sum;
  }
  const BiComplex lhs = BiComplex::from_idempotent(out[0], out[1]);
  const BiComplex factor = bc_gamma(m) * bc_gamma(n) / bc_gamma(m + n + 1.0);
  return make_report(lhs, factor * pfq_value(outer, z), tol);
}

}  // namespace bchyper

#pragma once

#include <vector>

#include "bchyper/hyper.hpp"
#include "bchyper/identities.hpp"
#include "bchyper/numbers.hpp"

namespace bchyper {

enum class CurveKind { UnitInterval, HalfLine };

/// Both idempotent components run along the same real parameter range:
/// [0, 1] for UnitInterval, [0, inf) for HalfLine.
struct ProductCurve {
  CurveKind kind = CurveKind::UnitInterval;
  int nodes = 64;
};

inline constexpr int kMinNodes = 16;

struct QuadratureRule {
  std::vector<Complex> nodes;
  std::vector<Complex> weights;
};

/// Gauss rule for t^a (1 - t)^b on [0, 1] (Re a, Re b > -1). Complex
/// exponents give complex nodes and weights.
QuadratureRule gauss_jacobi_unit(int n, Complex a, Complex b);

/// Gauss rule for t^a e^{-t} on [0, inf) (Re a > -1).
QuadratureRule gauss_laguerre(int n, Complex a);

/// Gamma(b1)/(Gamma(a1) Gamma(b1 - a1)) times the integral of
/// t^{a1-1} (1-t)^{b1-a1-1} p-1Fq-1(a2..; b2..; Z t) over [0, 1], against pFq.
IdentityReport euler_integral(const PfqParams& params, const BiComplex& z,
                              const ProductCurve& curve = {}, double tol = 1e-7);

/// (1/Gamma(v)) times the integral of e^{-t} t^{v-1} pFq(Z t) over [0, inf),
/// against p+1Fq with v prepended.
IdentityReport laplace_integral(const BiComplex& v, const PfqParams& params,
                                const BiComplex& z,
                                const ProductCurve& curve = {CurveKind::HalfLine, 64},
                                double tol = 1e-7);

/// Double integral of u^{m-1} v^{n-1} (1-u)^n pFq((1-u)(1-v) Z) over the unit
/// square, against Gamma(m)Gamma(n)/Gamma(m+n+1) p+1Fq+1(alpha, 1; beta, m+n+1; Z).
IdentityReport double_integral(const BiComplex& m, const BiComplex& n,
                               const PfqParams& params, const BiComplex& z,
                               int nodes = 128, double tol = 1e-6);

}  // namespace bchyper

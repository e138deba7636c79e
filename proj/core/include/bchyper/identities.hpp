#pragma once

#include <vector>

#include "bchyper/hyper.hpp"
#include "bchyper/numbers.hpp"

namespace bchyper {

struct IdentityReport {
  BiComplex lhs;
  BiComplex rhs;
  /// Per idempotent component |lhs_s - rhs_s| / max(|lhs_s|, |rhs_s|).
  Hyperbolic residual;
  double tol = 1e-9;
  bool passed = false;
};

inline constexpr double kIdentityTol = 1e-9;

Hyperbolic relative_residual(const BiComplex& lhs, const BiComplex& rhs);
IdentityReport make_report(const BiComplex& lhs, const BiComplex& rhs,
                           double tol = kIdentityTol);

/// Bicomplex shift M = m e1 + n e2 with m, n >= 0.
struct ShiftM {
  int m = 0;
  int n = 0;
  ShiftM conj() const { return {n, m}; }
  BiComplex value() const;
};

/// pFq(Z) + pFq(-Z) against the doubled 2pF2q+1 at Z^2 / 4^(q+1-p).
IdentityReport quad_even(const PfqParams& params, const BiComplex& z,
                         double tol = kIdentityTol);
/// pFq(Z) - pFq(-Z) against 2Z prod(alpha)/prod(beta) times 2pF2q+1.
IdentityReport quad_odd(const PfqParams& params, const BiComplex& z,
                        double tol = kIdentityTol);
/// Terminating balanced 3F2(-n, a1, a2; b, 1 + a1 + a2 - b - n; 1).
IdentityReport saalschutz(int n, const BiComplex& a1, const BiComplex& a2,
                          const BiComplex& b, double tol = kIdentityTol);

/// k-th derivative by term-wise differentiation against the shifted series.
IdentityReport derivative_relation(const PfqParams& params, const BiComplex& z,
                                   int k, double tol = kIdentityTol);

/// k-th derivative of pFq summed term by term on one idempotent component.
Complex series_derivative(const std::vector<Complex>& a,
                          const std::vector<Complex>& b, Complex z, int k,
                          const SeriesOptions& opt = {});

enum class CrVariable { Argument, Alpha };

/// Central differences of F = f1 + i2 f2 with step h in the two cartesian
/// parts of the variable (Z, or alpha_{index}). lhs = d f1/dx + i2 d f1/dy,
/// rhs = d f2/dy - i2 d f2/dx, which agree for a BC-holomorphic F.
IdentityReport cauchy_riemann_check(const PfqParams& params, const BiComplex& z,
                                    double h, CrVariable var = CrVariable::Argument,
                                    int index = 0, double tol = 1e-6);

IdentityReport contiguous_alpha_plus(const PfqParams& params, const BiComplex& z,
                                     ShiftM shift, double tol = kIdentityTol);
IdentityReport contiguous_alpha_minus(const PfqParams& params, const BiComplex& z,
                                      ShiftM shift, double tol = kIdentityTol);
IdentityReport contiguous_beta_minus(const PfqParams& params, const BiComplex& z,
                                     ShiftM shift, double tol = kIdentityTol);
IdentityReport contiguous_beta_plus(const PfqParams& params, const BiComplex& z,
                                    ShiftM shift, double tol = kIdentityTol);

/// Series coefficients c_0..c_n of one component, each the correctly rounded
/// quotient of the recurrence (n+1) prod(n+b) c_{n+1} = prod(n+a) c_n.
std::vector<Complex> series_coefficients(const std::vector<Complex>& a,
                                         const std::vector<Complex>& b, int n);

/// Largest |(n+1) prod(n+b) c_{n+1} - prod(n+a) c_n| over n < N, in units of
/// 2^-52 |prod(n+a) c_n|, per idempotent component.
Hyperbolic ode_recurrence_ulps(const PfqParams& params, int n_max);

struct OdeResidual {
  /// |L P_N (Z)| per idempotent component, where L = d/dZ prod(theta + b - 1)
  /// - prod(theta + a) and P_N is the degree-N truncation.
  Hyperbolic residual;
  /// Term-wise magnitude of L applied to the first dropped term, plus a
  /// rounding allowance.
  Hyperbolic bound;
  bool within_bound() const;
};

OdeResidual ode_residual(const PfqParams& params, const BiComplex& z, int n);

}  // namespace bchyper

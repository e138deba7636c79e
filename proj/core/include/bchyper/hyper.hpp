#pragma once

#include <array>
#include <string>
#include <vector>

#include "bchyper/numbers.hpp"

namespace bchyper {

/// Parameter vectors (alpha_1..alpha_p; beta_1..beta_q). Construction throws
/// InvalidParams when an idempotent component of some beta is a nonpositive
/// integer.
class PfqParams {
 public:
  PfqParams() = default;
  PfqParams(std::vector<BiComplex> alphas, std::vector<BiComplex> betas);

  int p() const { return static_cast<int>(alphas_.size()); }
  int q() const { return static_cast<int>(betas_.size()); }
  const std::vector<BiComplex>& alphas() const { return alphas_; }
  const std::vector<BiComplex>& betas() const { return betas_; }

  /// Idempotent component s of every alpha (beta).
  std::vector<Complex> alpha_parts(int s) const;
  std::vector<Complex> beta_parts(int s) const;

  /// Every parameter shifted by k.
  PfqParams shifted(const BiComplex& k) const;

 private:
  std::vector<BiComplex> alphas_;
  std::vector<BiComplex> betas_;
};

enum class ConvergenceKind {
  Entire,
  UnitBall,
  UnitBallBoundaryConvergent,
  DivergentEverywhere
};

std::string to_string(ConvergenceKind k);

struct ConvergenceClass {
  ConvergenceKind kind = ConvergenceKind::Entire;
  /// eta_s = Re(sum beta_s - sum alpha_s) per idempotent component; only
  /// meaningful for p = q + 1.
  double eta1 = 0.0;
  double eta2 = 0.0;

  /// min(eta1, eta2); positive exactly when the boundary condition
  /// Re(sum b1 - sum a1) > |Im(sum b2 - sum a2)| holds.
  double margin() const { return eta1 < eta2 ? eta1 : eta2; }
};

ConvergenceClass classify(const PfqParams& params);

struct SeriesOptions {
  double tol = 1e-17;
  int cap = 10000;
};

/// Boundary evaluation (|z_s| = 1) needs a margin above this.
inline constexpr double kBoundaryMargin = 1e-9;
inline constexpr double kBoundaryBand = 1e-12;

struct ComponentSum {
  Complex value;
  int terms = 0;
  double tail_bound = 0.0;
  bool terminating = false;
};

/// Classical pFq series on one idempotent component. Stops after three
/// consecutive terms at or below tol * |partial sum| with n >= 8; a numerator
/// equal to -m (within 1e-12) is summed exactly over n = 0..m. Throws
/// NoConvergence at the cap. Performs no domain check.
ComponentSum sum_component(const std::vector<Complex>& a,
                           const std::vector<Complex>& b, Complex z,
                           const SeriesOptions& opt = {});

/// Smallest m with some a_i = -m (within 1e-12), or -1.
int terminating_degree(const std::vector<Complex>& a);

struct SeriesEval {
  BiComplex value;
  std::array<int, 2> terms_used{0, 0};
  Hyperbolic tail_bound;
  ConvergenceClass cls;
};

/// Throws DomainError when some idempotent component lies outside the
/// convergence region of classify(params).
void check_domain(const PfqParams& params, const BiComplex& z);

/// Bicomplex pFq, summed independently per idempotent component.
SeriesEval pfq(const PfqParams& params, const BiComplex& z,
               const SeriesOptions& opt = {});
BiComplex pfq_value(const PfqParams& params, const BiComplex& z,
                    const SeriesOptions& opt = {});

BiComplex hyp0f0(const BiComplex& z);
BiComplex hyp1f1(const BiComplex& a, const BiComplex& b, const BiComplex& z);
BiComplex hyp2f1(const BiComplex& a1, const BiComplex& a2, const BiComplex& b,
                 const BiComplex& z);
BiComplex hyp1f0(const BiComplex& v, const BiComplex& z);

/// Plain complex pFq: coefficients (prod a)_n/(prod b)_n/n! and powers z^n are
/// accumulated separately. Stops on the same three-term rule.
Complex oracle_pfq_complex(const std::vector<Complex>& a,
                           const std::vector<Complex>& b, Complex z,
                           double tol = 1e-17, int cap = 10000);

}  // namespace bchyper

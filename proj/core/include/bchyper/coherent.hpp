#pragma once

#include <array>
#include <vector>

#include "bchyper/hyper.hpp"
#include "bchyper/identities.hpp"
#include "bchyper/numbers.hpp"

namespace bchyper {

struct CoherentSpec {
  PfqParams params;
  BiComplex z;
  /// Initial truncation; grown until |c_N|^2 < kCoherentTail per component.
  int truncation = 256;
};

inline constexpr double kCoherentTail = 1e-16;
inline constexpr int kMaxTruncation = 1 << 16;

/// Per idempotent component tables over the Fock index n = 0..N. rho is long
/// double.
struct LadderTables {
  int n_max = 0;
  std::vector<std::array<long double, 2>> rho;  // rho(0..N)
  std::vector<Hyperbolic> f;                    // f(0..N-1)
};

/// rho(n) = n! prod(beta)_n / prod(alpha)_n and f(n)^2 = rho(n+1)/rho(n)
/// = (n+1) prod(beta+n)/prod(alpha+n). Throws InvalidParams for a zero or
/// negative-integer alpha component and PositivityError when some ratio is
/// not real and strictly positive.
LadderTables build_tables(const PfqParams& params, int n_max);
LadderTables build_tables(const CoherentSpec& spec);

/// rho(n) from the closed form, for cross-checks.
std::array<long double, 2> rho_closed_form(const PfqParams& params, int n);

/// N(zeta) = pFq(alpha; beta; zeta) with zeta_s = |z_s|^2.
BiComplex normalization(const CoherentSpec& spec);

struct CoherentState {
  LadderTables tables;
  BiComplex norm;
  std::vector<BiComplex> coeffs;  // c_0..c_N
  Hyperbolic tail;                // |c_N|^2 per component
};

/// c_n = Z^n / sqrt(rho(n) N). The truncation grows until |c_N|^2 <
/// kCoherentTail; throws TruncationError past kMaxTruncation.
CoherentState build_state(const CoherentSpec& spec);
std::vector<BiComplex> state_coefficients(const CoherentSpec& spec);

/// Hyperbolic norm squared sum_n |c_n|_h^2.
Hyperbolic norm_squared(const CoherentState& state);

/// sum_n conj(c_n) c'_n per idempotent component. Throws ParamMismatch unless
/// both specs share parameters.
BiComplex inner_product(const CoherentSpec& a, const CoherentSpec& b);
/// N(conj(z_s) z'_s) / sqrt(N(|z_s|^2) N(|z'_s|^2)).
BiComplex inner_product_closed_form(const CoherentSpec& a, const CoherentSpec& b);

struct EigenReport {
  /// || A_- psi - Z psi || per component over n = 0..N.
  Hyperbolic residual;
  /// |c_N| |f(N-1)| plus a rounding allowance of 4 eps ||Z psi||.
  Hyperbolic bound;
  bool passed = false;
};

EigenReport annihilate(const CoherentSpec& spec);

/// f(n)^2 - f(n-1)^2; throws IndexError unless 1 <= n < N.
BiComplex commutator_diagonal(const CoherentSpec& spec, int n);
/// rho(n+1)/rho(n) - rho(n)/rho(n-1) per component.
std::array<long double, 2> commutator_from_rho(const LadderTables& tables, int n);

/// Dense (N+1)x(N+1) matrix per idempotent component, row-major.
struct LadderMatrix {
  int dim = 0;
  std::array<std::vector<Complex>, 2> comp;
  Complex at(int s, int row, int col) const {
    return comp[s - 1][static_cast<std::size_t>(row) * dim + col];
  }
};

/// A_-|n+1> = f(n)|n>.
LadderMatrix annihilation_matrix(const LadderTables& tables);
/// A_+|n> = f(n)|n+1>.
LadderMatrix creation_matrix(const LadderTables& tables);
/// Componentwise complex-conjugate transpose.
LadderMatrix adjoint(const LadderMatrix& m);
LadderMatrix multiply(const LadderMatrix& a, const LadderMatrix& b);
LadderMatrix subtract(const LadderMatrix& a, const LadderMatrix& b);

}  // namespace bchyper

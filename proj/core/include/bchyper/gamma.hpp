#pragma once

#include <vector>

#include "bchyper/numbers.hpp"

namespace bchyper {

/// Tolerance for deciding that an argument sits on a pole of Gamma.
inline constexpr double kPoleTol = 1e-12;

/// True when w is within kPoleTol of 0, -1, -2, ...
bool is_nonpositive_integer(Complex w, double tol = kPoleTol);

/// Lanczos (g = 7, 9 terms) with reflection for Re w < 1/2. Throws PoleError.
Complex complex_gamma(Complex w);
Complex complex_lgamma(Complex w);

/// Componentwise Gamma on the idempotent parts. PoleError::component() names
/// the offending component.
BiComplex bc_gamma(const BiComplex& z);

/// Rising factorial (a)_n by the recurrence, componentwise.
BiComplex bc_pochhammer(const BiComplex& a, int n);
Complex complex_pochhammer(Complex a, int n);

/// Truncated Weierstrass product e^{-gamma Z}/Z * prod (1+Z/k)^{-1} e^{Z/k}.
/// Slow; meant as a cross-check of bc_gamma. Throws PoleError.
BiComplex gamma_product_oracle(const BiComplex& z, long terms);

class PochhammerTable {
 public:
  PochhammerTable(BiComplex base, int upto);
  const BiComplex& base() const { return base_; }
  int upto() const { return static_cast<int>(values_.size()) - 1; }
  const BiComplex& operator[](int n) const { return values_.at(n); }
  const std::vector<BiComplex>& values() const { return values_; }

 private:
  BiComplex base_;
  std::vector<BiComplex> values_;
};

}  // namespace bchyper

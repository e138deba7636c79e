#include "bchyper/coherent.hpp"

#include <cmath>
#include <limits>

#include "bchyper/errors.hpp"
#include "bchyper/gamma.hpp"

namespace bchyper {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool same_params(const PfqParams& a, const PfqParams& b) {
  return a.alphas() == b.alphas() && a.betas() == b.betas();
}

SeriesOptions options_for(const BiComplex& zeta) {
  for (int s = 1; s <= 2; ++s) {
    if (std::abs(std::abs(zeta.idem(s)) - 1.0) <= kBoundaryBand) {
      return {1e-12, 10'000'000};
    }
  }
  return {};
}

struct ComponentState {
  std::array<std::vector<Complex>, 2> c;
};

ComponentState coefficients(const LadderTables& t, const BiComplex& z,
                            const BiComplex& norm) {
  ComponentState out;
  for (int s = 1; s <= 2; ++s) {
    auto& c = out.c[s - 1];
    c.resize(static_cast<std::size_t>(t.n_max) + 1);
    const Complex zs = z.idem(s);
    c[0] = 1.0 / std::sqrt(norm.idem(s));
    for (int n = 0; n < t.n_max; ++n) c[n + 1] = c[n] * zs / t.f[n].idem(s);
  }
  return out;
}

LadderMatrix empty_matrix(int dim) {
  LadderMatrix m;
  m.dim = dim;
  for (auto& c : m.comp) c.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0));
  return m;
}

}  // namespace

LadderTables build_tables(const PfqParams& params, int n_max) {
  if (n_max < 1) throw InvalidParams("build_tables: truncation must be positive");
  for (std::size_t i = 0; i < params.alphas().size(); ++i) {
    for (int s = 1; s <= 2; ++s) {
      if (is_nonpositive_integer(params.alphas()[i].idem(s))) {
        throw InvalidParams("coherent: alpha_" + std::to_string(i + 1) +
                            " is zero or a negative integer in component " +
                            std::to_string(s));
      }
    }
  }
  LadderTables t;
  t.n_max = n_max;
  t.rho.reserve(static_cast<std::size_t>(n_max) + 1);
  t.f.reserve(static_cast<std::size_t>(n_max));
  t.rho.push_back({1.0L, 1.0L});
  const auto a1 = params.alpha_parts(1);
  const auto a2 = params.alpha_parts(2);
  const auto b1 = params.beta_parts(1);
  const auto b2 = params.beta_parts(2);
  for (int n = 0; n < n_max; ++n) {
    double f[2];
    for (int s = 1; s <= 2; ++s) {
      const auto& a = s == 1 ? a1 : a2;
      const auto& b = s == 1 ? b1 : b2;
      Complex ratio = static_cast<double>(n + 1);
      for (const auto& bj : b) ratio *= bj + static_cast<double>(n);
      for (const auto& ai : a) ratio /= ai + static_cast<double>(n);
      if (!(ratio.real() > 0.0) ||
          std::abs(ratio.imag()) > 1e-12 * std::abs(ratio)) {
        throw PositivityError("coherent: f(" + std::to_string(n) +
                              ")^2 is not strictly positive in component " +
                              std::to_string(s));
      }
      f[s - 1] = std::sqrt(ratio.real());
    }
    t.f.push_back(Hyperbolic::from_idempotent(f[0], f[1]));
    const auto& prev = t.rho.back();
    const long double f1 = f[0];
    const long double f2 = f[1];
    t.rho.push_back({prev[0] * (f1 * f1), prev[1] * (f2 * f2)});
  }
  return t;
}

LadderTables build_tables(const CoherentSpec& spec) {
  return build_tables(spec.params, spec.truncation);
}

std::array<long double, 2> rho_closed_form(const PfqParams& params, int n) {
  std::array<long double, 2> out{};
  for (int s = 1; s <= 2; ++s) {
    long double r = 1.0L;
    for (int k = 1; k <= n; ++k) r *= k;
    std::complex<long double> ratio = 1.0L;
    for (const auto& b : params.beta_parts(s)) {
      for (int k = 0; k < n; ++k) ratio *= std::complex<long double>(b.real() + k, b.imag());
    }
    for (const auto& a : params.alpha_parts(s)) {
      for (int k = 0; k < n; ++k) ratio /= std::complex<long double>(a.real() + k, a.imag());
    }
    out[s - 1] = r * ratio.real();
  }
  return out;
}

BiComplex normalization(const CoherentSpec& spec) {
  const BiComplex zeta = BiComplex::from_idempotent(std::norm(spec.z.idem1()),
                                                    std::norm(spec.z.idem2()));
  return pfq(spec.params, zeta, options_for(zeta)).value;
}

CoherentState build_state(const CoherentSpec& spec) {
  CoherentState st;
  st.norm = normalization(spec);
  int n_max = spec.truncation;
  for (;;) {
    st.tables = build_tables(spec.params, n_max);
    ComponentState cs = coefficients(st.tables, spec.z, st.norm);
    const double t1 = std::norm(cs.c[0].back());
    const double t2 = std::norm(cs.c[1].back());
    if (t1 < kCoherentTail && t2 < kCoherentTail) {
      st.tail = Hyperbolic::from_idempotent(t1, t2);
      st.coeffs.reserve(cs.c[0].size());
      for (std::size_t n = 0; n < cs.c[0].size(); ++n) {
        st.coeffs.push_back(BiComplex::from_idempotent(cs.c[0][n], cs.c[1][n]));
      }
      return st;
    }
    if (n_max >= kMaxTruncation) {
      throw TruncationError("coherent: tail |c_N|^2 still above 1e-16 at N = " +
                            std::to_string(n_max));
    }
    n_max *= 2;
  }
}

std::vector<BiComplex> state_coefficients(const CoherentSpec& spec) {
  return build_state(spec).coeffs;
}

Hyperbolic norm_squared(const CoherentState& state) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (const auto& c : state.coeffs) {
    s1 += std::norm(c.idem1());
    s2 += std::norm(c.idem2());
  }
  return Hyperbolic::from_idempotent(s1, s2);
}

BiComplex inner_product(const CoherentSpec& a, const CoherentSpec& b) {
  if (!same_params(a.params, b.params)) {
    throw ParamMismatch("inner_product: states have different parameters");
  }
  CoherentState sa = build_state(a);
  CoherentState sb = build_state(b);
  const int n = std::max(sa.tables.n_max, sb.tables.n_max);
  const BiComplex na = sa.norm;
  const BiComplex nb = sb.norm;
  const LadderTables tables = build_tables(a.params, n);
  const ComponentState ca = coefficients(tables, a.z, na);
  const ComponentState cb = coefficients(tables, b.z, nb);
  Complex out[2];
  for (int s = 0; s < 2; ++s) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < ca.c[s].size(); ++k) acc += std::conj(ca.c[s][k]) * cb.c[s][k];
    out[s] = acc;
  }
  return BiComplex::from_idempotent(out[0], out[1]);
}

BiComplex inner_product_closed_form(const CoherentSpec& a, const CoherentSpec& b) {
  if (!same_params(a.params, b.params)) {
    throw ParamMismatch("inner_product: states have different parameters");
  }
  const BiComplex na = normalization(a);
  const BiComplex nb = normalization(b);
  Complex out[2];
  for (int s = 1; s <= 2; ++s) {
    const Complex zeta = std::conj(a.z.idem(s)) * b.z.idem(s);
    const Complex cross = sum_component(a.params.alpha_parts(s),
                                        a.params.beta_parts(s), zeta).value;
    out[s - 1] = cross / std::sqrt(na.idem(s) * nb.idem(s));
  }
  return BiComplex::from_idempotent(out[0], out[1]);
}

EigenReport annihilate(const CoherentSpec& spec) {
  const CoherentState st = build_state(spec);
  const ComponentState cs = coefficients(st.tables, spec.z, st.norm);
  const int n_max = st.tables.n_max;
  double res[2];
  double bnd[2];
  for (int s = 1; s <= 2; ++s) {
    const auto& c = cs.c[s - 1];
    const Complex zs = spec.z.idem(s);
    double r2 = 0.0;
    double zpsi2 = 0.0;
    for (int n = 0; n < n_max; ++n) {
      const Complex lowered = st.tables.f[n].idem(s) * c[n + 1];
      r2 += std::norm(lowered - zs * c[n]);
      zpsi2 += std::norm(zs * c[n]);
    }
    r2 += std::norm(zs * c[n_max]);
    zpsi2 += std::norm(zs * c[n_max]);
    res[s - 1] = std::sqrt(r2);
    bnd[s - 1] = std::abs(c[n_max]) * st.tables.f[n_max - 1].idem(s) +
                 4.0 * kEps * std::sqrt(zpsi2);
  }
  EigenReport r;
  r.residual = Hyperbolic::from_idempotent(res[0], res[1]);
  r.bound = Hyperbolic::from_idempotent(bnd[0], bnd[1]);
  r.passed = res[0] <= bnd[0] && res[1] <= bnd[1];
  return r;
}

BiComplex commutator_diagonal(const CoherentSpec& spec, int n) {
  if (n < 1 || n >= spec.truncation) {
    throw IndexError("commutator_diagonal: n must satisfy 1 <= n < N");
  }
  const LadderTables t = build_tables(spec.params, spec.truncation);
  Complex out[2];
  for (int s = 1; s <= 2; ++s) {
    const double fn = t.f[n].idem(s);
    const double fp = t.f[n - 1].idem(s);
    out[s - 1] = fn * fn - fp * fp;
  }
  return BiComplex::from_idempotent(out[0], out[1]);
}

std::array<long double, 2> commutator_from_rho(const LadderTables& t, int n) {
  if (n < 1 || n >= t.n_max) {
    throw IndexError("commutator_from_rho: n must satisfy 1 <= n < N");
  }
  std::array<long double, 2> out{};
  for (int s = 0; s < 2; ++s) {
    out[s] = t.rho[n + 1][s] / t.rho[n][s] - t.rho[n][s] / t.rho[n - 1][s];
  }
  return out;
}

LadderMatrix annihilation_matrix(const LadderTables& t) {
  LadderMatrix m = empty_matrix(t.n_max + 1);
  for (int n = 0; n < t.n_max; ++n) {
    for (int s = 0; s < 2; ++s) {
      m.comp[s][static_cast<std::size_t>(n) * m.dim + n + 1] = t.f[n].idem(s + 1);
    }
  }
  return m;
}

LadderMatrix creation_matrix(const LadderTables& t) {
  LadderMatrix m = empty_matrix(t.n_max + 1);
  for (int n = 0; n < t.n_max; ++n) {
    for (int s = 0; s < 2; ++s) {
      m.comp[s][static_cast<std::size_t>(n + 1) * m.dim + n] = t.f[n].idem(s + 1);
    }
  }
  return m;
}

LadderMatrix adjoint(const LadderMatrix& a) {
  LadderMatrix m = empty_matrix(a.dim);
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < a.dim; ++i) {
      for (int j = 0; j < a.dim; ++j) {
        m.comp[s][static_cast<std::size_t>(j) * a.dim + i] =
            std::conj(a.comp[s][static_cast<std::size_t>(i) * a.dim + j]);
      }
    }
  }
  return m;
}

LadderMatrix multiply(const LadderMatrix& a, const LadderMatrix& b) {
  LadderMatrix m = empty_matrix(a.dim);
  const auto d = static_cast<std::size_t>(a.dim);
  for (int s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        const Complex aik = a.comp[s][i * d + k];
        if (aik == Complex(0.0)) continue;
        for (std::size_t j = 0; j < d; ++j) m.comp[s][i * d + j] += aik * b.comp[s][k * d + j];
      }
    }
  }
  return m;
}

LadderMatrix subtract(const LadderMatrix& a, const LadderMatrix& b) {
  LadderMatrix m = a;
  for (int s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < m.comp[s].size(); ++i) m.comp[s][i] -= b.comp[s][i];
  }
  return m;
}

}  // namespace bchyper

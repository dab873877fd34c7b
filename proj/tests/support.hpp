#pragma once
// Generators and independent oracles shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "qfrob/algebras.hpp"
#include "qfrob/brackets.hpp"
#include "qfrob/geometry.hpp"
#include "qfrob/linalg.hpp"

namespace qfrob::testing {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]; modulo draws keep sequences identical across
// standard libraries.
inline long draw(Rng& rng, long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

inline Rational nonzero_coefficient(Rng& rng, long range) {
  long v = draw(rng, 1, range);
  return Rational(draw(rng, 0, 1) ? v : -v);
}

// All monomials in `nvars` variables with min_degree <= degree <= max_degree.
inline std::vector<Monomial> monomials_upto(std::size_t nvars, int max_degree, int min_degree = 0) {
  std::vector<Monomial> out;
  Monomial m{};
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var == nvars) {
      if (m.degree() >= static_cast<unsigned>(min_degree)) out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.exps[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e);
    }
    m.exps[var] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

// Each candidate monomial is kept with probability `percent`/100.
inline Polynomial random_polynomial(Rng& rng, std::size_t nvars, int max_degree, int percent, long range,
                                    int min_degree = 0) {
  std::vector<Polynomial::Term> terms;
  for (const Monomial& m : monomials_upto(nvars, max_degree, min_degree))
    if (draw(rng, 1, 100) <= percent) terms.push_back({m, nonzero_coefficient(rng, range)});
  return Polynomial::from_terms(std::move(terms));
}

inline std::vector<Polynomial> random_components(Rng& rng, std::size_t n, int max_degree, int percent, long range,
                                                 int min_degree = 0) {
  std::vector<Polynomial> h;
  for (std::size_t i = 0; i < n; ++i) h.push_back(random_polynomial(rng, n, max_degree, percent, range, min_degree));
  return h;
}

inline PotentialFamily random_linear_family(Rng& rng, const FlatCoordinateData& flat, const Rational& K1) {
  return PotentialFamily(flat, random_components(rng, flat.dim(), 1, 70, 5, 1), K1);
}

// Integer matrix with determinant +-1: a product of random shears and a
// random sign flip, so its inverse is integral too.
inline Matrix<Rational> random_unimodular(Rng& rng, std::size_t n) {
  Matrix<Rational> a = identity_matrix<Rational>(n);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long c = draw(rng, -2, 2);
    for (std::size_t k = 0; k < n; ++k) a(i, k) += c * a(j, k);
  }
  if (draw(rng, 0, 1)) {
    std::size_t i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
    for (std::size_t k = 0; k < n; ++k) a(i, k) = -a(i, k);
  }
  return a;
}

// p(A v), written back in the original variables.
inline Polynomial substitute_linear(const Polynomial& p, const Matrix<Rational>& a) {
  const std::size_t n = a.dim();
  Polynomial out = p;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial row;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(a(i, k)) != 0) row += a(i, k) * Polynomial::variable(n + k);
    out = out.substitute(i, row);
  }
  for (std::size_t k = 0; k < n; ++k) out = out.substitute(n + k, Polynomial::variable(k));
  return out;
}

// The family in coordinates v with u = A v: eta and H transform as
// contravariant tensors, K1 is unchanged. Solutions map to solutions.
inline PotentialFamily linear_change(const PotentialFamily& H, const Matrix<Rational>& a) {
  const std::size_t n = H.dim();
  Matrix<Rational> inv = invert_matrix(a);
  Matrix<Rational> eta(n, 2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eta(p, q) += inv(p, i) * inv(q, j) * H.flat().upper(i, j);
  std::vector<Polynomial> h(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(inv(p, i)) != 0) h[p] += inv(p, i) * substitute_linear(H[i], a);
  return PotentialFamily(FlatCoordinateData(eta), std::move(h), H.K1());
}

// A solution of both deformation systems of degree <= 3, disguised by a
// random unimodular change of coordinates. For K1 = 0 the seed family is
// decoupled, H^i = h_i(u^i) with eta = I; otherwise it is
// H^1 = -K1/2 u^1 |u|^2. `cubic_only` keeps the result homogeneous.
inline PotentialFamily random_solution(Rng& rng, std::size_t n, const Rational& K1, bool cubic_only = false) {
  std::vector<Polynomial> h(n);
  if (sgn(K1) == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned d = cubic_only ? 3 : 2; d <= 3; ++d)
        if (draw(rng, 0, 2)) h[i] += nonzero_coefficient(rng, 3) * Polynomial::variable(i).pow(d);
  } else {
    Polynomial norm;
    for (std::size_t i = 0; i < n; ++i) norm += Polynomial::variable(i).pow(2);
    h[0] = Rational(-1, 2) * K1 * Polynomial::variable(0) * norm;
  }
  PotentialFamily seed(FlatCoordinateData::identity(n), std::move(h), K1);
  return linear_change(seed, random_unimodular(rng, n));
}

// Levi-Civita connection through the covariant Christoffel symbols:
// b^{ij}_k = -g^{is} Γ^j_{sk}, Γ^j_{sk} = 1/2 g^{jm} (∂_s g_{mk} + ∂_k g_{ms} - ∂_m g_{sk}).
inline Connection christoffel_oracle(const Metric& metric) {
  const std::size_t n = metric.dim();
  Matrix<RationalFunction> up = to_rational_functions(metric.entries());
  Matrix<RationalFunction> down = invert_matrix(up);
  Tensor<RationalFunction> d(n, 3);  // d(m,k,s) = ∂_s g_{mk}
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t s = 0; s < n; ++s) d(m, k, s) = down(m, k).derivative(s);
  const RationalFunction half(Rational(1, 2));
  Tensor<RationalFunction> gamma(n, 3);  // gamma(j,s,k) = Γ^j_{sk}
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t k = 0; k < n; ++k) {
        RationalFunction acc;
        for (std::size_t m = 0; m < n; ++m) acc += up(j, m) * (d(m, k, s) + d(m, s, k) - d(s, k, m));
        gamma(j, s, k) = half * acc;
      }
  Connection b(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        RationalFunction acc;
        for (std::size_t s = 0; s < n; ++s) acc -= up(i, s) * gamma(j, s, k);
        b(i, j, k) = acc;
      }
  return b;
}

// Contravariant form of the constant-curvature metric
// (1 + K/4 |u|^2)^2 δ^{ij} on R^n.
inline Metric conformal_metric(std::size_t n, const Rational& K) {
  Polynomial norm;
  for (std::size_t i = 0; i < n; ++i) norm += Polynomial::variable(i).pow(2);
  Polynomial factor = (Polynomial(1) + Rational(K / 4) * norm).pow(2);
  Matrix<Polynomial> g(n, 2);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = factor;
  return Metric(g);
}

inline FlatCoordinateData antidiagonal(std::size_t n) {
  Matrix<Rational> eta(n, 2);
  for (std::size_t i = 0; i < n; ++i) eta(i, n - 1 - i) = 1;
  return FlatCoordinateData(eta);
}

inline IdentityTestConfig probabilistic(std::uint64_t seed) {
  IdentityTestConfig cfg;
  cfg.mode = TestMode::probabilistic;
  cfg.seed = seed;
  return cfg;
}

}  // namespace qfrob::testing

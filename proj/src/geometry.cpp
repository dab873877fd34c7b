#include "qfrob/geometry.hpp"

namespace qfrob {

Metric::Metric(Matrix<Polynomial> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (entries_(i, j) != entries_(j, i))
        throw AsymmetricMetric("metric is not symmetric at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
  det_ = qfrob::determinant(entries_);
  if (det_.is_zero()) throw DegenerateMetric("metric determinant vanishes identically");
}

Connection levi_civita(const Metric& g) {
  const std::size_t n = g.dim();
  const Polynomial& det = g.determinant();
  Matrix<Polynomial> adj = adjugate(g.entries());

  // dg(i, j, k) = ∂_k g^{ij}
  Tensor<Polynomial> dg(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) dg(i, j, k) = g(i, j).derivative(k);

  // t(i, j, m) = g^{is} ∂_s g^{jm} - g^{js} ∂_s g^{im}
  Tensor<Polynomial> t(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Polynomial acc;
        for (std::size_t s = 0; s < n; ++s) acc += g(i, s) * dg(j, m, s) - g(j, s) * dg(i, m, s);
        t(i, j, m) = std::move(acc);
      }

  const Rational half(1, 2);
  Connection b(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial num = det * dg(i, j, k);
        for (std::size_t m = 0; m < n; ++m) num += t(i, j, m) * adj(m, k);
        b(i, j, k) = RationalFunction(half * num, det);
      }
  return b;
}

Tensor<RationalFunction> curvature_obstruction(const Matrix<RationalFunction>& g, const Connection& b,
                                               const RationalFunction& K) {
  const std::size_t n = g.dim();
  if (b.dim() != n || b.rank() != 3) throw DimensionMismatch("connection shape does not match metric");

  // db(j, r, s, k) = ∂_k b^{jr}_s
  Tensor<RationalFunction> db(n, 4);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t k = 0; k < n; ++k) db(j, r, s, k) = b(j, r, s).derivative(k);

  Tensor<RationalFunction> out(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
          RationalFunction acc;
          for (std::size_t s = 0; s < n; ++s) {
            acc += g(i, s) * (db(j, r, s, k) - db(j, r, k, s));
            acc += b(i, j, s) * b(s, r, k) - b(i, r, s) * b(s, j, k);
          }
          RationalFunction rhs;
          if (j == k) rhs += g(i, r);
          if (r == k) rhs -= g(i, j);
          out(i, j, r, k) = acc - K * rhs;
        }
  return out;
}

Tensor<RationalFunction> curvature_obstruction(const Metric& g, const Connection& b, const Rational& K) {
  return curvature_obstruction(to_rational_functions(g.entries()), b, RationalFunction(K));
}

CheckOutcome constant_curvature_check(const Metric& g, const Rational& K, const IdentityTestConfig& cfg) {
  return check_tensor("constant-curvature", curvature_obstruction(g, levi_civita(g), K), cfg);
}

CompatibilityReport pencil_compatibility_check(const MetricPencil& p, const IdentityTestConfig& cfg) {
  const std::size_t n = p.g1.dim();
  if (p.g2.dim() != n) throw DimensionMismatch("pencil metrics have different dimensions");
  const Polynomial lam1 = Polynomial::variable(lambda1_index(n));
  const Polynomial lam2 = Polynomial::variable(lambda2_index(n));

  Matrix<Polynomial> combined(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) combined(i, j) = lam1 * p.g1(i, j) + lam2 * p.g2(i, j);
  if (determinant(combined).is_zero())
    throw DegeneratePencil("pencil determinant vanishes identically in (u, lam1, lam2)");
  Metric g(std::move(combined));

  Connection b = levi_civita(g);
  Connection b1 = levi_civita(p.g1);
  Connection b2 = levi_civita(p.g2);
  Tensor<RationalFunction> linearity(n, 3);
  for (std::size_t k = 0; k < b.size(); ++k)
    linearity.flat(k) = b.flat(k) - RationalFunction(lam1) * b1.flat(k) - RationalFunction(lam2) * b2.flat(k);

  RationalFunction K = RationalFunction(lam1 * p.K1 + lam2 * p.K2);
  CompatibilityReport report;
  report.connection_linearity = check_tensor("connection-linearity", linearity, cfg);
  report.curvature_affinity =
      check_tensor("curvature-affinity", curvature_obstruction(to_rational_functions(g.entries()), b, K), cfg);
  return report;
}

}  // namespace qfrob

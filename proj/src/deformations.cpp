#include "qfrob/deformations.hpp"

#include <algorithm>
#include <array>

#include "qfrob/algebras.hpp"

namespace qfrob {

std::string_view to_string(ResidualKind kind) {
  switch (kind) {
    case ResidualKind::ass1:
      return "ass1";
    case ResidualKind::ass2:
      return "ass2";
    case ResidualKind::as1:
      return "as1";
    case ResidualKind::as2:
      return "as2";
  }
  return "?";
}

bool ResidualTensor::vanishes() const {
  return std::all_of(components.data().begin(), components.data().end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

namespace {

ResidualTensor finish(ResidualKind kind, Tensor<Polynomial> components) {
  ResidualTensor r{kind, std::move(components), -1};
  for (const auto& p : r.components.data()) r.max_degree = std::max(r.max_degree, p.total_degree());
  return r;
}

Tensor<RationalFunction> lift(const Tensor<Rational>& t) {
  return t.map([](const Rational& c) { return RationalFunction(c); });
}

}  // namespace

ResidualTensor residual_ass1(const PotentialFamily& H) {
  const std::size_t n = H.dim();
  const auto& hess = H.hessian();
  const auto& eta = H.flat().eta();
  // m(i, k, p) = ∂_k∂_s H^i η^{sp}
  Tensor<Polynomial> m(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < n; ++p) {
        Polynomial acc;
        for (std::size_t s = 0; s < n; ++s)
          if (sgn(eta(s, p)) != 0) acc += eta(s, p) * hess(i, k, s);
        m(i, k, p) = std::move(acc);
      }
  Tensor<Polynomial> out(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Polynomial acc;
          for (std::size_t p = 0; p < n; ++p) acc += m(i, k, p) * hess(j, p, l) - m(j, k, p) * hess(i, p, l);
          out(i, j, k, l) = std::move(acc);
        }
  return finish(ResidualKind::ass1, std::move(out));
}

ResidualTensor residual_ass2(const PotentialFamily& H) {
  const std::size_t n = H.dim();
  Matrix<Polynomial> g = H.deformed_metric();
  // q(j, k, s) = η^{jp} ∂_p∂_s H^k
  Tensor<Polynomial> q = H.raised_hessian();
  Tensor<Polynomial> out(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc;
        for (std::size_t s = 0; s < n; ++s) acc += g(i, s) * q(j, k, s) - g(j, s) * q(i, k, s);
        out(i, j, k) = std::move(acc);
      }
  return finish(ResidualKind::ass2, std::move(out));
}

namespace {

bool homogeneous_of_degree(const Polynomial& p, unsigned d) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [d](const Polynomial::Term& t) { return t.monomial.degree() == d; });
}

}  // namespace

StructureConstants3 quadratic_to_structure(const PotentialFamily& H) {
  const std::size_t n = H.dim();
  if (sgn(H.K1()) != 0) throw NotQuadratic("quadratic structure constants require K1 = 0");
  for (std::size_t i = 0; i < n; ++i)
    if (!homogeneous_of_degree(H[i], 2))
      throw NotQuadratic("H^" + std::to_string(i + 1) + " is not homogeneous quadratic");
  const Rational half(1, 2);
  StructureConstants3 a(n, 3, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational acc(0);
        for (std::size_t s = 0; s < n; ++s)
          acc += H.flat().upper(i, s) * H.hessian()(j, s, k).constant_term();
        a(i, j, k) = half * acc;
      }
  return a;
}

bool NovikovReport::consistent() const {
  if (relation1.holds() != right_commutativity.holds()) return false;
  return !right_commutativity.holds() || relation2.holds() == left_symmetry.holds();
}

NovikovReport novikov_relations_check(const StructureConstants3& a, const IdentityTestConfig& cfg) {
  const std::size_t n = a.dim();
  Tensor<Rational> r1(n, 4, Rational(0));
  Tensor<Rational> r2(n, 4, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational x(0), y(0);
          for (std::size_t s = 0; s < n; ++s) {
            x += a(i, j, s) * a(s, k, l) - a(i, k, s) * a(s, j, l);
            y += (a(i, s, l) + a(s, i, l)) * a(j, k, s) - (a(j, s, l) + a(s, j, l)) * a(i, k, s);
          }
          r1(i, j, k, l) = x;
          r2(i, j, k, l) = y;
        }
  NovikovReport report;
  report.relation1 = check_tensor("novikov-relation-1", lift(r1), cfg);
  report.relation2 = check_tensor("novikov-relation-2", lift(r2), cfg);
  FiniteAlgebra alg = FiniteAlgebra::from_constants(a);
  report.right_commutativity = check_right_commutativity(alg, cfg);
  report.left_symmetry = check_left_symmetry(alg, cfg);
  return report;
}

StructureConstants4 cubic_to_structure(const PotentialFamily& H) {
  const std::size_t n = H.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!homogeneous_of_degree(H[i], 3)) throw NotCubic("H^" + std::to_string(i + 1) + " is not homogeneous cubic");
  // c(j, s, k, l) = 1/6 ∂_s∂_k∂_l H^j
  Tensor<Rational> c(n, 4, Rational(0));
  const Rational sixth(1, 6);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          c(j, s, k, l) = sixth * H.hessian()(j, s, k).derivative(l).constant_term();
  StructureConstants4 a(n, 4, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational acc(0);
          for (std::size_t s = 0; s < n; ++s) acc += H.flat().upper(i, s) * c(j, s, k, l);
          a(i, j, k, l) = acc;
        }
  return a;
}

CubicReport cubic_relations_check(const StructureConstants4& a, const Rational& K1, const IdentityTestConfig& cfg) {
  const std::size_t n = a.dim();
  Tensor<Rational> r1(n, 6, Rational(0));
  Tensor<Rational> r2(n, 6, Rational(0));

  // Bracketed factor 3 a^{is}_{mn} + 3 a^{si}_{mn} - K1 δ^i_m δ^s_n.
  auto factor = [&](std::size_t i, std::size_t s, std::size_t m, std::size_t nn) {
    Rational v = 3 * (a(i, s, m, nn) + a(s, i, m, nn));
    if (i == m && s == nn) v -= K1;
    return v;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t nn = 0; nn < n; ++nn) {
              Rational x(0);
              for (std::size_t s = 0; s < n; ++s)
                x += a(k, i, m, s) * a(s, j, nn, l) - a(k, j, nn, s) * a(s, i, m, l) +
                     a(k, i, nn, s) * a(s, j, m, l) - a(k, j, m, s) * a(s, i, nn, l);
              r1(i, j, k, l, m, nn) = x;

              Rational y(0);
              // All 3! orderings of (l, m, n), repeated indices counted with multiplicity.
              std::array<std::array<int, 3>, 6> orders{
                  {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
              std::array<std::size_t, 3> base{l, m, nn};
              for (const auto& o : orders) {
                std::size_t pl = base[o[0]], pm = base[o[1]], pn = base[o[2]];
                for (std::size_t s = 0; s < n; ++s)
                  y += factor(i, s, pm, pn) * a(j, k, pl, s) - factor(j, s, pm, pn) * a(i, k, pl, s);
              }
              r2(i, j, k, l, m, nn) = y;
            }
  CubicReport report;
  report.relation1 = check_tensor("cubic-relation-1", lift(r1), cfg);
  report.relation2 = check_tensor("cubic-relation-2", lift(r2), cfg);
  return report;
}

PotentialFamily ScalarPotential::induced_family() const {
  const std::size_t n = dim();
  std::vector<Polynomial> h(n);
  std::vector<Polynomial> inner(n);
  const Rational half(1, 2);
  for (std::size_t s = 0; s < n; ++s) {
    Polynomial acc = phi.derivative(s);
    for (std::size_t k = 0; k < n; ++k) {
      Rational c = half * (skew(s, k) - skew(k, s));
      if (sgn(c) != 0) acc -= c * Polynomial::variable(k);
    }
    inner[s] = std::move(acc);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      if (sgn(flat.upper(i, s)) != 0) h[i] += flat.upper(i, s) * inner[s];
  return PotentialFamily(flat, std::move(h), K1);
}

ScalarPotential extract_potential(const PotentialFamily& H, const IdentityTestConfig& cfg) {
  const std::size_t n = H.dim();
  const auto& flat = H.flat();
  Tensor<Polynomial> f = H.raised_hessian();
  std::uint64_t stream = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (is_zero(RationalFunction(f(i, j, k) - f(j, i, k)), cfg, stream++) != ZeroVerdict::zero)
          throw NotCommutative(i, j,
                               "algebra A(u) is not commutative: e^" + std::to_string(i + 1) + " o e^" +
                                   std::to_string(j + 1) + " != e^" + std::to_string(j + 1) + " o e^" +
                                   std::to_string(i + 1));

  // m(p, l) = η_{ps} ∂_l H^s; its skew part is the constant c_{lp} - c_{pl}.
  Matrix<Polynomial> m(n, 2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t l = 0; l < n; ++l) {
      Polynomial acc;
      for (std::size_t s = 0; s < n; ++s)
        if (sgn(flat.lower(p, s)) != 0) acc += flat.lower(p, s) * H.gradient()(s, l);
      m(p, l) = std::move(acc);
    }
  Matrix<Rational> c(n, 2, Rational(0));
  const Rational half(1, 2);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t p = 0; p < n; ++p) {
      Polynomial d = m(p, l) - m(l, p);
      if (!d.is_constant()) throw NotIntegrable("skew part of eta*dH is not constant");
      c(l, p) = half * d.constant_term();
    }

  // ∂_p Φ = η_{ps} H^s + c_{pk} u^k
  std::vector<Polynomial> form(n);
  for (std::size_t p = 0; p < n; ++p) {
    Polynomial acc;
    for (std::size_t s = 0; s < n; ++s)
      if (sgn(flat.lower(p, s)) != 0) acc += flat.lower(p, s) * H[s];
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(c(p, k)) != 0) acc += c(p, k) * Polynomial::variable(k);
    form[p] = std::move(acc);
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t l = p + 1; l < n; ++l)
      if (form[p].derivative(l) != form[l].derivative(p)) throw NotIntegrable("gradient form is not closed");

  Polynomial phi = integrate_closed_form(form);
  std::vector<Polynomial::Term> kept;
  for (const auto& t : phi.terms())
    if (t.monomial.degree() >= 2) kept.push_back(t);
  return ScalarPotential{flat, Polynomial::from_terms(std::move(kept)), std::move(c), H.K1()};
}

WdvvResiduals residual_wdvv(const ScalarPotential& sp) {
  const std::size_t n = sp.dim();
  const auto& eta = sp.flat.eta();
  // d2(a, b) and d3(a, b, c) are partial derivatives of Φ.
  Matrix<Polynomial> d2(n, 2);
  Tensor<Polynomial> d3(n, 3);
  for (std::size_t a = 0; a < n; ++a) {
    Polynomial da = sp.phi.derivative(a);
    for (std::size_t b = 0; b < n; ++b) {
      d2(a, b) = da.derivative(b);
      for (std::size_t c = 0; c < n; ++c) d3(a, b, c) = d2(a, b).derivative(c);
    }
  }
  // raised(p, j, l) = η^{ps} Φ_{sjl}
  Tensor<Polynomial> raised(n, 3);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Polynomial acc;
        for (std::size_t s = 0; s < n; ++s)
          if (sgn(eta(p, s)) != 0) acc += eta(p, s) * d3(s, j, l);
        raised(p, j, l) = std::move(acc);
      }

  Tensor<Polynomial> as1(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Polynomial acc;
          for (std::size_t s = 0; s < n; ++s) acc += d3(k, i, s) * raised(s, j, l) - d3(k, j, s) * raised(s, i, l);
          as1(i, j, k, l) = std::move(acc);
        }

  // w(i, s) = Φ_{is} - K1/2 (η_{ir} u^r)(η_{sl} u^l)
  std::vector<Polynomial> lowered(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      if (sgn(sp.flat.lower(i, r)) != 0) lowered[i] += sp.flat.lower(i, r) * Polynomial::variable(r);
  const Rational half_k = sp.K1 / 2;
  Matrix<Polynomial> w(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) w(i, s) = d2(i, s) - half_k * (lowered[i] * lowered[s]);

  Tensor<Polynomial> as2(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc;
        for (std::size_t s = 0; s < n; ++s) acc += w(i, s) * raised(s, j, k) - w(j, s) * raised(s, i, k);
        as2(i, j, k) = std::move(acc);
      }
  return {finish(ResidualKind::as1, std::move(as1)), finish(ResidualKind::as2, std::move(as2))};
}

ReductionReport reduction_consistency(const ScalarPotential& sp, const IdentityTestConfig& cfg) {
  const std::size_t n = sp.dim();
  const auto& eta = sp.flat.eta();
  PotentialFamily H = sp.induced_family();
  ResidualTensor ass1 = residual_ass1(H);
  ResidualTensor ass2 = residual_ass2(H);
  WdvvResiduals wdvv = residual_wdvv(sp);

  ReductionReport report;
  report.induced_vanish = check_tensor("ass1", ass1.components, cfg).holds() &&
                          check_tensor("ass2", ass2.components, cfg).holds();
  report.wdvv_vanish = check_tensor("as1", wdvv.as1.components, cfg).holds() &&
                       check_tensor("as2", wdvv.as2.components, cfg).holds();

  Tensor<Polynomial> c1(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Polynomial acc = ass1.components(i, j, k, l);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
              Rational e = eta(i, a) * eta(j, b);
              if (sgn(e) != 0) acc -= e * wdvv.as1.components(a, b, k, l);
            }
          c1(i, j, k, l) = std::move(acc);
        }
  Tensor<Polynomial> c2(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc = ass2.components(i, j, k);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              Rational e = 2 * eta(i, r) * eta(j, p) * eta(k, q);
              if (sgn(e) != 0) acc -= e * wdvv.as2.components(r, p, q);
            }
        c2(i, j, k) = std::move(acc);
      }
  report.contraction1 = check_tensor("ass1-vs-as1", c1, cfg);
  report.contraction2 = check_tensor("ass2-vs-as2", c2, cfg);
  return report;
}

}  // namespace qfrob

#include "qfrob/brackets.hpp"

#include "qfrob/geometry.hpp"

namespace qfrob {

BracketCoefficients::BracketCoefficients(Matrix<RationalFunction> g_, Tensor<RationalFunction> b_,
                                         RationalFunction K_)
    : g(std::move(g_)), b(std::move(b_)), K(std::move(K_)) {
  if (g.rank() != 2 || b.rank() != 3 || b.dim() != g.dim())
    throw DimensionMismatch("bracket coefficients have inconsistent shapes");
}

BracketCoefficients BracketCoefficients::constant(const FlatCoordinateData& flat) {
  const std::size_t n = flat.dim();
  return BracketCoefficients(to_rational_functions(flat.eta()), Tensor<RationalFunction>(n, 3), RationalFunction());
}

bool PoissonReport::is_poisson() const {
  for (const auto& c : conditions)
    if (!c.holds()) return false;
  return true;
}

std::array<Tensor<RationalFunction>, 5> poisson_residuals(const BracketCoefficients& bc) {
  const std::size_t n = bc.dim();
  const auto& g = bc.g;
  const auto& b = bc.b;
  const auto& K = bc.K;

  Tensor<RationalFunction> s1(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s1(i, j) = g(i, j) - g(j, i);

  Tensor<RationalFunction> s2(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s2(i, j, k) = g(i, j).derivative(k) - b(i, j, k) - b(j, i, k);

  Tensor<RationalFunction> s3(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        RationalFunction acc;
        for (std::size_t s = 0; s < n; ++s) acc += g(i, s) * b(j, r, s) - g(j, s) * b(i, r, s);
        s3(i, j, r) = std::move(acc);
      }

  Tensor<RationalFunction> s4 = curvature_obstruction(g, b, K);

  // curl(j, r, k, s) = ∂_s b^{jr}_k - ∂_k b^{jr}_s
  Tensor<RationalFunction> db(n, 4);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s) db(j, r, k, s) = b(j, r, k).derivative(s);
  Tensor<RationalFunction> curl(n, 4);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s) curl(j, r, k, s) = db(j, r, k, s) - db(j, r, s, k);

  // One cyclic summand of (s5) for the ordered triple (i, j, r).
  auto summand = [&](std::size_t i, std::size_t j, std::size_t r, std::size_t k, std::size_t p) {
    RationalFunction acc;
    for (std::size_t s = 0; s < n; ++s) acc += b(s, i, p) * curl(j, r, k, s) + b(s, i, k) * curl(j, r, p, s);
    if (r == p) acc += K * (b(i, j, k) - b(j, i, k));
    if (r == k) acc += K * (b(i, j, p) - b(j, i, p));
    return acc;
  };
  Tensor<RationalFunction> s5(n, 5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t p = 0; p < n; ++p)
            s5(i, j, r, k, p) = summand(i, j, r, k, p) + summand(j, r, i, k, p) + summand(r, i, j, k, p);

  return {std::move(s1), std::move(s2), std::move(s3), std::move(s4), std::move(s5)};
}

PoissonReport check_poisson(const BracketCoefficients& bc, const IdentityTestConfig& cfg) {
  auto residuals = poisson_residuals(bc);
  PoissonReport report;
  for (std::size_t c = 0; c < 5; ++c)
    report.conditions[c] = check_tensor("s" + std::to_string(c + 1), residuals[c], cfg);
  return report;
}

BracketCoefficients combine_brackets(const BracketCoefficients& bc1, const BracketCoefficients& bc2) {
  const std::size_t n = bc1.dim();
  if (bc2.dim() != n) throw DimensionMismatch("brackets have different dimensions");
  const RationalFunction lambda(Polynomial::variable(n));
  BracketCoefficients out = bc1;
  for (std::size_t k = 0; k < out.g.size(); ++k) out.g.flat(k) += lambda * bc2.g.flat(k);
  for (std::size_t k = 0; k < out.b.size(); ++k) out.b.flat(k) += lambda * bc2.b.flat(k);
  out.K += lambda * bc2.K;
  return out;
}

PoissonReport check_bracket_pencil(const BracketCoefficients& bc1, const BracketCoefficients& bc2,
                                   const IdentityTestConfig& cfg) {
  if (!check_poisson(bc1, cfg).is_poisson())
    throw NotAPoissonBracket(1, "first bracket of the pencil is not Poisson");
  if (!check_poisson(bc2, cfg).is_poisson())
    throw NotAPoissonBracket(2, "second bracket of the pencil is not Poisson");
  return check_poisson(combine_brackets(bc1, bc2), cfg);
}

std::pair<Rational, Rational> local_member(const Rational& K0, const Rational& K1) {
  if (sgn(K0) == 0 && sgn(K1) == 0) return {Rational(1), Rational(0)};
  return {K1, -K0};
}

std::pair<Rational, Rational> local_member(const BracketCoefficients& bc0, const BracketCoefficients& bc1) {
  auto constant_of = [](const RationalFunction& K) {
    if (!K.is_polynomial() || !K.numerator().is_constant())
      throw DimensionMismatch("local_member needs numeric nonlocal constants");
    return K.numerator().constant_term();
  };
  return local_member(constant_of(bc0.K), constant_of(bc1.K));
}

BracketCoefficients build_canonical(const PotentialFamily& H) {
  const std::size_t n = H.dim();
  Matrix<RationalFunction> g = to_rational_functions(H.deformed_metric());
  Tensor<Polynomial> raised = H.raised_hessian();
  Tensor<RationalFunction> b(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial entry = raised(i, j, k);
        if (i == k && sgn(H.K1()) != 0) entry -= H.K1() * Polynomial::variable(j);
        b(i, j, k) = RationalFunction(std::move(entry));
      }
  return BracketCoefficients(std::move(g), std::move(b), RationalFunction(H.K1()));
}

namespace {

std::string index_label(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

bool holds(const RationalFunction& f, const IdentityTestConfig& cfg, std::uint64_t stream) {
  return is_zero(f, cfg, stream) == ZeroVerdict::zero;
}

std::optional<Polynomial> as_polynomial(const RationalFunction& f) {
  RationalFunction r = f.reduced();
  if (!r.is_polynomial()) return std::nullopt;
  return r.numerator();
}

}  // namespace

CanonicalFormResult theorem1_form_check(const BracketCoefficients& bc, const FlatCoordinateData& flat,
                                        const IdentityTestConfig& cfg) {
  const std::size_t n = bc.dim();
  if (flat.dim() != n) throw DimensionMismatch("flat data and bracket have different dimensions");
  CanonicalFormResult result;
  auto fail = [&](std::string why) {
    result.obstruction = std::move(why);
    return result;
  };

  if (!bc.K.is_polynomial() || !bc.K.numerator().is_constant()) return fail("nonlocal constant K is not a number");
  const Rational K1 = bc.K.numerator().constant_term();

  // hess(j, m, k) = η_{mi} (b^{ij}_k + K1 δ^i_k u^j), the candidate ∂_m ∂_k H^j.
  Tensor<Polynomial> hess(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!as_polynomial(bc.b(i, j, k))) return fail("b" + index_label({i, j, k}) + " is not polynomial");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc;
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn(flat.lower(m, i)) == 0) continue;
          Polynomial entry = *as_polynomial(bc.b(i, j, k));
          if (i == k) entry += K1 * Polynomial::variable(j);
          acc += flat.lower(m, i) * entry;
        }
        hess(j, m, k) = std::move(acc);
      }

  std::uint64_t stream = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = m + 1; k < n; ++k)
        if (!holds(hess(j, m, k) - hess(j, k, m), cfg, stream++))
          return fail("second derivatives of H^" + std::to_string(j + 1) + " are not symmetric in " +
                      index_label({m, k}));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (!holds(hess(j, m, k).derivative(l) - hess(j, m, l).derivative(k), cfg, stream++))
            return fail("third derivatives of H^" + std::to_string(j + 1) + " are not symmetric in " +
                        index_label({k, l}) + " for slot " + std::to_string(m + 1));

  std::vector<Polynomial> h(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> gradient(n);
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<Polynomial> row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = hess(j, m, k);
      gradient[m] = integrate_closed_form(row);
    }
    h[j] = integrate_closed_form(gradient);
  }

  // The remainder D = g - g(H) must be a constant symmetric matrix; it equals
  // η a^T + a η^T for the linear part a^j_s of H, solved with zero skew part.
  Matrix<RationalFunction> g_rebuilt = to_rational_functions(PotentialFamily(flat, h, K1).deformed_metric());
  Matrix<Rational> remainder(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto d = as_polynomial(bc.g(i, j) - g_rebuilt(i, j));
      if (!d || !d->is_constant())
        return fail("g" + index_label({i, j}) + " differs from the canonical metric by a non-constant term");
      remainder(i, j) = d->constant_term();
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (remainder(i, j) != remainder(j, i)) return fail("g is not symmetric at " + index_label({i, j}));

  const Rational half(1, 2);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < n; ++s) {
      // a^j_s = (η^{-1} D/2)_{sj}
      Rational a(0);
      for (std::size_t m = 0; m < n; ++m) a += flat.lower(s, m) * remainder(m, j);
      a *= half;
      if (sgn(a) != 0) h[j] += a * Polynomial::variable(s);
    }

  PotentialFamily family(flat, std::move(h), K1);
  BracketCoefficients rebuilt = build_canonical(family);
  for (std::size_t k = 0; k < rebuilt.g.size(); ++k)
    if (!holds(rebuilt.g.flat(k) - bc.g.flat(k), cfg, stream++))
      return fail("reconstructed metric differs at " + index_label({k / n, k % n}));
  for (std::size_t k = 0; k < rebuilt.b.size(); ++k)
    if (!holds(rebuilt.b.flat(k) - bc.b.flat(k), cfg, stream++)) return fail("reconstructed connection differs");
  result.potentials = std::move(family);
  return result;
}

}  // namespace qfrob

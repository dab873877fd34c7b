#include "qfrob/algebras.hpp"

namespace qfrob {

FiniteAlgebra::FiniteAlgebra(Tensor<RationalFunction> m) : mult(std::move(m)) {
  if (mult.rank() != 3) throw DimensionMismatch("structure constants must have rank 3");
}

FiniteAlgebra FiniteAlgebra::from_constants(const Tensor<Rational>& f) {
  return FiniteAlgebra(f.map([](const Rational& c) { return RationalFunction(c); }));
}

BilinearForm::BilinearForm(Matrix<RationalFunction> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!entries_(i, j).equals(entries_(j, i))) throw AsymmetricMetric("bilinear form is not symmetric");
}

BilinearForm BilinearForm::from_constants(const Matrix<Rational>& m) { return BilinearForm(to_rational_functions(m)); }

namespace {

// prod(i, j, k, l) = ((e^i e^j) e^k)_l = f^{ij}_s f^{sk}_l
Tensor<RationalFunction> left_products(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  Tensor<RationalFunction> out(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          RationalFunction acc;
          for (std::size_t s = 0; s < n; ++s)
            if (!alg(i, j, s).is_zero()) acc += alg(i, j, s) * alg(s, k, l);
          out(i, j, k, l) = std::move(acc);
        }
  return out;
}

// ((e^i (e^j e^k))_l = f^{jk}_s f^{is}_l
RationalFunction right_product(const FiniteAlgebra& alg, std::size_t i, std::size_t j, std::size_t k,
                               std::size_t l) {
  RationalFunction acc;
  for (std::size_t s = 0; s < alg.dim(); ++s)
    if (!alg(j, k, s).is_zero()) acc += alg(j, k, s) * alg(i, s, l);
  return acc;
}

void require_nondegenerate(const BilinearForm& form) {
  if (determinant(form.entries()).is_zero()) throw DegenerateForm("bilinear form is degenerate");
}

}  // namespace

CheckOutcome check_right_commutativity(const FiniteAlgebra& alg, const IdentityTestConfig& cfg) {
  const std::size_t n = alg.dim();
  auto left = left_products(alg);
  Tensor<RationalFunction> res(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) res(i, j, k, l) = left(i, j, k, l) - left(i, k, j, l);
  return check_tensor("right-commutativity", res, cfg);
}

CheckOutcome check_commutativity(const FiniteAlgebra& alg, const IdentityTestConfig& cfg) {
  const std::size_t n = alg.dim();
  Tensor<RationalFunction> res(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) res(i, j, k) = alg(i, j, k) - alg(j, i, k);
  return check_tensor("commutativity", res, cfg);
}

CheckOutcome check_associativity(const FiniteAlgebra& alg, const IdentityTestConfig& cfg) {
  const std::size_t n = alg.dim();
  auto left = left_products(alg);
  Tensor<RationalFunction> res(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) res(i, j, k, l) = left(i, j, k, l) - right_product(alg, i, j, k, l);
  return check_tensor("associativity", res, cfg);
}

CheckOutcome check_left_symmetry(const FiniteAlgebra& alg, const IdentityTestConfig& cfg) {
  const std::size_t n = alg.dim();
  auto left = left_products(alg);
  Tensor<RationalFunction> res(n, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          res(i, j, k, l) = right_product(alg, i, j, k, l) - left(i, j, k, l) - right_product(alg, j, i, k, l) +
                            left(j, i, k, l);
  return check_tensor("left-symmetry", res, cfg);
}

CheckOutcome check_invariance(const FiniteAlgebra& alg, const BilinearForm& form, InvarianceVariant variant,
                              const IdentityTestConfig& cfg) {
  const std::size_t n = alg.dim();
  if (form.dim() != n) throw DimensionMismatch("form and algebra have different dimensions");
  Tensor<RationalFunction> res(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        RationalFunction acc;
        for (std::size_t s = 0; s < n; ++s) {
          acc += alg(i, j, s) * form(s, k);
          // right: <e^i, e^k e^j>; frobenius: <e^i, e^j e^k>
          const RationalFunction& other = variant == InvarianceVariant::right ? alg(k, j, s) : alg(j, k, s);
          acc -= other * form(i, s);
        }
        res(i, j, k) = std::move(acc);
      }
  return check_tensor(variant == InvarianceVariant::right ? "right-invariance" : "frobenius-invariance", res, cfg);
}

QuasiFrobeniusReport check_quasi_frobenius(const FiniteAlgebra& alg, const BilinearForm& form,
                                           const IdentityTestConfig& cfg) {
  require_nondegenerate(form);
  return {check_right_commutativity(alg, cfg), check_invariance(alg, form, InvarianceVariant::right, cfg)};
}

FrobeniusReport check_frobenius(const FiniteAlgebra& alg, const BilinearForm& form, const IdentityTestConfig& cfg) {
  require_nondegenerate(form);
  return {check_commutativity(alg, cfg), check_associativity(alg, cfg),
          check_invariance(alg, form, InvarianceVariant::frobenius, cfg)};
}

BilinearForm deformed_form(const FiniteAlgebra& alg, std::size_t offset) {
  const std::size_t n = alg.dim();
  Matrix<RationalFunction> m(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction acc;
      for (std::size_t k = 0; k < n; ++k)
        acc += (alg(i, j, k) + alg(j, i, k)) * RationalFunction(Polynomial::variable(offset + k));
      m(i, j) = std::move(acc);
    }
  return BilinearForm(std::move(m));
}

Lemma2Report lemma2_equivalence(const FiniteAlgebra& alg, const IdentityTestConfig& cfg) {
  if (!check_right_commutativity(alg, cfg).holds())
    throw NotRightCommutative("algebra does not satisfy (ab)c = (ac)b");
  std::size_t offset = 0;
  for (const auto& f : alg.mult.data()) offset = std::max(offset, f.variable_span());
  BilinearForm form = deformed_form(alg, offset);
  return {check_left_symmetry(alg, cfg), check_invariance(alg, form, InvarianceVariant::right, cfg)};
}

ParametricAlgebra algebra_at(const PotentialFamily& H, std::optional<std::span<const Rational>> point) {
  auto place = [&](const Polynomial& p) {
    if (!point) return RationalFunction(p);
    return RationalFunction(Polynomial(p.evaluate(*point)));
  };
  Tensor<Polynomial> f = H.raised_hessian();
  Matrix<Polynomial> g = H.deformed_metric();
  return {FiniteAlgebra(f.map(place)), BilinearForm(g.map(place)), BilinearForm::from_constants(H.flat().eta())};
}

ParametricAlgebra cubic_algebra(const StructureConstants4& a, const Rational& K1, const FlatCoordinateData& flat) {
  const std::size_t n = a.dim();
  Tensor<RationalFunction> mult(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc;
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(a(i, j, l, k)) != 0) acc += a(i, j, l, k) * Polynomial::variable(l);
        mult(i, j, k) = RationalFunction(std::move(acc));
      }
  Matrix<RationalFunction> form(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational c = 3 * (a(i, j, k, l) + a(j, i, k, l));
          if (sgn(c) != 0) acc += c * Polynomial::variable(k) * Polynomial::variable(l);
        }
      if (sgn(K1) != 0) acc -= K1 * Polynomial::variable(i) * Polynomial::variable(j);
      form(i, j) = RationalFunction(std::move(acc));
    }
  return {FiniteAlgebra(std::move(mult)), BilinearForm(std::move(form)), BilinearForm::from_constants(flat.eta())};
}

SootReport soot_equivalence(const PotentialFamily& H, const IdentityTestConfig& cfg) {
  ParametricAlgebra A = algebra_at(H);
  SootReport report;
  report.ass1 = check_tensor("ass1", residual_ass1(H).components, cfg);
  report.soot1 = check_right_commutativity(A.algebra, cfg);
  report.ass2 = check_tensor("ass2", residual_ass2(H).components, cfg);
  report.soot2 = check_invariance(A.algebra, A.deformed, InvarianceVariant::right, cfg);
  return report;
}

void for_each_structure(std::size_t dim, std::span<const Rational> values,
                        const std::function<bool(const Tensor<Rational>&)>& fn) {
  Tensor<Rational> t(dim, 3, values.front());
  std::vector<std::size_t> digit(t.size(), 0);
  for (;;) {
    if (!fn(t)) return;
    // Odometer increment with the last entry fastest.
    std::size_t pos = t.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < values.size()) {
        t.flat(pos) = values[digit[pos]];
        break;
      }
      digit[pos] = 0;
      t.flat(pos) = values[0];
      if (pos == 0) return;
    }
    if (t.size() == 0) return;
  }
}

}  // namespace qfrob

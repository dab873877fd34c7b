#include "qfrob/potential.hpp"

namespace qfrob {

FlatCoordinateData::FlatCoordinateData(Matrix<Rational> eta) : eta_(std::move(eta)) {
  const std::size_t n = eta_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (eta_(i, j) != eta_(j, i)) throw AsymmetricMetric("flat metric eta is not symmetric");
  eta_inv_ = invert_matrix(eta_);
}

FlatCoordinateData FlatCoordinateData::identity(std::size_t dim) {
  return FlatCoordinateData(identity_matrix<Rational>(dim));
}

PotentialFamily::PotentialFamily(FlatCoordinateData flat, std::vector<Polynomial> components, Rational K1)
    : flat_(std::move(flat)), h_(std::move(components)), k1_(std::move(K1)) {
  const std::size_t n = flat_.dim();
  if (h_.size() != n)
    throw DimensionMismatch("expected " + std::to_string(n) + " potentials, got " + std::to_string(h_.size()));
  for (const auto& h : h_)
    if (h.variable_span() > n) throw DimensionMismatch("potential depends on variables beyond u1..uN");
  gradient_ = Matrix<Polynomial>(n, 2);
  hessian_ = Tensor<Polynomial>(n, 3);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = 0; s < n; ++s) {
      gradient_(j, s) = h_[j].derivative(s);
      for (std::size_t k = 0; k < n; ++k) hessian_(j, s, k) = gradient_(j, s).derivative(k);
    }
}

Matrix<Polynomial> PotentialFamily::deformed_metric() const {
  const std::size_t n = dim();
  Matrix<Polynomial> g(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial acc;
      for (std::size_t s = 0; s < n; ++s) {
        const Rational& eis = flat_.upper(i, s);
        const Rational& ejs = flat_.upper(j, s);
        if (sgn(eis) != 0) acc += eis * gradient_(j, s);
        if (sgn(ejs) != 0) acc += ejs * gradient_(i, s);
      }
      if (sgn(k1_) != 0) acc -= k1_ * Polynomial::variable(i) * Polynomial::variable(j);
      g(i, j) = std::move(acc);
    }
  return g;
}

Tensor<Polynomial> PotentialFamily::raised_hessian() const {
  const std::size_t n = dim();
  Tensor<Polynomial> f(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc;
        for (std::size_t s = 0; s < n; ++s)
          if (sgn(flat_.upper(i, s)) != 0) acc += flat_.upper(i, s) * hessian_(j, s, k);
        f(i, j, k) = std::move(acc);
      }
  return f;
}

Polynomial integrate_closed_form(const std::vector<Polynomial>& form) {
  // F(u) = ∫_0^1 Σ_k u^k ω_k(t u) dt; a degree-d monomial of ω_k picks up
  // the factor 1/(d+1).
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = 0; k < form.size(); ++k)
    for (const auto& t : form[k].terms()) {
      Polynomial::Term out{t.monomial, t.coeff / (t.monomial.degree() + 1)};
      out.monomial.exps[k] = static_cast<std::uint16_t>(out.monomial.exps[k] + 1);
      terms.push_back(std::move(out));
    }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace qfrob

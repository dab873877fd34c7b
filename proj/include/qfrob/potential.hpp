#pragma once

#include <vector>

#include "qfrob/linalg.hpp"

namespace qfrob {

// Constant flat metric η^{ij} and its inverse η_{ij}.
class FlatCoordinateData {
 public:
  // Throws AsymmetricMetric / DegenerateMetric.
  explicit FlatCoordinateData(Matrix<Rational> eta);
  static FlatCoordinateData identity(std::size_t dim);

  std::size_t dim() const { return eta_.dim(); }
  const Matrix<Rational>& eta() const { return eta_; }
  const Matrix<Rational>& eta_inv() const { return eta_inv_; }
  const Rational& upper(std::size_t i, std::size_t j) const { return eta_(i, j); }
  const Rational& lower(std::size_t i, std::size_t j) const { return eta_inv_(i, j); }

 private:
  Matrix<Rational> eta_;
  Matrix<Rational> eta_inv_;
};

// N polynomial potentials H^i(u) together with the flat data and the
// curvature constant K1 of the canonical bracket they generate.
class PotentialFamily {
 public:
  // Throws DimensionMismatch unless there are exactly dim() components and
  // each depends on u^1..u^N only.
  PotentialFamily(FlatCoordinateData flat, std::vector<Polynomial> components, Rational K1);

  std::size_t dim() const { return flat_.dim(); }
  const FlatCoordinateData& flat() const { return flat_; }
  const std::vector<Polynomial>& components() const { return h_; }
  const Polynomial& operator[](std::size_t i) const { return h_[i]; }
  const Rational& K1() const { return k1_; }

  // hessian(j, s, k) = ∂²H^j / ∂u^s ∂u^k
  const Tensor<Polynomial>& hessian() const { return hessian_; }
  // gradient(j, s) = ∂H^j / ∂u^s
  const Matrix<Polynomial>& gradient() const { return gradient_; }

  // g1^{ij} = η^{is} ∂_s H^j + η^{js} ∂_s H^i - K1 u^i u^j
  Matrix<Polynomial> deformed_metric() const;
  // η^{is} ∂²H^j/∂u^s∂u^k at (i, j, k); the structure constants of A(u).
  Tensor<Polynomial> raised_hessian() const;

 private:
  FlatCoordinateData flat_;
  std::vector<Polynomial> h_;
  Rational k1_;
  Matrix<Polynomial> gradient_;
  Tensor<Polynomial> hessian_;
};

// Integrates a closed polynomial 1-form ω = Σ_k form[k] du^k along rays from
// the origin: returns F with F(0) = 0 and ∂_k F = form[k] when ω is closed.
Polynomial integrate_closed_form(const std::vector<Polynomial>& form);

}  // namespace qfrob

#pragma once

#include "qfrob/check.hpp"
#include "qfrob/linalg.hpp"

namespace qfrob {

// Contravariant metric g^{ij}(u) with polynomial entries. Coordinates u^1..u^N
// are variable indices 0..N-1; entries may also carry parameters at higher
// indices (pencil variables), which are never differentiated.
class Metric {
 public:
  // Throws AsymmetricMetric if g^{ij} != g^{ji} and DegenerateMetric if
  // det(g) vanishes identically.
  explicit Metric(Matrix<Polynomial> entries);

  std::size_t dim() const { return entries_.dim(); }
  const Matrix<Polynomial>& entries() const { return entries_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Polynomial& determinant() const { return det_; }

 private:
  Matrix<Polynomial> entries_;
  Polynomial det_;
};

// b^{ij}_k stored at (i, j, k).
using Connection = Tensor<RationalFunction>;

struct MetricPencil {
  Metric g1;
  Metric g2;
  Rational K1;
  Rational K2;
};

// Variable indices of the formal pencil parameters for an N-dimensional pencil.
inline std::size_t lambda1_index(std::size_t dim) { return dim; }
inline std::size_t lambda2_index(std::size_t dim) { return dim + 1; }

// Levi-Civita connection in raised form b^{ij}_k = -g^{is} Γ^j_{sk}. Computed
// from the contravariant metric directly,
//   b^{ij}_k = 1/2 ∂_k g^{ij} + 1/2 (g^{is} ∂_s g^{jm} - g^{js} ∂_s g^{im}) g_{mk},
// so every component has the single denominator det(g).
Connection levi_civita(const Metric& g);

// Componentwise LHS - RHS of the constant-curvature relation
//   g^{is}(∂_k b^{jr}_s - ∂_s b^{jr}_k) + b^{ij}_s b^{sr}_k - b^{ir}_s b^{sj}_k
//     = K (g^{ir} δ^j_k - g^{ij} δ^r_k),
// indexed (i, j, r, k). K may depend on pencil parameters but not on u.
Tensor<RationalFunction> curvature_obstruction(const Matrix<RationalFunction>& g, const Connection& b,
                                               const RationalFunction& K);
Tensor<RationalFunction> curvature_obstruction(const Metric& g, const Connection& b, const Rational& K);

CheckOutcome constant_curvature_check(const Metric& g, const Rational& K, const IdentityTestConfig& cfg);

struct CompatibilityReport {
  CheckOutcome connection_linearity;
  CheckOutcome curvature_affinity;
  bool compatible() const { return connection_linearity.holds() && curvature_affinity.holds(); }
};

// Forms g = lam1*g1 + lam2*g2 with formal lam1, lam2 and checks that its
// Levi-Civita connection is lam1*b1 + lam2*b2 and that it has constant
// curvature lam1*K1 + lam2*K2. Throws DegeneratePencil if det(g) == 0.
CompatibilityReport pencil_compatibility_check(const MetricPencil& p, const IdentityTestConfig& cfg);

}  // namespace qfrob

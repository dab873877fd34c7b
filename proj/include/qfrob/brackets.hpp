#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "qfrob/check.hpp"
#include "qfrob/potential.hpp"

namespace qfrob {

// Coefficients (g^{ij}, b^{ij}_k, K) of a bracket
//   g^{ij} d/dx + b^{ij}_k u^k_x + K u^i_x (d/dx)^{-1} u^j_x.
// Nothing beyond shape is enforced; g may be degenerate or asymmetric.
// K is constant in u but may depend on pencil parameters.
struct BracketCoefficients {
  Matrix<RationalFunction> g;
  Tensor<RationalFunction> b;
  RationalFunction K;

  BracketCoefficients() = default;
  // Throws DimensionMismatch on shape disagreement.
  BracketCoefficients(Matrix<RationalFunction> g, Tensor<RationalFunction> b, RationalFunction K);

  std::size_t dim() const { return g.dim(); }

  // The constant bracket (η, 0, 0).
  static BracketCoefficients constant(const FlatCoordinateData& flat);
};

struct PoissonReport {
  // s1 symmetry, s2 metric compatibility, s3 the g·b symmetry, s4 the
  // curvature relation, s5 the cyclic relation.
  std::array<CheckOutcome, 5> conditions;

  bool is_poisson() const;
  const CheckOutcome& operator[](std::size_t i) const { return conditions[i]; }
};

// Residual tensors of the five Poisson conditions, in the order s1..s5, with
// ranks 2, 3, 3, 4, 5. Index layouts:
//   s1 (i,j)       g^{ij} - g^{ji}
//   s2 (i,j,k)     ∂_k g^{ij} - b^{ij}_k - b^{ji}_k
//   s3 (i,j,r)     g^{is} b^{jr}_s - g^{js} b^{ir}_s
//   s4 (i,j,r,k)   curvature_obstruction
//   s5 (i,j,r,k,p) cyclic sum over (i,j,r)
std::array<Tensor<RationalFunction>, 5> poisson_residuals(const BracketCoefficients& bc);

PoissonReport check_poisson(const BracketCoefficients& bc, const IdentityTestConfig& cfg);

// bc1 + λ bc2 with λ the formal variable at index dim().
BracketCoefficients combine_brackets(const BracketCoefficients& bc1, const BracketCoefficients& bc2);

// Checks that bc1 + λ bc2 is Poisson identically in λ. Both inputs must be
// Poisson themselves; otherwise throws NotAPoissonBracket naming the input.
PoissonReport check_bracket_pencil(const BracketCoefficients& bc1, const BracketCoefficients& bc2,
                                   const IdentityTestConfig& cfg);

// Coefficients (λ'0, λ'1) != (0, 0) with λ'0 K0 + λ'1 K1 = 0: (K1, -K0) when
// either constant is nonzero, otherwise (1, 0).
std::pair<Rational, Rational> local_member(const Rational& K0, const Rational& K1);
std::pair<Rational, Rational> local_member(const BracketCoefficients& bc0, const BracketCoefficients& bc1);

class PotentialFamily;

// g^{ij} = η^{is} ∂_s H^j + η^{js} ∂_s H^i - K1 u^i u^j,
// b^{ij}_k = η^{is} ∂_s ∂_k H^j - K1 δ^i_k u^j, K = K1.
BracketCoefficients build_canonical(const PotentialFamily& H);

struct CanonicalFormResult {
  // Reconstructed potentials (constant parts zero) on success.
  std::optional<PotentialFamily> potentials;
  // First failed integrability obstruction otherwise.
  std::string obstruction;

  bool canonical() const { return potentials.has_value(); }
};

// Decides whether bc, written in the flat coordinates of `flat`, is the
// canonical bracket of some polynomial family H. Second derivatives of H are
// read off b, integrated twice, and the linear part of H is recovered from
// the constant remainder of g (its skew gauge is fixed to zero).
CanonicalFormResult theorem1_form_check(const BracketCoefficients& bc, const FlatCoordinateData& flat,
                                        const IdentityTestConfig& cfg);

}  // namespace qfrob

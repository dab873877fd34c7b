#pragma once

#include <string_view>

#include "qfrob/check.hpp"
#include "qfrob/potential.hpp"

namespace qfrob {

enum class ResidualKind { ass1, ass2, as1, as2 };
std::string_view to_string(ResidualKind kind);

// Exact residuals of one equation system, one polynomial per free index
// tuple in lexicographic order. Zero everywhere iff the system holds.
struct ResidualTensor {
  ResidualKind which;
  Tensor<Polynomial> components;
  // Largest total degree among the components (-1 when all vanish).
  int max_degree = -1;

  bool vanishes() const;
};

// R(i,j,k,l) = ∂_k∂_s H^i η^{sp} ∂_p∂_l H^j - (i <-> j)
ResidualTensor residual_ass1(const PotentialFamily& H);
// R(i,j,k) = g1^{is} η^{jp} ∂_p∂_s H^k - (i <-> j), with g1 the deformed metric
ResidualTensor residual_ass2(const PotentialFamily& H);

// a(i,j,k) = a^{ij}_k
using StructureConstants3 = Tensor<Rational>;
// a(i,j,k,l) = a^{ij}_{kl}
using StructureConstants4 = Tensor<Rational>;

// For H^i = c^i_{jk} u^j u^k (c symmetric) returns a^{ij}_k = η^{is} c^j_{sk}.
// Throws NotQuadratic unless every H^i is homogeneous of degree 2 (or zero)
// and K1 = 0.
StructureConstants3 quadratic_to_structure(const PotentialFamily& H);

struct NovikovReport {
  // a^{ij}_s a^{sk}_l = a^{ik}_s a^{sj}_l
  CheckOutcome relation1;
  // (a^{is}_l + a^{si}_l) a^{jk}_s = (a^{js}_l + a^{sj}_l) a^{ik}_s
  CheckOutcome relation2;
  // The same algebra e^i·e^j = a^{ij}_k e^k checked through its identities.
  CheckOutcome right_commutativity;
  CheckOutcome left_symmetry;

  bool holds() const { return relation1.holds() && relation2.holds(); }
  // relation1 matches right commutativity; when that holds, relation2
  // matches left symmetry.
  bool consistent() const;
};

NovikovReport novikov_relations_check(const StructureConstants3& a, const IdentityTestConfig& cfg);

// For H^i = c^i_{jkl} u^j u^k u^l (c fully symmetric) returns
// a^{ij}_{kl} = η^{is} c^j_{skl}. Throws NotCubic on non-homogeneous input.
StructureConstants4 cubic_to_structure(const PotentialFamily& H);

struct CubicReport {
  CheckOutcome relation1;  // indexed (i,j,k,l,m,n)
  CheckOutcome relation2;  // indexed (i,j,k,l,m,n), all six permutations of (l,m,n)
  bool holds() const { return relation1.holds() && relation2.holds(); }
};

CubicReport cubic_relations_check(const StructureConstants4& a, const Rational& K1, const IdentityTestConfig& cfg);

// Φ with the skew constants c_{pl}; induces
//   H^i = η^{is} (∂_s Φ - 1/2 (c_{sk} - c_{ks}) u^k).
struct ScalarPotential {
  FlatCoordinateData flat;
  Polynomial phi;
  Matrix<Rational> skew;
  Rational K1;

  std::size_t dim() const { return flat.dim(); }
  PotentialFamily induced_family() const;
};

// Recovers (Φ, c) from a family whose algebra A(u) is commutative. Φ has no
// constant or linear part and c is returned skew-symmetric. Throws
// NotCommutative with the first offending pair (i, j).
ScalarPotential extract_potential(const PotentialFamily& H, const IdentityTestConfig& cfg);

struct WdvvResiduals {
  // (i,j,k,l): Φ_{kis} η^{sp} Φ_{pjl} - Φ_{kjs} η^{sp} Φ_{pil}
  ResidualTensor as1;
  // (i,j,k): (Φ_{is} - K1/2 η_{ir} η_{sl} u^r u^l) η^{sp} Φ_{pjk} - (i <-> j)
  ResidualTensor as2;
};

WdvvResiduals residual_wdvv(const ScalarPotential& sp);

struct ReductionReport {
  bool induced_vanish = false;  // ass1 and ass2 vanish for the induced H
  bool wdvv_vanish = false;     // as1 and as2 vanish for Φ
  // ass1 = η^{ia} η^{jb} as1(a,b,k,l) and ass2 = 2 η^{ir} η^{jp} η^{kq} as2(r,p,q)
  CheckOutcome contraction1;
  CheckOutcome contraction2;

  bool consistent() const {
    return induced_vanish == wdvv_vanish && contraction1.holds() && contraction2.holds();
  }
};

ReductionReport reduction_consistency(const ScalarPotential& sp, const IdentityTestConfig& cfg);

}  // namespace qfrob

#pragma once

#include <functional>
#include <optional>
#include <span>

#include "qfrob/check.hpp"
#include "qfrob/deformations.hpp"

namespace qfrob {

// Finite-dimensional algebra e^i e^j = f^{ij}_k e^k with mult(i,j,k) = f^{ij}_k.
// Entries are constants for static algebras and polynomials in u for the
// parametric algebras A(u) and C(u).
struct FiniteAlgebra {
  Tensor<RationalFunction> mult;

  FiniteAlgebra() = default;
  explicit FiniteAlgebra(Tensor<RationalFunction> m);
  static FiniteAlgebra from_constants(const Tensor<Rational>& f);
  std::size_t dim() const { return mult.dim(); }
  const RationalFunction& operator()(std::size_t i, std::size_t j, std::size_t k) const { return mult(i, j, k); }
};

// Symmetric bilinear form <e^i, e^j> = entries(i, j).
class BilinearForm {
 public:
  // Throws AsymmetricMetric if entries are not symmetric.
  explicit BilinearForm(Matrix<RationalFunction> entries);
  static BilinearForm from_constants(const Matrix<Rational>& m);

  std::size_t dim() const { return entries_.dim(); }
  const Matrix<RationalFunction>& entries() const { return entries_; }
  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  Matrix<RationalFunction> entries_;
};

enum class InvarianceVariant {
  right,      // <ab, c> = <a, cb>
  frobenius,  // <ab, c> = <a, bc>
};

// Every identity below is multilinear, so it is checked on basis elements.

// (ab)c = (ac)b, indexed (i,j,k,l).
CheckOutcome check_right_commutativity(const FiniteAlgebra& alg, const IdentityTestConfig& cfg);
// ab = ba, indexed (i,j,k).
CheckOutcome check_commutativity(const FiniteAlgebra& alg, const IdentityTestConfig& cfg);
// (ab)c = a(bc), indexed (i,j,k,l).
CheckOutcome check_associativity(const FiniteAlgebra& alg, const IdentityTestConfig& cfg);
// a(bc) - (ab)c = b(ac) - (ba)c, indexed (i,j,k,l).
CheckOutcome check_left_symmetry(const FiniteAlgebra& alg, const IdentityTestConfig& cfg);
// Indexed (i,j,k). Degenerate forms are accepted.
CheckOutcome check_invariance(const FiniteAlgebra& alg, const BilinearForm& form, InvarianceVariant variant,
                              const IdentityTestConfig& cfg);

struct QuasiFrobeniusReport {
  CheckOutcome right_commutativity;
  CheckOutcome invariance;
  bool holds() const { return right_commutativity.holds() && invariance.holds(); }
};

// Throws DegenerateForm if det(form) vanishes identically.
QuasiFrobeniusReport check_quasi_frobenius(const FiniteAlgebra& alg, const BilinearForm& form,
                                           const IdentityTestConfig& cfg);

struct FrobeniusReport {
  CheckOutcome commutativity;
  CheckOutcome associativity;
  CheckOutcome invariance;
  bool holds() const { return commutativity.holds() && associativity.holds() && invariance.holds(); }
};

// Throws DegenerateForm if det(form) vanishes identically.
FrobeniusReport check_frobenius(const FiniteAlgebra& alg, const BilinearForm& form, const IdentityTestConfig& cfg);

// <e^i, e^j> = (f^{ij}_k + f^{ji}_k) x^k for fresh variables x^k placed at
// indices [offset, offset + N).
BilinearForm deformed_form(const FiniteAlgebra& alg, std::size_t offset);

struct Lemma2Report {
  CheckOutcome left_symmetry;
  CheckOutcome deformed_invariance;
  bool agree() const { return left_symmetry.holds() == deformed_invariance.holds(); }
};

// Compares left symmetry with right invariance of the deformed form, with
// the deformation parameters kept symbolic. Throws NotRightCommutative
// unless (ab)c = (ac)b holds.
Lemma2Report lemma2_equivalence(const FiniteAlgebra& alg, const IdentityTestConfig& cfg);

struct ParametricAlgebra {
  FiniteAlgebra algebra;
  BilinearForm deformed;  // g1^{ij}(u)
  BilinearForm flat;      // η^{ij}
};

// A(u): e^i ∘ e^j = η^{is} ∂_s ∂_k H^j e^k with its two forms, either with u
// symbolic (point == nullopt) or substituted at a rational point.
ParametricAlgebra algebra_at(const PotentialFamily& H,
                             std::optional<std::span<const Rational>> point = std::nullopt);

// C(u): e^i * e^j = a^{ij}_{lk} u^l e^k, with the forms η^{ij} and
// 3 (a^{ij}_{kl} + a^{ji}_{kl}) u^k u^l - K1 u^i u^j.
ParametricAlgebra cubic_algebra(const StructureConstants4& a, const Rational& K1, const FlatCoordinateData& flat);

struct SootReport {
  CheckOutcome ass1;
  CheckOutcome soot1;  // right commutativity of A(u)
  CheckOutcome ass2;
  CheckOutcome soot2;  // right invariance of the deformed form on A(u)
  bool first() const { return ass1.holds() == soot1.holds(); }
  bool second() const { return ass2.holds() == soot2.holds(); }
};

SootReport soot_equivalence(const PotentialFamily& H, const IdentityTestConfig& cfg);

// Visits every rank-3 constant tensor over `values` in lexicographic order
// of the flattened entries (first entry slowest). Stops when fn returns false.
void for_each_structure(std::size_t dim, std::span<const Rational> values,
                        const std::function<bool(const Tensor<Rational>&)>& fn);

}  // namespace qfrob

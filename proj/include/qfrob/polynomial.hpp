#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfrob/rational.hpp"

namespace qfrob {

// Largest number of distinct variables a polynomial may mention. The u
// coordinates occupy indices 0..N-1; pencil parameters take the next slots.
inline constexpr std::size_t kMaxVars = 10;

// Exponent vector. Unused trailing slots are zero, so vectors over a shorter
// variable list extend automatically.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exps{};

  unsigned degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;

  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: total degree first, then exponents.
std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

// Display names for variable indices. Index i < names.size() prints as
// names[i]; anything past the end prints as x<i>.
using VariableNames = std::vector<std::string>;
VariableNames coordinate_names(std::size_t dim);

// Sparse multivariate polynomial over Q in canonical form: terms sorted by
// ascending monomial order, no zero coefficients, no duplicate monomials.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial variable(std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);
  // Adopts a term list in any order; duplicates are merged and zeros dropped.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  // One past the highest variable index with a nonzero exponent.
  std::size_t variable_span() const;
  const Term& leading_term() const { return terms_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial&) const = default;

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  // Replaces variable `var` by the constant `value`.
  Polynomial substitute(std::size_t var, const Rational& value) const;
  // Replaces variable `var` by a polynomial.
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  // Missing coordinates evaluate as zero.
  Rational evaluate(std::span<const Rational> point) const;
  // Exact quotient when `divisor` divides this polynomial, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  // Human-readable form in descending term order, e.g. "u1^2*u2 - 3/2*u2".
  // The output is accepted by the expression parser. A positive
  // `max_terms` truncates with a trailing " + ...".
  std::string to_string(const VariableNames& names, std::size_t max_terms = 0) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qfrob

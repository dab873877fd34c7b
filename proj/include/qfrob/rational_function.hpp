#pragma once

#include <optional>
#include <span>
#include <string>

#include "qfrob/polynomial.hpp"

namespace qfrob {

// Quotient of two polynomials with a nonzero denominator. Values are not
// gcd-reduced; equality is decided by cross-multiplication. A constant
// denominator is always folded into the numerator, and a non-constant one is
// scaled so its leading coefficient is 1, which lets sums over a shared
// denominator skip the cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Polynomial p)  // NOLINT(google-explicit-constructor)
      : num_(std::move(p)), den_(Rational(1)) {}
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(c), den_(Rational(1)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  // Throws std::domain_error if `den` is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }
  // Structural zero test; exact because the numerator is canonical.
  bool is_zero() const { return num_.is_zero(); }
  std::size_t variable_span() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  // p/q = r/s iff p*s - r*q == 0.
  bool equals(const RationalFunction& o) const;

  RationalFunction derivative(std::size_t var) const;
  RationalFunction substitute(std::size_t var, const Rational& value) const;
  // nullopt when the denominator vanishes at `point`.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  // Optional size-control pass: divides out the denominator when it divides
  // the numerator exactly. Does not attempt a full gcd.
  RationalFunction reduced() const;

  std::string to_string(const VariableNames& names, std::size_t max_terms = 0) const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace qfrob

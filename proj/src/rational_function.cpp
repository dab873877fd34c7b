#include "qfrob/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfrob {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Rational lead = den_.leading_term().coeff;
  if (lead == 1) return;
  Rational inv = 1 / lead;
  num_ *= inv;
  den_ *= inv;
}

std::size_t RationalFunction::variable_span() const {
  return std::max(num_.variable_span(), den_.variable_span());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  if (o.den_.is_constant()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = RationalFunction();
  num_ *= o.num_;
  if (!o.den_.is_constant()) den_ = den_.is_constant() ? o.den_ : den_ * o.den_;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  *this *= RationalFunction(o.den_, o.num_);
  return *this;
}

bool RationalFunction::equals(const RationalFunction& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_constant()) return RationalFunction(num_.derivative(var));
  Polynomial dden = den_.derivative(var);
  if (dden.is_zero()) {
    RationalFunction r;
    r.num_ = num_.derivative(var);
    r.den_ = r.num_.is_zero() ? Polynomial(Rational(1)) : den_;
    return r;
  }
  return RationalFunction(num_.derivative(var) * den_ - num_ * dden, den_ * den_);
}

RationalFunction RationalFunction::substitute(std::size_t var, const Rational& value) const {
  return RationalFunction(num_.substitute(var, value), den_.substitute(var, value));
}

std::optional<Rational> RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (sgn(d) == 0) return std::nullopt;
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::reduced() const {
  if (den_.is_constant()) return *this;
  if (auto q = num_.divide_exact(den_)) return RationalFunction(std::move(*q));
  return *this;
}

std::string RationalFunction::to_string(const VariableNames& names, std::size_t max_terms) const {
  if (den_.is_constant()) return num_.to_string(names, max_terms);
  return "(" + num_.to_string(names, max_terms) + ")/(" + den_.to_string(names, max_terms) + ")";
}

}  // namespace qfrob

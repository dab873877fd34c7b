#include "qfrob/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qfrob {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exps[i] = static_cast<std::uint16_t>(exps[i] + other.exps[i]);
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exps[i] = static_cast<std::uint16_t>(exps[i] - divisor.exps[i]);
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps <=> b.exps;
}

VariableNames coordinate_names(std::size_t dim) {
  VariableNames names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("u" + std::to_string(i + 1));
  return names;
}

namespace {

// Sorts, merges equal monomials and drops zero coefficients in place.
void canonicalize(std::vector<Polynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.monomial < y.monomial; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coeff;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) sum += terms[j++].coeff;
    if (sgn(sum) != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(std::size_t index) {
  Monomial m;
  m.exps.at(index) = 1;
  return term(m, Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial.degree() == 0) return terms_.front().coeff;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational(0);
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().monomial.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.monomial.exps[var]);
  return d;
}

std::size_t Polynomial::variable_span() const {
  std::size_t span = 0;
  for (const auto& t : terms_)
    for (std::size_t i = span; i < kMaxVars; ++i)
      if (t.monomial.exps[i] != 0) span = i + 1;
  return span;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    auto c = a->monomial <=> b->monomial;
    if (c < 0) {
      merged.push_back(std::move(*a++));
    } else if (c > 0) {
      merged.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (sgn(s) != 0) merged.push_back({a->monomial, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
  canonicalize(prod);
  Polynomial r;
  r.terms_ = std::move(prod);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = t.monomial.exps[var];
    if (e == 0) continue;
    Term d{t.monomial, t.coeff * e};
    d.monomial.exps[var] = static_cast<std::uint16_t>(e - 1);
    out.push_back(std::move(d));
  }
  // Lowering one exponent can reorder terms across degrees.
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    Rational factor;
    mpz_class base_pow_num, base_pow_den;
    mpz_pow_ui(base_pow_num.get_mpz_t(), value.get_num_mpz_t(), t.monomial.exps[var]);
    mpz_pow_ui(base_pow_den.get_mpz_t(), value.get_den_mpz_t(), t.monomial.exps[var]);
    factor = Rational(base_pow_num, base_pow_den);
    factor.canonicalize();
    s.coeff *= factor;
    s.monomial.exps[var] = 0;
    out.push_back(std::move(s));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  Polynomial result;
  std::vector<Polynomial> powers{Polynomial(Rational(1))};
  for (const auto& t : terms_) {
    auto e = t.monomial.exps[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.monomial;
    rest.exps[var] = 0;
    result += term(rest, t.coeff) * powers[e];
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  // powers[v][e] = point[v]^e, filled lazily.
  std::vector<std::vector<Rational>> powers(kMaxVars);
  Rational total(0);
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      auto e = t.monomial.exps[v];
      if (e == 0) continue;
      if (v >= point.size() || sgn(point[v]) == 0) {
        value = 0;
        break;
      }
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * point[v]);
      value *= pw[e];
    }
    total += value;
  }
  return total;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  Polynomial remainder = *this;
  Polynomial quotient;
  const Term& lead = divisor.leading_term();
  while (!remainder.is_zero()) {
    const Term& r = remainder.leading_term();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Polynomial q = term(r.monomial.quotient(lead.monomial), r.coeff / lead.coeff);
    remainder -= q * divisor;
    quotient += q;
  }
  return quotient;
}

std::string Polynomial::to_string(const VariableNames& names, std::size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  std::size_t written = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (max_terms != 0 && written == max_terms) {
      os << " + ...";
      break;
    }
    Rational c = it->coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (written == 0) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    bool constant = it->monomial.degree() == 0;
    bool first_factor = true;
    if (constant || c != 1) {
      os << c.get_str();
      first_factor = false;
    }
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      auto e = it->monomial.exps[v];
      if (e == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      if (v < names.size())
        os << names[v];
      else
        os << 'x' << v;
      if (e > 1) os << '^' << e;
    }
    ++written;
  }
  return os.str();
}

}  // namespace qfrob

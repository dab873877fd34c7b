#include "doctest.h"
#include "qfrob/identity_test.hpp"
#include "qfrob/linalg.hpp"
#include "qfrob/parser.hpp"
#include "support.hpp"

using namespace qfrob;
using namespace qfrob::testing;

namespace {

Monomial mono(std::initializer_list<std::uint16_t> e) {
  Monomial m{};
  std::size_t i = 0;
  for (auto x : e) m.exps[i++] = x;
  return m;
}

const VariableNames kNames = coordinate_names(4);

Polynomial P(std::string_view s) { return parse_expression(s, kNames); }

}  // namespace

TEST_CASE("parser reads the documented examples") {
  Polynomial p = P("u1^2*u2 - 3/2*u2");
  CHECK(p.size() == 2);
  CHECK(p.coefficient(mono({2, 1})) == 1);
  CHECK(p.coefficient(mono({0, 1})) == Rational(-3, 2));
  CHECK(P("((u1))") == Polynomial::variable(0));
  CHECK(P("  -  -u3 ") == Polynomial::variable(2));
  CHECK(P("(u1+u2)^2") == P("u1^2 + 2*u1*u2 + u2^2"));
  CHECK(P("6/4") == Polynomial(Rational(3, 2)));
}

TEST_CASE("parser rejects malformed input with a position") {
  try {
    P("u1 u2");
    FAIL("implicit multiplication accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
    CHECK(std::string(e.what()).find("'*'") != std::string::npos);
  }
  CHECK_THROWS_AS(P("1.5*u1"), ParseError);
  CHECK_THROWS_AS(P("u5"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  CHECK_THROWS_AS(P("u1^1001"), ParseError);
  CHECK_THROWS_AS(P("(u1"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);

  try {
    parse_expression("u1 + * u2", kNames, SourcePosition{7, 10});
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 15);
  }
}

TEST_CASE("serialization round-trips through the parser") {
  Rng rng(101);
  for (int round = 0; round < 100; ++round) {
    std::size_t n = static_cast<std::size_t>(draw(rng, 1, 4));
    Polynomial p = random_polynomial(rng, n, static_cast<int>(draw(rng, 0, 4)), 40, 9);
    p *= Rational(1, draw(rng, 1, 6));
    CAPTURE(p.to_string(kNames));
    CHECK(P(p.to_string(kNames)) == p);
  }
}

TEST_CASE("ring laws and the product rule") {
  Rng rng(202);
  for (int round = 0; round < 50; ++round) {
    Polynomial a = random_polynomial(rng, 3, 3, 30, 5);
    Polynomial b = random_polynomial(rng, 3, 3, 30, 5);
    Polynomial c = random_polynomial(rng, 3, 2, 30, 5);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    for (std::size_t v = 0; v < 3; ++v) CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
}

TEST_CASE("degrees, spans and substitution") {
  Polynomial p = P("u1^3*u2 - u3 + 2");
  CHECK(p.total_degree() == 4);
  CHECK(p.degree_in(0) == 3);
  CHECK(p.variable_span() == 3);
  CHECK(Polynomial().total_degree() == -1);
  CHECK(p.substitute(0, Rational(2)) == P("8*u2 - u3 + 2"));
  CHECK(p.substitute(2, P("u1 + 1")) == P("u1^3*u2 - u1 + 1"));
  std::vector<Rational> pt{Rational(1), Rational(2), Rational(5)};
  CHECK(p.evaluate(pt) == -1);
  CHECK(P("u1^2*u2").to_string(kNames) == "u1^2*u2");
  CHECK(P("u1 + u2 + u3 + u4").to_string(kNames, 2) == "u1 + u2 + ...");
}

TEST_CASE("rational functions") {
  RationalFunction f(P("u1^2 - u2^2"), P("u1 - u2"));
  CHECK(f.equals(RationalFunction(P("u1 + u2"))));
  CHECK(f.reduced().is_polynomial());
  CHECK(f.reduced().numerator() == P("u1 + u2"));
  CHECK_THROWS_AS(RationalFunction(P("u1"), Polynomial()), std::domain_error);

  Rng rng(303);
  for (int round = 0; round < 30; ++round) {
    Polynomial p = random_polynomial(rng, 2, 2, 50, 4);
    Polynomial q = random_polynomial(rng, 2, 2, 50, 4);
    if (p.is_zero() || q.is_zero()) continue;
    RationalFunction r(p, q);
    CHECK((r * RationalFunction(q, p)).equals(RationalFunction(1)));
    CHECK((r - r).is_zero());
    // quotient rule against the polynomial derivative of p = r q
    RationalFunction lhs = r.derivative(0) * RationalFunction(q) + r * RationalFunction(q.derivative(0));
    CHECK(lhs.equals(RationalFunction(p.derivative(0))));
  }
  std::vector<Rational> at_pole{Rational(1), Rational(1)};
  CHECK_FALSE(RationalFunction(P("u1"), P("u1 - u2")).evaluate(at_pole).has_value());
}

TEST_CASE("determinant and inverse") {
  Matrix<Polynomial> m(2, 2);
  m(0, 0) = P("u1");
  m(0, 1) = P("u2");
  m(1, 0) = P("u2");
  m(1, 1) = P("u1 + 1");
  CHECK(determinant(m) == P("u1^2 + u1 - u2^2"));

  Rng rng(404);
  for (int round = 0; round < 10; ++round) {
    std::size_t n = 2 + round % 2;
    Matrix<Polynomial> a(n, 2);
    for (std::size_t k = 0; k < a.size(); ++k) a.flat(k) = random_polynomial(rng, 2, 1, 60, 3);
    if (determinant(a).is_zero()) continue;
    Matrix<RationalFunction> ar = to_rational_functions(a);
    Matrix<RationalFunction> prod = matmul(invert_matrix(ar), ar);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(prod(i, j).equals(RationalFunction(i == j ? 1 : 0)));
  }
  Matrix<Rational> singular(2, 2, Rational(1));
  CHECK_THROWS_AS(invert_matrix(singular), DegenerateMetric);
}

TEST_CASE("probabilistic zero testing is one-sided") {
  Rng rng(505);
  for (int round = 0; round < 20; ++round) {
    Polynomial a = random_polynomial(rng, 3, 2, 50, 5);
    Polynomial b = random_polynomial(rng, 3, 2, 50, 5);
    if (b.is_zero()) continue;
    // (a/b) * b - a is zero but not built in reduced form
    RationalFunction zero = RationalFunction(a, b) * RationalFunction(b) - RationalFunction(a);
    for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(is_zero(zero, probabilistic(seed)) == ZeroVerdict::zero);
    if (!a.is_zero()) CHECK(is_zero(RationalFunction(a), probabilistic(7)) == ZeroVerdict::nonzero);
  }
}

TEST_CASE("probabilistic mode reports indeterminate when every sample hits a pole") {
  IdentityTestConfig cfg = probabilistic(9);
  cfg.sample_range = 1;  // every coordinate samples as 1
  RationalFunction f(P("u2"), P("u1 - 1"));
  CHECK(is_zero(f, cfg) == ZeroVerdict::indeterminate);
  cfg.mode = TestMode::symbolic;
  CHECK(is_zero(f, cfg) == ZeroVerdict::nonzero);
}

TEST_CASE("scans are deterministic across thread counts") {
  Rng rng(606);
  std::vector<RationalFunction> comps;
  for (int k = 0; k < 40; ++k) comps.emplace_back(k % 7 == 6 ? random_polynomial(rng, 2, 3, 50, 3) : Polynomial());
  for (TestMode mode : {TestMode::symbolic, TestMode::probabilistic}) {
    IdentityTestConfig one;
    one.mode = mode;
    IdentityTestConfig many = one;
    many.threads = 4;
    ScanResult a = scan_zero(comps, one), b = scan_zero(comps, many);
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness == b.witness);
    REQUIRE(a.witness.has_value());
    CHECK(*a.witness == 6);
  }
}

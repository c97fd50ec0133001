#include <doctest.h>

#include "narayana/polynomial.hpp"
#include "support/oracles.hpp"

using namespace narayana;

namespace {

Polynomial q_poly(std::vector<Rational> c) { return Polynomial(Variable::q, std::move(c)); }
Polynomial x_poly(std::vector<Rational> c) { return Polynomial(Variable::x, std::move(c)); }

}  // namespace

TEST_CASE("arithmetic examples") {
  const Polynomial q = Polynomial::identity(Variable::q);
  CHECK(q * q_poly({1, 1}) == q_poly({0, 1, 1}));
  CHECK((q_poly({0, 1, 1}) - q_poly({0, 1, 1})).is_zero());
  CHECK(q_poly({1, -1}).pow(0) == Polynomial::constant(Variable::q, 1));
  CHECK(q_poly({1, -1}).pow(2) == q_poly({1, -2, 1}));
  CHECK(q_poly({1, -2, 1}).to_string() == "1 - 2*q + q^2");
  CHECK(Polynomial(Variable::q).to_string() == "0");
  CHECK(Polynomial(Variable::q).coefficient_strings() == std::vector<std::string>{"0"});
  CHECK(Polynomial(Variable::q).degree() == -1);
}

TEST_CASE("trailing zeros are dropped") {
  const Polynomial p = q_poly({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == q_poly({1, 2}));
}

TEST_CASE("different indeterminates do not mix") {
  CHECK_THROWS_AS(q_poly({1}) + x_poly({1}), PreconditionError);
  CHECK_THROWS_AS(q_poly({1}) * x_poly({1}), PreconditionError);
}

TEST_CASE("powers of 1+q follow Pascal's triangle") {
  const auto rows = oracle::pascal(30);
  for (long e = 0; e <= 30; ++e) {
    const Polynomial p = q_poly({1, 1}).pow(static_cast<unsigned long>(e));
    for (long k = 0; k <= e; ++k) REQUIRE(p.coefficient(k) == Rational(rows[e][k]));
  }
}

TEST_CASE("multiplication matches schoolbook convolution") {
  oracle::Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = gen.polynomial(Variable::q, 8);
    const Polynomial b = gen.polynomial(Variable::q, 8);
    REQUIRE(a * b == Polynomial(Variable::q, oracle::convolve(oracle::coeffs(a), oracle::coeffs(b))));
  }
  const Polynomial sq = q_poly({1, -1}).pow(2);
  const Polynomial any = q_poly({3, 0, Rational(1, 2), -4});
  CHECK(sq * any == q_poly({1, -1}) * (q_poly({1, -1}) * any));
}

TEST_CASE("ring axioms on random polynomials") {
  oracle::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = gen.polynomial(Variable::q, 6);
    const Polynomial b = gen.polynomial(Variable::q, 6);
    const Polynomial c = gen.polynomial(Variable::q, 6);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a + (-a) == Polynomial(Variable::q));
    REQUIRE(a.pow(3) == a * a * a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  oracle::Gen gen(8);
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = gen.polynomial(Variable::q, 6);
    const Polynomial b = gen.polynomial(Variable::q, 6);
    const Rational t = gen.rational();
    REQUIRE((a * b).evaluate(t) == a.evaluate(t) * b.evaluate(t));
    REQUIRE((a + b).evaluate(t) == a.evaluate(t) + b.evaluate(t));
  }
}

TEST_CASE("substitution") {
  const Polynomial q2 = Polynomial::monomial(Variable::q, 1, 2);
  CHECK(q_poly({0, 1, 1}).substitute(q2) == q_poly({0, 0, 1, 0, 1}));
  const Polynomial x_minus_1 = x_poly({-1, 1});
  CHECK(x_poly({1, 6, 6}).substitute(x_minus_1) == x_poly({1, -6, 6}));
  oracle::Gen gen(9);
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = gen.polynomial(Variable::q, 5);
    const Polynomial b = gen.polynomial(Variable::q, 3);
    const Rational t = gen.rational();
    REQUIRE(a.substitute(b).evaluate(t) == a.evaluate(b.evaluate(t)));
  }
}

TEST_CASE("homogenized substitution") {
  // 1 + 2q with q -> a/b at degree 2 gives b^2 + 2ab.
  const Polynomial a = q_poly({0, 1});
  const Polynomial b = q_poly({1, 1});
  CHECK(q_poly({1, 2}).homogenized_substitute(a, b, 2) == b * b + Rational(2) * a * b);
}

TEST_CASE("antiderivative and derivative") {
  CHECK(x_poly({-1, 2}).antiderivative() == x_poly({0, -1, 1}));
  CHECK(Polynomial(Variable::x).antiderivative().is_zero());
  CHECK(x_poly({1, -6, 6}).antiderivative() == x_poly({0, 1, -3, 2}));
  oracle::Gen gen(10);
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = gen.polynomial(Variable::x, 10);
    REQUIRE(a.antiderivative().derivative() == a);
    REQUIRE(a.antiderivative().coefficient(0) == 0);
  }
}

TEST_CASE("division by the variable") {
  CHECK(q_poly({0, 2, 3}).divide_by_variable() == q_poly({2, 3}));
  CHECK_THROWS_AS(q_poly({1, 2}).divide_by_variable(), PreconditionError);
  CHECK(q_poly({1, 2}).renamed(Variable::t).variable() == Variable::t);
}

TEST_CASE("palindromic windows") {
  CHECK(q_poly({0, 1, 3, 1}).is_palindromic(4));
  CHECK(q_poly({1, 3, 1}).is_palindromic(2));
  CHECK_FALSE(q_poly({1, 3, 2}).is_palindromic(2));
  CHECK(Polynomial(Variable::q).is_palindromic(5));
}

TEST_CASE("finite difference sums") {
  CHECK(finite_difference_check(2, 1).is_zero());
  CHECK(finite_difference_check(3, 3) == Polynomial::constant(Variable::x, 6));
  CHECK(finite_difference_check(4, 2).is_zero());
  for (long n = 0; n <= 12; ++n) {
    for (long r = 0; r < n; ++r) REQUIRE(finite_difference_check(n, r).is_zero());
    REQUIRE(finite_difference_check(n, n) == Polynomial::constant(Variable::x, Rational(factorial(n))));
  }
}

TEST_CASE("finite difference above the window matches direct expansion") {
  const Polynomial x = Polynomial::identity(Variable::x);
  for (long n = 1; n <= 6; ++n) {
    for (long r = n; r <= n + 3; ++r) {
      Polynomial direct(Variable::x);
      for (long k = 0; k <= n; ++k) {
        Polynomial term = (x - Polynomial::constant(Variable::x, k)).pow(static_cast<unsigned long>(r));
        term *= Rational(k % 2 == 0 ? binomial(n, k) : -binomial(n, k));
        direct += term;
      }
      REQUIRE(finite_difference_check(n, r) == direct);
    }
  }
}

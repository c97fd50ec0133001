#include <doctest.h>

#include "narayana/generating.hpp"
#include "narayana/sequences.hpp"
#include "support/oracles.hpp"

using namespace narayana;

TEST_CASE("Catalan series") {
  const PolySeries c = catalan_series(4);
  const std::vector<long> expected{1, 1, 2, 5, 14};
  for (std::size_t i = 0; i <= 4; ++i) CHECK(c.coefficient(i) == Polynomial::constant(Variable::q, expected[i]));
  CHECK(catalan_functional_residual(10) == PolySeries(10, Variable::q));
  CHECK(catalan_functional_residual(40) == PolySeries(40, Variable::q));
  CHECK(catalan_closed_form_series(30) == catalan_series(30));
  const auto conv = oracle::catalan_convolution(40);
  const PolySeries big = catalan_series(40);
  for (std::size_t i = 0; i <= 40; ++i) REQUIRE(big.coefficient(i) == Polynomial::constant(Variable::q, Rational(conv[i])));
}

TEST_CASE("Narayana series") {
  const PolySeries omega = omega_series(6);
  CHECK(omega.coefficient(0) == Polynomial::constant(Variable::q, 1));
  CHECK(omega.coefficient(2) == Polynomial(Variable::q, {0, 1, 1}));
  CHECK(omega.coefficient(3).evaluate(2) == 22);
  CHECK(omega_closed_form_check(1).equal);
  CHECK(omega_closed_form_check(8).equal);
  CHECK(omega_closed_form_series(8) == omega_series(8));
  CHECK_THROWS_AS(omega_closed_form_check(0), PreconditionError);
}

TEST_CASE("Narayana series at q = 1 is the Catalan series") {
  CHECK(omega_series(40).specialize(1) == catalan_series(40));
  CHECK(omega_closed_form_series(12).specialize(1) == catalan_series(12));
}

TEST_CASE("composition forms") {
  CHECK(omega_composition_check(CompositionVariant::first, 6).equal);
  CHECK(omega_composition_check(CompositionVariant::second, 6).equal);
  CHECK(omega_composition_check(CompositionVariant::first, 6).identity == "omega_composition_first");
  CHECK(omega_composition_series(CompositionVariant::first, 6).specialize(1) == catalan_series(6));
}

TEST_CASE("Lagrange coefficients") {
  const CheckResult r = lagrange_coefficient_check(2, 0);
  CHECK(r.equal);
  CHECK(std::get<Rational>(r.lhs) == 2);
  const CheckResult diag = lagrange_coefficient_check(7, 7);
  CHECK(std::get<Rational>(diag.rhs) == 1);
  // [x^3] C(x)^5 = (5/11) binom(11, 3) = 75.
  const CheckResult mid = lagrange_coefficient_check(5, 2);
  CHECK(mid.equal);
  CHECK(std::get<Rational>(mid.lhs) == 75);
  CHECK(std::get<Rational>(mid.rhs) == 75);
  for (long n = 0; n <= 15; ++n) {
    for (long k = 0; k <= n; ++k) REQUIRE(lagrange_coefficient_check(n, k).equal);
  }
  CHECK_THROWS_AS(lagrange_coefficient_check(2, 3), PreconditionError);
}

TEST_CASE("Legendre generating function") {
  const PolySeries g = legendre_generating_series(6);
  CHECK(g.coefficient(0) == Polynomial::constant(Variable::x, 1));
  CHECK(g.coefficient(1) == Polynomial::identity(Variable::x));
  CHECK(g.coefficient(3) == Polynomial(Variable::x, {0, Rational(-3, 2), 0, Rational(5, 2)}));
  CHECK(legendre_gf_check(12).equal);
}

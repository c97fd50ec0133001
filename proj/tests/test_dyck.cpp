#include <doctest.h>

#include <algorithm>
#include <set>

#include "narayana/dyck.hpp"
#include "narayana/sequences.hpp"
#include "support/oracles.hpp"

using namespace narayana;

TEST_CASE("Dyck path enumeration") {
  CHECK(enumerate_dyck(0).size() == 1);
  CHECK(enumerate_dyck(0)[0].steps().empty());
  CHECK(enumerate_dyck(1)[0].to_string() == "UD");
  std::vector<std::string> three;
  for (const auto& p : enumerate_dyck(3)) three.push_back(p.to_string());
  CHECK(three == std::vector<std::string>{"UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"});
  const auto counts = oracle::catalan_convolution(12);
  for (long n = 0; n <= 10; ++n) {
    const auto paths = enumerate_dyck(n);
    REQUIRE(paths.size() == counts[n].get_ui());
    REQUIRE(std::is_sorted(paths.begin(), paths.end()));
    REQUIRE(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
  }
  CHECK_THROWS_AS(enumerate_dyck(13), PreconditionError);
}

TEST_CASE("peaks") {
  const DyckPath p = DyckPath::parse("UUDUDDUD");
  CHECK(p.peak_count() == 3);
  CHECK(p.peak_up_steps() == std::vector<std::size_t>{1, 3, 6});
  CHECK(p.semilength() == 4);
  for (long n = 1; n <= 8; ++n) {
    const auto counts = oracle::dyck_peak_counts(n);
    std::vector<long> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& path : enumerate_dyck(n)) ++seen[static_cast<std::size_t>(path.peak_count())];
    REQUIRE(seen == counts);
  }
}

TEST_CASE("invalid paths are rejected") {
  CHECK_THROWS_AS(DyckPath::parse("DU"), PreconditionError);
  CHECK_THROWS_AS(DyckPath::parse("UUD"), PreconditionError);
  CHECK_THROWS_AS(DyckPath::parse("UxD"), PreconditionError);
  CHECK_THROWS_AS(WeightedDyckPath(DyckPath::parse("UD"), {}), PreconditionError);
  CHECK_THROWS_AS(WeightedDyckPath::parse("U[2]D"), PreconditionError);
}

TEST_CASE("weighted path text") {
  const WeightedDyckPath w = WeightedDyckPath::parse("U[1]U[-q]DDU[q]D");
  CHECK(w.to_string() == "U[1]U[-q]DDU[q]D");
  CHECK(w.key() == "umddqd");
  CHECK(w.weight() == Monomial{-1, 2});
  CHECK(w.weight().to_polynomial() == Polynomial::monomial(Variable::q, -1, 2));
  CHECK_FALSE(w.all_one());
  CHECK_FALSE(w.all_plus_minus_q());
}

TEST_CASE("phi examples") {
  CHECK(phi(WeightedDyckPath::parse("U[q]D")).to_string() == "U[-q]D");
  CHECK(phi(WeightedDyckPath::parse("U[-q]D")).to_string() == "U[q]D");
  CHECK(phi(WeightedDyckPath::parse("U[1]DU[q]D")).to_string() == "U[1]DU[-q]D");
  CHECK(phi(WeightedDyckPath::parse("U[1]U[-q]DD")).to_string() == "U[1]U[q]DD");
  // The rightmost weighted component is chosen even when an earlier one is weighted.
  CHECK(phi(WeightedDyckPath::parse("U[q]DU[1]U[q]DD")).to_string() == "U[q]DU[1]U[-q]DD");
  CHECK_THROWS_AS(phi(WeightedDyckPath::parse("U[1]D")), PreconditionError);
}

TEST_CASE("decorated elements") {
  const DecoratedDyckElement e(DyckPath::parse("UD"), {DyckPath::parse("UD"), DyckPath(), DyckPath::parse("UD")},
                               {UpTag::minus_q, UpTag::one});
  CHECK(e.n() == 3);
  CHECK(e.k() == 1);
  CHECK(e.weight() == Monomial{-1, 2});
  // Insertion 1 before the base, insertion 2 between its steps, insertion 3 at the end.
  CHECK(e.flatten().to_string() == "U[-q]DU[q]DU[1]D");
  CHECK(e.flatten().weight() == e.weight());

  const DecoratedDyckElement inside(DyckPath::parse("UD"), {DyckPath(), DyckPath::parse("UD"), DyckPath()},
                                    {UpTag::one});
  CHECK(inside.flatten().to_string() == "U[q]U[1]DD");

  CHECK_THROWS_AS(DecoratedDyckElement(DyckPath::parse("UD"), {DyckPath()}, {}), PreconditionError);
  CHECK_THROWS_AS(DecoratedDyckElement(DyckPath(), {DyckPath::parse("UD")}, {}), PreconditionError);
  CHECK_THROWS_AS(DecoratedDyckElement(DyckPath(), {DyckPath::parse("UD")}, {UpTag::q}), PreconditionError);
}

TEST_CASE("family D small cases") {
  const auto one_one = enumerate_family_D(1, 1);
  REQUIRE(one_one.size() == 1);
  CHECK(one_one[0].flatten().to_string() == "U[q]D");
  CHECK(enumerate_family_D(1, 0).size() == 2);
  CHECK(family_D_weight(1, 1) == Polynomial::identity(Variable::q));
  CHECK(family_D_weight(1, 0) == Polynomial(Variable::q, {1, -1}));
  CHECK(family_D_weight(2, 0) == Rational(2) * Polynomial(Variable::q, {1, -1}).pow(2));
  CHECK(family_D_weight(1, 0) + family_D_weight(1, 1) == Polynomial::constant(Variable::q, 1));
  CHECK_THROWS_AS(enumerate_family_D(9, 0), PreconditionError);
  CHECK_THROWS_AS(enumerate_family_D(2, 3), PreconditionError);
}

TEST_CASE("family D sizes and weights") {
  for (long n = 0; n <= 6; ++n) {
    Polynomial total(Variable::q);
    for (long k = 0; k <= n; ++k) {
      const auto elements = enumerate_family_D(n, k);
      // C_k 2^(n-k) (2k+1)/(2n+1) binom(2n+1, n-k) elements.
      const BigInt expected =
          catalan(k) * ipow(BigInt(2), static_cast<unsigned long>(n - k)) * (2 * k + 1) * binomial(2 * n + 1, n - k) /
          (2 * n + 1);
      REQUIRE(BigInt(static_cast<long>(elements.size())) == expected);
      const Polynomial w = family_D_weight(n, k);
      REQUIRE(w == family_D_closed_form(n, k));
      total += w;
    }
    REQUIRE(total == Polynomial::constant(Variable::q, Rational(catalan(n))));
  }
}

TEST_CASE("phi is a sign-reversing involution on flattened elements") {
  for (long n = 1; n <= 4; ++n) {
    for (long k = 0; k <= n; ++k) {
      for_each_family_D(n, k, [](const DecoratedDyckElement& e) {
        const WeightedDyckPath d = e.flatten();
        if (d.all_one()) return;
        const WeightedDyckPath image = phi(d);
        REQUIRE(phi(image) == d);
        REQUIRE(image.weight() == -d.weight());
        REQUIRE(image.path() == d.path());
      });
    }
  }
}

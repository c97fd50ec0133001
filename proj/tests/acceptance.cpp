// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "narayana/dyck.hpp"
#include "narayana/generating.hpp"
#include "narayana/identities.hpp"
#include "narayana/inverse_relations.hpp"
#include "narayana/involution.hpp"
#include "narayana/plane_tree.hpp"
#include "narayana/sequences.hpp"

using namespace narayana;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Schroeder numbers from S_n = S_{n-1} + sum_{k<n} S_k S_{n-1-k}.
std::vector<BigInt> schroeder_oracle(long n) {
  std::vector<BigInt> s{1};
  for (long m = 1; m <= n; ++m) {
    BigInt v = s[m - 1];
    for (long k = 0; k < m; ++k) v += s[k] * s[m - 1 - k];
    s.push_back(v);
  }
  return s;
}

Outcome identity_suite() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  long checks = 0;
  for (IdentityId id : all_identities()) {
    for (long n = identity_min_n(id); n <= 50; ++n) {
      ++checks;
      if (!check_identity(id, n).equal) out.fail(std::string(identity_name(id)) + " n=" + std::to_string(n));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.ok) out.detail = std::to_string(checks) + " checks in " + std::to_string(elapsed) + " s";
  return out;
}

Outcome integral_representation() {
  Outcome out;
  for (long n = 1; n <= 40; ++n) {
    if (!integral_representation_check(n).equal) out.fail("n=" + std::to_string(n));
  }
  const std::vector<long> schroeder_expected{1, 2, 6, 22, 90, 394};
  const auto oracle_values = schroeder_oracle(5);
  for (long n = 0; n <= 5; ++n) {
    if (oracle_values[n] != schroeder_expected[n]) out.fail("Schroeder oracle at " + std::to_string(n));
    if (narayana_poly(n).evaluate(2) != Rational(oracle_values[n])) out.fail("N_n(2) at " + std::to_string(n));
    if (n >= 1) {
      const CheckResult r = schroeder_integral_check(n);
      if (!r.equal || std::get<Rational>(r.rhs) != Rational(oracle_values[n])) {
        out.fail("Schroeder integral at " + std::to_string(n));
      }
    }
  }
  const std::vector<long> catalan_expected{1, 1, 2, 5, 14, 42};
  for (long n = 0; n <= 5; ++n) {
    const CheckResult r = catalan_integral_check(n);
    const Rational sign = n % 2 == 1 ? 1 : -1;
    if (!r.equal || std::get<Rational>(r.rhs) != sign * catalan_expected[n]) {
      out.fail("Catalan integral at " + std::to_string(n));
    }
  }
  return out;
}

Outcome lagrange() {
  Outcome out;
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) {
      if (!lagrange_coefficient_check(n, k).equal) out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return out;
}

Outcome series_layer() {
  Outcome out;
  if (!omega_closed_form_check(24).equal) out.fail("omega closed form");
  if (!omega_composition_check(CompositionVariant::first, 24).equal) out.fail("omega composition (first)");
  if (!omega_composition_check(CompositionVariant::second, 24).equal) out.fail("omega composition (second)");
  if (!legendre_gf_check(24).equal) out.fail("Legendre generating function");
  if (!(catalan_functional_residual(40) == PolySeries(40, Variable::q))) out.fail("Catalan functional residual");
  return out;
}

Outcome weight_sums() {
  Outcome out;
  for (long n = 0; n <= 8; ++n) {
    Polynomial total(Variable::q);
    for (long k = 0; k <= n; ++k) {
      const Polynomial w = family_D_weight(n, k);
      if (!(w == family_D_closed_form(n, k))) out.fail("D closed form n=" + std::to_string(n));
      total += w;
    }
    if (!(total == Polynomial::constant(Variable::q, Rational(catalan(n))))) out.fail("D sum n=" + std::to_string(n));
  }
  for (long n = 0; n <= 9; ++n) {
    Polynomial total(Variable::q);
    for (long k = 0; k <= n; ++k) {
      const Polynomial w = family_P_weight(n, k);
      if (!(w == family_P_closed_form(n, k))) out.fail("P closed form n=" + std::to_string(n));
      total += w;
    }
    const Polynomial expected = n % 2 == 0 ? Polynomial::monomial(Variable::q, Rational(catalan(n / 2)),
                                                                  static_cast<std::size_t>(n / 2 + 1))
                                           : Polynomial(Variable::q);
    if (!(total == expected)) out.fail("P sum n=" + std::to_string(n));
  }
  for (long n = 0; n <= 8; ++n) {
    Polynomial total(Variable::q);
    for (long k = 0; k <= n; ++k) {
      const Polynomial w = family_Q_weight(n, k);
      if (!(w == family_Q_closed_form(n, k))) out.fail("Q closed form n=" + std::to_string(n));
      total += w;
    }
    const Polynomial expected =
        Polynomial::monomial(Variable::q, Rational(catalan(n + 1)), static_cast<std::size_t>(n + 2));
    if (!(total == expected)) out.fail("Q sum n=" + std::to_string(n));
  }
  return out;
}

Outcome involutions() {
  Outcome out;
  const std::vector<std::pair<Family, long>> limits{{Family::D, 6}, {Family::P, 7}, {Family::Q, 6}};
  for (const auto& [family, limit] : limits) {
    for (long n = 0; n <= limit; ++n) {
      const InvolutionReport r = involution_verify(family, n);
      if (!r.certified()) {
        out.fail(std::string(family_name(family)) + " n=" + std::to_string(n) + ": " +
                 r.counterexample.value_or("certificate failed"));
      }
    }
  }
  for (long n = 1; n <= 8; ++n) {
    const AllSignedReport r = all_signed_verify(n);
    if (!r.certified()) out.fail("all-signed n=" + std::to_string(n));
  }
  return out;
}

Outcome parity_law() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const ParityScan scan = catalan_parity_scan(4096);
  const double elapsed = seconds_since(start);
  std::vector<long> expected;
  for (long p = 1; p - 1 <= 4096; p *= 2) expected.push_back(p - 1);
  if (expected.size() != 13) out.fail("expected index set has the wrong size");
  if (scan.odd_indices != expected) out.fail("odd index set differs");
  if (!scan.congruences_hold) out.fail("congruence fails at " + std::to_string(scan.first_violation.value_or(-1)));
  if (elapsed >= 10) out.fail("took " + std::to_string(elapsed) + " s");
  return out;
}

Outcome inverse_relations() {
  Outcome out;
  std::mt19937_64 rng(2024);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto random_sequence = [&](long length, long max_degree) {
    std::vector<Polynomial> seq;
    for (long i = 0; i < length; ++i) {
      std::vector<Rational> c;
      const long degree = pick(0, max_degree);
      for (long j = 0; j <= degree; ++j) {
        Rational r(pick(-30, 30), pick(1, 9));
        r.canonicalize();
        c.push_back(r);
      }
      seq.emplace_back(Variable::q, std::move(c));
    }
    return seq;
  };
  for (int trial = 0; trial < 200; ++trial) {
    // Even trials are rational sequences, odd trials polynomial ones.
    const auto seq = random_sequence(pick(1, 30), trial % 2 == 0 ? 0 : 3);
    if (legendre_inverse(Direction::backward, legendre_inverse(Direction::forward, seq)) != seq) {
      out.fail("Legendre pair, trial " + std::to_string(trial));
    }
    if (binomial_inverse(Direction::backward, binomial_inverse(Direction::forward, seq)) != seq) {
      out.fail("binomial pair, trial " + std::to_string(trial));
    }
  }
  for (long s = 1; s <= 3; ++s) {
    for (long p = 0; p <= 2; ++p) {
      for (long length = 1; length <= 12; ++length) {
        const auto b = random_sequence(length, 2);
        const auto a = left_inversion_forward(s, p, b, static_cast<std::size_t>(s * (length - 1) + 1));
        if (left_inversion(s, p, a) != b) {
          out.fail("left inversion s=" + std::to_string(s) + " p=" + std::to_string(p) + " length=" +
                   std::to_string(length));
        }
      }
    }
  }
  return out;
}

Outcome lemma_f() {
  Outcome out;
  for (long n = 0; n <= 25; ++n) {
    if (!lemma_f_direct(n).is_zero()) out.fail("direct expansion n=" + std::to_string(n));
    const LemmaFDifferenceReport r = lemma_f_by_differences(n);
    bool zero = true;
    for (const auto& c : r.coefficients) zero = zero && c == 0;
    if (!zero || !r.degrees_below_window || !r.palindromic) out.fail("difference route n=" + std::to_string(n));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 identity suite, 0 <= n <= 50", identity_suite},
      {"2 integral representation, Schroeder and Catalan values", integral_representation},
      {"3 Lagrange coefficients, 0 <= k <= n <= 40", lagrange},
      {"4 series layer through order 24, Catalan residual through 40", series_layer},
      {"5 combinatorial weight sums D<=8, P<=9, Q<=8", weight_sums},
      {"6 involution certificates D<=6, P<=7, Q<=6, all-signed 1..8", involutions},
      {"7 Catalan parity law up to 4096", parity_law},
      {"8 inverse relation round trips", inverse_relations},
      {"9 f_n vanishes by two routes, 0 <= n <= 25", lemma_f},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = run();
    all = all && o.ok;
    std::printf("%s criterion %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), seconds_since(start),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}

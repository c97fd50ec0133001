#include "narayana/identities.hpp"

#include <array>
#include <string>

#include "narayana/sequences.hpp"

namespace narayana {

namespace {

constexpr std::array kIdentities = {
    IdentityId::coker_a1,     IdentityId::coker_b1,       IdentityId::new_expansion_c1,
    IdentityId::equivalent_b2, IdentityId::main_37,       IdentityId::main_38,
    IdentityId::main_39,      IdentityId::parity,         IdentityId::simons_aa,
    IdentityId::legendre_reflection, IdentityId::lemma_f_zero, IdentityId::catlan2,
    IdentityId::alt_sum_310,  IdentityId::app_pow2,       IdentityId::app_q1_38,
    IdentityId::app_qm1_39,   IdentityId::app_touchard,   IdentityId::app_pell_odd,
    IdentityId::app_pell_even, IdentityId::app_lucas,     IdentityId::app_fibonacci,
};

Polynomial qconst(const Rational& c) { return Polynomial::constant(Variable::q, c); }
Polynomial qmono(const Rational& c, long power) {
  return Polynomial::monomial(Variable::q, c, static_cast<std::size_t>(power));
}
Polynomial qlinear(long c0, long c1) { return Polynomial(Variable::q, {Rational(c0), Rational(c1)}); }

Rational signed_one(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Catalan numbers for right-hand sides come from the ratio recurrence
// C_{k+1} = C_k * 2(2k+1)/(k+2), never from the binomial formula used on
// left-hand sides.
std::vector<BigInt> catalan_by_ratio(long upto) {
  std::vector<BigInt> c(static_cast<std::size_t>(upto < 0 ? 1 : upto + 1));
  c[0] = 1;
  for (long k = 0; k + 1 <= upto; ++k) {
    c[static_cast<std::size_t>(k + 1)] = c[static_cast<std::size_t>(k)] * 2 * (2 * k + 1) / (k + 2);
  }
  return c;
}

Polynomial integral_representation_rhs(long n) {
  // A(t) = sum_k a_{k+1} t^{k+1}; (q-1)^{n+1} (q/(q-1))^{k+1} = q^{k+1} (q-1)^{n-k}.
  const Polynomial antiderivative = legendre_poly(n, LegendreForm::shifted).antiderivative();
  const Polynomial q_minus_one = qlinear(-1, 1);
  Polynomial sum(Variable::q);
  for (long k = 0; k <= n; ++k) {
    const Rational a = antiderivative.coefficient(static_cast<std::size_t>(k + 1));
    if (a == 0) continue;
    sum += qmono(a, k + 1) * q_minus_one.pow(static_cast<unsigned long>(n - k));
  }
  return sum;
}

Polynomial lemma_f_term(long n, long k) {
  const long top = 2 * n + 1;
  Rational c = binomial(top, k);
  if (k % 2 == 1) c = -c;
  return c * (narayana_poly(k + 1) * qlinear(1, 1).pow(static_cast<unsigned long>(top - k)));
}

// binom(k + shift, r) as a polynomial in k (variable x); valid wherever
// k + shift >= 0.
Polynomial binomial_in_k(long shift, long r, long sign_of_k = 1) {
  Polynomial p = Polynomial::constant(Variable::x, 1);
  for (long i = 0; i < r; ++i) {
    p *= Polynomial(Variable::x, {Rational(shift - i), Rational(sign_of_k)});
  }
  p *= Rational(BigInt(1), factorial(r));
  return p;
}

CheckResult check_impl(IdentityId id, long n) {
  const std::string name(identity_name(id));
  const Polynomial one_plus_q = qlinear(1, 1);
  const Polynomial one_minus_q = qlinear(1, -1);
  const Polynomial q_minus_one = qlinear(-1, 1);

  switch (id) {
    case IdentityId::coker_a1: {
      Polynomial lhs(Variable::q);
      for (long k = 1; k <= n; ++k) lhs += qmono(narayana_number(n, k), k - 1);
      const auto cat = catalan_by_ratio(n);
      Polynomial rhs(Variable::q);
      for (long k = 0; 2 * k <= n - 1; ++k) {
        rhs += Rational(binomial(n - 1, 2 * k) * cat[static_cast<std::size_t>(k)]) *
               (qmono(1, k) * one_plus_q.pow(static_cast<unsigned long>(n - 2 * k - 1)));
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::coker_b1: {
      Polynomial lhs(Variable::q);
      for (long k = 1; k <= n; ++k) {
        lhs += narayana_number(n, k) *
               (qmono(1, 2 * (k - 1)) * one_plus_q.pow(static_cast<unsigned long>(2 * (n - k))));
      }
      const auto cat = catalan_by_ratio(n);
      Polynomial rhs(Variable::q);
      for (long k = 0; k <= n - 1; ++k) {
        rhs += Rational(binomial(n - 1, k) * cat[static_cast<std::size_t>(k + 1)]) *
               (qmono(1, k) * one_plus_q.pow(static_cast<unsigned long>(k)));
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::new_expansion_c1: {
      Polynomial rhs(Variable::q);
      for (long k = 0; k <= n; ++k) {
        rhs += Rational(binomial(n + 1, k) * binomial(2 * n - k, n)) *
               q_minus_one.pow(static_cast<unsigned long>(k));
      }
      rhs *= Rational(1, n + 1);
      return make_check(name, n, narayana_poly(n), rhs);
    }
    case IdentityId::equivalent_b2: {
      Polynomial rhs(Variable::q);
      for (long k = 0; k <= n; ++k) {
        Rational c(binomial(n + k, n - k) * binomial(2 * k, k), BigInt(k + 1));
        c.canonicalize();
        rhs += c * q_minus_one.pow(static_cast<unsigned long>(n - k));
      }
      return make_check(name, n, narayana_poly(n), rhs);
    }
    case IdentityId::main_37: {
      Polynomial rhs(Variable::q);
      for (long k = 0; k <= n; ++k) {
        Rational c(BigInt(2 * k + 1) * binomial(2 * n + 1, n - k), BigInt(2 * n + 1));
        c.canonicalize();
        rhs += c * (narayana_poly(k) * one_minus_q.pow(static_cast<unsigned long>(n - k)));
      }
      return make_check(name, n, qconst(catalan(n)), rhs);
    }
    case IdentityId::main_38: {
      const Polynomial lhs = n % 2 == 0 ? qmono(catalan_half(n), n / 2 + 1) : Polynomial(Variable::q);
      Polynomial rhs(Variable::q);
      for (long k = 0; k <= n; ++k) {
        rhs += (signed_one(n - k) * binomial(n, k)) *
               (narayana_poly(k + 1) * one_plus_q.pow(static_cast<unsigned long>(n - k)));
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::main_39: {
      const Polynomial q_squared = qmono(1, 2);
      Polynomial rhs(Variable::q);
      for (long k = 0; k <= n; ++k) {
        rhs += (signed_one(n - k) * binomial(n, k)) *
               (narayana_poly(k + 1).substitute(q_squared) *
                one_minus_q.pow(static_cast<unsigned long>(2 * (n - k))));
      }
      return make_check(name, n, qmono(catalan(n + 1), n + 2), rhs);
    }
    case IdentityId::parity: {
      const Rational lhs = narayana_poly(n).evaluate(-1);
      Rational rhs = 0;
      if (n % 2 == 1) {
        const long r = (n - 1) / 2;
        rhs = signed_one(r + 1) * catalan_by_ratio(r)[static_cast<std::size_t>(r)];
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::simons_aa: {
      const Polynomial one_plus_x(Variable::x, {Rational(1), Rational(1)});
      Polynomial lhs(Variable::x);
      Polynomial rhs(Variable::x);
      for (long k = 0; k <= n; ++k) {
        const Rational c = binomial(n + k, n - k) * binomial(2 * k, k);
        lhs += (signed_one(n - k) * c) * one_plus_x.pow(static_cast<unsigned long>(k));
        rhs += Polynomial::monomial(Variable::x, c, static_cast<std::size_t>(k));
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::legendre_reflection: {
      const Polynomial lhs = signed_one(n) * legendre_poly(n, LegendreForm::standard)
                                                 .substitute(Polynomial(Variable::x, {Rational(-1), Rational(-2)}));
      // P_n(2x+1) = P_n(2(x+1)-1): the shifted form at x+1.
      const Polynomial rhs = legendre_poly(n, LegendreForm::shifted)
                                 .substitute(Polynomial(Variable::x, {Rational(1), Rational(1)}));
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::lemma_f_zero:
      return make_check(name, n, lemma_f_direct(n), Polynomial(Variable::q));
    case IdentityId::catlan2: {
      Polynomial rhs(Variable::q);
      for (long k = 0; k <= 2 * n; ++k) {
        rhs += (signed_one(k) * binomial(2 * n, k)) *
               (narayana_poly(k + 1) * one_plus_q.pow(static_cast<unsigned long>(2 * n - k)));
      }
      return make_check(name, n, qmono(catalan(n), n + 1), rhs);
    }
    case IdentityId::alt_sum_310: {
      Rational lhs = 0;
      for (long k = 0; k <= n; ++k) {
        lhs += signed_one(k) * Rational(BigInt(2 * k + 1) * binomial(2 * n + 1, n - k)) /
               Rational(2 * n + 1);
      }
      return make_check(name, n, lhs, Rational(0));
    }
    case IdentityId::app_pow2: {
      const Rational lhs = (ipow(2, static_cast<unsigned long>(n)) - 1) * catalan(n);
      const auto cat = catalan_by_ratio(n);
      Rational rhs = 0;
      for (long r = 0; 2 * r <= n - 1; ++r) {
        Rational c(BigInt(4 * r + 3) * binomial(2 * n + 1, n - 2 * r - 1), BigInt(2 * n + 1));
        c.canonicalize();
        rhs += signed_one(r) * c * power_of_two(n - 2 * r - 1) * cat[static_cast<std::size_t>(r)];
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::app_q1_38: {
      const auto cat = catalan_by_ratio(2 * n + 1);
      Rational rhs = 0;
      for (long k = 0; k <= 2 * n; ++k) {
        rhs += signed_one(k) * Rational(binomial(2 * n, k) * cat[static_cast<std::size_t>(k + 1)]) *
               power_of_two(2 * n - k);
      }
      return make_check(name, n, Rational(catalan(n)), rhs);
    }
    case IdentityId::app_qm1_39: {
      const auto cat = catalan_by_ratio(n + 1);
      Rational rhs = 0;
      for (long k = 0; k <= n; ++k) {
        rhs += signed_one(k) * Rational(binomial(n, k) * cat[static_cast<std::size_t>(k + 1)]) *
               power_of_two(2 * (n - k));
      }
      return make_check(name, n, Rational(catalan(n + 1)), rhs);
    }
    case IdentityId::app_touchard: {
      const auto cat = catalan_by_ratio(n);
      Rational rhs = 0;
      for (long k = 0; 2 * k <= n; ++k) {
        rhs += Rational(binomial(n, 2 * k) * cat[static_cast<std::size_t>(k)]) * power_of_two(n - 2 * k);
      }
      return make_check(name, n, Rational(catalan(n + 1)), rhs);
    }
    case IdentityId::app_pell_odd: {
      const Rational lhs = ipow(2, static_cast<unsigned long>(n + 1)) * catalan(2 * n + 1);
      Rational rhs = 0;
      for (long k = 0; k <= 2 * n; ++k) {
        rhs += signed_one(k) * binomial(2 * n, k) * narayana_poly(k + 1).evaluate(2) *
               recurrence_seq(Recurrence::pell, 4 * n - 2 * k - 1);
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::app_pell_even: {
      const Rational lhs = ipow(2, static_cast<unsigned long>(n + 1)) * catalan(2 * n + 2);
      Rational rhs = 0;
      for (long k = 0; k <= 2 * n + 1; ++k) {
        rhs += signed_one(k) * binomial(2 * n + 1, k) * narayana_poly(k + 1).evaluate(2) *
               recurrence_seq(Recurrence::pell, 4 * n - 2 * k + 2);
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::app_lucas: {
      const Rational lhs = ipow(5, static_cast<unsigned long>(n + 1)) * catalan(2 * n + 1);
      Rational rhs = 0;
      for (long k = 0; k <= 2 * n; ++k) {
        const long e = 4 * n - 2 * k - 1;
        rhs += signed_one(k) * binomial(2 * n, k) * narayana_poly(k + 1).evaluate(5) *
               recurrence_seq(Recurrence::lucas, e) * power_of_two(e);
      }
      return make_check(name, n, lhs, rhs);
    }
    case IdentityId::app_fibonacci: {
      const Rational lhs = ipow(5, static_cast<unsigned long>(n + 1)) * catalan(2 * n + 2);
      Rational rhs = 0;
      for (long k = 0; k <= 2 * n + 1; ++k) {
        const long e = 4 * n - 2 * k + 1;
        rhs += signed_one(k) * binomial(2 * n + 1, k) * narayana_poly(k + 1).evaluate(5) *
               recurrence_seq(Recurrence::fibonacci, e) * power_of_two(e);
      }
      return make_check(name, n, lhs, rhs);
    }
  }
  throw PreconditionError("check_identity: unknown identity");
}

}  // namespace

std::span<const IdentityId> all_identities() { return kIdentities; }

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::coker_a1: return "coker_a1";
    case IdentityId::coker_b1: return "coker_b1";
    case IdentityId::new_expansion_c1: return "new_expansion_c1";
    case IdentityId::equivalent_b2: return "equivalent_b2";
    case IdentityId::main_37: return "main_37";
    case IdentityId::main_38: return "main_38";
    case IdentityId::main_39: return "main_39";
    case IdentityId::parity: return "parity";
    case IdentityId::simons_aa: return "simons_aa";
    case IdentityId::legendre_reflection: return "legendre_reflection";
    case IdentityId::lemma_f_zero: return "lemma_f_zero";
    case IdentityId::catlan2: return "catlan2";
    case IdentityId::alt_sum_310: return "alt_sum_310";
    case IdentityId::app_pow2: return "app_pow2";
    case IdentityId::app_q1_38: return "app_q1_38";
    case IdentityId::app_qm1_39: return "app_qm1_39";
    case IdentityId::app_touchard: return "app_touchard";
    case IdentityId::app_pell_odd: return "app_pell_odd";
    case IdentityId::app_pell_even: return "app_pell_even";
    case IdentityId::app_lucas: return "app_lucas";
    case IdentityId::app_fibonacci: return "app_fibonacci";
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : kIdentities) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

long identity_min_n(IdentityId id) {
  switch (id) {
    case IdentityId::coker_a1:
    case IdentityId::coker_b1:
    case IdentityId::parity:  // N_0(-1) = 1, so the even case starts at n = 2
    case IdentityId::alt_sum_310:
      return 1;
    default:
      return 0;
  }
}

CheckResult check_identity(IdentityId id, long n) {
  if (n < identity_min_n(id)) {
    throw PreconditionError(std::string(identity_name(id)) + " requires n >= " +
                            std::to_string(identity_min_n(id)) + ", got " + std::to_string(n));
  }
  return check_impl(id, n);
}

CheckResult integral_representation_check(long n) {
  if (n < 1) throw PreconditionError("integral_representation_check requires n >= 1");
  return make_check("integral_representation", n, narayana_poly(n), integral_representation_rhs(n));
}

CheckResult schroeder_integral_check(long n) {
  if (n < 1) throw PreconditionError("schroeder_integral_check requires n >= 1");
  const Polynomial antiderivative = legendre_poly(n, LegendreForm::shifted).antiderivative();
  const Rational integral = antiderivative.evaluate(2) - antiderivative.evaluate(0);
  return make_check("schroeder_integral", n, Rational(schroeder(n)), integral);
}

CheckResult catalan_integral_check(long n) {
  if (n < 0) throw PreconditionError("catalan_integral_check requires n >= 0");
  const long m = 2 * n + 1;
  const Polynomial shifted_down = legendre_poly(m, LegendreForm::standard)
                                      .substitute(Polynomial(Variable::x, {Rational(-1), Rational(1)}));
  const Polynomial antiderivative = shifted_down.antiderivative();
  const Rational integral = power_of_two(m) * (antiderivative.evaluate(1) - antiderivative.evaluate(0));
  return make_check("catalan_integral", n, Rational(signed_one(n + 1) * catalan(n)), integral);
}

Polynomial lemma_f_direct(long n) {
  if (n < 0) throw PreconditionError("lemma_f requires n >= 0");
  Polynomial sum(Variable::q);
  for (long k = 0; k <= 2 * n + 1; ++k) sum += lemma_f_term(n, k);
  return sum;
}

bool lemma_f_terms_palindromic(long n) {
  if (n < 0) throw PreconditionError("lemma_f requires n >= 0");
  const auto window = static_cast<std::size_t>(2 * n + 3);
  for (long k = 0; k <= 2 * n + 1; ++k) {
    if (!lemma_f_term(n, k).is_palindromic(window)) return false;
  }
  return true;
}

LemmaFDifferenceReport lemma_f_by_differences(long n) {
  if (n < 0) throw PreconditionError("lemma_f requires n >= 0");
  const long top = 2 * n + 1;
  LemmaFDifferenceReport report;
  report.coefficients.assign(static_cast<std::size_t>(2 * n + 4), Rational(0));

  // sum_k (-1)^k binom(top,k) (0-k)^r, for every r that can occur.
  std::vector<Rational> difference_at_zero;
  auto difference = [&](long r) -> const Rational& {
    while (static_cast<long>(difference_at_zero.size()) <= r) {
      const long next = static_cast<long>(difference_at_zero.size());
      difference_at_zero.push_back(finite_difference_check(top, next).evaluate(0));
    }
    return difference_at_zero[static_cast<std::size_t>(r)];
  };

  report.degrees_below_window = true;
  for (long m = 0; m <= n + 1; ++m) {
    Rational f_m = 0;
    for (long j = 1; j <= m; ++j) {
      // N_{k+1,j} = binom(k+1,j-1) binom(k,j-1) / j, then binom(top-k, m-j).
      Polynomial inner = binomial_in_k(1, j - 1) * binomial_in_k(0, j - 1) * Rational(1, j);
      inner *= binomial_in_k(top, m - j, -1);
      report.max_inner_degree = std::max(report.max_inner_degree, inner.degree());
      if (inner.degree() >= top) report.degrees_below_window = false;
      // g(k) = sum_r a_r k^r = sum_r a_r (-1)^r (0-k)^r
      for (long r = 0; r <= inner.degree(); ++r) {
        const Rational& a = inner.coefficients()[static_cast<std::size_t>(r)];
        if (a == 0) continue;
        f_m += signed_one(r) * a * difference(r);
      }
    }
    report.coefficients[static_cast<std::size_t>(m)] = f_m;
  }
  report.palindromic = lemma_f_terms_palindromic(n);
  if (report.palindromic) {
    const long window = 2 * n + 3;
    for (long m = n + 2; m <= window; ++m) {
      report.coefficients[static_cast<std::size_t>(m)] =
          report.coefficients[static_cast<std::size_t>(window - m)];
    }
  }
  return report;
}

ParityScan catalan_parity_scan(long limit) {
  if (limit < 0) throw PreconditionError("catalan_parity_scan requires limit >= 0");
  std::vector<bool> odd(static_cast<std::size_t>(limit) + 1);
  BigInt c = 1;
  for (long m = 0; m <= limit; ++m) {
    odd[static_cast<std::size_t>(m)] = mpz_odd_p(c.get_mpz_t()) != 0;
    c = c * 2 * (2 * m + 1) / (m + 2);
  }
  ParityScan scan;
  for (long m = 0; m <= limit; ++m) {
    if (odd[static_cast<std::size_t>(m)]) scan.odd_indices.push_back(m);
  }
  for (long k = 1; 2 * k - 1 <= limit; ++k) {
    const bool even_ok = 2 * k > limit || !odd[static_cast<std::size_t>(2 * k)];
    const bool odd_ok = odd[static_cast<std::size_t>(2 * k - 1)] == odd[static_cast<std::size_t>(k - 1)];
    if (!even_ok || !odd_ok) {
      scan.congruences_hold = false;
      scan.first_violation = even_ok ? 2 * k - 1 : 2 * k;
      break;
    }
  }
  return scan;
}

}  // namespace narayana

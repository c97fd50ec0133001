#include "narayana/sequences.hpp"

#include <array>
#include <string>

namespace narayana {

namespace {

constexpr std::array kSequences = {SequenceId::catalan,   SequenceId::schroeder,
                                   SequenceId::narayana_number, SequenceId::pell,
                                   SequenceId::fibonacci, SequenceId::lucas};

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": negative index " + std::to_string(n));
}

}  // namespace

std::span<const SequenceId> all_sequences() { return kSequences; }

std::string_view sequence_name(SequenceId id) {
  switch (id) {
    case SequenceId::catalan: return "catalan";
    case SequenceId::schroeder: return "schroeder";
    case SequenceId::narayana_number: return "narayana_number";
    case SequenceId::pell: return "pell";
    case SequenceId::fibonacci: return "fibonacci";
    case SequenceId::lucas: return "lucas";
  }
  return "?";
}

std::optional<SequenceId> parse_sequence(std::string_view name) {
  for (SequenceId id : kSequences) {
    if (sequence_name(id) == name) return id;
  }
  return std::nullopt;
}

BigInt catalan(long n) {
  require_nonnegative(n, "catalan");
  return binomial(2 * n, n) / (n + 1);
}

BigInt catalan_half(long n) {
  require_nonnegative(n, "catalan_half");
  return n % 2 == 0 ? catalan(n / 2) : BigInt(0);
}

BigInt schroeder(long n) {
  require_nonnegative(n, "schroeder");
  BigInt prev = 1;  // S_0
  if (n == 0) return prev;
  BigInt cur = 2;  // S_1
  for (long m = 2; m <= n; ++m) {
    BigInt next = (3 * (2 * m - 1) * cur - (m - 2) * prev) / (m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational narayana_number(long n, long k) {
  require_nonnegative(n, "narayana_number");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 1 || k > n) return 0;
  Rational r(binomial(n, k - 1) * binomial(n, k), BigInt(n));
  r.canonicalize();
  return r;
}

Polynomial narayana_poly(long n) {
  require_nonnegative(n, "narayana_poly");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = narayana_number(n, k);
  return Polynomial(Variable::q, std::move(coeffs));
}

Polynomial assoc_narayana_poly(long n) {
  require_nonnegative(n, "assoc_narayana_poly");
  if (n == 0) return Polynomial::constant(Variable::q, 1);
  return narayana_poly(n).divide_by_variable();
}

Polynomial legendre_poly(long n, LegendreForm form) {
  require_nonnegative(n, "legendre_poly");
  if (form == LegendreForm::standard) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    const Rational scale = power_of_two(-n);
    for (long k = 0; 2 * k <= n; ++k) {
      Rational c = scale * binomial(n - k, k) * binomial(2 * n - 2 * k, n - k);
      coeffs[static_cast<std::size_t>(n - 2 * k)] = k % 2 == 0 ? c : Rational(-c);
    }
    return Polynomial(Variable::x, std::move(coeffs));
  }
  const Polynomial x_minus_one(Variable::x, {Rational(-1), Rational(1)});
  Polynomial sum(Variable::x);
  Polynomial power = Polynomial::constant(Variable::x, 1);
  for (long k = 0; k <= n; ++k) {
    sum += Rational(binomial(n + k, n - k) * binomial(2 * k, k)) * power;
    power *= x_minus_one;
  }
  return sum;
}

BigInt recurrence_seq(Recurrence which, long n) {
  if (n < -1) {
    throw PreconditionError("recurrence_seq: index " + std::to_string(n) + " below -1");
  }
  BigInt before;  // G_{-1}
  BigInt current = 1;  // G_0
  long multiplier = 1;
  switch (which) {
    case Recurrence::pell:
      before = 1;
      current = 0;
      multiplier = 2;
      break;
    case Recurrence::fibonacci: before = 0; break;
    case Recurrence::lucas: before = 2; break;
  }
  if (n == -1) return before;
  for (long m = 0; m < n; ++m) {
    BigInt next = multiplier * current + before;
    before = current;
    current = next;
  }
  return current;
}

}  // namespace narayana

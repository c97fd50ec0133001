#include "narayana/rational.hpp"

#include <cctype>

namespace narayana {

BigInt binomial(long n, long k) {
  if (n < 0) {
    throw PreconditionError("binomial: negative upper index " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw PreconditionError("factorial: negative argument");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), e);
  return result;
}

Rational power_of_two(long e) {
  BigInt p = ipow(2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(BigInt(1), p);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw PreconditionError("malformed rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  BigInt numerator(n, 10);
  BigInt denominator = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den), 10);
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

}  // namespace narayana

#pragma once

// Exact scalars: arbitrary-precision integers and canonical rationals.
//
// Rational values are always kept in lowest terms with a positive
// denominator; zero is 0/1.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace narayana {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Binomial coefficient binom(n, k); zero when k < 0 or k > n.
/// Throws PreconditionError for negative n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

/// 2^e for any integer e, as an exact rational.
Rational power_of_two(long e);

/// Exact integer power base^e (e >= 0).
BigInt ipow(const BigInt& base, unsigned long e);

/// "p/q", or "p" when the value is integral.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q"; throws PreconditionError on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

}  // namespace narayana

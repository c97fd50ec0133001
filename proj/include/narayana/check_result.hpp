#pragma once

#include <string>
#include <variant>

#include "narayana/polynomial.hpp"
#include "narayana/power_series.hpp"
#include "narayana/rational.hpp"

namespace narayana {

/// One side of a checked equality.
using Value = std::variant<Rational, Polynomial, PolySeries>;

/// Outcome of evaluating both sides of an identity at one parameter value.
/// `equal` is true iff lhs - rhs is exactly zero.
struct CheckResult {
  std::string identity;
  long n = 0;
  Value lhs;
  Value rhs;
  bool equal = false;
};

/// Exact comparison; values of different kinds are never equal.
bool values_equal(const Value& a, const Value& b);

CheckResult make_check(std::string identity, long n, Value lhs, Value rhs);

std::string value_to_text(const Value& v);

}  // namespace narayana

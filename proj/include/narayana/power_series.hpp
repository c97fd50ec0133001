#pragma once

// Truncated power series in a formal variable whose coefficients are
// exact polynomials (in q, or in x for the Legendre generating function).

#include <cstddef>
#include <vector>

#include "narayana/polynomial.hpp"

namespace narayana {

/// sum_{i=0}^{N} c_i z^i, exact through order N.
///
/// Always holds exactly N+1 coefficient slots, all in the same coefficient
/// indeterminate. Binary operations require equal orders and indeterminates.
class PolySeries {
 public:
  /// The zero series of the given order.
  PolySeries(std::size_t order, Variable coefficient_variable);
  /// Order is coefficients.size() - 1; coefficients must be nonempty.
  explicit PolySeries(std::vector<Polynomial> coefficients);

  /// c * z^power truncated at `order` (zero if power > order).
  static PolySeries monomial(std::size_t order, const Polynomial& c, std::size_t power);
  /// Constant series c.
  static PolySeries constant(std::size_t order, const Polynomial& c);
  /// The series z.
  static PolySeries variable(std::size_t order, Variable coefficient_variable);

  std::size_t order() const { return coeffs_.size() - 1; }
  Variable coefficient_variable() const { return var_; }
  const Polynomial& coefficient(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  PolySeries& operator+=(const PolySeries& other);
  PolySeries& operator-=(const PolySeries& other);
  friend PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
  friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
  friend PolySeries operator*(const PolySeries& a, const PolySeries& b);
  /// Coefficient-wise scaling by a polynomial.
  friend PolySeries operator*(const Polynomial& p, const PolySeries& s);

  friend bool operator==(const PolySeries& a, const PolySeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  PolySeries pow(unsigned long e) const;

  /// Multiplicative inverse. The constant coefficient must be a nonzero
  /// constant polynomial, so every coefficient of the inverse stays polynomial.
  PolySeries reciprocal() const;

  /// Square root with constant term 1, solved degree by degree from s = t^2.
  /// The constant coefficient must be exactly 1.
  PolySeries sqrt() const;

  /// this(inner(z)); inner must have zero constant coefficient.
  PolySeries compose(const PolySeries& inner) const;

  /// Exact division by z; the constant coefficient must be zero. The result
  /// has order N-1.
  PolySeries divide_by_variable() const;

  /// Keeps coefficients 0..order.
  PolySeries truncated(std::size_t order) const;

  /// Evaluates every coefficient polynomial at `value`, keeping constant
  /// polynomials in the same indeterminate.
  PolySeries specialize(const Rational& value) const;

 private:
  void require_compatible(const PolySeries& other, const char* op) const;

  Variable var_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace narayana

#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "narayana/rational.hpp"

namespace narayana {

/// Name of the indeterminate a polynomial is written in.
enum class Variable { q, x, t };

std::string_view variable_name(Variable v);

/// A polynomial sum c_i v^i over the rationals.
///
/// Coefficients are stored low degree first. The highest stored coefficient
/// is never zero; the zero polynomial has no stored coefficients. Arithmetic
/// between polynomials in different indeterminates throws PreconditionError.
class Polynomial {
 public:
  /// The zero polynomial in q.
  Polynomial() = default;
  explicit Polynomial(Variable v) : var_(v) {}
  Polynomial(Variable v, std::vector<Rational> coefficients);

  static Polynomial constant(Variable v, const Rational& c);
  static Polynomial monomial(Variable v, const Rational& c, std::size_t power);
  /// The polynomial v itself.
  static Polynomial identity(Variable v) { return monomial(v, 1, 1); }

  Variable variable() const { return var_; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of v^i; zero past the degree.
  Rational coefficient(std::size_t i) const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational evaluate(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  Polynomial pow(unsigned long e) const;

  /// Replaces the indeterminate by `image` and expands; the result is in
  /// image's indeterminate.
  Polynomial substitute(const Polynomial& image) const;

  /// Evaluates the homogenised form sum c_i num^i den^(d-i), i.e. p(num/den)*den^d,
  /// without leaving polynomial arithmetic. Requires d >= degree().
  Polynomial homogenized_substitute(const Polynomial& num, const Polynomial& den,
                                    std::size_t d) const;

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  Polynomial derivative() const;

  /// Divides by the indeterminate; throws if the constant term is nonzero.
  Polynomial divide_by_variable() const;

  /// Same polynomial written in another indeterminate.
  Polynomial renamed(Variable v) const;

  /// True when v^window * p(1/v) == p, i.e. the coefficients read the same
  /// backwards inside positions 0..window. Requires window >= degree().
  bool is_palindromic(std::size_t window) const;

  /// Human-readable form such as "1 - 2*q + q^2".
  std::string to_string() const;
  /// Low-degree-first coefficient strings; the zero polynomial gives ["0"].
  std::vector<std::string> coefficient_strings() const;

 private:
  void normalize();
  void require_same_variable(const Polynomial& other, const char* op) const;

  Variable var_ = Variable::q;
  std::vector<Rational> coeffs_;
};

/// sum_{k=0}^{n} (-1)^k binom(n,k) (x-k)^r as a polynomial in x.
/// Vanishes for 0 <= r < n and equals n! for r == n.
Polynomial finite_difference_check(long n, long r);

}  // namespace narayana

#include "narayana/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace narayana {

std::string_view variable_name(Variable v) {
  switch (v) {
    case Variable::q: return "q";
    case Variable::x: return "x";
    case Variable::t: return "t";
  }
  return "?";
}

Polynomial::Polynomial(Variable v, std::vector<Rational> coefficients)
    : var_(v), coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial Polynomial::constant(Variable v, const Rational& c) {
  return Polynomial(v, {c});
}

Polynomial Polynomial::monomial(Variable v, const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(v, std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_same_variable(const Polynomial& other, const char* op) const {
  if (var_ != other.var_) {
    throw PreconditionError(std::string("polynomial ") + op + ": indeterminate mismatch (" +
                            std::string(variable_name(var_)) + " vs " +
                            std::string(variable_name(other.var_)) + ")");
  }
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variable(other, "add");
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variable(other, "sub");
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_variable(b, "mul");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.var_);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(term.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += term;
    }
  }
  return Polynomial(a.var_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(var_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const Polynomial& image) const {
  Polynomial acc(image.var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= image;
    acc += constant(image.var_, *it);
  }
  return acc;
}

Polynomial Polynomial::homogenized_substitute(const Polynomial& num, const Polynomial& den,
                                              std::size_t d) const {
  num.require_same_variable(den, "homogenized_substitute");
  if (degree() > static_cast<long>(d)) {
    throw PreconditionError("homogenized_substitute: degree exceeds homogenising degree");
  }
  Polynomial acc(num.var_);
  Polynomial num_power = constant(num.var_, 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) acc += coeffs_[i] * (num_power * den.pow(d - i));
    num_power *= num;
  }
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return Polynomial(var_);
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return Polynomial(var_, std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(var_);
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return Polynomial(var_, std::move(out));
}

Polynomial Polynomial::divide_by_variable() const {
  if (is_zero()) return *this;
  if (coeffs_.front() != 0) {
    throw PreconditionError("divide_by_variable: nonzero constant term " +
                            narayana::to_string(coeffs_.front()));
  }
  return Polynomial(var_, std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Polynomial Polynomial::renamed(Variable v) const {
  Polynomial r = *this;
  r.var_ = v;
  return r;
}

bool Polynomial::is_palindromic(std::size_t window) const {
  if (degree() > static_cast<long>(window)) {
    throw PreconditionError("is_palindromic: window smaller than degree");
  }
  for (std::size_t i = 0; i <= window; ++i) {
    if (coefficient(i) != coefficient(window - i)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const std::string_view name = variable_name(var_);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (i == 0) {
      out << narayana::to_string(magnitude);
      continue;
    }
    if (!unit) out << narayana::to_string(magnitude) << "*";
    out << name;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::vector<std::string> Polynomial::coefficient_strings() const {
  if (is_zero()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(narayana::to_string(c));
  return out;
}

Polynomial finite_difference_check(long n, long r) {
  if (n < 0 || r < 0) throw PreconditionError("finite_difference_check: negative argument");
  // (x-k)^r = sum_i binom(r,i) (-k)^(r-i) x^i
  std::vector<Rational> coeffs(static_cast<std::size_t>(r) + 1);
  for (long k = 0; k <= n; ++k) {
    BigInt outer = binomial(n, k);
    if (k % 2 == 1) outer = -outer;
    BigInt minus_k_power = 1;  // (-k)^(r-i), built from i = r downwards
    for (long i = r; i >= 0; --i) {
      coeffs[static_cast<std::size_t>(i)] += outer * binomial(r, i) * minus_k_power;
      minus_k_power *= -k;
    }
  }
  return Polynomial(Variable::x, std::move(coeffs));
}

}  // namespace narayana

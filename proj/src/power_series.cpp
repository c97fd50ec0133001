#include "narayana/power_series.hpp"

#include <string>

namespace narayana {

PolySeries::PolySeries(std::size_t order, Variable coefficient_variable)
    : var_(coefficient_variable), coeffs_(order + 1, Polynomial(coefficient_variable)) {}

PolySeries::PolySeries(std::vector<Polynomial> coefficients)
    : var_(coefficients.empty() ? Variable::q : coefficients.front().variable()),
      coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw PreconditionError("PolySeries: no coefficients");
  for (const auto& c : coeffs_) {
    if (c.variable() != var_) {
      throw PreconditionError("PolySeries: coefficients in mixed indeterminates");
    }
  }
}

PolySeries PolySeries::monomial(std::size_t order, const Polynomial& c, std::size_t power) {
  PolySeries s(order, c.variable());
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

PolySeries PolySeries::constant(std::size_t order, const Polynomial& c) {
  return monomial(order, c, 0);
}

PolySeries PolySeries::variable(std::size_t order, Variable coefficient_variable) {
  return monomial(order, Polynomial::constant(coefficient_variable, 1), 1);
}

void PolySeries::require_compatible(const PolySeries& other, const char* op) const {
  if (order() != other.order()) {
    throw PreconditionError(std::string("series ") + op + ": truncation orders differ (" +
                            std::to_string(order()) + " vs " + std::to_string(other.order()) +
                            ")");
  }
  if (var_ != other.var_) {
    throw PreconditionError(std::string("series ") + op + ": coefficient indeterminates differ");
  }
}

PolySeries& PolySeries::operator+=(const PolySeries& other) {
  require_compatible(other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& other) {
  require_compatible(other, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  a.require_compatible(b, "mul");
  const std::size_t n = a.order();
  PolySeries out(n, a.var_);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

PolySeries operator*(const Polynomial& p, const PolySeries& s) {
  if (p.variable() != s.var_) {
    throw PreconditionError("series scale: coefficient indeterminates differ");
  }
  PolySeries out = s;
  for (auto& c : out.coeffs_) c = p * c;
  return out;
}

PolySeries PolySeries::pow(unsigned long e) const {
  PolySeries result = constant(order(), Polynomial::constant(var_, 1));
  PolySeries base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PolySeries PolySeries::reciprocal() const {
  const Polynomial& c0 = coeffs_[0];
  if (c0.is_zero() || !c0.is_constant()) {
    throw PreconditionError("series reciprocal: constant coefficient must be a nonzero constant, got " +
                            c0.to_string());
  }
  const Rational inv = 1 / c0.coefficient(0);
  PolySeries out(order(), var_);
  out.coeffs_[0] = Polynomial::constant(var_, inv);
  for (std::size_t n = 1; n <= order(); ++n) {
    Polynomial acc(var_);
    for (std::size_t i = 1; i <= n; ++i) {
      if (coeffs_[i].is_zero()) continue;
      acc += coeffs_[i] * out.coeffs_[n - i];
    }
    out.coeffs_[n] = -inv * acc;
  }
  return out;
}

PolySeries PolySeries::sqrt() const {
  if (coeffs_[0] != Polynomial::constant(var_, 1)) {
    throw PreconditionError("series sqrt: constant coefficient must be 1, got " +
                            coeffs_[0].to_string());
  }
  // t_0 = 1 and 2 t_n = s_n - sum_{i=1}^{n-1} t_i t_{n-i}.
  PolySeries out(order(), var_);
  out.coeffs_[0] = coeffs_[0];
  const Rational half(1, 2);
  for (std::size_t n = 1; n <= order(); ++n) {
    Polynomial acc = coeffs_[n];
    for (std::size_t i = 1; i < n; ++i) acc -= out.coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = half * acc;
  }
  return out;
}

PolySeries PolySeries::compose(const PolySeries& inner) const {
  require_compatible(inner, "compose");
  if (!inner.coeffs_[0].is_zero()) {
    throw PreconditionError("series compose: inner constant coefficient must be 0, got " +
                            inner.coeffs_[0].to_string());
  }
  PolySeries acc = constant(order(), coeffs_.back());
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc = acc * inner;
    acc.coeffs_[0] += coeffs_[i];
  }
  return acc;
}

PolySeries PolySeries::divide_by_variable() const {
  if (!coeffs_[0].is_zero()) {
    throw PreconditionError("series divide_by_variable: constant coefficient is " +
                            coeffs_[0].to_string());
  }
  if (order() == 0) throw PreconditionError("series divide_by_variable: order 0 series");
  return PolySeries(std::vector<Polynomial>(coeffs_.begin() + 1, coeffs_.end()));
}

PolySeries PolySeries::truncated(std::size_t new_order) const {
  if (new_order > order()) throw PreconditionError("series truncated: order would grow");
  return PolySeries(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PolySeries PolySeries::specialize(const Rational& value) const {
  PolySeries out(order(), var_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = Polynomial::constant(var_, coeffs_[i].evaluate(value));
  }
  return out;
}

}  // namespace narayana

#include "narayana/generating.hpp"

#include <string>

#include "narayana/sequences.hpp"

namespace narayana {

namespace {

Polynomial qpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(Variable::q, std::move(c));
}

PolySeries from_coefficients(std::size_t order, Variable v, std::vector<Polynomial> low_terms) {
  std::vector<Polynomial> coeffs(order + 1, Polynomial(v));
  for (std::size_t i = 0; i < low_terms.size() && i <= order; ++i) coeffs[i] = std::move(low_terms[i]);
  return PolySeries(std::move(coeffs));
}

}  // namespace

PolySeries catalan_series(std::size_t order) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    coeffs.push_back(Polynomial::constant(Variable::q, catalan(static_cast<long>(n))));
  }
  return PolySeries(std::move(coeffs));
}

PolySeries catalan_closed_form_series(std::size_t order) {
  const PolySeries radicand = from_coefficients(order + 1, Variable::q, {qpoly({1}), qpoly({-4})});
  const PolySeries numerator = PolySeries::constant(order + 1, qpoly({1})) - radicand.sqrt();
  return Polynomial::constant(Variable::q, Rational(1, 2)) * numerator.divide_by_variable();
}

PolySeries catalan_functional_residual(std::size_t order) {
  const PolySeries c = catalan_series(order);
  const PolySeries x = PolySeries::variable(order, Variable::q);
  return c - PolySeries::constant(order, qpoly({1})) - x * (c * c);
}

PolySeries omega_series(std::size_t order) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) coeffs.push_back(narayana_poly(static_cast<long>(n)));
  return PolySeries(std::move(coeffs));
}

PolySeries omega_closed_form_series(std::size_t order) {
  // 1 + (-2 - 2q) x + (1 - 2q + q^2) x^2
  const std::size_t inner_order = order + 1;
  const PolySeries radicand =
      from_coefficients(inner_order, Variable::q, {qpoly({1}), qpoly({-2, -2}), qpoly({1, -2, 1})});
  const PolySeries linear = from_coefficients(inner_order, Variable::q, {qpoly({1}), qpoly({1, -1})});
  const PolySeries numerator = linear - radicand.sqrt();
  return Polynomial::constant(Variable::q, Rational(1, 2)) * numerator.divide_by_variable();
}

CheckResult omega_closed_form_check(std::size_t order) {
  if (order < 1) throw PreconditionError("omega_closed_form_check requires order >= 1");
  return make_check("omega_closed_form", static_cast<long>(order), omega_closed_form_series(order),
                    omega_series(order));
}

PolySeries omega_composition_series(CompositionVariant variant, std::size_t order) {
  const PolySeries x = PolySeries::variable(order, Variable::q);
  const PolySeries c = catalan_series(order);
  if (variant == CompositionVariant::first) {
    const PolySeries denominator = from_coefficients(order, Variable::q, {qpoly({1}), qpoly({1, -1})});
    const PolySeries r = denominator.reciprocal();
    return r * c.compose(x * (r * r));
  }
  const PolySeries denominator = from_coefficients(order, Variable::q, {qpoly({1}), qpoly({-1, -1})});
  const PolySeries r = denominator.reciprocal();
  const Polynomial q = Polynomial::identity(Variable::q);
  const PolySeries inner = q * (x * x * r * r);
  return PolySeries::constant(order, qpoly({1})) + q * (x * r * c.compose(inner));
}

CheckResult omega_composition_check(CompositionVariant variant, std::size_t order) {
  if (order < 1) throw PreconditionError("omega_composition_check requires order >= 1");
  const std::string name =
      variant == CompositionVariant::first ? "omega_composition_first" : "omega_composition_second";
  return make_check(name, static_cast<long>(order), omega_composition_series(variant, order),
                    omega_series(order));
}

CheckResult lagrange_coefficient_check(long n, long k) {
  if (k < 0 || k > n) throw PreconditionError("lagrange_coefficient_check requires 0 <= k <= n");
  const auto m = static_cast<std::size_t>(n - k);
  const PolySeries power = catalan_series(m).pow(static_cast<unsigned long>(2 * k + 1));
  const Rational extracted = power.coefficient(m).coefficient(0);
  Rational closed(BigInt(2 * k + 1) * binomial(2 * n + 1, n - k), BigInt(2 * n + 1));
  closed.canonicalize();
  return make_check("lagrange_coefficient(k=" + std::to_string(k) + ")", n, extracted, closed);
}

PolySeries legendre_generating_series(std::size_t order) {
  const Polynomial one = Polynomial::constant(Variable::x, 1);
  const Polynomial minus_two_x = Polynomial::monomial(Variable::x, -2, 1);
  const PolySeries radicand = from_coefficients(order, Variable::x, {one, minus_two_x, one});
  return radicand.sqrt().reciprocal();
}

CheckResult legendre_gf_check(std::size_t order) {
  std::vector<Polynomial> explicit_terms;
  explicit_terms.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    explicit_terms.push_back(legendre_poly(static_cast<long>(n), LegendreForm::standard));
  }
  return make_check("legendre_gf", static_cast<long>(order), legendre_generating_series(order),
                    PolySeries(std::move(explicit_terms)));
}

}  // namespace narayana

#pragma once

// Truncated generating functions: the Catalan series C(x), the Narayana
// series Omega(q, x) = sum N_n(q) x^n, and checks of their closed forms and
// composition identities, exact through a truncation order.

#include "narayana/check_result.hpp"
#include "narayana/power_series.hpp"

namespace narayana {

/// C_0..C_N as constant polynomials in q.
PolySeries catalan_series(std::size_t order);

/// (1 - sqrt(1-4x)) / (2x) through order N, via the series square root.
PolySeries catalan_closed_form_series(std::size_t order);

/// C - 1 - x C^2 through order N; identically zero.
PolySeries catalan_functional_residual(std::size_t order);

/// sum_{n<=N} N_n(q) x^n.
PolySeries omega_series(std::size_t order);

/// (1 + x - qx - sqrt(1 - 2x + x^2 - 2qx - 2qx^2 + q^2x^2)) / (2x) through order N.
PolySeries omega_closed_form_series(std::size_t order);

/// Closed form against omega_series. Requires order >= 1.
CheckResult omega_closed_form_check(std::size_t order);

enum class CompositionVariant { first, second };

/// first:  1/(1+x-qx) * C(x/(1+x-qx)^2)
/// second: 1 + qx/(1-x-qx) * C(qx^2/(1-x-qx)^2)
PolySeries omega_composition_series(CompositionVariant variant, std::size_t order);

/// Composition form against omega_series. Requires order >= 1.
CheckResult omega_composition_check(CompositionVariant variant, std::size_t order);

/// [x^(n-k)] C(x)^(2k+1) extracted from the series power, against
/// (2k+1)/(2n+1) binom(2n+1, n-k). Requires 0 <= k <= n.
CheckResult lagrange_coefficient_check(long n, long k);

/// 1/sqrt(1 - 2xt + t^2) as a series in t with coefficients in x.
PolySeries legendre_generating_series(std::size_t order);

/// legendre_generating_series against sum_n P_n(x) t^n built from the
/// explicit Legendre formula.
CheckResult legendre_gf_check(std::size_t order);

}  // namespace narayana

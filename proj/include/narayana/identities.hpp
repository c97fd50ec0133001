#pragma once

// Registry of exact identities relating Catalan numbers, Narayana and
// Legendre polynomials. Every check evaluates both sides exactly, through
// separate code paths, and compares them as polynomials or rationals.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "narayana/check_result.hpp"

namespace narayana {

enum class IdentityId {
  coker_a1,
  coker_b1,
  new_expansion_c1,
  equivalent_b2,
  main_37,
  main_38,
  main_39,
  parity,
  simons_aa,
  legendre_reflection,
  lemma_f_zero,
  catlan2,
  alt_sum_310,
  app_pow2,
  app_q1_38,
  app_qm1_39,
  app_touchard,
  app_pell_odd,
  app_pell_even,
  app_lucas,
  app_fibonacci,
};

std::span<const IdentityId> all_identities();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Smallest n for which the identity is stated.
long identity_min_n(IdentityId id);

/// Evaluates both sides at n. Throws PreconditionError when n is below
/// identity_min_n(id).
CheckResult check_identity(IdentityId id, long n);

/// N_n(q) against (q-1)^(n+1) * integral_0^{q/(q-1)} P_n(2x-1) dx, expanded
/// termwise so no rational functions appear. Requires n >= 1.
CheckResult integral_representation_check(long n);

/// N_n(2) (via the Schroeder recurrence) against integral_0^2 P_n(2x-1) dx.
/// Requires n >= 1.
CheckResult schroeder_integral_check(long n);

/// (-1)^(n+1) C_n against 2^(2n+1) integral_0^1 P_{2n+1}(x-1) dx, the q = -1
/// case of the integral representation. Requires n >= 0.
CheckResult catalan_integral_check(long n);

/// f_n(q) = sum_{k=0}^{2n+1} (-1)^k binom(2n+1,k) N_{k+1}(q) (1+q)^(2n+1-k),
/// expanded directly.
Polynomial lemma_f_direct(long n);

/// True when every summand of f_n is palindromic in the window 0..2n+3,
/// i.e. q^(2n+3) T(1/q) = T(q) termwise.
bool lemma_f_terms_palindromic(long n);

/// Coefficients f_0..f_{2n+3} of f_n obtained without expanding f_n: each
/// f_m for m <= n+1 is a double sum whose inner alternating sum runs over a
/// polynomial in k; that polynomial is re-expressed through the finite
/// difference sums sum_k (-1)^k binom(2n+1,k) (0-k)^r. The remaining window
/// follows from the palindromic relation (checked, not assumed).
struct LemmaFDifferenceReport {
  std::vector<Rational> coefficients;
  /// Largest degree in k met among the inner summands; the vanishing
  /// argument needs it below 2n+1.
  long max_inner_degree = -1;
  bool degrees_below_window = false;
  bool palindromic = false;
};
LemmaFDifferenceReport lemma_f_by_differences(long n);

/// Indices m <= limit with C_m odd, plus the derived congruences
/// C_{2k} = 0 and C_{2k-1} = C_{k-1} (mod 2).
struct ParityScan {
  std::vector<long> odd_indices;
  bool congruences_hold = true;
  std::optional<long> first_violation;
};
ParityScan catalan_parity_scan(long limit);

}  // namespace narayana

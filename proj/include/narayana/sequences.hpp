#pragma once

// Generators for the integer sequences and polynomial families used
// throughout the library.

#include <optional>
#include <span>
#include <string_view>

#include "narayana/polynomial.hpp"
#include "narayana/rational.hpp"

namespace narayana {

enum class SequenceId { catalan, schroeder, narayana_number, pell, fibonacci, lucas };

std::span<const SequenceId> all_sequences();
std::string_view sequence_name(SequenceId id);
std::optional<SequenceId> parse_sequence(std::string_view name);

/// C_n = binom(2n, n) / (n + 1). Throws for n < 0.
BigInt catalan(long n);

/// C_{n/2}, taken to be zero when n is odd.
BigInt catalan_half(long n);

/// Large Schroeder number S_n from (n+1)S_n = 3(2n-1)S_{n-1} - (n-2)S_{n-2}.
BigInt schroeder(long n);

/// N_{n,k} = binom(n,k-1) binom(n,k) / n for n >= 1, N_{0,0} = 1, zero
/// outside 1 <= k <= n.
Rational narayana_number(long n, long k);

/// sum_k N_{n,k} q^k; the constant 1 for n = 0.
Polynomial narayana_poly(long n);

/// The associated polynomial N_n(q)/q (reversed-coefficient form); 1 for n = 0.
Polynomial assoc_narayana_poly(long n);

enum class LegendreForm { standard, shifted };

/// standard: P_n(x) = 2^-n sum_k (-1)^k binom(n-k,k) binom(2n-2k,n-k) x^(n-2k).
/// shifted:  P_n(2x-1) = sum_k binom(n+k,n-k) binom(2k,k) (x-1)^k.
Polynomial legendre_poly(long n, LegendreForm form);

enum class Recurrence { pell, fibonacci, lucas };

/// Second-order recurrences indexed from -1:
///   pell:      P_{n+1} = 2 P_n + P_{n-1}, P_{-1} = 1, P_0 = 0
///   fibonacci: G_{n+1} = G_n + G_{n-1},   G_{-1} = 0, G_0 = 1  (so F_1 = 1, F_2 = 2)
///   lucas:     G_{n+1} = G_n + G_{n-1},   G_{-1} = 2, G_0 = 1
/// The Fibonacci convention is shifted by one from the usual F_0 = 0.
/// Throws for n < -1.
BigInt recurrence_seq(Recurrence which, long n);

}  // namespace narayana

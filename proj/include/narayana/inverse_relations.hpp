#pragma once

// Classical inverse pairs acting on finite sequences of polynomials.

#include <vector>

#include "narayana/polynomial.hpp"

namespace narayana {

enum class Direction { forward, backward };

/// forward:  A_n = sum_k binom(n+k, n-k) B_k
/// backward: B_n = sum_k (-1)^(n-k) (2k+1)/(2n+1) binom(2n+1, n-k) A_k
std::vector<Polynomial> legendre_inverse(Direction direction, const std::vector<Polynomial>& seq);

/// forward:  A_n = sum_k binom(n, k) B_k
/// backward: B_n = sum_k (-1)^(n-k) binom(n, k) A_k
std::vector<Polynomial> binomial_inverse(Direction direction, const std::vector<Polynomial>& seq);

/// A_n = sum_{k <= n/s} binom(n+p, sk+p) B_k for n < length.
std::vector<Polynomial> left_inversion_forward(long s, long p, const std::vector<Polynomial>& b,
                                               std::size_t length);

/// Recovers B from A: B_n = sum_{k=0}^{sn} (-1)^(sn-k) binom(sn+p, k+p) A_k.
/// An input of length L yields floor((L-1)/s) + 1 terms.
std::vector<Polynomial> left_inversion(long s, long p, const std::vector<Polynomial>& a);

}  // namespace narayana

#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library beyond its value types.

#include <cstdint>
#include <random>
#include <vector>

#include "narayana/polynomial.hpp"
#include "narayana/rational.hpp"

namespace oracle {

using narayana::BigInt;
using narayana::Polynomial;
using narayana::Rational;
using narayana::Variable;

/// Rows 0..n of Pascal's triangle by repeated addition.
inline std::vector<std::vector<BigInt>> pascal(long n) {
  std::vector<std::vector<BigInt>> rows{{1}};
  for (long i = 1; i <= n; ++i) {
    std::vector<BigInt> row(static_cast<std::size_t>(i) + 1, 1);
    for (long j = 1; j < i; ++j) row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
    rows.push_back(std::move(row));
  }
  return rows;
}

/// C_0..C_n from C_{m+1} = sum C_i C_{m-i}.
inline std::vector<BigInt> catalan_convolution(long n) {
  std::vector<BigInt> c{1};
  for (long m = 0; m < n; ++m) {
    BigInt s = 0;
    for (long i = 0; i <= m; ++i) s += c[i] * c[m - i];
    c.push_back(s);
  }
  return c;
}

/// Large Schroeder numbers from S_n = S_{n-1} + sum_{k<n} S_k S_{n-1-k}.
inline std::vector<BigInt> schroeder_convolution(long n) {
  std::vector<BigInt> s{1};
  for (long m = 1; m <= n; ++m) {
    BigInt v = s[m - 1];
    for (long k = 0; k < m; ++k) v += s[k] * s[m - 1 - k];
    s.push_back(v);
  }
  return s;
}

/// Counts Dyck paths of semilength n by number of peaks, scanning all
/// 2^(2n) step words.
inline std::vector<long> dyck_peak_counts(long n) {
  std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t words = std::uint64_t{1} << (2 * n);
  for (std::uint64_t w = 0; w < words; ++w) {
    long h = 0;
    long peaks = 0;
    bool ok = true;
    for (long i = 0; i < 2 * n && ok; ++i) {
      const bool up = (w >> i) & 1U;
      h += up ? 1 : -1;
      if (h < 0) ok = false;
      if (up && i + 1 < 2 * n && !((w >> (i + 1)) & 1U)) ++peaks;
    }
    if (ok && h == 0) ++counts[static_cast<std::size_t>(peaks)];
  }
  return counts;
}

/// Schoolbook product of coefficient vectors.
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline std::vector<Rational> coeffs(const Polynomial& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

/// Legendre polynomials from (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}.
inline std::vector<Polynomial> legendre_three_term(long n) {
  const Polynomial x = Polynomial::identity(Variable::x);
  std::vector<Polynomial> p{Polynomial::constant(Variable::x, 1), x};
  for (long m = 1; m < n; ++m) {
    Polynomial next = Rational(2 * m + 1) * (x * p[m]) - Rational(m) * p[m - 1];
    next *= Rational(1, m + 1);
    p.push_back(next);
  }
  p.resize(static_cast<std::size_t>(n) + 1, Polynomial(Variable::x));
  return p;
}

/// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() {
    Rational r(integer(-50, 50), integer(1, 12));
    r.canonicalize();
    return r;
  }

  Polynomial polynomial(Variable v, long max_degree) {
    std::vector<Rational> c;
    const long degree = integer(-1, max_degree);
    for (long i = 0; i <= degree; ++i) c.push_back(integer(0, 3) == 0 ? Rational(0) : rational());
    return Polynomial(v, std::move(c));
  }

  std::vector<Polynomial> sequence(long length, long max_degree) {
    std::vector<Polynomial> out;
    for (long i = 0; i < length; ++i) out.push_back(polynomial(Variable::q, max_degree));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#include "narayana/inverse_relations.hpp"

namespace narayana {

namespace {

Variable common_variable(const std::vector<Polynomial>& seq, const char* what) {
  if (seq.empty()) throw PreconditionError(std::string(what) + ": empty sequence");
  return seq.front().variable();
}

Rational alternating(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<Polynomial> legendre_inverse(Direction direction, const std::vector<Polynomial>& seq) {
  const Variable v = common_variable(seq, "legendre_inverse");
  const long len = static_cast<long>(seq.size());
  std::vector<Polynomial> out;
  out.reserve(seq.size());
  for (long n = 0; n < len; ++n) {
    Polynomial sum(v);
    for (long k = 0; k <= n; ++k) {
      const Polynomial& term = seq[static_cast<std::size_t>(k)];
      if (direction == Direction::forward) {
        sum += Rational(binomial(n + k, n - k)) * term;
      } else {
        Rational c(BigInt(2 * k + 1) * binomial(2 * n + 1, n - k), BigInt(2 * n + 1));
        c.canonicalize();
        sum += (alternating(n - k) * c) * term;
      }
    }
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<Polynomial> binomial_inverse(Direction direction, const std::vector<Polynomial>& seq) {
  const Variable v = common_variable(seq, "binomial_inverse");
  const long len = static_cast<long>(seq.size());
  std::vector<Polynomial> out;
  out.reserve(seq.size());
  for (long n = 0; n < len; ++n) {
    Polynomial sum(v);
    for (long k = 0; k <= n; ++k) {
      Rational c = binomial(n, k);
      if (direction == Direction::backward) c *= alternating(n - k);
      sum += c * seq[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<Polynomial> left_inversion_forward(long s, long p, const std::vector<Polynomial>& b,
                                               std::size_t length) {
  if (s < 1 || p < 0) throw PreconditionError("left_inversion: need s >= 1 and p >= 0");
  const Variable v = common_variable(b, "left_inversion_forward");
  if (length > 0 && (static_cast<long>(length) - 1) / s >= static_cast<long>(b.size())) {
    throw PreconditionError("left_inversion_forward: too few B terms for the requested length");
  }
  std::vector<Polynomial> out;
  out.reserve(length);
  for (long n = 0; n < static_cast<long>(length); ++n) {
    Polynomial sum(v);
    for (long k = 0; k <= n / s && k < static_cast<long>(b.size()); ++k) {
      sum += Rational(binomial(n + p, s * k + p)) * b[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<Polynomial> left_inversion(long s, long p, const std::vector<Polynomial>& a) {
  if (s < 1 || p < 0) throw PreconditionError("left_inversion: need s >= 1 and p >= 0");
  const Variable v = common_variable(a, "left_inversion");
  const long terms = (static_cast<long>(a.size()) - 1) / s + 1;
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(terms));
  for (long n = 0; n < terms; ++n) {
    Polynomial sum(v);
    for (long k = 0; k <= s * n; ++k) {
      sum += (alternating(s * n - k) * binomial(s * n + p, k + p)) * a[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace narayana

#pragma once

// Dyck paths, weighted Dyck paths, and the decorated family used in the
// combinatorial proof that C_n = sum_k (2k+1)/(2n+1) binom(2n+1,n-k) N_k(q) (1-q)^(n-k).

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "narayana/polynomial.hpp"

namespace narayana {

inline constexpr long kDyckEnumerationCap = 12;
inline constexpr long kFamilyDCap = 8;

/// A signed monomial coefficient * q^exponent.
struct Monomial {
  std::int64_t coefficient = 1;
  long exponent = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  Monomial operator-() const { return {-coefficient, exponent}; }
  Polynomial to_polynomial() const;
};

enum class Step : std::uint8_t { up, down };

/// A sequence of up/down steps whose every prefix has at least as many ups
/// as downs and whose totals agree.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws PreconditionError if `steps` is not a Dyck word.
  explicit DyckPath(std::vector<Step> steps);
  /// Parses a "UUDD"-style word.
  static DyckPath parse(std::string_view word);

  const std::vector<Step>& steps() const { return steps_; }
  long semilength() const { return static_cast<long>(steps_.size() / 2); }
  /// Indices of up-steps immediately followed by a down-step.
  std::vector<std::size_t> peak_up_steps() const;
  long peak_count() const;
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// All Dyck paths of semilength n in lexicographic order with U < D.
/// Throws PreconditionError when n exceeds `cap`.
std::vector<DyckPath> enumerate_dyck(long n, long cap = kDyckEnumerationCap);

enum class UpTag : std::uint8_t { one, q, minus_q };

/// A Dyck path with one weight tag per up-step, left to right.
class WeightedDyckPath {
 public:
  WeightedDyckPath() = default;
  /// Throws if the tag count differs from the number of up-steps.
  WeightedDyckPath(DyckPath path, std::vector<UpTag> up_tags);
  /// Parses the canonical form written by to_string(), e.g. "U[q]D".
  static WeightedDyckPath parse(std::string_view text);

  const DyckPath& path() const { return path_; }
  const std::vector<UpTag>& up_tags() const { return tags_; }
  Monomial weight() const;
  bool all_one() const;
  bool all_plus_minus_q() const;

  /// Steps with tags: "U[1]", "U[q]", "U[-q]" and "D".
  std::string to_string() const;
  /// Compact byte key, one character per step (u, q, m, d).
  std::string key() const;

  friend bool operator==(const WeightedDyckPath&, const WeightedDyckPath&) = default;

 private:
  DyckPath path_;
  std::vector<UpTag> tags_;
};

/// An element of the decorated family D_{n,k}: a base path of semilength k
/// whose peak up-steps carry q (other up-steps 1), and 2k+1 inserted paths
/// whose up-steps carry 1 or -q. Insertion i (1-based) sits at the i-th
/// lattice point of the base, the first being the starting point.
class DecoratedDyckElement {
 public:
  /// Throws PreconditionError when the pieces do not fit together.
  DecoratedDyckElement(DyckPath base, std::vector<DyckPath> insertions, std::vector<UpTag> signs);

  long n() const { return n_; }
  long k() const { return base_.semilength(); }
  const DyckPath& base() const { return base_; }
  const std::vector<DyckPath>& insertions() const { return insertions_; }
  /// Tags of the inserted up-steps, insertion 1 first, left to right.
  const std::vector<UpTag>& signs() const { return signs_; }

  Monomial weight() const;
  WeightedDyckPath flatten() const;
  std::string to_string() const;

 private:
  DyckPath base_;
  std::vector<DyckPath> insertions_;
  std::vector<UpTag> signs_;
  long n_ = 0;
};

using DecoratedVisitor = std::function<void(const DecoratedDyckElement&)>;

/// Visits every element of D_{n,k}. Throws when n exceeds `cap`.
void for_each_family_D(long n, long k, const DecoratedVisitor& visit, long cap = kFamilyDCap);
std::vector<DecoratedDyckElement> enumerate_family_D(long n, long k, long cap = kFamilyDCap);

/// Sum of element weights of D_{n,k}, by enumeration.
Polynomial family_D_weight(long n, long k, long cap = kFamilyDCap);
/// (2k+1)/(2n+1) binom(2n+1, n-k) N_k(q) (1-q)^(n-k).
Polynomial family_D_closed_form(long n, long k);

/// The sign-reversing involution on weighted paths with at least one +-q
/// tag: in the rightmost primitive component carrying a +-q tag, flip the
/// sign of its first up-step if that step is tagged +-q, otherwise recurse
/// into the component's interior. Throws PreconditionError on all-one input.
WeightedDyckPath phi(const WeightedDyckPath& d);

}  // namespace narayana

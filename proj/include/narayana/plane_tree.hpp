#pragma once

// Weighted plane trees on n+2 vertices: the families P_{n,k} and Q_{n,k},
// their fixed subsets and the sign-reversing involution psi.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "narayana/dyck.hpp"
#include "narayana/polynomial.hpp"

namespace narayana {

inline constexpr long kFamilyPCap = 9;
inline constexpr long kFamilyQCap = 8;

enum class TreeFamily : std::uint8_t { P, Q };

enum class VertexTag : std::uint8_t { one, q, q_squared, minus_one, minus_q, two_q, minus_q_squared };

const char* vertex_tag_text(VertexTag t);

/// A rooted ordered tree stored in preorder: out-degree and tag per vertex.
/// Leaves carry q (P) or q^2 (Q); non-root unary vertices carry one or a
/// marked tag (-1, -q for P; -1, 2q, -q^2 for Q); everything else carries one.
class WeightedPlaneTree {
 public:
  /// Throws PreconditionError if the arrays do not describe a tree of
  /// `family` with at least two vertices.
  WeightedPlaneTree(TreeFamily family, std::vector<std::uint8_t> degrees, std::vector<VertexTag> tags);

  TreeFamily family() const { return family_; }
  const std::vector<std::uint8_t>& degrees() const { return degrees_; }
  const std::vector<VertexTag>& tags() const { return tags_; }
  long vertex_count() const { return static_cast<long>(degrees_.size()); }
  /// n for a tree on n+2 vertices.
  long n() const { return vertex_count() - 2; }
  long marked_count() const;
  /// n minus the number of marked vertices.
  long k() const { return n() - marked_count(); }

  Monomial weight() const;
  /// Root of out-degree one, every other vertex of out-degree 0 or 2, except
  /// that Q also admits unary vertices tagged 2q.
  bool is_fixed() const;

  /// Nested form "(tag child child ...)", e.g. "(1 (q))".
  std::string to_string() const;
  /// Compact byte key, one byte per vertex.
  std::string key() const;

  friend bool operator==(const WeightedPlaneTree&, const WeightedPlaneTree&) = default;

 private:
  TreeFamily family_;
  std::vector<std::uint8_t> degrees_;
  std::vector<VertexTag> tags_;
};

using TreeVisitor = std::function<void(const WeightedPlaneTree&)>;

/// Preorder out-degree sequences of all plane trees on `vertices` vertices.
std::vector<std::vector<std::uint8_t>> enumerate_tree_shapes(long vertices);

/// Visits every element of P_{n,k} or Q_{n,k}. Throws above `cap`.
void for_each_family_tree(TreeFamily family, long n, long k, const TreeVisitor& visit, long cap);

std::vector<WeightedPlaneTree> enumerate_family_P(long n, long k, long cap = kFamilyPCap);
std::vector<WeightedPlaneTree> enumerate_family_Q(long n, long k, long cap = kFamilyQCap);

Polynomial family_P_weight(long n, long k, long cap = kFamilyPCap);
Polynomial family_Q_weight(long n, long k, long cap = kFamilyQCap);
/// binom(n,k) N_{k+1}(q) (-1-q)^(n-k).
Polynomial family_P_closed_form(long n, long k);
/// (-1)^(n-k) binom(n,k) N_{k+1}(q^2) (1-q)^(2(n-k)).
Polynomial family_Q_closed_form(long n, long k);

/// Built directly: a unary root over each complete binary tree (P), with
/// chains of 2q vertices distributed over the edges (Q).
std::vector<WeightedPlaneTree> fixed_set_P(long n, long cap = kFamilyPCap);
std::vector<WeightedPlaneTree> fixed_set_Q(long n, long cap = kFamilyQCap);

/// The sign-reversing involution on non-fixed trees.
///
/// If some non-root unary vertex is tagged 1 or -1, the first one in preorder
/// is flipped. Otherwise the remaining unary vertices are all -q (P), or -q^2
/// and 2q (Q); 2q chains are contracted onto the vertex below them and the
/// recursive rules run on the contracted tree:
///  - root of degree >= 2, first subtree complete binary: the first subtree's
///    rightmost leaf becomes a -q vertex holding the second subtree;
///  - root of degree >= 2 otherwise: recurse into the first subtree alone;
///  - unary root, child of degree >= 3: recurse with the child as root;
///  - unary root, child of degree 1 or 2: if the first -q vertex on the
///    rightmost path, with its subtree cut off and itself made a leaf, leaves
///    a complete binary tree, do that and hang the cut subtree as a second
///    root child; otherwise recurse into the child's first subtree if it is
///    not complete binary, else into its second.
/// Throws PreconditionError on fixed input.
WeightedPlaneTree psi(const WeightedPlaneTree& t);

}  // namespace narayana

#pragma once

// Mechanical certification of the sign-reversing involutions phi and psi.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "narayana/polynomial.hpp"
#include "narayana/rational.hpp"

namespace narayana {

enum class Family { D, P, Q };

const char* family_name(Family f);
/// Accepts "D", "P", "Q" (case-insensitive). Throws PreconditionError.
Family parse_family(std::string_view name);
/// Default enumeration cap of each family.
long family_cap(Family f);

struct InvolutionReport {
  Family family = Family::D;
  long n = 0;
  long element_count = 0;
  long fixed_count = 0;

  bool maps_to_itself = false;
  bool self_inverse = false;
  bool sign_reversing = false;
  bool fixed_set_matches = false;
  bool weights_balance = false;

  Polynomial total_weight{Variable::q};
  Polynomial fixed_weight{Variable::q};
  /// C_n, q^{n/2+1} C_{n/2} or q^{n+2} C_{n+1}.
  Polynomial expected_weight{Variable::q};

  std::optional<std::string> counterexample;
  /// (element, image) with element printed before image, each pair once.
  std::vector<std::pair<std::string, std::string>> pairs;

  bool certified() const {
    return maps_to_itself && self_inverse && sign_reversing && fixed_set_matches && weights_balance;
  }
};

/// Enumerates the whole family for this n (all k), applies the involution to
/// every non-fixed element and checks: the image multiset equals the non-fixed
/// multiset; applying twice is the identity; weights negate; the fixed
/// elements equal an independently built fixed set; the total weight equals
/// the fixed weight and the expected closed form.
InvolutionReport involution_verify(Family family, long n, bool emit_pairs = false, long cap = -1);

/// The restriction of phi to paths built on base (ud)^k whose inserted
/// up-steps all carry -q.
struct AllSignedReport {
  long n = 0;
  long element_count = 0;
  bool closed = false;
  bool self_inverse = false;
  bool sign_reversing = false;
  bool no_fixed_points = false;
  bool counts_match = false;
  /// Sum over the family of (-1)^(number of -q tags).
  BigInt signed_count;
  std::optional<std::string> counterexample;

  bool certified() const {
    return closed && self_inverse && sign_reversing && no_fixed_points && counts_match && signed_count == 0;
  }
};

/// n >= 1. Throws above the family D cap.
AllSignedReport all_signed_verify(long n, long cap = -1);

}  // namespace narayana

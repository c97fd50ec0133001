#include "narayana/involution.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>

#include "narayana/dyck.hpp"
#include "narayana/plane_tree.hpp"
#include "narayana/sequences.hpp"

namespace narayana {

namespace {

using Multiset = std::unordered_map<std::string, long>;

void add_weight(std::vector<std::int64_t>& acc, const Monomial& w) {
  const auto e = static_cast<std::size_t>(w.exponent);
  if (acc.size() <= e) acc.resize(e + 1, 0);
  acc[e] += w.coefficient;
}

Polynomial to_polynomial(const std::vector<std::int64_t>& acc) {
  std::vector<Rational> coeffs;
  for (auto c : acc) coeffs.emplace_back(static_cast<long>(c));
  return Polynomial(Variable::q, std::move(coeffs));
}

void note(std::optional<std::string>& slot, const std::string& message) {
  if (!slot) slot = message;
}

// Shared driver: Item is WeightedDyckPath or WeightedPlaneTree.
template <class Item, class IsFixed, class Apply>
void certify(const std::vector<Item>& items, const Multiset& expected_fixed, IsFixed is_fixed, Apply apply,
             bool emit_pairs, InvolutionReport& report) {
  Multiset moving;
  Multiset images;
  Multiset fixed;
  std::vector<std::int64_t> total;
  std::vector<std::int64_t> fixed_total;
  report.self_inverse = true;
  report.sign_reversing = true;
  for (const Item& x : items) {
    const Monomial w = x.weight();
    add_weight(total, w);
    if (is_fixed(x)) {
      ++fixed[x.key()];
      add_weight(fixed_total, w);
      continue;
    }
    ++moving[x.key()];
    std::optional<Item> image;
    try {
      image = apply(x);
    } catch (const PreconditionError& e) {
      report.maps_to_itself = false;
      note(report.counterexample, "no image for " + x.to_string() + ": " + e.what());
      return;
    }
    const Item& y = *image;
    ++images[y.key()];
    if (!(apply(y) == x)) {
      report.self_inverse = false;
      note(report.counterexample, "not self-inverse at " + x.to_string() + " -> " + y.to_string());
    }
    if (!(y.weight() == -w) || y == x) {
      report.sign_reversing = false;
      note(report.counterexample, "weight not negated at " + x.to_string() + " -> " + y.to_string());
    }
    if (emit_pairs && x.to_string() < y.to_string()) report.pairs.emplace_back(x.to_string(), y.to_string());
  }
  report.element_count = static_cast<long>(items.size());
  report.fixed_count = 0;
  for (const auto& [key, count] : fixed) report.fixed_count += count;
  report.maps_to_itself = images == moving;
  if (!report.maps_to_itself) note(report.counterexample, "image multiset differs from the non-fixed multiset");
  report.fixed_set_matches = fixed == expected_fixed;
  if (!report.fixed_set_matches) note(report.counterexample, "fixed elements differ from the fixed set");
  report.total_weight = to_polynomial(total);
  report.fixed_weight = to_polynomial(fixed_total);
  report.weights_balance =
      report.total_weight == report.fixed_weight && report.fixed_weight == report.expected_weight;
  if (!report.weights_balance) {
    note(report.counterexample, "total weight " + report.total_weight.to_string() + ", fixed weight " +
                                    report.fixed_weight.to_string() + ", expected " +
                                    report.expected_weight.to_string());
  }
}

long resolve_cap(Family f, long cap) { return cap < 0 ? family_cap(f) : cap; }

void require_n(Family f, long n, long cap) {
  if (n < 0 || n > cap) {
    throw PreconditionError(std::string("involution_verify: n = ") + std::to_string(n) + " outside 0.." +
                            std::to_string(cap) + " for family " + family_name(f));
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::D: return "D";
    case Family::P: return "P";
    case Family::Q: return "Q";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'D': return Family::D;
      case 'P': return Family::P;
      case 'Q': return Family::Q;
      default: break;
    }
  }
  throw PreconditionError("unknown family '" + std::string(name) + "' (expected D, P or Q)");
}

long family_cap(Family f) {
  switch (f) {
    case Family::D: return kFamilyDCap;
    case Family::P: return kFamilyPCap;
    case Family::Q: return kFamilyQCap;
  }
  return 0;
}

InvolutionReport involution_verify(Family family, long n, bool emit_pairs, long cap) {
  cap = resolve_cap(family, cap);
  require_n(family, n, cap);
  InvolutionReport report;
  report.family = family;
  report.n = n;

  if (family == Family::D) {
    std::vector<WeightedDyckPath> items;
    for (long k = 0; k <= n; ++k) {
      for_each_family_D(n, k, [&](const DecoratedDyckElement& e) { items.push_back(e.flatten()); }, cap);
    }
    Multiset expected_fixed;
    for (const DyckPath& p : enumerate_dyck(n, std::max(cap, n))) {
      ++expected_fixed[WeightedDyckPath(p, std::vector<UpTag>(static_cast<std::size_t>(n), UpTag::one)).key()];
    }
    report.expected_weight = Polynomial::constant(Variable::q, Rational(catalan(n)));
    certify(items, expected_fixed, [](const WeightedDyckPath& d) { return d.all_one(); },
            [](const WeightedDyckPath& d) { return phi(d); }, emit_pairs, report);
    return report;
  }

  const TreeFamily tf = family == Family::P ? TreeFamily::P : TreeFamily::Q;
  std::vector<WeightedPlaneTree> items;
  for (long k = 0; k <= n; ++k) {
    for_each_family_tree(tf, n, k, [&](const WeightedPlaneTree& t) { items.push_back(t); }, cap);
  }
  Multiset expected_fixed;
  for (const auto& t : tf == TreeFamily::P ? fixed_set_P(n, cap) : fixed_set_Q(n, cap)) ++expected_fixed[t.key()];
  if (tf == TreeFamily::P) {
    report.expected_weight = n % 2 == 0 ? Polynomial::monomial(Variable::q, Rational(catalan(n / 2)),
                                                               static_cast<std::size_t>(n / 2 + 1))
                                        : Polynomial(Variable::q);
  } else {
    report.expected_weight =
        Polynomial::monomial(Variable::q, Rational(catalan(n + 1)), static_cast<std::size_t>(n + 2));
  }
  certify(items, expected_fixed, [](const WeightedPlaneTree& t) { return t.is_fixed(); },
          [](const WeightedPlaneTree& t) { return psi(t); }, emit_pairs, report);
  return report;
}

namespace {

void for_each_tuple(const std::vector<std::vector<DyckPath>>& by_size, long total, long parts,
                    std::vector<DyckPath>& current, const std::function<void(const std::vector<DyckPath>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(current);
    return;
  }
  for (long m = 0; m <= total; ++m) {
    for (const DyckPath& p : by_size[static_cast<std::size_t>(m)]) {
      current.push_back(p);
      for_each_tuple(by_size, total - m, parts - 1, current, visit);
      current.pop_back();
    }
  }
}

}  // namespace

AllSignedReport all_signed_verify(long n, long cap) {
  cap = resolve_cap(Family::D, cap);
  if (n < 1 || n > cap) {
    throw PreconditionError("all_signed_verify: n = " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  }
  AllSignedReport report;
  report.n = n;
  std::vector<std::vector<DyckPath>> by_size;
  for (long m = 0; m <= n; ++m) by_size.push_back(enumerate_dyck(m, n));

  std::vector<WeightedDyckPath> items;
  report.counts_match = true;
  for (long k = 0; k <= n; ++k) {
    std::vector<Step> base_steps;
    for (long i = 0; i < k; ++i) {
      base_steps.push_back(Step::up);
      base_steps.push_back(Step::down);
    }
    const DyckPath base(base_steps);
    long count = 0;
    std::vector<DyckPath> current;
    for_each_tuple(by_size, n - k, 2 * k + 1, current, [&](const std::vector<DyckPath>& insertions) {
      DecoratedDyckElement e(base, insertions, std::vector<UpTag>(static_cast<std::size_t>(n - k), UpTag::minus_q));
      items.push_back(e.flatten());
      ++count;
    });
    const BigInt expected = BigInt(2 * k + 1) * binomial(2 * n + 1, n - k) / BigInt(2 * n + 1);
    if (BigInt(count) != expected) {
      report.counts_match = false;
      note(report.counterexample, "k = " + std::to_string(k) + ": " + std::to_string(count) + " elements, expected " +
                                      expected.get_str());
    }
  }

  Multiset present;
  Multiset images;
  report.self_inverse = true;
  report.sign_reversing = true;
  report.no_fixed_points = true;
  report.signed_count = 0;
  for (const auto& d : items) {
    ++present[d.key()];
    report.signed_count += static_cast<long>(d.weight().coefficient);
    const WeightedDyckPath image = phi(d);
    ++images[image.key()];
    if (image == d) {
      report.no_fixed_points = false;
      note(report.counterexample, "fixed point " + d.to_string());
    }
    if (!(phi(image) == d)) {
      report.self_inverse = false;
      note(report.counterexample, "not self-inverse at " + d.to_string());
    }
    if (!(image.weight() == -d.weight())) {
      report.sign_reversing = false;
      note(report.counterexample, "weight not negated at " + d.to_string());
    }
  }
  report.element_count = static_cast<long>(items.size());
  report.closed = images == present;
  if (!report.closed) note(report.counterexample, "image multiset leaves the family");
  return report;
}

}  // namespace narayana

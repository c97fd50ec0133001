#include "narayana/dyck.hpp"

#include <string>

#include "narayana/sequences.hpp"

namespace narayana {

Polynomial Monomial::to_polynomial() const {
  return Polynomial::monomial(Variable::q, Rational(static_cast<long>(coefficient)),
                              static_cast<std::size_t>(exponent));
}

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  long height = 0;
  for (Step s : steps_) {
    height += s == Step::up ? 1 : -1;
    if (height < 0) throw PreconditionError("DyckPath: prefix drops below the axis");
  }
  if (height != 0) throw PreconditionError("DyckPath: unequal numbers of up and down steps");
}

DyckPath DyckPath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c == 'U') {
      steps.push_back(Step::up);
    } else if (c == 'D') {
      steps.push_back(Step::down);
    } else {
      throw PreconditionError("DyckPath: unexpected character '" + std::string(1, c) + "'");
    }
  }
  return DyckPath(std::move(steps));
}

std::vector<std::size_t> DyckPath::peak_up_steps() const {
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (steps_[i] == Step::up && steps_[i + 1] == Step::down) peaks.push_back(i);
  }
  return peaks;
}

long DyckPath::peak_count() const { return static_cast<long>(peak_up_steps().size()); }

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::up ? 'U' : 'D');
  return out;
}

namespace {

void generate_dyck(long n, long ups, long downs, std::vector<Step>& prefix, std::vector<DyckPath>& out) {
  if (ups == n && downs == n) {
    out.emplace_back(prefix);
    return;
  }
  if (ups < n) {
    prefix.push_back(Step::up);
    generate_dyck(n, ups + 1, downs, prefix, out);
    prefix.pop_back();
  }
  if (downs < ups) {
    prefix.push_back(Step::down);
    generate_dyck(n, ups, downs + 1, prefix, out);
    prefix.pop_back();
  }
}

void require_cap(long n, long cap, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": negative size");
  if (n > cap) {
    throw PreconditionError(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(cap));
  }
}

const char* tag_text(UpTag t) {
  switch (t) {
    case UpTag::one: return "1";
    case UpTag::q: return "q";
    case UpTag::minus_q: return "-q";
  }
  return "?";
}

Monomial tag_weight(UpTag t) {
  switch (t) {
    case UpTag::one: return {1, 0};
    case UpTag::q: return {1, 1};
    case UpTag::minus_q: return {-1, 1};
  }
  return {};
}

}  // namespace

std::vector<DyckPath> enumerate_dyck(long n, long cap) {
  require_cap(n, cap, "enumerate_dyck");
  std::vector<DyckPath> out;
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(2 * n));
  generate_dyck(n, 0, 0, prefix, out);
  return out;
}

WeightedDyckPath::WeightedDyckPath(DyckPath path, std::vector<UpTag> up_tags)
    : path_(std::move(path)), tags_(std::move(up_tags)) {
  if (static_cast<long>(tags_.size()) != path_.semilength()) {
    throw PreconditionError("WeightedDyckPath: one tag per up-step required");
  }
}

WeightedDyckPath WeightedDyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  std::vector<UpTag> tags;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == 'D') {
      steps.push_back(Step::down);
      ++i;
      continue;
    }
    if (c != 'U' || i + 1 >= text.size() || text[i + 1] != '[') {
      throw PreconditionError("WeightedDyckPath: malformed text '" + std::string(text) + "'");
    }
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) throw PreconditionError("WeightedDyckPath: missing ']'");
    const std::string_view tag = text.substr(i + 2, close - i - 2);
    if (tag == "1") {
      tags.push_back(UpTag::one);
    } else if (tag == "q") {
      tags.push_back(UpTag::q);
    } else if (tag == "-q") {
      tags.push_back(UpTag::minus_q);
    } else {
      throw PreconditionError("WeightedDyckPath: unknown tag '" + std::string(tag) + "'");
    }
    steps.push_back(Step::up);
    i = close + 1;
  }
  return WeightedDyckPath(DyckPath(std::move(steps)), std::move(tags));
}

Monomial WeightedDyckPath::weight() const {
  Monomial w;
  for (UpTag t : tags_) {
    const Monomial m = tag_weight(t);
    w.coefficient *= m.coefficient;
    w.exponent += m.exponent;
  }
  return w;
}

bool WeightedDyckPath::all_one() const {
  for (UpTag t : tags_) {
    if (t != UpTag::one) return false;
  }
  return true;
}

bool WeightedDyckPath::all_plus_minus_q() const {
  for (UpTag t : tags_) {
    if (t == UpTag::one) return false;
  }
  return true;
}

std::string WeightedDyckPath::to_string() const {
  std::string out;
  std::size_t tag = 0;
  for (Step s : path_.steps()) {
    if (s == Step::down) {
      out.push_back('D');
      continue;
    }
    out += "U[";
    out += tag_text(tags_[tag++]);
    out.push_back(']');
  }
  return out;
}

std::string WeightedDyckPath::key() const {
  std::string out;
  out.reserve(path_.steps().size());
  std::size_t tag = 0;
  for (Step s : path_.steps()) {
    if (s == Step::down) {
      out.push_back('d');
      continue;
    }
    switch (tags_[tag++]) {
      case UpTag::one: out.push_back('u'); break;
      case UpTag::q: out.push_back('q'); break;
      case UpTag::minus_q: out.push_back('m'); break;
    }
  }
  return out;
}

DecoratedDyckElement::DecoratedDyckElement(DyckPath base, std::vector<DyckPath> insertions,
                                           std::vector<UpTag> signs)
    : base_(std::move(base)), insertions_(std::move(insertions)), signs_(std::move(signs)) {
  const long k = base_.semilength();
  if (static_cast<long>(insertions_.size()) != 2 * k + 1) {
    throw PreconditionError("DecoratedDyckElement: need 2k+1 insertions");
  }
  long inserted = 0;
  for (const auto& p : insertions_) inserted += p.semilength();
  if (static_cast<long>(signs_.size()) != inserted) {
    throw PreconditionError("DecoratedDyckElement: one sign per inserted up-step required");
  }
  for (UpTag t : signs_) {
    if (t == UpTag::q) throw PreconditionError("DecoratedDyckElement: inserted steps carry 1 or -q");
  }
  n_ = k + inserted;
}

Monomial DecoratedDyckElement::weight() const {
  Monomial w{1, base_.peak_count()};
  for (UpTag t : signs_) {
    if (t == UpTag::minus_q) {
      w.coefficient = -w.coefficient;
      ++w.exponent;
    }
  }
  return w;
}

WeightedDyckPath DecoratedDyckElement::flatten() const {
  std::vector<Step> steps;
  std::vector<UpTag> tags;
  steps.reserve(static_cast<std::size_t>(2 * n_));
  tags.reserve(static_cast<std::size_t>(n_));
  std::size_t sign = 0;
  auto splice = [&](const DyckPath& p) {
    for (Step s : p.steps()) {
      steps.push_back(s);
      if (s == Step::up) tags.push_back(signs_[sign++]);
    }
  };
  const auto& base_steps = base_.steps();
  splice(insertions_[0]);
  for (std::size_t i = 0; i < base_steps.size(); ++i) {
    steps.push_back(base_steps[i]);
    if (base_steps[i] == Step::up) {
      const bool peak = i + 1 < base_steps.size() && base_steps[i + 1] == Step::down;
      tags.push_back(peak ? UpTag::q : UpTag::one);
    }
    splice(insertions_[i + 1]);
  }
  return WeightedDyckPath(DyckPath(std::move(steps)), std::move(tags));
}

std::string DecoratedDyckElement::to_string() const {
  std::string out = "k=" + std::to_string(k()) + " base=" + base_.to_string() + " ins=";
  std::size_t sign = 0;
  for (const auto& p : insertions_) {
    out.push_back('(');
    for (Step s : p.steps()) {
      if (s == Step::down) {
        out.push_back('D');
      } else {
        out += "U[";
        out += tag_text(signs_[sign++]);
        out.push_back(']');
      }
    }
    out.push_back(')');
  }
  return out;
}

namespace {

void for_each_composition(long total, long parts, std::vector<long>& current,
                          const std::function<void(const std::vector<long>&)>& visit) {
  if (parts == 1) {
    current.push_back(total);
    visit(current);
    current.pop_back();
    return;
  }
  for (long first = 0; first <= total; ++first) {
    current.push_back(first);
    for_each_composition(total - first, parts - 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_family_D(long n, long k, const DecoratedVisitor& visit, long cap) {
  require_cap(n, cap, "enumerate_family_D");
  if (k < 0 || k > n) throw PreconditionError("enumerate_family_D: need 0 <= k <= n");
  const long rest = n - k;
  std::vector<std::vector<DyckPath>> by_size;
  for (long m = 0; m <= std::max(n, k); ++m) by_size.push_back(enumerate_dyck(m, n));

  std::vector<long> parts;
  for (const DyckPath& base : by_size[static_cast<std::size_t>(k)]) {
    for_each_composition(rest, 2 * k + 1, parts, [&](const std::vector<long>& sizes) {
      std::vector<std::size_t> choice(sizes.size(), 0);
      while (true) {
        std::vector<DyckPath> insertions;
        insertions.reserve(sizes.size());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
          insertions.push_back(by_size[static_cast<std::size_t>(sizes[i])][choice[i]]);
        }
        for (unsigned long mask = 0; mask < (1UL << rest); ++mask) {
          std::vector<UpTag> signs(static_cast<std::size_t>(rest));
          for (long b = 0; b < rest; ++b) {
            signs[static_cast<std::size_t>(b)] = (mask >> (rest - 1 - b)) & 1UL ? UpTag::minus_q : UpTag::one;
          }
          visit(DecoratedDyckElement(base, insertions, std::move(signs)));
        }
        std::size_t pos = sizes.size();
        while (pos > 0) {
          --pos;
          if (++choice[pos] < by_size[static_cast<std::size_t>(sizes[pos])].size()) break;
          choice[pos] = 0;
          if (pos == 0) return;
        }
        if (sizes.empty()) return;
      }
    });
  }
}

std::vector<DecoratedDyckElement> enumerate_family_D(long n, long k, long cap) {
  std::vector<DecoratedDyckElement> out;
  for_each_family_D(n, k, [&](const DecoratedDyckElement& e) { out.push_back(e); }, cap);
  return out;
}

Polynomial family_D_weight(long n, long k, long cap) {
  std::vector<std::int64_t> by_exponent(static_cast<std::size_t>(n) + 1, 0);
  for_each_family_D(
      n, k,
      [&](const DecoratedDyckElement& e) {
        const Monomial w = e.weight();
        by_exponent[static_cast<std::size_t>(w.exponent)] += w.coefficient;
      },
      cap);
  std::vector<Rational> coeffs;
  for (auto c : by_exponent) coeffs.emplace_back(static_cast<long>(c));
  return Polynomial(Variable::q, std::move(coeffs));
}

Polynomial family_D_closed_form(long n, long k) {
  if (k < 0 || k > n) throw PreconditionError("family_D_closed_form: need 0 <= k <= n");
  Rational c(BigInt(2 * k + 1) * binomial(2 * n + 1, n - k), BigInt(2 * n + 1));
  c.canonicalize();
  const Polynomial one_minus_q(Variable::q, {Rational(1), Rational(-1)});
  return c * (narayana_poly(k) * one_minus_q.pow(static_cast<unsigned long>(n - k)));
}

WeightedDyckPath phi(const WeightedDyckPath& d) {
  const auto& steps = d.path().steps();
  std::vector<UpTag> tags = d.up_tags();
  // tag_index[i] is the tag slot of step i when it is an up-step.
  std::vector<std::size_t> tag_index(steps.size(), 0);
  for (std::size_t i = 0, t = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::up) tag_index[i] = t++;
  }
  auto tag_at = [&](std::size_t i) -> UpTag& { return tags[tag_index[i]]; };

  std::size_t lo = 0;
  std::size_t hi = steps.size();
  while (true) {
    // Primitive components of steps[lo, hi), rightmost first.
    std::vector<std::pair<std::size_t, std::size_t>> components;
    long height = 0;
    std::size_t start = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      height += steps[i] == Step::up ? 1 : -1;
      if (height == 0) {
        components.emplace_back(start, i + 1);
        start = i + 1;
      }
    }
    bool found = false;
    for (auto it = components.rbegin(); it != components.rend(); ++it) {
      bool weighted = false;
      for (std::size_t i = it->first; i < it->second; ++i) {
        if (steps[i] == Step::up && tag_at(i) != UpTag::one) {
          weighted = true;
          break;
        }
      }
      if (!weighted) continue;
      found = true;
      UpTag& first = tag_at(it->first);
      if (first != UpTag::one) {
        first = first == UpTag::q ? UpTag::minus_q : UpTag::q;
        return WeightedDyckPath(d.path(), std::move(tags));
      }
      lo = it->first + 1;
      hi = it->second - 1;
      break;
    }
    if (!found) throw PreconditionError("phi: path has no q or -q weighted up-step (fixed element)");
  }
}

}  // namespace narayana

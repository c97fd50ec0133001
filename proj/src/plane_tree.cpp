#include "narayana/plane_tree.hpp"

#include <optional>
#include <string>

#include "narayana/sequences.hpp"

namespace narayana {

namespace {

VertexTag leaf_tag(TreeFamily f) { return f == TreeFamily::P ? VertexTag::q : VertexTag::q_squared; }
VertexTag minus_tag(TreeFamily f) { return f == TreeFamily::P ? VertexTag::minus_q : VertexTag::minus_q_squared; }

std::vector<VertexTag> marked_tags(TreeFamily f) {
  if (f == TreeFamily::P) return {VertexTag::minus_one, VertexTag::minus_q};
  return {VertexTag::minus_one, VertexTag::two_q, VertexTag::minus_q_squared};
}

bool is_marked_tag(TreeFamily f, VertexTag t) {
  for (VertexTag m : marked_tags(f)) {
    if (m == t) return true;
  }
  return false;
}

Monomial tag_weight(VertexTag t) {
  switch (t) {
    case VertexTag::one: return {1, 0};
    case VertexTag::q: return {1, 1};
    case VertexTag::q_squared: return {1, 2};
    case VertexTag::minus_one: return {-1, 0};
    case VertexTag::minus_q: return {-1, 1};
    case VertexTag::two_q: return {2, 1};
    case VertexTag::minus_q_squared: return {-1, 2};
  }
  return {};
}

void require_range(long n, long k, long cap, const char* what) {
  if (n < 0 || n > cap) {
    throw PreconditionError(std::string(what) + ": n = " + std::to_string(n) + " outside 0.." +
                            std::to_string(cap));
  }
  if (k < 0 || k > n) throw PreconditionError(std::string(what) + ": need 0 <= k <= n");
}

void write_tree(const WeightedPlaneTree& t, std::size_t& i, std::string& out) {
  const std::size_t self = i++;
  out.push_back('(');
  out += vertex_tag_text(t.tags()[self]);
  for (std::uint8_t c = 0; c < t.degrees()[self]; ++c) {
    out.push_back(' ');
    write_tree(t, i, out);
  }
  out.push_back(')');
}

void generate_shapes(long remaining, long open, std::vector<std::uint8_t>& prefix,
                     std::vector<std::vector<std::uint8_t>>& out) {
  if (remaining == 0) {
    if (open == 0) out.push_back(prefix);
    return;
  }
  if (open == 0) return;
  // The vertices still to come must be able to fill the open slots.
  for (long d = 0; open - 1 + d <= remaining - 1; ++d) {
    prefix.push_back(static_cast<std::uint8_t>(d));
    generate_shapes(remaining - 1, open - 1 + d, prefix, out);
    prefix.pop_back();
  }
}

void for_each_combination(const std::vector<std::size_t>& pool, std::size_t choose, std::size_t from,
                          std::vector<std::size_t>& picked,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (picked.size() == choose) {
    visit(picked);
    return;
  }
  for (std::size_t i = from; i + (choose - picked.size()) <= pool.size(); ++i) {
    picked.push_back(pool[i]);
    for_each_combination(pool, choose, i + 1, picked, visit);
    picked.pop_back();
  }
}

Polynomial monomial_sum(const std::vector<std::int64_t>& by_exponent) {
  std::vector<Rational> coeffs;
  for (auto c : by_exponent) coeffs.emplace_back(static_cast<long>(c));
  return Polynomial(Variable::q, std::move(coeffs));
}

// Contracted tree used by psi: `above` counts the 2q vertices on the edge
// entering this vertex.
struct Node {
  VertexTag tag = VertexTag::one;
  long above = 0;
  std::vector<Node> kids;
};

Node contract(const WeightedPlaneTree& t, std::size_t& i) {
  Node node;
  while (t.tags()[i] == VertexTag::two_q) {
    ++node.above;
    ++i;
  }
  node.tag = t.tags()[i];
  const std::uint8_t d = t.degrees()[i++];
  for (std::uint8_t c = 0; c < d; ++c) node.kids.push_back(contract(t, i));
  return node;
}

void expand(const Node& node, std::vector<std::uint8_t>& degrees, std::vector<VertexTag>& tags) {
  for (long a = 0; a < node.above; ++a) {
    degrees.push_back(1);
    tags.push_back(VertexTag::two_q);
  }
  degrees.push_back(static_cast<std::uint8_t>(node.kids.size()));
  tags.push_back(node.tag);
  for (const Node& kid : node.kids) expand(kid, degrees, tags);
}

bool complete(const Node& node) {
  if (node.kids.empty()) return true;
  return node.kids.size() == 2 && complete(node.kids[0]) && complete(node.kids[1]);
}

Node rooted(std::vector<Node> kids) { return Node{VertexTag::one, 0, std::move(kids)}; }

class PsiRules {
 public:
  explicit PsiRules(TreeFamily f) : leaf_(leaf_tag(f)), minus_(minus_tag(f)) {}

  Node apply(const Node& root) const {
    const auto& k = root.kids;
    if (k.size() >= 2) {
      if (complete(k[0])) {
        std::vector<Node> kids{k[0]};
        Node* v = &kids[0];
        while (!v->kids.empty()) v = &v->kids.back();
        v->tag = minus_;
        v->kids.push_back(k[1]);
        kids.insert(kids.end(), k.begin() + 2, k.end());
        return rooted(std::move(kids));
      }
      std::vector<Node> kids = apply(rooted({k[0]})).kids;
      kids.insert(kids.end(), k.begin() + 1, k.end());
      return rooted(std::move(kids));
    }
    if (k.size() != 1) throw PreconditionError("psi: no rule applies");
    const Node& up = k[0];
    if (up.kids.size() >= 3) {
      return rooted({Node{up.tag, up.above, apply(rooted(up.kids)).kids}});
    }
    if (auto cut = cut_first_minus(up); cut && complete(cut->first)) {
      return rooted({std::move(cut->first), std::move(cut->second)});
    }
    if (up.kids.size() != 2) throw PreconditionError("psi: no rule applies");
    const Node& t1 = up.kids[0];
    const Node& t2 = up.kids[1];
    if (!complete(t1)) {
      std::vector<Node> kids = apply(rooted({t1})).kids;
      kids.push_back(t2);
      return rooted({Node{up.tag, up.above, std::move(kids)}});
    }
    if (complete(t2)) throw PreconditionError("psi: no rule applies");
    std::vector<Node> kids{t1};
    for (Node& n : apply(rooted({t2})).kids) kids.push_back(std::move(n));
    return rooted({Node{up.tag, up.above, std::move(kids)}});
  }

 private:
  // Walks the rightmost path; the first -q vertex becomes a leaf and its
  // subtree is returned separately.
  std::optional<std::pair<Node, Node>> cut_first_minus(const Node& node) const {
    if (node.tag == minus_) return std::pair{Node{leaf_, node.above, {}}, node.kids[0]};
    if (node.kids.empty()) return std::nullopt;
    auto below = cut_first_minus(node.kids.back());
    if (!below) return std::nullopt;
    Node copy = node;
    copy.kids.back() = std::move(below->first);
    return std::pair{std::move(copy), std::move(below->second)};
  }

  VertexTag leaf_;
  VertexTag minus_;
};

std::vector<std::vector<std::uint8_t>> complete_binary_shapes(long internal) {
  if (internal == 0) return {{0}};
  std::vector<std::vector<std::uint8_t>> out;
  for (long left = 0; left < internal; ++left) {
    for (const auto& l : complete_binary_shapes(left)) {
      for (const auto& r : complete_binary_shapes(internal - 1 - left)) {
        std::vector<std::uint8_t> shape{2};
        shape.insert(shape.end(), l.begin(), l.end());
        shape.insert(shape.end(), r.begin(), r.end());
        out.push_back(std::move(shape));
      }
    }
  }
  return out;
}

void for_each_weak_composition(long total, long parts, std::vector<long>& current,
                               const std::function<void(const std::vector<long>&)>& visit) {
  if (parts == 1) {
    current.push_back(total);
    visit(current);
    current.pop_back();
    return;
  }
  for (long first = 0; first <= total; ++first) {
    current.push_back(first);
    for_each_weak_composition(total - first, parts - 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

const char* vertex_tag_text(VertexTag t) {
  switch (t) {
    case VertexTag::one: return "1";
    case VertexTag::q: return "q";
    case VertexTag::q_squared: return "q^2";
    case VertexTag::minus_one: return "-1";
    case VertexTag::minus_q: return "-q";
    case VertexTag::two_q: return "2q";
    case VertexTag::minus_q_squared: return "-q^2";
  }
  return "?";
}

WeightedPlaneTree::WeightedPlaneTree(TreeFamily family, std::vector<std::uint8_t> degrees,
                                     std::vector<VertexTag> tags)
    : family_(family), degrees_(std::move(degrees)), tags_(std::move(tags)) {
  if (degrees_.size() < 2 || degrees_.size() != tags_.size()) {
    throw PreconditionError("WeightedPlaneTree: need at least two vertices and one tag per vertex");
  }
  long open = 1;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (open == 0) throw PreconditionError("WeightedPlaneTree: degree sequence closes early");
    open += static_cast<long>(degrees_[i]) - 1;
  }
  if (open != 0) throw PreconditionError("WeightedPlaneTree: degree sequence does not close");
  if (tags_[0] != VertexTag::one) throw PreconditionError("WeightedPlaneTree: root must carry 1");
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    const VertexTag t = tags_[i];
    bool ok = false;
    if (degrees_[i] == 0) {
      ok = t == leaf_tag(family_);
    } else if (degrees_[i] == 1) {
      ok = t == VertexTag::one || is_marked_tag(family_, t);
    } else {
      ok = t == VertexTag::one;
    }
    if (!ok) {
      throw PreconditionError("WeightedPlaneTree: tag " + std::string(vertex_tag_text(t)) +
                              " not allowed at vertex " + std::to_string(i));
    }
  }
}

long WeightedPlaneTree::marked_count() const {
  long m = 0;
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    if (degrees_[i] == 1 && tags_[i] != VertexTag::one) ++m;
  }
  return m;
}

Monomial WeightedPlaneTree::weight() const {
  Monomial w;
  for (VertexTag t : tags_) {
    const Monomial m = tag_weight(t);
    w.coefficient *= m.coefficient;
    w.exponent += m.exponent;
  }
  return w;
}

bool WeightedPlaneTree::is_fixed() const {
  if (degrees_[0] != 1) return false;
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    if (degrees_[i] == 0 || degrees_[i] == 2) continue;
    if (degrees_[i] == 1 && tags_[i] == VertexTag::two_q) continue;
    return false;
  }
  return true;
}

std::string WeightedPlaneTree::to_string() const {
  std::string out;
  std::size_t i = 0;
  write_tree(*this, i, out);
  return out;
}

std::string WeightedPlaneTree::key() const {
  std::string out;
  out.reserve(degrees_.size() + 1);
  out.push_back(family_ == TreeFamily::P ? 'P' : 'Q');
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    out.push_back(static_cast<char>(degrees_[i] * 8 + static_cast<int>(tags_[i])));
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> enumerate_tree_shapes(long vertices) {
  if (vertices < 1) throw PreconditionError("enumerate_tree_shapes: need at least one vertex");
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> prefix;
  generate_shapes(vertices, 1, prefix, out);
  return out;
}

void for_each_family_tree(TreeFamily family, long n, long k, const TreeVisitor& visit, long cap) {
  require_range(n, k, cap, family == TreeFamily::P ? "enumerate_family_P" : "enumerate_family_Q");
  const auto marks = marked_tags(family);
  const std::size_t marked = static_cast<std::size_t>(n - k);
  for (const auto& shape : enumerate_tree_shapes(n + 2)) {
    std::vector<std::size_t> unary;
    std::vector<VertexTag> base(shape.size(), VertexTag::one);
    for (std::size_t i = 1; i < shape.size(); ++i) {
      if (shape[i] == 0) base[i] = leaf_tag(family);
      if (shape[i] == 1) unary.push_back(i);
    }
    std::vector<std::size_t> picked;
    for_each_combination(unary, marked, 0, picked, [&](const std::vector<std::size_t>& chosen) {
      std::vector<std::size_t> digit(chosen.size(), 0);
      while (true) {
        std::vector<VertexTag> tags = base;
        for (std::size_t j = 0; j < chosen.size(); ++j) tags[chosen[j]] = marks[digit[j]];
        visit(WeightedPlaneTree(family, shape, std::move(tags)));
        std::size_t pos = chosen.size();
        while (pos > 0) {
          --pos;
          if (++digit[pos] < marks.size()) break;
          digit[pos] = 0;
          if (pos == 0) return;
        }
        if (chosen.empty()) return;
      }
    });
  }
}

std::vector<WeightedPlaneTree> enumerate_family_P(long n, long k, long cap) {
  std::vector<WeightedPlaneTree> out;
  for_each_family_tree(TreeFamily::P, n, k, [&](const WeightedPlaneTree& t) { out.push_back(t); }, cap);
  return out;
}

std::vector<WeightedPlaneTree> enumerate_family_Q(long n, long k, long cap) {
  std::vector<WeightedPlaneTree> out;
  for_each_family_tree(TreeFamily::Q, n, k, [&](const WeightedPlaneTree& t) { out.push_back(t); }, cap);
  return out;
}

namespace {

Polynomial family_weight(TreeFamily family, long n, long k, long cap) {
  std::vector<std::int64_t> by_exponent(static_cast<std::size_t>(2 * n + 5), 0);
  for_each_family_tree(
      family, n, k,
      [&](const WeightedPlaneTree& t) {
        const Monomial w = t.weight();
        by_exponent[static_cast<std::size_t>(w.exponent)] += w.coefficient;
      },
      cap);
  return monomial_sum(by_exponent);
}

}  // namespace

Polynomial family_P_weight(long n, long k, long cap) { return family_weight(TreeFamily::P, n, k, cap); }
Polynomial family_Q_weight(long n, long k, long cap) { return family_weight(TreeFamily::Q, n, k, cap); }

Polynomial family_P_closed_form(long n, long k) {
  if (k < 0 || k > n) throw PreconditionError("family_P_closed_form: need 0 <= k <= n");
  const Polynomial minus_one_minus_q(Variable::q, {Rational(-1), Rational(-1)});
  return Rational(binomial(n, k)) *
         (narayana_poly(k + 1) * minus_one_minus_q.pow(static_cast<unsigned long>(n - k)));
}

Polynomial family_Q_closed_form(long n, long k) {
  if (k < 0 || k > n) throw PreconditionError("family_Q_closed_form: need 0 <= k <= n");
  const Polynomial q_squared = Polynomial::monomial(Variable::q, 1, 2);
  const Polynomial one_minus_q(Variable::q, {Rational(1), Rational(-1)});
  Rational c(binomial(n, k));
  if ((n - k) % 2 != 0) c = -c;
  return c * (narayana_poly(k + 1).substitute(q_squared) *
              one_minus_q.pow(static_cast<unsigned long>(2 * (n - k))));
}

std::vector<WeightedPlaneTree> fixed_set_P(long n, long cap) {
  require_range(n, 0, cap, "fixed_set_P");
  std::vector<WeightedPlaneTree> out;
  if (n % 2 != 0) return out;
  for (const auto& body : complete_binary_shapes(n / 2)) {
    std::vector<std::uint8_t> degrees{1};
    std::vector<VertexTag> tags{VertexTag::one};
    for (std::uint8_t d : body) {
      degrees.push_back(d);
      tags.push_back(d == 0 ? VertexTag::q : VertexTag::one);
    }
    out.emplace_back(TreeFamily::P, std::move(degrees), std::move(tags));
  }
  return out;
}

std::vector<WeightedPlaneTree> fixed_set_Q(long n, long cap) {
  require_range(n, 0, cap, "fixed_set_Q");
  std::vector<WeightedPlaneTree> out;
  for (long j = 0; 2 * j <= n; ++j) {
    for (const auto& body : complete_binary_shapes(j)) {
      std::vector<long> parts;
      for_each_weak_composition(n - 2 * j, 2 * j + 1, parts, [&](const std::vector<long>& chains) {
        std::vector<std::uint8_t> degrees{1};
        std::vector<VertexTag> tags{VertexTag::one};
        for (std::size_t v = 0; v < body.size(); ++v) {
          for (long c = 0; c < chains[v]; ++c) {
            degrees.push_back(1);
            tags.push_back(VertexTag::two_q);
          }
          degrees.push_back(body[v]);
          tags.push_back(body[v] == 0 ? VertexTag::q_squared : VertexTag::one);
        }
        out.emplace_back(TreeFamily::Q, std::move(degrees), std::move(tags));
      });
    }
  }
  return out;
}

WeightedPlaneTree psi(const WeightedPlaneTree& t) {
  if (t.is_fixed()) throw PreconditionError("psi: tree is in the fixed set");
  const auto& degrees = t.degrees();
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i] != 1) continue;
    const VertexTag tag = t.tags()[i];
    if (tag == VertexTag::one || tag == VertexTag::minus_one) {
      std::vector<VertexTag> tags = t.tags();
      tags[i] = tag == VertexTag::one ? VertexTag::minus_one : VertexTag::one;
      return WeightedPlaneTree(t.family(), degrees, std::move(tags));
    }
  }
  std::size_t i = 0;
  const Node image = PsiRules(t.family()).apply(contract(t, i));
  std::vector<std::uint8_t> out_degrees;
  std::vector<VertexTag> out_tags;
  expand(image, out_degrees, out_tags);
  return WeightedPlaneTree(t.family(), std::move(out_degrees), std::move(out_tags));
}

}  // namespace narayana

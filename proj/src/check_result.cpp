#include "narayana/check_result.hpp"

#include <sstream>

namespace narayana {

bool values_equal(const Value& a, const Value& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> bool {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
          return x == y;
        } else {
          return false;
        }
      },
      a, b);
}

CheckResult make_check(std::string identity, long n, Value lhs, Value rhs) {
  const bool equal = values_equal(lhs, rhs);
  return CheckResult{std::move(identity), n, std::move(lhs), std::move(rhs), equal};
}

std::string value_to_text(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  if (const auto* p = std::get_if<Polynomial>(&v)) return p->to_string();
  const auto& s = std::get<PolySeries>(v);
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (i > 0) out << ", ";
    out << s.coefficient(i).to_string();
  }
  out << "] + O(z^" << s.order() + 1 << ")";
  return out.str();
}

}  // namespace narayana

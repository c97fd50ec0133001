#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "narayana/dyck.hpp"
#include "narayana/generating.hpp"
#include "narayana/identities.hpp"
#include "narayana/involution.hpp"
#include "narayana/plane_tree.hpp"
#include "narayana/sequences.hpp"

namespace py = pybind11;
using namespace narayana;

namespace {

py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.get_num()), to_py(r.get_den()));
}

py::list to_py(const Polynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

py::object to_py(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_py(*r);
  if (const auto* p = std::get_if<Polynomial>(&v)) return to_py(*p);
  py::list out;
  for (const auto& c : std::get<PolySeries>(v).coefficients()) out.append(to_py(c));
  return out;
}

py::dict to_py(const CheckResult& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["n"] = r.n;
  d["lhs"] = to_py(r.lhs);
  d["rhs"] = to_py(r.rhs);
  d["equal"] = r.equal;
  return d;
}

IdentityId identity_or_throw(const std::string& name) {
  if (auto id = parse_identity(name)) return *id;
  throw py::value_error("unknown identity '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Narayana, Catalan and Legendre computations";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("catalan", [](long n) { return to_py(catalan(n)); }, py::arg("n"));
  m.def("schroeder", [](long n) { return to_py(schroeder(n)); }, py::arg("n"));
  m.def("narayana_number", [](long n, long k) { return to_py(narayana_number(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("narayana_poly", [](long n) { return to_py(narayana_poly(n)); }, py::arg("n"),
        "Coefficients of N_n(q), lowest degree first, as Fractions.");
  m.def("legendre_poly",
        [](long n, bool shifted) {
          return to_py(legendre_poly(n, shifted ? LegendreForm::shifted : LegendreForm::standard));
        },
        py::arg("n"), py::arg("shifted") = false);
  m.def("pell", [](long n) { return to_py(recurrence_seq(Recurrence::pell, n)); }, py::arg("n"));

  m.def("identity_names", [] {
    std::vector<std::string> out;
    for (IdentityId id : all_identities()) out.emplace_back(identity_name(id));
    return out;
  });
  m.def("identity_min_n", [](const std::string& name) { return identity_min_n(identity_or_throw(name)); },
        py::arg("name"));
  m.def("check_identity", [](const std::string& name, long n) { return to_py(check_identity(identity_or_throw(name), n)); },
        py::arg("name"), py::arg("n"));
  m.def("integral_representation_check", [](long n) { return to_py(integral_representation_check(n)); },
        py::arg("n"));
  m.def("lagrange_coefficient_check", [](long n, long k) { return to_py(lagrange_coefficient_check(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("catalan_parity_scan", [](long limit) {
    const ParityScan s = catalan_parity_scan(limit);
    return py::make_tuple(s.odd_indices, s.congruences_hold);
  }, py::arg("limit"));

  m.def("enumerate_dyck", [](long n) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_dyck(n)) out.push_back(p.to_string());
    return out;
  }, py::arg("n"));
  m.def("phi", [](const std::string& path) { return phi(WeightedDyckPath::parse(path)).to_string(); },
        py::arg("path"), "Apply phi to a path written like 'U[1]U[-q]DD'.");
  m.def("family_weight",
        [](const std::string& family, long n, long k) {
          switch (parse_family(family)) {
            case Family::D: return to_py(family_D_weight(n, k));
            case Family::P: return to_py(family_P_weight(n, k));
            case Family::Q: return to_py(family_Q_weight(n, k));
          }
          return py::list();
        },
        py::arg("family"), py::arg("n"), py::arg("k"));
  m.def("involution_verify", [](const std::string& family, long n) {
    const InvolutionReport r = involution_verify(parse_family(family), n);
    py::dict d;
    d["elements"] = r.element_count;
    d["fixed"] = r.fixed_count;
    d["maps_to_itself"] = r.maps_to_itself;
    d["self_inverse"] = r.self_inverse;
    d["sign_reversing"] = r.sign_reversing;
    d["fixed_set_matches"] = r.fixed_set_matches;
    d["weights_balance"] = r.weights_balance;
    d["total_weight"] = to_py(r.total_weight);
    d["certified"] = r.certified();
    return d;
  }, py::arg("family"), py::arg("n"));
}

// Command-line front end: verify, table, involution, enumerate.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 mismatch.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "narayana/dyck.hpp"
#include "narayana/generating.hpp"
#include "narayana/identities.hpp"
#include "narayana/involution.hpp"
#include "narayana/plane_tree.hpp"
#include "narayana/sequences.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace narayana;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json polynomial_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficient_strings()) out.push_back(c);
  return out;
}

json value_json(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  if (const auto* p = std::get_if<Polynomial>(&v)) return polynomial_json(*p);
  json out = json::array();
  for (const auto& c : std::get<PolySeries>(v).coefficients()) out.push_back(polynomial_json(c));
  return out;
}

long cap_for(long default_cap) {
  const char* env = std::getenv("NARAYANA_CAP");
  if (env == nullptr || *env == '\0') return default_cap;
  char* end = nullptr;
  const long raised = std::strtol(env, &end, 10);
  if (*end != '\0' || raised < 0) throw UsageError("NARAYANA_CAP must be a non-negative integer");
  return std::max(default_cap, raised);
}

// verify

struct Job {
  std::string name;
  long min_n;
  // Series checks run once, at order max-n, instead of once per n.
  bool once;
  std::function<std::vector<CheckResult>(long)> run;
};

std::vector<Job> all_jobs() {
  std::vector<Job> jobs;
  for (IdentityId id : all_identities()) {
    jobs.push_back({std::string(identity_name(id)), identity_min_n(id), false,
                    [id](long n) { return std::vector{check_identity(id, n)}; }});
  }
  jobs.push_back({"integral_representation", 1, false,
                  [](long n) { return std::vector{integral_representation_check(n)}; }});
  jobs.push_back({"schroeder_integral", 1, false, [](long n) { return std::vector{schroeder_integral_check(n)}; }});
  jobs.push_back({"catalan_integral", 0, false, [](long n) { return std::vector{catalan_integral_check(n)}; }});
  jobs.push_back({"lagrange_coefficient", 0, false, [](long n) {
                    std::vector<CheckResult> out;
                    for (long k = 0; k <= n; ++k) out.push_back(lagrange_coefficient_check(n, k));
                    return out;
                  }});
  auto order = [](long n) { return static_cast<std::size_t>(n); };
  jobs.push_back({"omega_closed_form", 1, true,
                  [order](long n) { return std::vector{omega_closed_form_check(order(n))}; }});
  jobs.push_back({"omega_composition_first", 1, true, [order](long n) {
                    return std::vector{omega_composition_check(CompositionVariant::first, order(n))};
                  }});
  jobs.push_back({"omega_composition_second", 1, true, [order](long n) {
                    return std::vector{omega_composition_check(CompositionVariant::second, order(n))};
                  }});
  jobs.push_back({"legendre_gf", 0, true, [order](long n) { return std::vector{legendre_gf_check(order(n))}; }});
  jobs.push_back({"catalan_functional", 0, true, [order](long n) {
                    return std::vector{make_check("catalan_functional", n, catalan_functional_residual(order(n)),
                                                  PolySeries(order(n), Variable::q))};
                  }});
  return jobs;
}

int cmd_verify(const std::string& identity, long max_n, const std::string& format) {
  const auto jobs = all_jobs();
  std::vector<const Job*> selected;
  for (const auto& job : jobs) {
    if (identity == "all" || identity == job.name) selected.push_back(&job);
  }
  if (selected.empty()) throw UsageError("unknown identity '" + identity + "'");
  if (identity != "all" && max_n < selected.front()->min_n) {
    throw UsageError(identity + " requires n >= " + std::to_string(selected.front()->min_n));
  }

  long checks = 0;
  long mismatches = 0;
  auto emit = [&](const CheckResult& r) {
    ++checks;
    if (!r.equal) ++mismatches;
    if (format == "json") {
      json rec;
      rec["identity"] = r.identity;
      rec["n"] = r.n;
      rec["lhs"] = value_json(r.lhs);
      rec["rhs"] = value_json(r.rhs);
      rec["equal"] = r.equal;
      std::cout << rec.dump() << '\n';
    } else if (r.equal) {
      std::cout << r.identity << " n=" << r.n << " ok\n";
    } else {
      std::cout << r.identity << " n=" << r.n << " MISMATCH lhs=" << value_to_text(r.lhs)
                << " rhs=" << value_to_text(r.rhs) << '\n';
    }
  };
  for (const Job* job : selected) {
    if (job->once) {
      if (max_n >= job->min_n) {
        for (const auto& r : job->run(max_n)) emit(r);
      }
      continue;
    }
    for (long n = job->min_n; n <= max_n; ++n) {
      for (const auto& r : job->run(n)) emit(r);
    }
  }
  if (format == "text") std::cout << checks << " checks, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kMismatch;
}

// table

int cmd_table(const std::string& sequence, long max_n, const std::string& format) {
  std::function<json(long)> row;
  long first = 0;
  auto poly_row = [](Polynomial (*f)(long)) { return [f](long n) { return polynomial_json(f(n)); }; };
  auto legendre_row = [](LegendreForm form) {
    return [form](long n) { return polynomial_json(legendre_poly(n, form)); };
  };
  auto recurrence_row = [](Recurrence r) { return [r](long n) { return json(to_string(recurrence_seq(r, n))); }; };

  if (sequence == "narayana_poly") {
    row = poly_row(&narayana_poly);
  } else if (sequence == "assoc_narayana_poly") {
    row = poly_row(&assoc_narayana_poly);
  } else if (sequence == "legendre") {
    row = legendre_row(LegendreForm::standard);
  } else if (sequence == "shifted_legendre") {
    row = legendre_row(LegendreForm::shifted);
  } else if (auto id = parse_sequence(sequence)) {
    switch (*id) {
      case SequenceId::catalan: row = [](long n) { return json(to_string(catalan(n))); }; break;
      case SequenceId::schroeder: row = [](long n) { return json(to_string(schroeder(n))); }; break;
      case SequenceId::narayana_number:
        row = [](long n) {
          json out = json::array();
          for (long k = 0; k <= n; ++k) out.push_back(to_string(narayana_number(n, k)));
          return out;
        };
        break;
      case SequenceId::pell: row = recurrence_row(Recurrence::pell); first = -1; break;
      case SequenceId::fibonacci: row = recurrence_row(Recurrence::fibonacci); first = -1; break;
      case SequenceId::lucas: row = recurrence_row(Recurrence::lucas); first = -1; break;
    }
  } else {
    throw UsageError("unknown sequence '" + sequence + "'");
  }

  if (format == "csv") std::cout << "n,value\n";
  for (long n = first; n <= max_n; ++n) {
    const json value = row(n);
    if (format == "json") {
      json rec;
      rec["sequence"] = sequence;
      rec["n"] = n;
      rec["value"] = value;
      std::cout << rec.dump() << '\n';
      continue;
    }
    std::string cell;
    if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) cell.push_back(';');
        cell += value[i].get<std::string>();
      }
    } else {
      cell = value.get<std::string>();
    }
    std::cout << n << ',' << cell << '\n';
  }
  return kOk;
}

// involution

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

int cmd_involution(const std::string& family_text, long n, bool emit_pairs, const std::string& format) {
  const Family family = parse_family(family_text);
  const long cap = cap_for(family_cap(family));
  if (n < 0 || n > cap) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) + " for family " +
                     family_name(family) + " (raise with NARAYANA_CAP)");
  }
  const InvolutionReport r = involution_verify(family, n, emit_pairs, cap);
  if (format == "json") {
    json rec;
    rec["family"] = family_name(family);
    rec["n"] = n;
    rec["elements"] = r.element_count;
    rec["fixed"] = r.fixed_count;
    rec["maps_to_itself"] = r.maps_to_itself;
    rec["self_inverse"] = r.self_inverse;
    rec["sign_reversing"] = r.sign_reversing;
    rec["fixed_set_matches"] = r.fixed_set_matches;
    rec["weights_balance"] = r.weights_balance;
    rec["total_weight"] = polynomial_json(r.total_weight);
    rec["fixed_weight"] = polynomial_json(r.fixed_weight);
    rec["expected_weight"] = polynomial_json(r.expected_weight);
    rec["certified"] = r.certified();
    if (r.counterexample) rec["counterexample"] = *r.counterexample;
    if (emit_pairs) {
      json pairs = json::array();
      for (const auto& [a, b] : r.pairs) pairs.push_back(json::array({a, b}));
      rec["pairs"] = pairs;
    }
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << "family " << family_name(family) << " n=" << n << '\n'
              << "elements " << r.element_count << ", fixed " << r.fixed_count << '\n'
              << "maps_to_itself " << verdict(r.maps_to_itself) << '\n'
              << "self_inverse " << verdict(r.self_inverse) << '\n'
              << "sign_reversing " << verdict(r.sign_reversing) << '\n'
              << "fixed_set_matches " << verdict(r.fixed_set_matches) << '\n'
              << "weights_balance " << verdict(r.weights_balance) << '\n';
    if (emit_pairs) {
      for (const auto& [a, b] : r.pairs) std::cout << "pair " << a << " <-> " << b << '\n';
    }
    std::cout << "total_weight " << r.total_weight.to_string() << '\n'
              << "fixed_weight " << r.fixed_weight.to_string() << '\n'
              << "expected_weight " << r.expected_weight.to_string() << '\n';
    if (r.counterexample) std::cout << "counterexample " << *r.counterexample << '\n';
    std::cout << (r.certified() ? "certified" : "NOT certified") << '\n';
  }
  return r.certified() ? kOk : kMismatch;
}

// enumerate

int cmd_enumerate(const std::string& family, long n, long k, const std::string& format) {
  auto emit = [&](const std::string& object, const Monomial& w) {
    if (format == "json") {
      json rec;
      rec["object"] = object;
      rec["weight"] = polynomial_json(w.to_polynomial());
      std::cout << rec.dump() << '\n';
    } else {
      std::cout << object << "  " << w.to_polynomial().to_string() << '\n';
    }
  };
  auto k_range = [&](auto&& each_k) {
    if (k >= 0) {
      if (k > n) throw UsageError("need k <= n");
      each_k(k);
    } else {
      for (long j = 0; j <= n; ++j) each_k(j);
    }
  };

  if (family == "dyck") {
    const long cap = cap_for(kDyckEnumerationCap);
    if (n < 0 || n > cap) throw UsageError("n outside 0.." + std::to_string(cap));
    for (const auto& p : enumerate_dyck(n, cap)) {
      if (format == "json") {
        std::cout << json({{"object", p.to_string()}}).dump() << '\n';
      } else {
        std::cout << p.to_string() << '\n';
      }
    }
    return kOk;
  }
  const Family f = parse_family(family);
  const long cap = cap_for(family_cap(f));
  if (n < 0 || n > cap) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) + " for family " +
                     family_name(f) + " (raise with NARAYANA_CAP)");
  }
  if (f == Family::D) {
    k_range([&](long j) {
      for_each_family_D(n, j, [&](const DecoratedDyckElement& e) { emit(e.to_string(), e.weight()); }, cap);
    });
  } else {
    const TreeFamily tf = f == Family::P ? TreeFamily::P : TreeFamily::Q;
    k_range([&](long j) {
      for_each_family_tree(tf, n, j, [&](const WeightedPlaneTree& t) { emit(t.to_string(), t.weight()); }, cap);
    });
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Narayana, Catalan and Legendre identities and their combinatorial proofs"};
  app.require_subcommand(1);

  std::string format_text = "text";

  auto* verify = app.add_subcommand("verify", "Check identities exactly for n up to --max-n");
  std::string identity = "all";
  long max_n = 10;
  verify->add_option("--identity", identity,
                     "Identity name or 'all'; series checks run once at order --max-n")
      ->capture_default_str();
  verify->add_option("--max-n", max_n, "Largest n (inclusive)")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format_text, "text or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "Print a sequence or polynomial family");
  std::string sequence;
  long table_max_n = 10;
  std::string table_format = "csv";
  table->add_option("--sequence", sequence,
                    "catalan, schroeder, narayana_number, pell, fibonacci, lucas, narayana_poly, "
                    "assoc_narayana_poly, legendre, shifted_legendre")
      ->required();
  table->add_option("--max-n", table_max_n, "Largest n (inclusive)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  table->add_option("--format", table_format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  auto* involution = app.add_subcommand("involution", "Certify the sign-reversing involution on a family");
  std::string family;
  long inv_n = 0;
  bool emit_pairs = false;
  std::string inv_format = "text";
  involution->add_option("--family", family, "D, P or Q")->required();
  involution->add_option("--n", inv_n, "Size parameter")->required();
  involution->add_flag("--emit-pairs", emit_pairs, "List every matched pair");
  involution->add_option("--format", inv_format, "text or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "List the elements of a family");
  std::string enum_family;
  long enum_n = 0;
  long enum_k = -1;
  std::string enum_format = "text";
  enumerate->add_option("--family", enum_family, "D, P, Q or dyck")->required();
  enumerate->add_option("--n", enum_n, "Size parameter")->required();
  enumerate->add_option("--k", enum_k, "Restrict to one k (default: all)");
  enumerate->add_option("--format", enum_format, "text or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(identity, max_n, format_text);
    if (table->parsed()) return cmd_table(sequence, table_max_n, table_format);
    if (involution->parsed()) return cmd_involution(family, inv_n, emit_pairs, inv_format);
    if (enumerate->parsed()) return cmd_enumerate(enum_family, enum_n, enum_k, enum_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

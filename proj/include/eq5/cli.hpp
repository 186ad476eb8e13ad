#pragma once

// Command-line front end. `run` is the whole program minus main(), so it
// can be driven from tests with captured streams.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eq5/actions.hpp"
#include "eq5/fingroups.hpp"
#include "eq5/fpgroups.hpp"
#include "eq5/verifiers.hpp"

namespace eq5::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitUsage = 64;
inline constexpr int kExitInvalid = 65;

using json = nlohmann::ordered_json;

namespace detail {

inline void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    if (j.empty()) out.emplace_back(prefix, "");
    return;
  }
  if (j.is_array()) {
    std::string s;
    for (const json& x : j) s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
    out.emplace_back(prefix, s);
    return;
  }
  out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

/// "key: value" per scalar leaf, nested keys dotted.
inline std::string render_text(const json& result) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(result, "", rows);
  std::string s;
  for (const auto& [k, v] : rows) s += (k.empty() ? "" : k + ": ") + v + "\n";
  return s;
}

inline Ambient parse_ambient(const std::string& s) {
  if (s == "SU2" || s == "su2" || s == "SU(2)") return Ambient::SU2;
  if (s == "SO3" || s == "so3" || s == "SO(3)") return Ambient::SO3;
  throw Error(Errc::BadParam, "unknown group '" + s + "'");
}

inline OrbitType require_orbit_type(const std::string& s) {
  auto t = parse_orbit_type(s);
  if (!t) throw Error(Errc::BadParam, "unknown subgroup '" + s + "'");
  return *t;
}

inline long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw Error(Errc::BadParam, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw Error(Errc::BadParam, "expected an integer, got '" + s + "'");
  return v;
}

inline ClassifiedAction parse_target(const std::vector<std::string>& t) {
  auto need = [&](std::size_t n) {
    if (t.size() != n) throw Error(Errc::UnclassifiedTarget, "target '" + t[0] + "' takes " + std::to_string(n - 1) + " arguments");
  };
  if (t.empty()) throw Error(Errc::UnclassifiedTarget, "no target");
  const std::string& kind = t[0];
  if (kind == "N") {
    need(4);
    return NAction{validate(to_long(t[1]), to_long(t[2]), to_long(t[3]))};
  }
  if (kind == "s5") {
    need(2);
    static const std::map<std::string, LinearS5::Kind> kinds{{"so3-standard", LinearS5::Kind::SO3Standard},
                                                             {"so3-diagonal", LinearS5::Kind::SO3Diagonal},
                                                             {"su2", LinearS5::Kind::SU2Standard},
                                                             {"so3-irreducible", LinearS5::Kind::SO3Irreducible}};
    auto it = kinds.find(t[1]);
    if (it == kinds.end()) throw Error(Errc::UnclassifiedTarget, "unknown linear S5 action '" + t[1] + "'");
    return LinearS5{it->second};
  }
  if (kind == "wu-su2") {
    need(1);
    return WuSU2{};
  }
  if (kind == "wu-so3") {
    need(1);
    return HudsonSum{1, 0};
  }
  if (kind == "hudson") {
    need(3);
    HudsonSum h{static_cast<int>(to_long(t[1])), static_cast<int>(to_long(t[2]))};
    if (h.k_w < 0 || h.l_b < 0 || h.k_w + h.l_b < 1) throw Error(Errc::UnclassifiedTarget, "need k, l >= 0 with k + l >= 1");
    return h;
  }
  if (kind == "s3xs2-sum") {
    need(2);
    FirstFactorSum f{static_cast<int>(to_long(t[1]))};
    if (f.k < 0) throw Error(Errc::UnclassifiedTarget, "need k >= 0");
    return f;
  }
  throw Error(Errc::UnclassifiedTarget, "unknown target '" + kind + "'");
}

inline json table1_json() {
  json rows = json::array();
  for (const Table1Row& r : table1())
    rows.push_back({{"group", to_string(r.group)},
                    {"H", r.h},
                    {"N(H)", r.normalizer},
                    {"N(H)/H", r.quotient},
                    {"pi_{n-1}(N(H)/H)", r.homotopy},
                    {"count", r.count.to_string()},
                    {"finite_normalizer", r.finite_normalizer}});
  return rows;
}

inline json table2_json() {
  json rows = json::array();
  for (const Table2Row& r : table2()) {
    json row{{"row", std::string(1, r.id)}, {"H", r.h}, {"K", r.k}, {"G", to_string(r.group)},
             {"pi_{n-1}", r.homotopy},      {"pi_0(N(H)/H)", r.pi0}, {"bound", r.bound}};
    rows.push_back(row);
  }
  return rows;
}

inline json classification_json(const SingularClassification& c) {
  json j;
  json acts = json::array();
  for (const ClassifiedAction& a : c.actions) {
    json x = to_json(a);
    x["curvature"] = to_json(curvature_verdict(a));
    acts.push_back(x);
  }
  j["actions"] = acts;
  j["bound"] = c.bound ? json(*c.bound) : json(nullptr);
  j["note"] = c.note ? json(*c.note) : json(nullptr);
  return j;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of SO(3)- and SU(2)-actions on simply-connected 5-manifolds", "eq5"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  json inputs = json::object();
  json result;
  int status = 0;
  std::function<void()> action;

  // classify / slice / fixedset m n l
  long m = 0, n = 0, l = 0;
  auto add_mnl = [&](CLI::App* sc) {
    sc->add_option("m", m)->required();
    sc->add_option("n", n)->required();
    sc->add_option("l", l)->required();
  };

  auto* classify = app.add_subcommand("classify", "Full record for N_{m,n}^l");
  add_mnl(classify);
  classify->callback([&] {
    inputs = {{"m", m}, {"n", n}, {"l", l}};
    action = [&] { result = classify_json(validate(m, n, l)); };
  });

  auto* slice = app.add_subcommand("slice", "Slice data (d, q, a, b, k) of N_{m,n}^l");
  add_mnl(slice);
  slice->callback([&] {
    inputs = {{"m", m}, {"n", n}, {"l", l}};
    action = [&] {
      ActionParams p = validate(m, n, l);
      SliceData s = slice_data(p);
      result = to_json(s);
      result["reconstructed_l"] = reconstruct_l(s);
    };
  });

  auto* fixedset = app.add_subcommand("fixedset", "Fixed set of the principal isotropy group");
  add_mnl(fixedset);
  fixedset->callback([&] {
    inputs = {{"m", m}, {"n", n}, {"l", l}};
    action = [&] { result = to_json(fixed_set_principal(validate(m, n, l))); };
  });

  // equiv m n l l'  or  equiv m n l m' n' l'
  std::vector<long> equiv_args;
  auto* equiv = app.add_subcommand("equiv", "Are N_{m,n}^l and N_{m',n'}^{l'} equivalent?");
  equiv->add_option("params", equiv_args, "m n l l'  or  m n l m' n' l'")->required()->expected(4, 6);
  equiv->callback([&] {
    if (equiv_args.size() == 5) throw CLI::ValidationError("params", "expected 4 or 6 integers");
    std::vector<long> a = equiv_args;
    if (a.size() == 4) a = {a[0], a[1], a[2], a[0], a[1], a[3]};
    inputs = {{"m", a[0]}, {"n", a[1]}, {"l", a[2]}, {"m'", a[3]}, {"n'", a[4]}, {"l'", a[5]}};
    action = [&, a] {
      EquivalenceVerdict v = equivalence(validate(a[0], a[1], a[2]), validate(a[3], a[4], a[5]));
      result = {{"equivalent", v.equivalent}, {"rule", v.rule}};
    };
  });

  long lmax = 20;
  auto* enumerate = app.add_subcommand("enum", "Inequivalent N_{m,n}^l with l <= lmax");
  enumerate->add_option("m", m)->required();
  enumerate->add_option("n", n)->required();
  enumerate->add_option("--lmax", lmax, "Largest l")->capture_default_str();
  enumerate->callback([&] {
    inputs = {{"m", m}, {"n", n}, {"lmax", lmax}};
    action = [&] {
      if (lmax < 0) throw Error(Errc::BadParam, "lmax must be >= 0");
      validate(m, n, 1);
      json ls = json::array();
      for (const ActionParams& p : enumerate_actions(m, n, lmax)) ls.push_back(p.l);
      result = {{"classes", ls.size()}, {"l", ls}};
    };
  });

  long b1 = 0, b2 = 0, k = 0;
  std::string method = "formula";
  std::size_t max_cosets = kDefaultMaxCosets;
  auto* pi1 = app.add_subcommand("pi1", "Order of pi_1 of the gluing M(b1,b2,k)");
  pi1->add_option("n1", m)->required();
  pi1->add_option("n2", n)->required();
  pi1->add_option("b1", b1)->required();
  pi1->add_option("b2", b2)->required();
  pi1->add_option("k", k)->required();
  pi1->add_option("--method", method)->check(CLI::IsMember({"formula", "coset"}))->capture_default_str();
  pi1->add_option("--max-cosets", max_cosets)->capture_default_str();
  pi1->callback([&] {
    inputs = {{"n1", m}, {"n2", n}, {"b1", b1}, {"b2", b2}, {"k", k}, {"method", method}};
    action = [&] {
      result = {{"order", pi1_order(m, n, b1, b2, k)}};
      if (method == "coset") {
        Pi1Certificate c = pi1_by_cosets(m, n, b1, b2, k, max_cosets);
        result["presentation"] = format_presentation(pi1_presentation(m, n, b1, b2, k));
        result["coset_enumeration"] = to_json(c.cosets);
        result["coset_table_consistent"] = c.table_consistent;
        result["abelianization"] = c.abelian.to_string();
        if (!c.cosets.completed()) status = 2;
      }
    };
  });

  std::vector<std::string> target;
  auto* curvature = app.add_subcommand("curvature", "Curvature verdict for a classified action");
  curvature
      ->add_option("target", target,
                   "N m n l | s5 {so3-standard,so3-diagonal,su2,so3-irreducible} | wu-su2 | wu-so3 | hudson k l | "
                   "s3xs2-sum k")
      ->required()
      ->allow_extra_args();
  curvature->callback([&] {
    inputs = {{"target", target}};
    action = [&] {
      ClassifiedAction a = detail::parse_target(target);
      result = to_json(a);
      result["curvature"] = to_json(curvature_verdict(a));
    };
  });

  std::string which = "all";
  std::string group_name, h_name, k_name;
  std::optional<int> count;
  auto* tables = app.add_subcommand("tables", "Classification tables for one and two orbit types");
  tables->add_option("--which", which)->check(CLI::IsMember({"1", "2", "all"}))->capture_default_str();
  tables->add_option("--group", group_name, "With --H and --K: realized classes for one chain");
  tables->add_option("--H", h_name);
  tables->add_option("--K", k_name);
  tables->add_option("--count", count, "Boundary spheres for (SO(2),SO(3)); fixed points for Z2xZ2 < O(2)");
  tables->callback([&] {
    inputs = {{"which", which}};
    action = [&] {
      result = json::object();
      if (!group_name.empty() || !h_name.empty() || !k_name.empty()) {
        if (group_name.empty() || h_name.empty() || k_name.empty())
          throw Error(Errc::BadParam, "--group, --H and --K go together");
        inputs["group"] = group_name;
        inputs["H"] = h_name;
        inputs["K"] = k_name;
        if (count) inputs["count"] = *count;
        result["chain"] = detail::classification_json(singular_classification(
            detail::parse_ambient(group_name), detail::require_orbit_type(h_name), detail::require_orbit_type(k_name), count));
        return;
      }
      if (which != "2") result["table1"] = detail::table1_json();
      if (which != "1") result["table2"] = detail::table2_json();
    };
  });

  std::string tag;
  int param = 0;
  std::string ambient = "SU2";
  auto* subgroup = app.add_subcommand("subgroup", "Standard finite subgroup of SU(2) or SO(3)");
  subgroup->add_option("tag", tag, "trivial, cyclic, dicyclic, bintet, binoct, binico, dihedral, tet, oct, ico, klein")
      ->required();
  subgroup->add_option("param", param);
  subgroup->add_option("--ambient", ambient)->check(CLI::IsMember({"SU2", "SO3"}))->capture_default_str();
  subgroup->callback([&] {
    inputs = {{"tag", tag}, {"param", param}, {"ambient", ambient}};
    action = [&] {
      auto t = parse_tag(tag);
      if (!t) throw Error(Errc::UnknownTag, tag);
      result = to_json(catalog(*t, param, detail::parse_ambient(ambient)));
    };
  });

  std::string lemma;
  std::optional<long> nmax;
  long klo = -3, khi = 3, mmax = 30, q1 = 2, q2 = 3, window = 5, vm = 0, vn = 0;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive cross-check");
  verify->add_option("lemma", lemma)
      ->required()
      ->check(CLI::IsMember({"pi1", "bijection", "exceptional-pairs", "table1", "noncyclic", "equiv-counts", "gauss-bonnet"}));
  verify->add_option("--nmax", nmax, "pi1: largest n2 (default 10); equiv-counts: largest n (default 8)");
  verify->add_option("--klo", klo)->capture_default_str();
  verify->add_option("--khi", khi)->capture_default_str();
  verify->add_option("--max-cosets", max_cosets)->capture_default_str();
  verify->add_option("--mmax", mmax, "exceptional-pairs: family bound")->capture_default_str();
  verify->add_option("--q1", q1)->capture_default_str();
  verify->add_option("--q2", q2)->capture_default_str();
  verify->add_option("--window", window)->capture_default_str();
  verify->add_option("--m", vm, "equiv-counts: a single (m,n)");
  verify->add_option("--n", vn, "equiv-counts: a single (m,n)");
  verify->callback([&] {
    inputs = {{"lemma", lemma}};
    action = [&] {
      VerificationReport r;
      if (lemma == "pi1") {
        inputs["nmax"] = nmax.value_or(10);
        inputs["k"] = {klo, khi};
        inputs["max_cosets"] = max_cosets;
        r = verify_pi1_formula(nmax.value_or(10), klo, khi, max_cosets);
      } else if (lemma == "bijection") {
        inputs["q1"] = q1;
        inputs["q2"] = q2;
        inputs["window"] = window;
        r = verify_bijection(q1, q2, window);
      } else if (lemma == "exceptional-pairs") {
        inputs["mmax"] = mmax;
        r = verify_exceptional_pairs(static_cast<int>(mmax));
      } else if (lemma == "table1") {
        r = verify_table1();
      } else if (lemma == "noncyclic") {
        r = verify_noncyclic_obstruction();
      } else if (lemma == "equiv-counts") {
        if (vm != 0 || vn != 0) {
          inputs["m"] = vm;
          inputs["n"] = vn;
          r = verify_equivalence_counts(vm, vn);
        } else {
          inputs["nmax"] = nmax.value_or(8);
          r = verify_equivalence_sweep(nmax.value_or(8));
        }
      } else {
        r = verify_gauss_bonnet_bound();
      }
      result = to_json(r);
      status = r.exit_code();
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (format == "json") {
    json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["result"] = result;
    envelope["version"] = kVersion;
    out << envelope.dump(2) << "\n";
  } else {
    out << detail::render_text(result);
  }
  return status;
}

}  // namespace eq5::cli

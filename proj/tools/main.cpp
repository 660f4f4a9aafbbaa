// finalg: finite-algebra workbench over explicit operation tables.
//
// Exit contract: 0 = success / property holds / iso found / models exist;
// 1 = property fails, no iso, or no models (diagnostics on stdout);
// 2 = usage, parse or precondition errors (diagnostics on stderr).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finalg/algebra.hpp"
#include "finalg/classify.hpp"
#include "finalg/clause.hpp"
#include "finalg/construct.hpp"
#include "finalg/enumerate.hpp"
#include "finalg/error.hpp"
#include "finalg/format.hpp"
#include "finalg/inverse.hpp"
#include "finalg/iso.hpp"
#include "finalg/suite.hpp"

using finalg::Binding;
using finalg::Error;
using finalg::Structure;
using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io-error", "cannot open " + path + " for writing");
  out << text;
}

// "file.alg#name" selector; the fragment may also come from -s.
Structure load_structure(const std::string& selector,
                         const std::string& fragment_flag) {
  std::string path = selector;
  std::string fragment = fragment_flag;
  if (auto hash = selector.find('#'); hash != std::string::npos) {
    path = selector.substr(0, hash);
    if (!fragment.empty())
      throw Error("usage", "both a #fragment and -s were given");
    fragment = selector.substr(hash + 1);
  }
  std::vector<Structure> parsed = finalg::parse_structures(read_file(path));
  return finalg::select_structure(parsed, fragment, path);
}

Binding binding_from(const std::vector<std::string>& binds) {
  Binding b;
  for (const std::string& entry : binds) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
      throw Error("usage", "--bind expects sym=name, got '" + entry + "'");
    std::string sym = entry.substr(0, eq), name = entry.substr(eq + 1);
    if (sym == "mul")
      b.mul = name;
    else if (sym == "t" || sym == "ternary")
      b.ternary = name;
    else if (sym == "prime")
      b.prime = name;
    else if (sym == "hat")
      b.hat = name;
    else
      b.consts[sym] = name;
  }
  return b;
}

int element_index(const Structure& s, const std::string& token) {
  if (auto i = s.carrier.index_of(token)) return *i;
  if (s.has_const(token)) return s.constant(token);
  throw Error("usage", "'" + token + "' names no element or constant of " +
                           s.name);
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string selector, fragment;
  std::vector<std::string> binds;
  std::string prop;
  std::vector<std::string> clause_texts;
  std::string clauses_file;
  std::string role;
  bool as_json = false;
};

int run_check(const CheckArgs& a) {
  Structure s = load_structure(a.selector, a.fragment);
  Binding binding = binding_from(a.binds);
  int modes = (!a.prop.empty()) + (!a.clause_texts.empty()) +
              (!a.clauses_file.empty()) + (!a.role.empty());
  if (modes != 1)
    throw Error("usage",
                "check needs exactly one of --prop, --clause, --clauses, "
                "--role");

  json out;
  out["schema"] = "finalg.check/1";
  out["structure"] = s.name;

  if (!a.role.empty()) {
    auto role = finalg::role_from_token(a.role);
    if (!role) throw Error("usage", "unknown role '" + a.role + "'");
    std::vector<int> hits = finalg::find_elements(s, *role, binding);
    if (a.as_json) {
      out["role"] = a.role;
      json arr = json::array();
      for (int i : hits) arr.push_back(s.carrier.name_of(i));
      out["elements"] = arr;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << a.role << ":";
      for (int i : hits) std::cout << " " << s.carrier.name_of(i);
      std::cout << "\n";
    }
    return hits.empty() ? 1 : 0;
  }

  if (a.prop == "clifford") {
    // semilattice-of-groups decomposition; not a catalog property
    try {
      finalg::CliffordDecomposition dec = finalg::clifford_decompose(s);
      if (a.as_json) {
        out["clifford"] = true;
        json groups = json::object();
        for (const auto& [e, g] : dec.groups)
          groups[s.carrier.name_of(e)] = g.order();
        out["group-orders"] = groups;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "clifford: holds\n";
        for (const auto& [e, g] : dec.groups)
          std::cout << "  group over " << s.carrier.name_of(e) << ": order "
                    << g.order() << "\n";
      }
      return 0;
    } catch (const Error& e) {
      if (e.kind() != "not-clifford" && e.kind() != "not-inverse") throw;
      if (a.as_json) {
        out["clifford"] = false;
        out["detail"] = e.what();
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "clifford: fails (" << e.what() << ")\n";
      }
      return 1;
    }
  }

  if (!a.prop.empty()) {
    auto p = finalg::prop_from_token(a.prop);
    if (!p) throw Error("usage", "unknown property '" + a.prop + "'");
    finalg::PropertyReport r = finalg::check_property(s, *p, binding);
    if (a.as_json) {
      out["prop"] = a.prop;
      out["holds"] = r.holds;
      if (r.witness) out["witness"] = s.carrier.name_of(*r.witness);
      if (r.counterexample) {
        out["counterexample"] = r.counterexample->render(s.carrier);
        out["failed-clause"] = r.failed_clause;
      }
      if (!r.detail.empty()) out["detail"] = r.detail;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << a.prop << (r.holds ? ": holds" : ": fails");
      if (r.witness)
        std::cout << " (witness " << s.carrier.name_of(*r.witness) << ")";
      if (r.counterexample)
        std::cout << " at " << r.counterexample->render(s.carrier) << " in "
                  << r.failed_clause;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
    return r.holds ? 0 : 1;
  }

  // --clause / --clauses: named batch, all must hold
  std::vector<std::pair<std::string, finalg::Clause>> batch;
  for (const std::string& text : a.clause_texts)
    batch.emplace_back(text, finalg::parse_clause(text));
  if (!a.clauses_file.empty())
    for (auto& [name, clause] :
         finalg::parse_clause_catalog(read_file(a.clauses_file)))
      batch.emplace_back(name, std::move(clause));

  bool all = true;
  json items = json::array();
  for (const auto& [name, clause] : batch) {
    finalg::CheckResult r = finalg::check_clause(s, clause, binding);
    all = all && r.holds;
    if (a.as_json) {
      json item;
      item["clause"] = name;
      item["holds"] = r.holds;
      if (r.counterexample)
        item["counterexample"] = r.counterexample->render(s.carrier);
      items.push_back(item);
    } else {
      std::cout << name << (r.holds ? ": holds" : ": fails");
      if (r.counterexample)
        std::cout << " at " << r.counterexample->render(s.carrier);
      std::cout << "\n";
    }
  }
  if (a.as_json) {
    out["results"] = items;
    out["holds"] = all;
    std::cout << out.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

// ---- classify --------------------------------------------------------------

int run_classify(const std::string& selector, const std::string& fragment,
                 const std::vector<std::string>& binds, bool as_json) {
  Structure s = load_structure(selector, fragment);
  Binding binding = binding_from(binds);
  std::vector<finalg::Prop> props = finalg::classify(s, binding);
  if (as_json) {
    json out;
    out["schema"] = "finalg.classify/1";
    out["structure"] = s.name;
    json arr = json::array();
    for (finalg::Prop p : props) arr.push_back(finalg::property_info(p).token);
    out["properties"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    for (finalg::Prop p : props)
      std::cout << finalg::property_info(p).token << "\n";
  }
  return 0;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string scheme, selector, fragment, unary, out;
  std::string const_l;   // --const l=<tok>
  std::string point;     // --point <tok>
  int order = 0;         // --order for generators
  std::vector<std::string> binds;
};

Structure with_ternary(Structure s, finalg::OpTable t) {
  s.ops["t"] = std::move(t);
  return s;
}

int run_construct(const ConstructArgs& a) {
  const std::string& sc = a.scheme;

  if (sc == "example1-pair") {
    if (a.order < 2) throw Error("usage", "example1-pair needs --order >= 2");
    auto [p, q] = finalg::example1_pair(a.order);
    std::vector<Structure> pair = {p, q};
    write_output(a.out, finalg::serialize(pair));
    return 0;
  }

  Structure s = load_structure(a.selector, a.fragment);
  Binding b = binding_from(a.binds);
  auto l_index = [&]() -> int {
    if (!a.const_l.empty()) return element_index(s, a.const_l);
    if (s.has_const("l")) return s.constant("l");
    throw Error("usage", "scheme '" + sc + "' needs --const l=<element>");
  };
  auto point_index = [&]() -> int {
    if (a.point.empty())
      throw Error("usage", "scheme '" + sc + "' needs --point <element>");
    return element_index(s, a.point);
  };
  auto unary_name = [&]() -> const std::string& {
    if (a.unary.empty())
      throw Error("usage", "scheme '" + sc + "' needs --unary <opname>");
    return a.unary;
  };

  Structure result;
  if (sc == "natural-ternary")
    result = with_ternary(s, finalg::natural_ternary(s, b.mul));
  else if (sc == "star-ternary")
    result = with_ternary(s, finalg::star_ternary(s, unary_name(), b.mul));
  else if (sc == "standard-ternary")
    result = with_ternary(s, finalg::standard_ternary(s, b.mul));
  else if (sc == "dual")
    result = finalg::dual_groupoid(s, b.mul);
  else if (sc == "adjoin-identity")
    result = finalg::adjoin_identity(s, b.mul);
  else if (sc == "product-from-semiheap")
    result = finalg::gamma_from_semiheap(s, l_index(), b.ternary);
  else if (sc == "product-65" || sc == "product-66" || sc == "product-67" ||
           sc == "product-68") {
    finalg::ReconstructScheme scheme =
        sc == "product-65"   ? finalg::ReconstructScheme::Thm65
        : sc == "product-66" ? finalg::ReconstructScheme::Thm66
        : sc == "product-67" ? finalg::ReconstructScheme::Thm67
                             : finalg::ReconstructScheme::Thm68;
    result = finalg::reconstruct(s, scheme, l_index(), b.hat, b.ternary);
  } else if (sc == "gh-to-inv")
    result = finalg::gh_to_inverse_semigroup(s, b.ternary, b.prime, b.hat);
  else if (sc == "psi")
    result = finalg::psi(s, b.mul);
  else if (sc == "omega")
    result = finalg::omega(s, point_index(), b.ternary);
  else if (sc == "pi-map")
    result = finalg::pi_map(s, point_index(), b.ternary);
  else if (sc == "lambda")
    result = finalg::lambda_map(s, b.mul);
  else if (sc == "gamma-wq")
    result = finalg::gamma_wq(s, b.mul);
  else if (sc == "phi-g")
    result = finalg::phi_g(s, b.mul);
  else if (sc == "theta")
    result = finalg::theta(s, b.mul);
  else if (sc == "sigma")
    result = finalg::sigma(s, b.ternary);
  else if (sc == "alpha-map")
    result = finalg::alpha_map(s, b.ternary);
  else if (sc == "beta-map")
    result = finalg::beta_map(s, point_index(), b.ternary);
  else if (sc == "twisted-product")
    result = finalg::alpha_determined(s, s.op(unary_name()), b.mul);
  else
    throw Error("usage", "unknown scheme '" + sc + "'");

  write_output(a.out, finalg::serialize(result));
  return 0;
}

// ---- iso -------------------------------------------------------------------

int run_iso(const std::string& left_sel, const std::string& right_sel,
            const std::string& kind, const std::vector<std::string>& binds,
            bool as_json) {
  Structure left = load_structure(left_sel, "");
  Structure right = load_structure(right_sel, "");
  Binding b = binding_from(binds);
  finalg::IsoTask task =
      kind == "ternary" ? finalg::IsoTask::ternary(left, right, b.ternary)
                        : finalg::IsoTask::binary(left, right, b.mul);
  std::optional<finalg::Bijection> hit = finalg::iso_search(task);
  if (as_json) {
    json out;
    out["schema"] = "finalg.iso/1";
    out["kind"] = kind;
    out["isomorphic"] = hit.has_value();
    if (hit) {
      json map = json::object();
      for (int i = 0; i < left.order(); ++i)
        map[left.carrier.name_of(i)] =
            right.carrier.name_of(hit->forward[static_cast<std::size_t>(i)]);
      out["map"] = map;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (hit ? hit->render(left.carrier, right.carrier) : "none")
              << "\n";
  }
  return hit ? 0 : 1;
}

// ---- enumerate -------------------------------------------------------------

struct EnumArgs {
  int order = 0;
  std::string signature = "binary";
  std::string props;
  std::vector<std::string> clauses;
  std::vector<std::string> pins;
  bool up_to_iso = false;
  bool count_only = false;
  std::string out;
  bool as_json = false;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

int run_enumerate(const EnumArgs& a) {
  if (a.order < 1) throw Error("usage", "--order must be at least 1");
  finalg::EnumSpec spec;
  spec.order = a.order;
  for (const std::string& tok : split_csv(a.signature)) {
    if (tok == "binary")
      spec.signature.ops.push_back({"mul", 2});
    else if (tok == "ternary")
      spec.signature.ops.push_back({"t", 3});
    else if (tok == "unary")
      spec.signature.ops.push_back({"inv", 1});
    else
      throw Error("usage", "unknown signature token '" + tok + "'");
  }
  if (spec.signature.ops.empty())
    throw Error("usage", "--signature names no operations");
  for (const std::string& tok : split_csv(a.props)) {
    auto p = finalg::prop_from_token(tok);
    if (!p) throw Error("usage", "unknown property '" + tok + "'");
    spec.with_prop(*p);
  }
  for (const std::string& text : a.clauses) spec.with_clause(text);
  for (const std::string& pin : a.pins) {
    auto eq = pin.find('=');
    if (eq == std::string::npos)
      throw Error("usage", "--pin expects name=index, got '" + pin + "'");
    std::string name = pin.substr(0, eq);
    int index = 0;
    try {
      index = std::stoi(pin.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("usage", "--pin index must be a number in '" + pin + "'");
    }
    if (index < 0 || index >= a.order)
      throw Error("usage", "--pin index out of range in '" + pin + "'");
    spec.signature.consts.push_back(name);
    spec.pins[name] = index;
  }
  spec.up_to_iso = a.up_to_iso;

  if (a.count_only) {
    std::uint64_t n = finalg::count_models(spec);
    if (a.as_json) {
      json out;
      out["schema"] = "finalg.enumerate/1";
      out["count"] = n;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << n << "\n";
    }
    return n > 0 ? 0 : 1;
  }
  std::vector<Structure> models = finalg::enumerate_all(spec);
  write_output(a.out, finalg::serialize(models));
  if (!a.out.empty())
    std::cout << models.size() << " model" << (models.size() == 1 ? "" : "s")
              << "\n";
  return models.empty() ? 1 : 0;
}

// ---- paper-suite -----------------------------------------------------------

int run_paper_suite(const std::string& filter, bool as_json) {
  std::vector<finalg::SuiteResult> results = finalg::run_suite(filter);
  bool all = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      json item;
      item["id"] = r.id;
      item["status"] = r.pass ? "pass" : "fail";
      item["details"] = r.details;
      arr.push_back(item);
    }
    json out;
    out["schema"] = "finalg.paper-suite/1";
    out["checks"] = arr;
    out["pass"] = all;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      all = all && r.pass;
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.details
                << "\n";
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench over explicit operation tables"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "check a property, clause batch or element role");
  check->add_option("selector", check_args.selector, "file.alg[#name]")
      ->required();
  check->add_option("-s", check_args.fragment, "structure name in the file");
  check->add_option("--prop", check_args.prop, "property token");
  check->add_option("--clause", check_args.clause_texts,
                    "clause text (repeatable)");
  check->add_option("--clauses", check_args.clauses_file,
                    ".clauses catalog file");
  check->add_option("--role", check_args.role, "element role token");
  check->add_option("--bind", check_args.binds, "sym=name op binding");
  check->add_flag("--json", check_args.as_json, "JSON output");

  std::string cl_selector, cl_fragment;
  std::vector<std::string> cl_binds;
  bool cl_json = false;
  CLI::App* classify =
      app.add_subcommand("classify", "list every property that holds");
  classify->add_option("selector", cl_selector, "file.alg[#name]")
      ->required();
  classify->add_option("-s", cl_fragment, "structure name in the file");
  classify->add_option("--bind", cl_binds, "sym=name op binding");
  classify->add_flag("--json", cl_json, "JSON output");

  ConstructArgs con_args;
  CLI::App* construct =
      app.add_subcommand("construct", "run a table construction");
  construct->add_option("scheme", con_args.scheme, "construction scheme")
      ->required();
  construct->add_option("selector", con_args.selector, "file.alg[#name]");
  construct->add_option("-s", con_args.fragment, "structure name");
  construct->add_option("--unary", con_args.unary, "unary op name");
  construct->add_option("--const", con_args.const_l,
                        "l=<element>: distinguished element");
  construct->add_option("--point", con_args.point, "base point element");
  construct->add_option("--order", con_args.order, "order for generators");
  construct->add_option("--bind", con_args.binds, "sym=name op binding");
  construct->add_option("--out", con_args.out, "output file (default stdout)");

  std::string iso_left, iso_right, iso_kind = "binary";
  std::vector<std::string> iso_binds;
  bool iso_json = false;
  CLI::App* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("left", iso_left, "file.alg[#name]")->required();
  iso->add_option("right", iso_right, "file.alg[#name]")->required();
  iso->add_option("--kind", iso_kind, "binary|ternary")
      ->check(CLI::IsMember({"binary", "ternary"}));
  iso->add_option("--bind", iso_binds, "sym=name op binding");
  iso->add_flag("--json", iso_json, "JSON output");

  EnumArgs enum_args;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate finite models");
  enumerate->add_option("--order", enum_args.order, "carrier size")
      ->required();
  enumerate->add_option("--signature", enum_args.signature,
                        "csv of binary,ternary,unary");
  enumerate->add_option("--props", enum_args.props, "csv of property tokens");
  enumerate->add_option("--clause", enum_args.clauses,
                        "clause text (repeatable)");
  enumerate->add_option("--pin", enum_args.pins, "name=index constant pin");
  enumerate->add_flag("--up-to-iso", enum_args.up_to_iso,
                      "lex-least representatives only");
  enumerate->add_flag("--count-only", enum_args.count_only,
                      "print the model count only");
  enumerate->add_option("--out", enum_args.out, "output file");
  enumerate->add_flag("--json", enum_args.as_json, "JSON output");

  std::string suite_filter;
  bool suite_json = false;
  CLI::App* suite =
      app.add_subcommand("paper-suite", "run the bundled regression checks");
  suite->add_option("--filter", suite_filter, "id prefix");
  suite->add_flag("--json", suite_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(check_args);
    if (*classify)
      return run_classify(cl_selector, cl_fragment, cl_binds, cl_json);
    if (*construct) return run_construct(con_args);
    if (*iso) return run_iso(iso_left, iso_right, iso_kind, iso_binds,
                             iso_json);
    if (*enumerate) return run_enumerate(enum_args);
    if (*suite) return run_paper_suite(suite_filter, suite_json);
  } catch (const Error& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "finalg/classify.hpp"

#include <algorithm>
#include <sstream>

#include "finalg/compile.hpp"
#include "finalg/error.hpp"

namespace finalg {

namespace {

std::vector<PropertyInfo> build_catalog() {
  std::vector<PropertyInfo> cat;
  auto add = [&](Prop id, std::string token, PropNeeds needs,
                 std::vector<std::string> clauses, bool builtin = false) {
    cat.push_back(PropertyInfo{id, std::move(token), needs, std::move(clauses),
                               builtin});
  };
  const PropNeeds M{true, false, false, false};
  const PropNeeds T{false, true, false, false};
  const PropNeeds TL{false, true, false, true};
  const PropNeeds MP{true, false, true, false};
  const PropNeeds TP{false, true, true, false};

  const std::string rm = "(x*y)*z = (z*y)*x";
  const std::string ll = "x*(y*z) = y*(x*z)";
  const std::string wa = "(x*y)*z = y*(x*z)";
  const std::string para1 = "[[x y z] u v] = [x [u z y] v]";
  const std::string para2 = "[[x y z] u v] = [x y [z u v]]";
  const std::string tidem = "[x x x] = x";

  add(Prop::RightModular, "right-modular", M, {rm});
  add(Prop::LeftLateral, "left-lateral", M, {ll});
  add(Prop::WeaklyAssociative, "weakly-associative", M, {wa});
  add(Prop::AgStar, "ag-star", M, {rm, wa});
  add(Prop::AgStarStar, "ag-star-star", M, {rm, ll});
  add(Prop::Medial, "medial", M, {"(x*y)*(z*u) = (x*z)*(y*u)"});
  add(Prop::Paramedial, "paramedial", M, {"(x*y)*(z*u) = (u*y)*(z*x)"});
  add(Prop::Reversible, "reversible", M, {"(x*y)*(z*u) = (u*z)*(y*x)"});
  add(Prop::Commutative, "commutative", M, {"x*y = y*x"});
  add(Prop::AssociativeBinary, "associative-binary", M,
      {"(x*y)*z = x*(y*z)"});
  add(Prop::IdempotentBinary, "idempotent-binary", M, {"x*x = x"});
  add(Prop::LeftIdentity, "left-identity", M, {}, true);
  add(Prop::RightIdentity, "right-identity", M, {}, true);
  add(Prop::TwoSidedIdentity, "two-sided-identity", M, {}, true);
  add(Prop::GloballyIdempotent, "globally-idempotent", M, {}, true);
  add(Prop::WeaklyReductive, "weakly-reductive", M, {}, true);
  add(Prop::LeftCancellative, "left-cancellative", M, {"x*y = x*z => y = z"});
  add(Prop::RightCancellative, "right-cancellative", M,
      {"y*x = z*x => y = z"});
  add(Prop::RightSolvable, "right-solvable", M, {}, true);
  add(Prop::WardGroupoid, "ward-groupoid", M, {"(x*z)*(y*z) = x*y"});
  add(Prop::WardQuasigroup, "ward-quasigroup", M,
      {"(x*z)*(y*z) = x*y", "x*y = x*z => y = z", "y*x = z*x => y = z"});
  add(Prop::InverseGroupoid, "inverse-groupoid", M, {}, true);
  add(Prop::StarUnary, "star-unary", MP,
      {"x'' = x", "(x*y)' = x'*y'", "x'*y = y'*x"});
  add(Prop::Semiheap, "semiheap", T, {para1, para2});
  add(Prop::LaterallyCommutative, "laterally-commutative", T,
      {"[x y z] = [z y x]"});
  add(Prop::LeftCommutative, "left-commutative", T, {"[x y z] = [y x z]"});
  add(Prop::RightCommutative, "right-commutative", T, {"[x y z] = [x z y]"});
  add(Prop::AssociativeTernary, "associative-ternary", T,
      {"[[x y z] u v] = [x [y z u] v]", para2});
  add(Prop::IdempotentTernary, "idempotent-ternary", T, {tidem});
  add(Prop::NearHeap, "near-heap", T,
      {para1, para2, tidem, "[x x y] = [y x x]"});
  add(Prop::GeneralisedHeap, "generalised-heap", T,
      {para1, para2, tidem, "[x x [y y z]] = [y y [x x z]]",
       "[[x y y] z z] = [[x z z] y y]"});
  add(Prop::Heap, "heap", T, {para1, para2, "[x x y] = y", "[y x x] = y"});
  add(Prop::LeftUnital, "left-unital", TL, {"[l l x] = x"});
  add(Prop::RightUnital, "right-unital", TL, {"[x l l] = x"});
  add(Prop::BiUnital, "bi-unital", TL, {"[l l x] = x", "[x l l] = x"});
  add(Prop::LateralUnit, "lateral-unit", TL, {"[l x l] = x"});
  add(Prop::OuterLateralUnit, "outer-lateral-unit", TL,
      {"[l [l x l] l] = x"});
  add(Prop::Unit, "unit", TL, {"[l l x] = x", "[x l l] = x", "[l x l] = x"});
  add(Prop::LeftLConsistent, "left-l-consistent", TL,
      {"[x y z] = [l [l x y] z]"});
  add(Prop::CentralCommutant, "central-commutant", TL,
      {"[x l y] = [y l x]"});
  add(Prop::StarCongruent, "star-congruent", TP, {"[x y z]' = [x' y' z']"});
  add(Prop::OuterLateral, "outer-lateral", T, {"[x [x y x] x] = y"});
  return cat;
}

}  // namespace

const std::vector<PropertyInfo>& property_catalog() {
  static const std::vector<PropertyInfo> cat = build_catalog();
  return cat;
}

const PropertyInfo& property_info(Prop p) {
  return property_catalog()[static_cast<std::size_t>(p)];
}

std::optional<Prop> prop_from_token(std::string_view token) {
  for (const auto& info : property_catalog())
    if (info.token == token) return info.id;
  return std::nullopt;
}

namespace {

// Compile context for catalog clauses. When `floating_l` is set, the clause
// constant 'l' maps to a slot whose value the caller sweeps; every other
// constant must resolve through the binding into the structure.
struct CatalogCtx {
  const Structure* s;
  const Binding* binding;
  bool floating_l = false;
  std::vector<const OpTable*> tables;
  std::vector<int> const_values;
  int l_slot = -1;

  std::int16_t op_slot(const std::string& symbol) {
    int expect_arity = symbol == "*" ? 2 : symbol == "[]" ? 3 : 1;
    const std::string& opname = binding->op_for(symbol);
    const OpTable* t = s->find_op(opname);
    if (!t)
      fail("missing-binding", "property needs op '" + opname +
                                  "', absent from structure '" + s->name +
                                  "'");
    if (t->arity != expect_arity)
      fail("arity-mismatch", "op '" + opname + "' has arity " +
                                 std::to_string(t->arity) + ", expected " +
                                 std::to_string(expect_arity));
    for (std::size_t i = 0; i < tables.size(); ++i)
      if (tables[i] == t) return static_cast<std::int16_t>(i);
    tables.push_back(t);
    return static_cast<std::int16_t>(tables.size() - 1);
  }

  std::int16_t const_slot(const std::string& token) {
    if (floating_l && token == "l") {
      if (l_slot < 0) {
        const_values.push_back(-1);
        l_slot = static_cast<int>(const_values.size()) - 1;
      }
      return static_cast<std::int16_t>(l_slot);
    }
    std::string cname = binding->resolve_const(token);
    if (!s->has_const(cname))
      fail("missing-binding", "property constant '" + token +
                                  "' resolves to '" + cname +
                                  "', absent from structure '" + s->name +
                                  "'");
    const_values.push_back(s->constant(cname));
    return static_cast<std::int16_t>(const_values.size() - 1);
  }
};

CompileHooks hooks_for(CatalogCtx& ctx) {
  CompileHooks h;
  h.ctx = &ctx;
  h.op_slot = [](void* p, const std::string& sym) {
    return static_cast<CatalogCtx*>(p)->op_slot(sym);
  };
  h.const_slot = [](void* p, const std::string& tok) {
    return static_cast<CatalogCtx*>(p)->const_slot(tok);
  };
  return h;
}

// Lexicographically first violating assignment (x slowest), or nullopt.
std::optional<Assignment> first_violation(const CompiledClause& cc,
                                          std::span<const TableRef> refs,
                                          std::span<const int> const_values,
                                          int n) {
  int vars[kNumClauseVars] = {0, 0, 0, 0, 0, 0, 0};
  EvalEnv env{refs, const_values, vars};
  std::vector<int> active;
  for (int i = 0; i < kNumClauseVars; ++i)
    if (cc.var_mask & (1 << i)) active.push_back(i);
  for (;;) {
    int blocked = -1;
    if (eval_instance(cc, env, blocked) == Tri::Violated) {
      Assignment a;
      for (int i : active) a.values[static_cast<std::size_t>(i)] = vars[i];
      return a;
    }
    int k = static_cast<int>(active.size()) - 1;
    while (k >= 0) {
      if (++vars[active[static_cast<std::size_t>(k)]] < n) break;
      vars[active[static_cast<std::size_t>(k)]] = 0;
      --k;
    }
    if (k < 0) return std::nullopt;
  }
}

const OpTable& require_op(const Structure& s, const std::string& name,
                          int arity, const char* what) {
  const OpTable* t = s.find_op(name);
  if (!t)
    fail("missing-binding", std::string(what) + " needs op '" + name +
                                "', absent from structure '" + s.name + "'");
  if (t->arity != arity)
    fail("arity-mismatch", "op '" + name + "' has arity " +
                               std::to_string(t->arity) + ", expected " +
                               std::to_string(arity));
  return *t;
}

PropertyReport check_builtin(const Structure& s, Prop p,
                             const Binding& binding) {
  PropertyReport r;
  r.prop = p;
  const OpTable& m = require_op(s, binding.mul, 2, "property");
  const int n = s.order();
  switch (p) {
    case Prop::LeftIdentity:
    case Prop::RightIdentity:
    case Prop::TwoSidedIdentity: {
      bool want_left = p != Prop::RightIdentity;
      bool want_right = p != Prop::LeftIdentity;
      for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
          if (want_left && m.at(e, x) != x) ok = false;
          if (want_right && m.at(x, e) != x) ok = false;
        }
        if (ok) {
          r.holds = true;
          r.witness = e;
          return r;
        }
      }
      r.detail = "no element acts as the required identity";
      return r;
    }
    case Prop::GloballyIdempotent: {
      std::vector<char> hit(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          hit[static_cast<std::size_t>(m.at(x, y))] = 1;
      for (int c = 0; c < n; ++c)
        if (!hit[static_cast<std::size_t>(c)]) {
          r.detail = "element " + s.carrier.name_of(c) +
                     " is not a product of two elements";
          return r;
        }
      r.holds = true;
      return r;
    }
    case Prop::WeaklyReductive: {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          bool same = true;
          for (int z = 0; z < n && same; ++z)
            same = m.at(z, x) == m.at(z, y) && m.at(x, z) == m.at(y, z);
          if (same) {
            r.detail = "elements " + s.carrier.name_of(x) + " and " +
                       s.carrier.name_of(y) +
                       " agree under every left and right translation";
            return r;
          }
        }
      r.holds = true;
      return r;
    }
    case Prop::RightSolvable: {
      for (int b = 0; b < n; ++b) {
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        for (int x = 0; x < n; ++x) hit[static_cast<std::size_t>(m.at(b, x))] = 1;
        for (int a = 0; a < n; ++a)
          if (!hit[static_cast<std::size_t>(a)]) {
            r.detail = "no x solves " + s.carrier.name_of(a) + " = " +
                       s.carrier.name_of(b) + "*x";
            return r;
          }
      }
      r.holds = true;
      return r;
    }
    case Prop::InverseGroupoid: {
      for (int a = 0; a < n; ++a) {
        int count = 0;
        for (int b = 0; b < n; ++b)
          if (m.at(m.at(a, b), a) == a && m.at(m.at(b, a), b) == b) ++count;
        if (count != 1) {
          r.detail = "element " + s.carrier.name_of(a) + " has " +
                     std::to_string(count) + " inverses";
          return r;
        }
      }
      r.holds = true;
      return r;
    }
    default:
      fail("internal", "not a built-in property");
  }
}

}  // namespace

PropertyReport check_property(const Structure& s, Prop p,
                              const Binding& binding) {
  const PropertyInfo& info = property_info(p);
  if (info.builtin) return check_builtin(s, p, binding);

  PropertyReport r;
  r.prop = p;
  const int n = s.order();

  bool pinned_l = true;
  if (info.needs.uses_l) {
    std::string cname = binding.resolve_const("l");
    pinned_l = s.has_const(cname);
  }

  CatalogCtx ctx{&s, &binding, /*floating_l=*/!pinned_l, {}, {}, -1};
  CompileHooks hooks = hooks_for(ctx);
  std::vector<CompiledClause> compiled;
  std::vector<Clause> parsed;
  for (const std::string& text : info.clause_texts) {
    parsed.push_back(parse_clause(text));
    compiled.push_back(compile_clause(parsed.back(), hooks));
  }
  std::vector<TableRef> refs;
  for (const OpTable* t : ctx.tables)
    refs.push_back(TableRef{t->entries.data(), t->order, t->arity, 0});

  if (pinned_l) {
    for (std::size_t i = 0; i < compiled.size(); ++i) {
      auto cx = first_violation(compiled[i], refs, ctx.const_values, n);
      if (cx) {
        r.holds = false;
        r.counterexample = cx;
        r.failed_clause = info.clause_texts[i];
        return r;
      }
    }
    r.holds = true;
    if (info.needs.uses_l)
      r.witness = s.constant(binding.resolve_const("l"));
    return r;
  }

  // No bound 'l': existential sweep, smallest witness wins.
  for (int cand = 0; cand < n; ++cand) {
    if (ctx.l_slot >= 0)
      ctx.const_values[static_cast<std::size_t>(ctx.l_slot)] = cand;
    bool all_hold = true;
    for (const CompiledClause& cc : compiled)
      if (first_violation(cc, refs, ctx.const_values, n)) {
        all_hold = false;
        break;
      }
    if (all_hold) {
      r.holds = true;
      r.witness = cand;
      return r;
    }
  }
  r.detail = "no element can serve as the distinguished unit";
  return r;
}

std::vector<Prop> classify(const Structure& s, const Binding& binding) {
  std::vector<const PropertyInfo*> infos;
  for (const auto& info : property_catalog()) infos.push_back(&info);
  std::sort(infos.begin(), infos.end(),
            [](const PropertyInfo* a, const PropertyInfo* b) {
              return a->token < b->token;
            });
  std::vector<Prop> out;
  for (const PropertyInfo* info : infos) {
    const OpTable* m = s.find_op(binding.mul);
    const OpTable* t = s.find_op(binding.ternary);
    const OpTable* u = s.find_op(binding.prime);
    if (info->needs.mul && (!m || m->arity != 2)) continue;
    if (info->needs.ternary && (!t || t->arity != 3)) continue;
    if (info->needs.prime && (!u || u->arity != 1)) continue;
    if (check_property(s, info->id, binding).holds) out.push_back(info->id);
  }
  return out;
}

const std::vector<std::pair<std::string, Role>>& role_catalog() {
  static const std::vector<std::pair<std::string, Role>> cat = {
      {"left-identity", Role::LeftIdentity},
      {"right-identity", Role::RightIdentity},
      {"idempotents", Role::Idempotent},
      {"left-unital", Role::LeftUnital},
      {"right-unital", Role::RightUnital},
      {"bi-unital", Role::BiUnital},
      {"lateral-unit", Role::LateralUnit},
      {"outer-lateral-unit", Role::OuterLateralUnit},
      {"unit", Role::Unit},
  };
  return cat;
}

std::optional<Role> role_from_token(std::string_view token) {
  for (const auto& [tok, role] : role_catalog())
    if (tok == token) return role;
  if (token == "idempotent") return Role::Idempotent;
  return std::nullopt;
}

std::vector<int> find_elements(const Structure& s, Role role,
                               const Binding& binding) {
  const int n = s.order();
  std::vector<int> out;
  auto scan = [&](auto&& pred) {
    for (int m = 0; m < n; ++m)
      if (pred(m)) out.push_back(m);
  };
  switch (role) {
    case Role::LeftIdentity: {
      const OpTable& m = require_op(s, binding.mul, 2, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (m.at(e, x) != x) return false;
        return true;
      });
      return out;
    }
    case Role::RightIdentity: {
      const OpTable& m = require_op(s, binding.mul, 2, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (m.at(x, e) != x) return false;
        return true;
      });
      return out;
    }
    case Role::Idempotent: {
      // Binary table when present, ternary otherwise.
      const OpTable* m = s.find_op(binding.mul);
      if (m && m->arity == 2) {
        scan([&](int e) { return m->at(e, e) == e; });
        return out;
      }
      const OpTable& t = require_op(s, binding.ternary, 3, "role");
      scan([&](int e) { return t.at(e, e, e) == e; });
      return out;
    }
    case Role::LeftUnital: {
      const OpTable& t = require_op(s, binding.ternary, 3, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (t.at(e, e, x) != x) return false;
        return true;
      });
      return out;
    }
    case Role::RightUnital: {
      const OpTable& t = require_op(s, binding.ternary, 3, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (t.at(x, e, e) != x) return false;
        return true;
      });
      return out;
    }
    case Role::BiUnital: {
      const OpTable& t = require_op(s, binding.ternary, 3, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (t.at(e, e, x) != x || t.at(x, e, e) != x) return false;
        return true;
      });
      return out;
    }
    case Role::LateralUnit: {
      const OpTable& t = require_op(s, binding.ternary, 3, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (t.at(e, x, e) != x) return false;
        return true;
      });
      return out;
    }
    case Role::OuterLateralUnit: {
      const OpTable& t = require_op(s, binding.ternary, 3, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (t.at(e, t.at(e, x, e), e) != x) return false;
        return true;
      });
      return out;
    }
    case Role::Unit: {
      const OpTable& t = require_op(s, binding.ternary, 3, "role");
      scan([&](int e) {
        for (int x = 0; x < n; ++x)
          if (t.at(e, e, x) != x || t.at(x, e, e) != x || t.at(e, x, e) != x)
            return false;
        return true;
      });
      return out;
    }
  }
  fail("internal", "unreachable role");
}

namespace {

std::string render_set(const Structure& s, const std::vector<int>& set) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out << ", ";
    out << s.carrier.name_of(set[i]);
  }
  out << "}";
  return out.str();
}

}  // namespace

UnitCharReport check_unit_characterizations(const Structure& s,
                                            const std::string& mul) {
  const OpTable& m = require_op(s, mul, 2, "unit characterization");
  const int n = s.order();
  Binding binding;
  binding.mul = mul;

  if (!check_property(s, Prop::RightModular, binding).holds)
    fail("precondition-violated",
         "unit characterizations need a right modular groupoid");
  PropertyReport lid = check_property(s, Prop::LeftIdentity, binding);
  if (!lid.holds)
    fail("precondition-violated",
         "unit characterizations need a left identity");
  int l = s.has_const("l") ? s.constant("l") : *lid.witness;
  for (int x = 0; x < n; ++x)
    if (m.at(l, x) != x)
      fail("precondition-violated",
           "constant l is not a left identity of the groupoid");

  // natural [abc] = (ab)c; star [abc]' = (a(bl))c since x' = xl
  auto nat = [&](int a, int b, int c) { return m.at(m.at(a, b), c); };
  auto star = [&](int a, int b, int c) {
    return m.at(m.at(a, m.at(b, l)), c);
  };

  auto brute_lateral = [&](auto&& t) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = t(u, x, u) == x;
      if (ok) out.push_back(u);
    }
    return out;
  };
  auto brute_outer = [&](auto&& t) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = t(u, t(u, x, u), u) == x;
      if (ok) out.push_back(u);
    }
    return out;
  };
  auto closed = [&](auto&& cond) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
      if (cond(u)) out.push_back(u);
    return out;
  };

  bool all_xl = true;
  for (int x = 0; x < n; ++x)
    if (m.at(x, l) != x) all_xl = false;

  struct Case {
    std::string what;
    std::vector<int> brute;
    std::vector<int> form;
  };
  std::vector<Case> cases;

  {
    std::vector<int> brute = brute_lateral(nat);
    std::vector<int> f1 =
        all_xl ? closed([&](int u) { return m.at(m.at(u, l), u) == l; })
               : std::vector<int>{};
    std::vector<int> f2 =
        all_xl ? closed([&](int u) { return m.at(u, u) == l; })
               : std::vector<int>{};
    cases.push_back({"lateral units of the natural ternary, (ml)m=l form",
                     brute, f1});
    cases.push_back({"lateral units of the natural ternary, l=m*m form",
                     brute, f2});
  }
  {
    std::vector<int> brute = brute_lateral(star);
    std::vector<int> f1 =
        closed([&](int u) { return m.at(m.at(u, l), u) == l; });
    std::vector<int> f2 =
        closed([&](int u) { return m.at(m.at(m.at(u, l), u), l) == l; });
    std::vector<int> f3 = closed([&](int u) {
      int uu = m.at(u, u);
      return m.at(u, uu) == u && m.at(uu, uu) == l;
    });
    cases.push_back({"lateral units of the star ternary, (ml)m=l form",
                     brute, f1});
    cases.push_back({"lateral units of the star ternary, ((ml)m)l=l form",
                     brute, f2});
    cases.push_back(
        {"lateral units of the star ternary, m=m(mm) and l=(mm)(mm) form",
         brute, f3});
  }
  {
    std::vector<int> brute = brute_outer(nat);
    std::vector<int> f = closed([&](int u) {
      int uu = m.at(u, u);
      return m.at(uu, uu) == l;
    });
    cases.push_back({"outer lateral units of the natural ternary", brute, f});
  }
  {
    std::vector<int> brute = brute_outer(star);
    std::vector<int> f = closed([&](int u) {
      int ulm = m.at(m.at(u, l), u);
      int mul_ = m.at(u, m.at(u, l));
      return m.at(ulm, mul_) == l;
    });
    cases.push_back({"outer lateral units of the star ternary", brute, f});
  }

  for (const Case& c : cases)
    if (c.brute != c.form)
      return UnitCharReport{
          false, c.what + ": brute force " + render_set(s, c.brute) +
                     " but closed form " + render_set(s, c.form)};
  return UnitCharReport{true, "all characterizations agree"};
}

}  // namespace finalg

#include "finalg/construct.hpp"

#include <string>

#include "finalg/classify.hpp"
#include "finalg/error.hpp"

namespace finalg {

namespace {

const OpTable& need(const Structure& s, const std::string& name, int arity,
                    const char* what) {
  const OpTable& t = s.op(name);
  if (t.arity != arity)
    fail("arity-mismatch", std::string(what) + ": op '" + name +
                               "' has arity " + std::to_string(t.arity) +
                               ", expected " + std::to_string(arity));
  return t;
}

void cap_check(int n) {
  if (n > kMaxTernaryOrder)
    fail("cap-exceeded", "ternary table of order " + std::to_string(n) +
                             " exceeds the cap of " +
                             std::to_string(kMaxTernaryOrder));
}

void range_check(const Structure& s, int e, const char* what) {
  if (e < 0 || e >= s.order())
    fail("index-out-of-range", std::string(what) + ": element index " +
                                   std::to_string(e) + " out of range for '" +
                                   s.name + "'");
}

Structure derived(const Structure& src, const char* tag) {
  Structure out;
  out.name = src.name + "." + tag;
  out.carrier = src.carrier;
  return out;
}

void pre(bool ok, const std::string& msg) {
  if (!ok) fail("precondition-violated", msg);
}

void post(bool ok, const std::string& msg) {
  if (!ok) fail("postcondition-violated", msg);
}

void pre_prop(const Structure& s, Prop p, const Binding& b,
              const std::string& what) {
  PropertyReport r = check_property(s, p, b);
  if (!r.holds) {
    std::string msg = what + ": '" + s.name + "' is not " +
                      property_info(p).token;
    if (r.counterexample)
      msg += " (" + r.counterexample->render(s.carrier) + ")";
    fail("precondition-violated", msg);
  }
}

// Group recognition used by the section-9 passages: associative, two-sided
// identity, every element invertible. Returns {identity, inverse table}.
std::optional<std::pair<int, OpTable>> try_group(const Structure& s,
                                                 const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "group check");
  const int n = s.order();
  Binding b;
  b.mul = mul;
  if (!check_property(s, Prop::AssociativeBinary, b).holds)
    return std::nullopt;
  PropertyReport idr = check_property(s, Prop::TwoSidedIdentity, b);
  if (!idr.holds) return std::nullopt;
  int e = *idr.witness;
  OpTable inv = OpTable::filled(1, n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (m.at(x, y) == e && m.at(y, x) == e) {
        inv.cell(x) = y;
        break;
      }
    if (inv.at(x) < 0) return std::nullopt;
  }
  return std::make_pair(e, std::move(inv));
}

bool is_left_identity(const OpTable& m, int l) {
  for (int x = 0; x < m.order; ++x)
    if (m.at(l, x) != x) return false;
  return true;
}

}  // namespace

OpTable natural_ternary(const Structure& s, const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "natural ternary");
  const int n = s.order();
  cap_check(n);
  OpTable t = OpTable::filled(3, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.cell(a, b, c) = m.at(m.at(a, b), c);
  return t;
}

OpTable star_ternary(const Structure& s, const std::string& unary,
                     const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "star ternary");
  const OpTable& u = need(s, unary, 1, "star ternary");
  const int n = s.order();
  cap_check(n);
  OpTable t = OpTable::filled(3, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.cell(a, b, c) = m.at(m.at(a, u.at(b)), c);
  return t;
}

OpTable pi_ternary(const OpTable& t, const Perm3& pi) {
  if (t.arity != 3)
    fail("arity-mismatch", "argument shuffle needs a ternary table");
  bool seen[3] = {false, false, false};
  for (int v : pi) {
    if (v < 0 || v > 2 || seen[v])
      fail("precondition-violated", "shuffle is not a permutation of {0,1,2}");
    seen[v] = true;
  }
  const int n = t.order;
  OpTable out = OpTable::filled(3, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int args[3] = {a, b, c};
        out.cell(a, b, c) = t.at(args[pi[0]], args[pi[1]], args[pi[2]]);
      }
  return out;
}

Structure dual_groupoid(const Structure& s, const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "dual");
  Structure out = s;
  out.name = s.name + ".dual";
  OpTable& d = out.ops[mul];
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.cell(a, b) = m.at(b, a);
  return out;
}

Structure gamma_from_semiheap(const Structure& s, int l,
                              const std::string& ternary) {
  const OpTable& t = need(s, ternary, 3, "semiheap-to-groupoid");
  range_check(s, l, "semiheap-to-groupoid");
  const int n = s.order();
  Binding b;
  b.ternary = ternary;
  pre_prop(s, Prop::Semiheap, b, "semiheap-to-groupoid");
  pre_prop(s, Prop::LaterallyCommutative, b, "semiheap-to-groupoid");
  for (int x = 0; x < n; ++x)
    pre(t.at(l, l, x) == x && t.at(x, l, l) == x,
        "semiheap-to-groupoid: table is not bi-unital at " +
            s.carrier.name_of(l));

  Structure out = derived(s, "gamma");
  OpTable m = OpTable::filled(2, n);
  for (int a = 0; a < n; ++a)
    for (int b2 = 0; b2 < n; ++b2) m.cell(a, b2) = t.at(l, a, b2);
  out.ops["mul"] = std::move(m);
  out.consts["l"] = l;

  Binding ob;
  post(check_property(out, Prop::RightModular, ob).holds,
       "semiheap-to-groupoid: result is not right modular");
  post(is_left_identity(out.op("mul"), l),
       "semiheap-to-groupoid: result lacks left identity l");
  return out;
}

Structure reconstruct(const Structure& s, ReconstructScheme scheme, int l,
                      const std::string& hat, const std::string& ternary) {
  const OpTable& t = need(s, ternary, 3, "reconstruct");
  range_check(s, l, "reconstruct");
  const int n = s.order();
  Binding tb;
  tb.ternary = ternary;
  tb.prime = hat;

  const bool needs_hat = scheme != ReconstructScheme::Thm68;
  const OpTable* h = nullptr;
  if (needs_hat) h = &need(s, hat, 1, "reconstruct");

  auto unit_at = [&](bool lateral) {
    for (int x = 0; x < n; ++x) {
      pre(t.at(l, l, x) == x && t.at(x, l, l) == x,
          "reconstruct: table is not bi-unital at " + s.carrier.name_of(l));
      if (lateral)
        pre(t.at(l, x, l) == x,
            "reconstruct: " + s.carrier.name_of(l) + " is not a lateral unit");
    }
  };
  auto involutive = [&]() {
    for (int x = 0; x < n; ++x)
      pre(h->at(h->at(x)) == x, "reconstruct: unary table is not involutive");
  };
  auto left_l_consistent = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          pre(t.at(x, y, z) == t.at(l, t.at(l, x, y), z),
              "reconstruct: table is not left l-consistent");
  };
  auto central_commutant = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        pre(t.at(x, l, y) == t.at(y, l, x),
            "reconstruct: " + s.carrier.name_of(l) +
                " is not a central commutant");
  };

  Structure out;
  switch (scheme) {
    case ReconstructScheme::Thm65: {
      involutive();
      unit_at(true);
      pre_prop(s, Prop::Semiheap, tb, "reconstruct");
      pre_prop(s, Prop::LaterallyCommutative, tb, "reconstruct");
      pre_prop(s, Prop::LeftCommutative, tb, "reconstruct");
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          pre(h->at(t.at(x, h->at(y), l)) == t.at(h->at(x), y, l),
              "reconstruct: identity [x y^ l]^ = [x^ y l] fails");
      out = derived(s, "thm65");
      OpTable m = OpTable::filled(2, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.cell(a, b) = t.at(b, h->at(a), l);
      out.ops["mul"] = std::move(m);
      break;
    }
    case ReconstructScheme::Thm66: {
      involutive();
      unit_at(true);
      pre(h->at(l) == l, "reconstruct: unary table must fix " +
                             s.carrier.name_of(l));
      pre_prop(s, Prop::LeftCommutative, tb, "reconstruct");
      pre_prop(s, Prop::StarCongruent, tb, "reconstruct");
      left_l_consistent();
      central_commutant();
      out = derived(s, "thm66");
      OpTable m = OpTable::filled(2, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.cell(a, b) = t.at(b, l, h->at(a));
      out.ops["mul"] = std::move(m);
      break;
    }
    case ReconstructScheme::Thm67: {
      unit_at(false);
      pre_prop(s, Prop::StarCongruent, tb, "reconstruct");
      left_l_consistent();
      central_commutant();
      for (int x = 0; x < n; ++x)
        pre(t.at(l, x, l) == h->at(x),
            "reconstruct: identity [l x l] = x^ fails");
      out = derived(s, "thm67");
      OpTable m = OpTable::filled(2, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.cell(a, b) = t.at(l, a, b);
      out.ops["mul"] = std::move(m);
      break;
    }
    case ReconstructScheme::Thm68: {
      for (int x = 0; x < n; ++x)
        pre(t.at(x, l, l) == x,
            "reconstruct: table is not right-unital at " +
                s.carrier.name_of(l));
      pre_prop(s, Prop::RightCommutative, tb, "reconstruct");
      for (const char* text : {"[x [y z q] w] = [z w [y x q]]",
                               "[[x y z] q w] = [[x y q] w z]"}) {
        CheckResult cr = check_clause(s, text, tb);
        pre(cr.holds, std::string("reconstruct: identity ") + text +
                          " fails at " + cr.counterexample->render(s.carrier));
      }
      out = derived(s, "thm68");
      OpTable m = OpTable::filled(2, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.cell(a, b) = t.at(b, a, l);
      out.ops["mul"] = std::move(m);
      break;
    }
  }
  if (needs_hat) out.ops[hat] = *h;
  out.consts["l"] = l;

  const OpTable& m = out.op("mul");
  Binding ob;
  ob.prime = hat;
  post(is_left_identity(m, l), "reconstruct: result lacks left identity l");
  switch (scheme) {
    case ReconstructScheme::Thm65: {
      post(check_property(out, Prop::RightModular, ob).holds,
           "reconstruct: thm65 result is not right modular");
      for (int x = 0; x < n; ++x)
        post(h->at(x) == m.at(x, l),
             "reconstruct: thm65 unary disagrees with x*l");
      OpTable star = star_ternary(out, hat);
      post(star == t, "reconstruct: thm65 star ternary mismatch");
      break;
    }
    case ReconstructScheme::Thm66: {
      post(check_property(out, Prop::StarUnary, ob).holds,
           "reconstruct: thm66 result is not star-unary");
      OpTable star = star_ternary(out, hat);
      post(star == t, "reconstruct: thm66 star ternary mismatch");
      break;
    }
    case ReconstructScheme::Thm67: {
      post(check_property(out, Prop::StarUnary, ob).holds,
           "reconstruct: thm67 result is not star-unary");
      post(natural_ternary(out) == t,
           "reconstruct: thm67 natural ternary mismatch");
      break;
    }
    case ReconstructScheme::Thm68: {
      post(check_property(out, Prop::RightModular, ob).holds,
           "reconstruct: thm68 result is not right modular");
      post(natural_ternary(dual_groupoid(out)) == t,
           "reconstruct: thm68 dual natural ternary mismatch");
      break;
    }
  }
  return out;
}

std::optional<int> unique_idempotent(const OpTable& mul) {
  std::optional<int> found;
  for (int x = 0; x < mul.order; ++x)
    if (mul.at(x, x) == x) {
      if (found) return std::nullopt;
      found = x;
    }
  return found;
}

std::optional<int> nwq_unit(const OpTable& t) {
  const int n = t.order;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t.at(x, x, e) == e;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          int v = t.at(x, y, z);
          ok = v == t.at(t.at(x, y, e), z, e) &&
               v == t.at(x, t.at(z, t.at(e, y, e), e), e);
        }
    // both sections of (x,y) -> [xye] must be injective
    for (int x = 0; x < n && ok; ++x) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (int y = 0; y < n && ok; ++y) {
        int v = t.at(x, y, e);
        if (seen[static_cast<std::size_t>(v)]) ok = false;
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }
    for (int y = 0; y < n && ok; ++y) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n && ok; ++x) {
        int v = t.at(x, y, e);
        if (seen[static_cast<std::size_t>(v)]) ok = false;
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

int group_identity(const Structure& g, const std::string& mul) {
  auto gr = try_group(g, mul);
  pre(gr.has_value(), "'" + g.name + "' is not a group under '" + mul + "'");
  return gr->first;
}

OpTable group_inverses(const Structure& g, const std::string& mul) {
  auto gr = try_group(g, mul);
  pre(gr.has_value(), "'" + g.name + "' is not a group under '" + mul + "'");
  return std::move(gr->second);
}

Structure psi(const Structure& g, const std::string& mul) {
  auto gr = try_group(g, mul);
  pre(gr.has_value(), "psi needs a group");
  const OpTable& m = g.op(mul);
  const OpTable& inv = gr->second;
  const int n = g.order();
  cap_check(n);
  Structure out = derived(g, "psi");
  OpTable t = OpTable::filled(3, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        t.cell(x, y, z) = m.at(m.at(x, inv.at(y)), z);
  out.ops["t"] = std::move(t);
  Binding b;
  post(check_property(out, Prop::Heap, b).holds, "psi: result is not a heap");
  return out;
}

Structure omega(const Structure& h, int e, const std::string& t) {
  const OpTable& tt = need(h, t, 3, "omega");
  range_check(h, e, "omega");
  Binding b;
  b.ternary = t;
  pre_prop(h, Prop::Heap, b, "omega");
  const int n = h.order();
  Structure out = derived(h, "omega");
  OpTable m = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.cell(x, y) = tt.at(x, e, y);
  out.ops["mul"] = std::move(m);
  post(try_group(out, "mul").has_value(), "omega: result is not a group");
  return out;
}

Structure pi_map(const Structure& h, int e, const std::string& t) {
  const OpTable& tt = need(h, t, 3, "pi-map");
  range_check(h, e, "pi-map");
  Binding b;
  b.ternary = t;
  pre_prop(h, Prop::Heap, b, "pi-map");
  const int n = h.order();
  Structure out = derived(h, "pi");
  OpTable m = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.cell(x, y) = tt.at(x, y, e);
  out.ops["mul"] = std::move(m);
  Binding ob;
  post(check_property(out, Prop::WardQuasigroup, ob).holds,
       "pi-map: result is not a ward quasigroup");
  return out;
}

namespace {

int ward_unit(const Structure& w, const std::string& mul, const char* what) {
  Binding b;
  b.mul = mul;
  pre_prop(w, Prop::WardQuasigroup, b, what);
  std::optional<int> e = unique_idempotent(w.op(mul));
  if (!e)
    fail("no-unique-idempotent",
         std::string(what) + ": '" + w.name +
             "' does not have exactly one idempotent");
  return *e;
}

}  // namespace

Structure lambda_map(const Structure& w, const std::string& mul) {
  const OpTable& m = need(w, mul, 2, "lambda");
  int e = ward_unit(w, mul, "lambda");
  const int n = w.order();
  cap_check(n);
  Structure out = derived(w, "lambda");
  OpTable t = OpTable::filled(3, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        t.cell(x, y, z) = m.at(m.at(x, y), m.at(e, z));
  out.ops["t"] = std::move(t);
  Binding b;
  post(check_property(out, Prop::Heap, b).holds,
       "lambda: result is not a heap");
  return out;
}

Structure gamma_wq(const Structure& w, const std::string& mul) {
  const OpTable& m = need(w, mul, 2, "gamma-wq");
  int e = ward_unit(w, mul, "gamma-wq");
  const int n = w.order();
  Structure out = derived(w, "gamma-wq");
  OpTable g = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.cell(x, y) = m.at(x, m.at(e, y));
  out.ops["mul"] = std::move(g);
  post(try_group(out, "mul").has_value(), "gamma-wq: result is not a group");
  return out;
}

Structure phi_g(const Structure& g, const std::string& mul) {
  auto gr = try_group(g, mul);
  pre(gr.has_value(), "phi-g needs a group");
  const OpTable& m = g.op(mul);
  const OpTable& inv = gr->second;
  const int n = g.order();
  Structure out = derived(g, "phi");
  OpTable w = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) w.cell(x, y) = m.at(x, inv.at(y));
  out.ops["mul"] = std::move(w);
  Binding b;
  post(check_property(out, Prop::WardQuasigroup, b).holds,
       "phi-g: result is not a ward quasigroup");
  return out;
}

Structure theta(const Structure& g, const std::string& mul) {
  auto gr = try_group(g, mul);
  pre(gr.has_value(), "theta needs a group");
  const OpTable& m = g.op(mul);
  const OpTable& inv = gr->second;
  const int n = g.order();
  cap_check(n);
  Structure out = derived(g, "theta");
  OpTable t = OpTable::filled(3, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        t.cell(x, y, z) = m.at(inv.at(z), m.at(inv.at(y), x));
  out.ops["t"] = std::move(t);
  post(nwq_unit(out.op("t")).has_value(),
       "theta: result has no natural-ward unit");
  return out;
}

Structure sigma(const Structure& t, const std::string& ternary) {
  const OpTable& tt = need(t, ternary, 3, "sigma");
  std::optional<int> e = nwq_unit(tt);
  pre(e.has_value(),
      "sigma: '" + t.name + "' is not the natural ternary of a ward "
      "quasigroup (no qualifying unit)");
  const int n = t.order();
  Structure out = derived(t, "sigma");
  OpTable m = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      m.cell(x, y) = tt.at(y, tt.at(*e, x, *e), *e);
  out.ops["mul"] = std::move(m);
  post(try_group(out, "mul").has_value(), "sigma: result is not a group");
  return out;
}

Structure alpha_map(const Structure& t, const std::string& ternary) {
  const OpTable& tt = need(t, ternary, 3, "alpha-map");
  std::optional<int> e = nwq_unit(tt);
  pre(e.has_value(),
      "alpha-map: '" + t.name + "' is not the natural ternary of a ward "
      "quasigroup (no qualifying unit)");
  const int n = t.order();
  cap_check(n);
  Structure out = derived(t, "alpha");
  OpTable r = OpTable::filled(3, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        r.cell(x, y, z) = tt.at(tt.at(x, y, *e), tt.at(*e, z, *e), *e);
  out.ops["t"] = std::move(r);
  Binding b;
  post(check_property(out, Prop::Heap, b).holds,
       "alpha-map: result is not a heap");
  return out;
}

Structure beta_map(const Structure& h, int point, const std::string& t) {
  const OpTable& tt = need(h, t, 3, "beta-map");
  range_check(h, point, "beta-map");
  Binding b;
  b.ternary = t;
  pre_prop(h, Prop::Heap, b, "beta-map");
  const int n = h.order();
  cap_check(n);
  Structure out = derived(h, "beta");
  OpTable r = OpTable::filled(3, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        r.cell(x, y, z) = tt.at(tt.at(x, y, point), z, point);
  out.ops["t"] = std::move(r);
  post(nwq_unit(out.op("t")).has_value(),
       "beta-map: result has no natural-ward unit");
  return out;
}

std::pair<Structure, Structure> example1_pair(int n) {
  pre(n >= 2, "example1 needs order >= 2");
  Carrier carrier = default_carrier(n);
  Structure a;
  a.name = "ex1-leftzero";
  a.carrier = carrier;
  OpTable ma = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ma.cell(x, y) = x;
  a.ops["mul"] = std::move(ma);

  Structure b;
  b.name = "ex1-variant";
  b.carrier = carrier;
  OpTable mb = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mb.cell(x, y) = x == 0 ? 1 : x == 1 ? 0 : x;
  b.ops["mul"] = std::move(mb);

  post(natural_ternary(a) == natural_ternary(b),
       "example1: natural ternary tables differ");
  return {std::move(a), std::move(b)};
}

}  // namespace finalg

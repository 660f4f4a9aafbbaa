#include "finalg/inverse.hpp"

#include <algorithm>
#include <sstream>

#include "finalg/classify.hpp"
#include "finalg/construct.hpp"
#include "finalg/error.hpp"
#include "finalg/format.hpp"
#include "finalg/iso.hpp"

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

void post(bool ok, const std::string& msg) {
  if (!ok) fail("postcondition-violated", msg);
}

// candidates b with (ab)a = a and (ba)b = b
int count_inverses(const OpTable& m, int a, int* found) {
  int count = 0;
  for (int b = 0; b < m.order; ++b)
    if (m.at(m.at(a, b), a) == a && m.at(m.at(b, a), b) == b) {
      ++count;
      *found = b;
    }
  return count;
}

std::vector<int> idempotents_of(const OpTable& m) {
  std::vector<int> out;
  for (int x = 0; x < m.order; ++x)
    if (m.at(x, x) == x) out.push_back(x);
  return out;
}

Structure wrap_ternary(const Carrier& carrier, OpTable t,
                       const std::string& name) {
  Structure s;
  s.name = name;
  s.carrier = carrier;
  s.ops["t"] = std::move(t);
  return s;
}

bool generalised_heap_holds(const Carrier& carrier, const OpTable& t) {
  Structure w = wrap_ternary(carrier, t, "check");
  Binding b;
  b.ternary = "t";
  return check_property(w, Prop::GeneralisedHeap, b).holds;
}

bool associative_holds(const Structure& s, const std::string& mul,
                       std::string* counterexample) {
  Binding b;
  b.mul = mul;
  PropertyReport r = check_property(s, Prop::AssociativeBinary, b);
  if (!r.holds && counterexample && r.counterexample)
    *counterexample = r.counterexample->render(s.carrier);
  return r.holds;
}

}  // namespace

InverseCert inverse_cert(const Structure& s, const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "inverse certificate");
  const int n = s.order();
  InverseCert cert;
  cert.inv.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int b = -1;
    int count = count_inverses(m, a, &b);
    if (count != 1)
      fail("not-inverse", "element " + s.carrier.name_of(a) + " has " +
                              std::to_string(count) + " inverses in '" +
                              s.name + "'");
    cert.inv[static_cast<std::size_t>(a)] = b;
  }
  cert.idempotents = idempotents_of(m);
  for (int a = 0; a < n; ++a) {
    int ia = cert.inv[static_cast<std::size_t>(a)];
    post(cert.inv[static_cast<std::size_t>(ia)] == a,
         "inverse map is not an involution");
    post(m.at(m.at(a, ia), a) == a && m.at(m.at(ia, a), ia) == ia,
         "inverse certificate fails its defining equations");
  }
  return cert;
}

std::string serialize_cert(const Structure& s, const InverseCert& cert) {
  Structure out = s;
  OpTable inv = OpTable::filled(1, s.order());
  for (int a = 0; a < s.order(); ++a)
    inv.cell(a) = cert.inv[static_cast<std::size_t>(a)];
  out.ops["inv"] = std::move(inv);
  std::string text = serialize(out);
  std::ostringstream comment;
  comment << "# idempotents:";
  for (int e : cert.idempotents) comment << " " << s.carrier.name_of(e);
  comment << "\n";
  // before the closing "end" line
  std::size_t at = text.rfind("end\n");
  text.insert(at, comment.str());
  return text;
}

OpTable standard_ternary_table(const Structure& s, const InverseCert& cert,
                               const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "standard ternary");
  const int n = s.order();
  if (n > kMaxTernaryOrder)
    fail("cap-exceeded", "ternary table of order " + std::to_string(n) +
                             " exceeds the cap of " +
                             std::to_string(kMaxTernaryOrder));
  OpTable t = OpTable::filled(3, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        t.cell(a, b, c) =
            m.at(m.at(a, cert.inv[static_cast<std::size_t>(b)]), c);
  return t;
}

OpTable standard_ternary(const Structure& s, const std::string& mul) {
  std::string cx;
  if (!associative_holds(s, mul, &cx))
    fail("precondition-violated",
         "standard ternary needs an associative product (fails at " + cx +
             ")");
  InverseCert cert = inverse_cert(s, mul);
  OpTable t = standard_ternary_table(s, cert, mul);

  const OpTable& m = s.op(mul);
  bool commuting = true;
  for (int e : cert.idempotents)
    for (int f : cert.idempotents)
      if (m.at(e, f) != m.at(f, e)) commuting = false;
  if (commuting)
    post(generalised_heap_holds(s.carrier, t),
         "standard ternary of an inverse semigroup must be a generalised "
         "heap");
  return t;
}

bool is_inverse_semigroup(const Structure& s, std::string* detail,
                          const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "inverse semigroup check");
  std::string cx;
  if (!associative_holds(s, mul, &cx)) {
    if (detail) *detail = "not associative (fails at " + cx + ")";
    return false;
  }
  const int n = s.order();
  for (int a = 0; a < n; ++a) {
    int b = -1;
    int count = count_inverses(m, a, &b);
    if (count != 1) {
      if (detail)
        *detail = "element " + s.carrier.name_of(a) + " has " +
                  std::to_string(count) + " inverses";
      return false;
    }
  }
  std::vector<int> es = idempotents_of(m);
  for (int e : es)
    for (int f : es)
      if (m.at(e, f) != m.at(f, e)) {
        if (detail)
          *detail = "idempotents " + s.carrier.name_of(e) + " and " +
                    s.carrier.name_of(f) + " do not commute";
        return false;
      }
  return true;
}

Structure gh_to_inverse_semigroup(const Structure& s,
                                  const std::string& ternary,
                                  const std::string& prime,
                                  const std::string& hat) {
  const OpTable& t = need(s, ternary, 3, "heap-to-semigroup");
  const OpTable& p = need(s, prime, 1, "heap-to-semigroup");
  const OpTable& h = need(s, hat, 1, "heap-to-semigroup");
  const int n = s.order();

  Binding b;
  b.ternary = ternary;
  PropertyReport gh = check_property(s, Prop::GeneralisedHeap, b);
  if (!gh.holds)
    fail("precondition-violated",
         "'" + s.name + "' is not a generalised heap (" + gh.failed_clause +
             " fails)");
  for (int x = 0; x < n; ++x) {
    if (p.at(p.at(x)) != x)
      fail("precondition-violated", "prime map is not involutive at " +
                                        s.carrier.name_of(x));
    if (h.at(h.at(x)) != h.at(x))
      fail("precondition-violated",
           "hat map is not idempotent at " + s.carrier.name_of(x));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (t.at(x, h.at(x), y) != t.at(x, p.at(y), h.at(y)))
        fail("precondition-violated",
             "identity [x x^ y] = [x y' y^] fails at x=" +
                 s.carrier.name_of(x) + " y=" + s.carrier.name_of(y));
    if (t.at(h.at(x), h.at(x), p.at(x)) != p.at(x))
      fail("precondition-violated",
           "identity [x^ x^ x'] = x' fails at x=" + s.carrier.name_of(x));
    if (t.at(p.at(x), p.at(x), h.at(x)) != h.at(x))
      fail("precondition-violated",
           "identity [x' x' x^] = x^ fails at x=" + s.carrier.name_of(x));
  }

  Structure out;
  out.name = s.name + ".gh-product";
  out.carrier = s.carrier;
  OpTable m = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.cell(x, y) = t.at(x, h.at(x), y);
  out.ops["mul"] = std::move(m);

  std::string why;
  post(is_inverse_semigroup(out, &why),
       "heap-to-semigroup result is not an inverse semigroup: " + why);
  InverseCert cert = inverse_cert(out);
  for (int x = 0; x < n; ++x)
    post(cert.inv[static_cast<std::size_t>(x)] == p.at(x),
         "heap-to-semigroup inversion differs from the prime map");
  post(standard_ternary_table(out, cert) == t,
       "heap-to-semigroup standard ternary differs from the input");
  return out;
}

Structure natural_ternary_inverse_check(const Structure& s,
                                        const std::string& ternary,
                                        const std::string& prime,
                                        const std::string& hat) {
  const OpTable& t = need(s, ternary, 3, "ternary-to-semigroup");
  const OpTable& p = need(s, prime, 1, "ternary-to-semigroup");
  const OpTable& h = need(s, hat, 1, "ternary-to-semigroup");
  const int n = s.order();

  Binding b;
  b.ternary = ternary;
  PropertyReport assoc = check_property(s, Prop::AssociativeTernary, b);
  if (!assoc.holds)
    fail("precondition-violated",
         "'" + s.name + "' is not ternary-associative (" +
             assoc.failed_clause + " fails)");
  for (int x = 0; x < n; ++x) {
    if (p.at(p.at(x)) != x)
      fail("precondition-violated", "prime map is not involutive at " +
                                        s.carrier.name_of(x));
    if (h.at(h.at(x)) != h.at(x))
      fail("precondition-violated",
           "hat map is not idempotent at " + s.carrier.name_of(x));
  }
  auto id_fail = [&](const char* text, int x) {
    fail("precondition-violated", std::string("identity ") + text +
                                      " fails at x=" + s.carrier.name_of(x));
  };
  for (int x = 0; x < n; ++x) {
    if (t.at(x, p.at(x), x) != x) id_fail("[x x' x] = x", x);
    if (t.at(x, h.at(x), h.at(x)) != x) id_fail("[x x^ x^] = x", x);
    if (t.at(h.at(x), h.at(x), p.at(x)) != p.at(x))
      id_fail("[x^ x^ x'] = x'", x);
    if (t.at(p.at(x), x, h.at(x)) != h.at(x)) id_fail("[x' x x^] = x^", x);
    if (t.at(h.at(x), p.at(x), x) != h.at(x)) id_fail("[x^ x' x] = x^", x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.at(x, h.at(x), y) != t.at(x, y, h.at(y)))
        fail("precondition-violated",
             "identity [x x^ y] = [x y y^] fails at x=" +
                 s.carrier.name_of(x) + " y=" + s.carrier.name_of(y));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lx = t.at(x, h.at(x), p.at(x));
      int ry = t.at(p.at(y), y, h.at(y));
      if (t.at(lx, ry, h.at(ry)) != t.at(ry, lx, h.at(lx)))
        fail("precondition-violated",
             "identity [[x x^ x'] [y' y y^] [y' y y^]^] = "
             "[[y' y y^] [x x^ x'] [x x^ x']^] fails at x=" +
                 s.carrier.name_of(x) + " y=" + s.carrier.name_of(y));
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.at(x, y, z) != t.at(t.at(x, h.at(x), y), z, h.at(z)))
          fail("precondition-violated",
               "identity [x y z] = [[x x^ y] z z^] fails at x=" +
                   s.carrier.name_of(x) + " y=" + s.carrier.name_of(y) +
                   " z=" + s.carrier.name_of(z));

  Structure out;
  out.name = s.name + ".nat-product";
  out.carrier = s.carrier;
  OpTable m = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.cell(x, y) = t.at(x, h.at(x), y);
  out.ops["mul"] = std::move(m);

  std::string why;
  post(is_inverse_semigroup(out, &why),
       "ternary-to-semigroup result is not an inverse semigroup: " + why);
  post(natural_ternary(out) == t,
       "ternary-to-semigroup natural ternary differs from the input");
  return out;
}

CliffordDecomposition clifford_decompose(const Structure& s,
                                         const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "clifford decomposition");
  std::string cx;
  if (!associative_holds(s, mul, &cx))
    fail("precondition-violated",
         "clifford decomposition needs an associative product (fails at " +
             cx + ")");
  const int n = s.order();

  CliffordDecomposition d;
  d.cert.inv.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int b = -1;
    int count = count_inverses(m, a, &b);
    if (count != 1)
      fail("not-clifford", "element " + s.carrier.name_of(a) + " has " +
                               std::to_string(count) + " inverses");
    d.cert.inv[static_cast<std::size_t>(a)] = b;
  }
  d.cert.idempotents = idempotents_of(m);
  for (int e : d.cert.idempotents)
    for (int x = 0; x < n; ++x)
      if (m.at(e, x) != m.at(x, e))
        fail("not-clifford",
             "idempotent " + s.carrier.name_of(e) + " is not central");
  for (int a = 0; a < n; ++a) {
    int ia = d.cert.inv[static_cast<std::size_t>(a)];
    if (m.at(a, ia) != m.at(ia, a))
      fail("not-clifford", "a*inv(a) and inv(a)*a differ at " +
                               s.carrier.name_of(a));
  }

  d.component_of.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    d.component_of[static_cast<std::size_t>(a)] =
        m.at(d.cert.inv[static_cast<std::size_t>(a)], a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      post(d.component_of[static_cast<std::size_t>(m.at(a, b))] ==
               m.at(d.component_of[static_cast<std::size_t>(a)],
                    d.component_of[static_cast<std::size_t>(b)]),
           "component map is not multiplicative");

  for (int e : d.cert.idempotents) {
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (d.component_of[static_cast<std::size_t>(a)] == e)
        members.push_back(a);
    Structure g;
    g.name = s.name + ".comp-" + s.carrier.name_of(e);
    for (int a : members) g.carrier.names.push_back(s.carrier.name_of(a));
    const int k = static_cast<int>(members.size());
    OpTable gm = OpTable::filled(2, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int v = m.at(members[static_cast<std::size_t>(i)],
                     members[static_cast<std::size_t>(j)]);
        auto it = std::find(members.begin(), members.end(), v);
        post(it != members.end(), "component of " + s.carrier.name_of(e) +
                                      " is not closed under the product");
        gm.cell(i, j) = static_cast<int>(it - members.begin());
      }
    g.ops["mul"] = std::move(gm);
    // identity and inverses within the component
    for (int i = 0; i < k; ++i) {
      int a = members[static_cast<std::size_t>(i)];
      post(m.at(e, a) == a && m.at(a, e) == a,
           "component idempotent is not its identity");
      post(d.component_of[static_cast<std::size_t>(
               d.cert.inv[static_cast<std::size_t>(a)])] == e,
           "inverse escapes its component");
    }
    d.groups.emplace(e, std::move(g));
  }
  return d;
}

Structure alpha_determined(const Structure& s, const OpTable& alpha,
                           const std::string& mul) {
  CliffordDecomposition d = clifford_decompose(s, mul);
  const OpTable& m = s.op(mul);
  const int n = s.order();
  if (alpha.arity != 1 || alpha.order != n)
    fail("precondition-violated",
         "alpha must be a unary table over the same carrier");
  for (int x = 0; x < n; ++x) {
    if (alpha.at(alpha.at(x)) != x)
      fail("precondition-violated",
           "alpha is not involutive at " + s.carrier.name_of(x));
    for (int y = 0; y < n; ++y)
      if (alpha.at(m.at(x, y)) != m.at(alpha.at(x), alpha.at(y)))
        fail("precondition-violated",
             "alpha is not an automorphism at x=" + s.carrier.name_of(x) +
                 " y=" + s.carrier.name_of(y));
  }
  for (int e : d.cert.idempotents)
    if (alpha.at(e) != e)
      fail("precondition-violated",
           "alpha moves the idempotent " + s.carrier.name_of(e));

  Structure out;
  out.name = s.name + ".alpha";
  out.carrier = s.carrier;
  OpTable r = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.cell(x, y) = m.at(alpha.at(x), y);
  out.ops["mul"] = std::move(r);
  const OpTable& rt = out.op("mul");

  InverseCert twisted;
  {
    twisted.inv.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      int b = -1;
      int count = count_inverses(rt, a, &b);
      post(count == 1, "twisted product is not an inverse groupoid at " +
                           s.carrier.name_of(a));
      twisted.inv[static_cast<std::size_t>(a)] = b;
    }
    twisted.idempotents = idempotents_of(rt);
  }
  post(twisted.idempotents == d.cert.idempotents,
       "twisting changed the idempotent set");

  OpTable st = standard_ternary_table(out, twisted);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        post(st.at(a, b, c) ==
                 m.at(m.at(a, d.cert.inv[static_cast<std::size_t>(b)]), c),
             "twisted standard ternary differs from a*inv(b)*c");
  post(generalised_heap_holds(s.carrier, st),
       "twisted standard ternary is not a generalised heap");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e2 = 0; e2 < n; ++e2)
          post(rt.at(rt.at(rt.at(a, b), c), e2) ==
                   rt.at(a, rt.at(rt.at(b, c), e2)),
               "paraassociativity (ab.c)d = a(bc.d) fails");
  for (int e : d.cert.idempotents)
    for (int a = 0; a < n; ++a)
      post(rt.at(e, a) == rt.at(alpha.at(a), e),
           "idempotent commutation ea = alpha(a).e fails");
  return out;
}

std::vector<OpTable> admissible_automorphisms(const Structure& s,
                                              const std::string& mul) {
  const OpTable& m = need(s, mul, 2, "admissible automorphisms");
  const int n = s.order();
  std::vector<int> es = idempotents_of(m);
  std::vector<OpTable> out;
  for (const Bijection& phi : automorphisms(s, {mul})) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = phi.forward[static_cast<std::size_t>(
               phi.forward[static_cast<std::size_t>(x)])] == x;
    for (int e : es)
      if (ok && phi.forward[static_cast<std::size_t>(e)] != e) ok = false;
    if (!ok) continue;
    OpTable a = OpTable::filled(1, n);
    for (int x = 0; x < n; ++x)
      a.cell(x) = phi.forward[static_cast<std::size_t>(x)];
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace finalg

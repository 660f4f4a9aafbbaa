#pragma once

#include <array>
#include <string>

#include "finalg/algebra.hpp"

namespace finalg {

// Table-level constructions. Every construction re-validates its advertised
// precondition (throwing Error("precondition-violated", ...)) and its
// postcondition (Error("postcondition-violated", ...) would signal an
// implementation bug; checks are cheap at desk scale and always on).

// [abc] = (ab)c. Throws "cap-exceeded" past kMaxTernaryOrder.
OpTable natural_ternary(const Structure& s, const std::string& mul = "mul");

// [abc]' = (a u(b)) c for a unary table u.
OpTable star_ternary(const Structure& s, const std::string& unary,
                     const std::string& mul = "mul");

// Argument shuffle: out[a1,a2,a3] = t[a_{pi[0]}, a_{pi[1]}, a_{pi[2]}],
// pi a permutation of {0,1,2}.
using Perm3 = std::array<int, 3>;
OpTable pi_ternary(const OpTable& t, const Perm3& pi);

// x (x) y = y x.
Structure dual_groupoid(const Structure& s, const std::string& mul = "mul");

// Inverse of the natural-ternary passage: for a laterally commutative
// semiheap that is bi-unital at l, a*b = [l a b]. Output is right modular
// with left identity l (re-checked); carries const "l".
Structure gamma_from_semiheap(const Structure& s, int l,
                              const std::string& ternary = "t");

// Reconstruction of a product from a ternary table. Each scheme validates
// its own hypothesis bundle on (t, l, hat) and re-checks the advertised
// class of the result:
//   thm65: a*b = [b a^ l]; right modular, left identity l,
//          star ternary (with hat) equal to t.
//   thm66: a*b = [b l a^]; hat-unary with left identity l,
//          star ternary (with hat) equal to t.
//   thm67: a*b = [l a b];  hat-unary with left identity l,
//          natural ternary equal to t.
//   thm68: a*b = [b a l];  right modular with left identity l, natural
//          ternary of the dual equal to t (no hat needed).
enum class ReconstructScheme { Thm65, Thm66, Thm67, Thm68 };
Structure reconstruct(const Structure& s, ReconstructScheme scheme, int l,
                      const std::string& hat = "hat",
                      const std::string& ternary = "t");

// Group / heap / Ward-quasigroup passages. Groups are structures whose mul
// is associative with a two-sided identity and inverses; heaps are ternary
// structures classifying heap; Ward quasigroups are cancellative groupoids
// with (xz)(yz) = xy and a unique idempotent e (their right unit).
//
//   psi(G):        heap        [xyz] = (x y^-1) z
//   omega(H,e):    group       x*y = [x e y]
//   pi_map(H,e):   ward qgp    x*y = [x y e]
//   lambda(W):     heap        [xyz] = (xy)(ez),  e = unique idempotent
//   gamma_wq(W):   group       x*y = x(ey),       e = unique idempotent
//   phi_g(G):      ward qgp    x*y = x y^-1
//   theta(G):      nwq ternary [xyz] = z^-1 (y^-1 x)
//   sigma(T):      group       x*y = [y [e x e] e], e = nwq unit of T
//   alpha_map(T):  heap        [xyz] = [[x y e] [e z e] e]
//   beta_map(H,h): nwq ternary [xyz] = [[x y h] z h]
Structure psi(const Structure& g, const std::string& mul = "mul");
Structure omega(const Structure& h, int e, const std::string& t = "t");
Structure pi_map(const Structure& h, int e, const std::string& t = "t");
Structure lambda_map(const Structure& w, const std::string& mul = "mul");
Structure gamma_wq(const Structure& w, const std::string& mul = "mul");
Structure phi_g(const Structure& g, const std::string& mul = "mul");
Structure theta(const Structure& g, const std::string& mul = "mul");
Structure sigma(const Structure& t, const std::string& ternary = "t");
Structure alpha_map(const Structure& t, const std::string& ternary = "t");
Structure beta_map(const Structure& h, int point, const std::string& t = "t");

// Natural ternary of a Ward quasigroup: locates the smallest e satisfying
//   [xxe] = e,  [xyz] = [[xye]ze] = [x[z[eye]e]e],  and both cancellation
// conditions in the last slot-pair; nullopt when none qualifies.
std::optional<int> nwq_unit(const OpTable& t);

// Unique idempotent of a binary table; nullopt when zero or several.
std::optional<int> unique_idempotent(const OpTable& mul);

// Identity element and inverse table of a group; throws
// "precondition-violated" when s is not a group.
int group_identity(const Structure& g, const std::string& mul = "mul");
OpTable group_inverses(const Structure& g, const std::string& mul = "mul");

// The order-n pair with identical natural ternaries but non-isomorphic
// products: left-zero x*y = x versus the variant whose first two rows are
// the constant rows 1 and 0. Requires n >= 2.
std::pair<Structure, Structure> example1_pair(int n);

}  // namespace finalg

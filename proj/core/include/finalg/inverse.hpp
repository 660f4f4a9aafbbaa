#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// Inverse certificate of a groupoid: for every a the unique b with
// (ab)a = a and (ba)b = b. Unique inverses make inv an involution; both
// facts are re-checked after construction.
struct InverseCert {
  std::vector<int> inv;
  std::vector<int> idempotents;  // increasing order
};

// Throws Error("not-inverse", ...) naming the first element with zero or
// several inverses.
InverseCert inverse_cert(const Structure& s, const std::string& mul = "mul");

// Serialized as an "op inv" block appended to the structure, preceded by a
// comment listing the idempotents by name.
std::string serialize_cert(const Structure& s, const InverseCert& cert);

// Standard ternary {abc} = (a b^-1) c from a certificate.
OpTable standard_ternary_table(const Structure& s, const InverseCert& cert,
                               const std::string& mul = "mul");

// The inverse-semigroup form: additionally requires mul associative
// ("precondition-violated" otherwise). Output passes the generalised-heap
// check whenever idempotents commute (re-checked in that case).
OpTable standard_ternary(const Structure& s, const std::string& mul = "mul");

// True iff mul is associative, every element has a unique inverse and
// idempotents commute. detail names the first failure.
bool is_inverse_semigroup(const Structure& s, std::string* detail = nullptr,
                          const std::string& mul = "mul");

// Recovers a product from a generalised heap plus unary maps: requires t a
// generalised heap, prime involutive, hat idempotent and the three bridge
// identities
//   [x x^ y] = [x y' y^],   [x^ x^ x'] = x',   [x' x' x^] = x^ .
// Output x*y = t[x, x^, y] is an inverse semigroup whose standard ternary is
// t and whose inversion is prime (re-checked).
Structure gh_to_inverse_semigroup(const Structure& s,
                                  const std::string& ternary = "t",
                                  const std::string& prime = "inv",
                                  const std::string& hat = "hat");

// Recovers a product from a ternary-associative table plus unary maps
// satisfying
//   x = [x x' x] = [x x^ x^]          [x x^ y] = [x y y^]
//   x' = [x^ x^ x']                   x^ = [x' x x^] = [x^ x' x]
//   [[x x^ x'][y' y y^][y' y y^]^] = [[y' y y^][x x^ x'][x x^ x']^]
//   [x y z] = [[x x^ y] z z^]
// with prime involutive and hat idempotent. Output x*y = t[x, x^, y] is an
// inverse semigroup whose natural ternary is t (re-checked).
Structure natural_ternary_inverse_check(const Structure& s,
                                        const std::string& ternary = "t",
                                        const std::string& prime = "inv",
                                        const std::string& hat = "hat");

// Clifford decomposition: inverse semigroup with central idempotents.
// component_of[a] = the idempotent (a^-1 a); groups[e] is the maximal group
// over idempotent e, as a structure on the sub-carrier.
struct CliffordDecomposition {
  InverseCert cert;
  std::vector<int> component_of;
  std::map<int, Structure> groups;
};

// "precondition-violated" when mul is not associative; "not-clifford" naming
// the non-central idempotent or inverse failure otherwise.
CliffordDecomposition clifford_decompose(const Structure& s,
                                         const std::string& mul = "mul");

// Twisted product x*y = s.mul(alpha(x), y) for an involutive automorphism
// alpha of a Clifford semigroup fixing every idempotent (all validated).
// Postconditions re-checked: the result is an inverse groupoid whose
// standard ternary equals (a alpha's-free form) a * b^-1 * c computed in s,
// passes the generalised-heap check, satisfies (ab.c)d = a(bc.d), and
// e*a = (alpha a)*e for every idempotent e.
Structure alpha_determined(const Structure& s, const OpTable& alpha,
                           const std::string& mul = "mul");

// All admissible twists: involutive automorphisms fixing every idempotent.
std::vector<OpTable> admissible_automorphisms(const Structure& s,
                                              const std::string& mul = "mul");

}  // namespace finalg

#pragma once

#include <string>

#include "g2tk/matrix.hpp"
#include "g2tk/octonion.hpp"

namespace g2tk {

// Element of the 4-dimensional symplectic representation, stored as the
// four-tuple (a, b/3, c/3, d) for the binary cubic a x^3 + b x^2 y + c x y^2
// + d y^3.  Keeping the thirds exact makes integrality of (a,b,c,d) a
// separate predicate.
struct WVector {
  Rational a{}, b3{}, c3{}, d{};

  bool operator==(const WVector&) const = default;

  // Integer cubic coefficients (a, b, c, d).
  Rational cb() const { return 3 * b3; }
  Rational cc() const { return 3 * c3; }
  bool is_integral() const;

  WVector operator+(const WVector& o) const { return {a + o.a, b3 + o.b3, c3 + o.c3, d + o.d}; }
  WVector operator-(const WVector& o) const { return {a - o.a, b3 - o.b3, c3 - o.c3, d - o.d}; }
  WVector operator*(const Rational& s) const { return {a * s, b3 * s, c3 * s, d * s}; }
};

// <w, w'> = ad' - (1/3) b c' + (1/3) c b' - d a'.
Rational symplectic(const WVector& w, const WVector& w2);

// Right translation action twisted by det^{-1}: (g . f)(x, y) = det(g)^{-1}
// f((x, y) g).  This is the convention used throughout the orthogonal-group
// realization below.
WVector cubic_act_right(const MatQ& g, const WVector& f);

// Left action by inverse substitution twisted by det^2:
// (m . f)(u, v) = det(m)^2 f(m^{-1} (u, v)^t).
// The two Levi identifications behind these conventions differ by
// conjugation by [[0, 1], [-1, 0]]; the exact formula-level relation is
//   cubic_act_right(g, f) == det(g) * cubic_act_left(transpose(g)^{-1}, f),
// asserted in the test suite.  Conversions are never performed silently.
WVector cubic_act_left(const MatQ& m, const WVector& f);

// "a,b,c,d" with the integer cubic coefficients (not the thirds).
std::string to_string(const WVector& w);
WVector parse_wvector(const std::string& s);

// --- The 7-dimensional orthogonal realization ---
// Ordered basis of V7: e1, e3*, e2*, u0, -e2, -e1*, -e3.  The Gram matrix is
// [[0,0,I2],[0,S,0],[I2,0,0]] with S = antidiag(1,-2,1).

MatQ so7_gram();

// Coordinate change between the trace-zero octonion basis (e1,e2,e3,u0,
// e1*,e2*,e3*) and the ordered basis above.
V7Q so7_from_v7(const V7Q& x);
V7Q v7_from_so7(const V7Q& x);

// g |-> diag(g, Ad0(g), tg^{-1}); rejects singular g.
MatQ m_embed(const MatQ& h);

// Unipotent element attached to (w, mu): exp of the nilpotent matrix below.
MatQ n_embed(const WVector& w, const Rational& mu);

// The nilpotent matrix itself (the derivative of n_embed at the identity):
// [[0, h', -mu J2],[0, 0, h],[0, 0, 0]] with h the 3x2 symmetric-pair matrix
// of w and h' = -th S.
MatQ n_embed_lie(const WVector& w, const Rational& mu);

}  // namespace g2tk

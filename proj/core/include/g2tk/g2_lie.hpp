#pragma once

#include <array>
#include <string>
#include <utility>

#include "g2tk/matrix.hpp"
#include "g2tk/octonion.hpp"

namespace g2tk {

inline constexpr int kG2Dim = 14;
inline constexpr int kWedgeDim = 21;

// Ordered 14-element basis of the kernel of wedge^2 V7 -> V7.
enum G2BasisIndex {
  kE21 = 0,
  kE31,
  kE32,
  kE12,
  kE13,
  kE23,
  kEps1,  // E22 - E33
  kEps2,  // E11 - E22
  kV1,
  kV2,
  kV3,
  kDelta1,
  kDelta2,
  kDelta3,
};

const char* g2_basis_name(int idx);

template <typename T>
using Wedge2 = std::array<T, kWedgeDim>;

using Wedge2Q = Wedge2<Rational>;
using Wedge2G = Wedge2<GaussianRational>;

// Index of b_i ^ b_j (i < j) in the lexicographic wedge basis of wedge^2 V7,
// where b_0..b_6 = e1, e2, e3, u0, e1*, e2*, e3*.
int wedge_index(int i, int j);
const std::array<std::pair<int, int>, kWedgeDim>& wedge_pairs();

// Adds c * (b_i ^ b_j) handling orientation; i == j contributes nothing.
template <typename T>
void wedge_add(Wedge2<T>& w, const T& c, int i, int j) {
  if (i == j) return;
  if (i < j)
    w[wedge_index(i, j)] += c;
  else
    w[wedge_index(j, i)] -= c;
}

// (w ^ x) . v = (x, v) w - (w, v) x, extended bilinearly.
template <typename T>
V7<T> wedge_action(const Wedge2<T>& w, const V7<T>& t);

// wedge^2 V7 -> V7 induced by w ^ x |-> Im(wx); its kernel is the algebra.
template <typename T>
V7<T> proj_v7(const Wedge2<T>& w);

struct G2Element {
  std::array<GaussianRational, kG2Dim> c{};

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  G2Element conj() const {
    G2Element r;
    for (int i = 0; i < kG2Dim; ++i) r.c[i] = c[i].conj();
    return r;
  }
  G2Element operator+(const G2Element& o) const {
    G2Element r;
    for (int i = 0; i < kG2Dim; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  G2Element operator-(const G2Element& o) const {
    G2Element r;
    for (int i = 0; i < kG2Dim; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  G2Element operator-() const {
    G2Element r;
    for (int i = 0; i < kG2Dim; ++i) r.c[i] = -c[i];
    return r;
  }
  G2Element operator*(const GaussianRational& s) const {
    G2Element r;
    for (int i = 0; i < kG2Dim; ++i) r.c[i] = c[i] * s;
    return r;
  }
  friend bool operator==(const G2Element& a, const G2Element& b) { return a.c == b.c; }
};

G2Element g2_basis(int idx);
G2Element g2_E(int k, int j);  // k != j, 1-based
G2Element g2_eps1();
G2Element g2_eps2();
G2Element g2_v(int j);      // 1-based
G2Element g2_delta(int j);  // 1-based
// Traceless diagonal a1 E11 + a2 E22 + a3 E33 (requires a1+a2+a3 = 0).
G2Element g2_diag(const GaussianRational& a1, const GaussianRational& a2, const GaussianRational& a3);

// Compact generators u_j, r_j spanning the two commuting su(2)'s, and the
// associated sl2-triples over Q(i).
G2Element g2_u(int j);
G2Element g2_r(int j);

struct CompactTriples {
  G2Element h_u, e_u, f_u;
  G2Element h_r, e_r, f_r;
};
CompactTriples compact_triples();

// The -1 eigenspace basis adapted to the two sl2-triples, plus the spanning
// elements y_j = v_j - delta_j and f_j = E_{j+1,j+2} + E_{j+2,j+1}.
struct PBasisElems {
  G2Element d3, d1, dm1, dm3;
  G2Element h3, h1, hm1, hm3;
};
PBasisElems p_basis();
G2Element g2_y(int j);
G2Element g2_fsym(int j);

// Image of gl2 in the algebra: (a b; c d) |-> a eps1 + d eps2 + b v2 - c delta2.
G2Element levi_embed(const MatG& m);

const MatQ& g2_basis_matrix();  // 21 x 14, columns are the basis two-forms
MatQ proj_v7_matrix();          // 7 x 21 over Q

Wedge2G to_wedge(const G2Element& x);
// Exact solve back to basis coordinates; throws if w is outside the span.
G2Element from_wedge(const Wedge2G& w);

// Bracket via the derived structure-constant table (computed once from the
// two-form bracket and an exact linear solve, then reused).
G2Element bracket(const G2Element& x, const G2Element& y);

// Restriction of (w^x, y^z) = (w,z)(x,y) - (w,y)(x,z); proportional to the
// Killing form.  Bilinear, not sesquilinear.
GaussianRational killing_pair(const G2Element& x, const G2Element& y);

G2Element cartan_theta(const G2Element& x);
std::pair<G2Element, G2Element> kp_decompose(const G2Element& x);  // (theta=+1, theta=-1)

// Gram matrix of B_theta(x, y) = -(x, theta y) on the rational basis.
MatQ btheta_gram();

// X = n + m + k with n in the Heisenberg nilradical (recorded as the binary
// cubic (a, b/3, c/3, d) plus the central coefficient mu), m in the span of
// eps1, eps2, v2, and k in the compact algebra.  The complement is fixed by
// requiring no delta2 component in m, which makes the decomposition unique.
struct IwasawaParts {
  std::array<GaussianRational, 4> cubic;  // (a, b/3, c/3, d)
  GaussianRational mu;
  std::array<GaussianRational, 3> m_coeffs;  // eps1, eps2, v2
  std::array<GaussianRational, 6> k_coeffs;  // u1, u2, u3, r1, r2, r3
  G2Element n_part, m_part, k_part;

  MatG m_matrix() const {  // [[a, b],[0, d]] under levi_embed
    MatG m(2, 2);
    m(0, 0) = m_coeffs[0];
    m(0, 1) = m_coeffs[2];
    m(1, 1) = m_coeffs[1];
    return m;
  }
};
IwasawaParts iwasawa(const G2Element& x);

// Z/3-graded model sl3 + V3 + V3*.
struct Z3Element {
  MatG sl3{3, 3};
  std::array<GaussianRational, 3> vec{};
  std::array<GaussianRational, 3> dual{};
};
Z3Element z3_bracket(const Z3Element& a, const Z3Element& b);
G2Element model_iso(const Z3Element& a);
Z3Element z3_basis(int idx);  // mirrors the G2BasisIndex order

// Regression-fixture dump: [{"i":..,"j":..,"coeffs":[...14 strings...]}, ...].
std::string bracket_table_json();

// --- template definitions ---

template <typename T>
V7<T> wedge_action(const Wedge2<T>& w, const V7<T>& t) {
  // Pairing on basis vectors: (e_i, e_j*) = -delta_ij, (u0, u0) = -2.
  auto pair_basis_vec = [&](int i) -> T {
    // (b_i, t)
    if (i < 3) return -t[4 + i];
    if (i == 3) return -(t[3] + t[3]);
    return -t[i - 4];
  };
  V7<T> r{};
  const auto& pairs = wedge_pairs();
  for (int k = 0; k < kWedgeDim; ++k) {
    if (is_zero(w[k])) continue;
    auto [i, j] = pairs[k];
    T xi = pair_basis_vec(j);  // (b_j, t)
    T wi = pair_basis_vec(i);  // (b_i, t)
    r[i] += w[k] * xi;
    r[j] -= w[k] * wi;
  }
  return r;
}

template <typename T>
V7<T> proj_v7(const Wedge2<T>& w) {
  V7<T> r{};
  const auto& pairs = wedge_pairs();
  for (int k = 0; k < kWedgeDim; ++k) {
    if (is_zero(w[k])) continue;
    auto [i, j] = pairs[k];
    V7<T> bi{}, bj{};
    bi[i] = T(1);
    bj[j] = T(1);
    V7<T> im = to_v7(oct_im(oct_mul(from_v7(bi), from_v7(bj))));
    for (int m = 0; m < 7; ++m) r[m] += w[k] * im[m];
  }
  return r;
}

}  // namespace g2tk

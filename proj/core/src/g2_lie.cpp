#include "g2tk/g2_lie.hpp"

#include <json.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace g2tk {

namespace {

constexpr const char* kBasisNames[kG2Dim] = {"E21", "E31", "E32", "E12", "E13",    "E23",    "eps1",
                                             "eps2", "v1",  "v2",  "v3",  "delta1", "delta2", "delta3"};

// V7 basis slots: 0..2 = e1..e3, 3 = u0, 4..6 = e1*..e3*.
int e_slot(int i) { return i - 1; }
int estar_slot(int i) { return 3 + i; }
int mod3(int j) { return (j - 1) % 3 + 1; }

struct WedgeTables {
  std::array<std::pair<int, int>, kWedgeDim> pairs;
  int index[7][7];

  WedgeTables() {
    int k = 0;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) {
        pairs[k] = {i, j};
        index[i][j] = k;
        index[j][i] = k;
        ++k;
      }
  }
};

const WedgeTables& wedge_tables() {
  static const WedgeTables t;
  return t;
}

// (b_i, b_j) for the V7 basis.
int pair_int(int i, int j) {
  if (i == 3 && j == 3) return -2;
  if (i < 3 && j == i + 4) return -1;
  if (j < 3 && i == j + 4) return -1;
  return 0;
}

Wedge2Q wedge_zero_q() {
  Wedge2Q w{};
  for (auto& x : w) x = Rational(0);
  return w;
}

// [b_i^b_j, b_k^b_l] expanded by the two-form bracket rule.
Wedge2Q bracket_wedge_q(const Wedge2Q& x, const Wedge2Q& y) {
  Wedge2Q r = wedge_zero_q();
  const auto& T = wedge_tables();
  for (int a = 0; a < kWedgeDim; ++a) {
    if (x[a] == 0) continue;
    auto [i, j] = T.pairs[a];
    for (int b = 0; b < kWedgeDim; ++b) {
      if (y[b] == 0) continue;
      auto [k, l] = T.pairs[b];
      Rational c = x[a] * y[b];
      int p;
      if ((p = pair_int(j, k)) != 0) wedge_add(r, Rational(c * p), i, l);
      if ((p = pair_int(j, l)) != 0) wedge_add(r, Rational(-c * p), i, k);
      if ((p = pair_int(i, k)) != 0) wedge_add(r, Rational(-c * p), j, l);
      if ((p = pair_int(i, l)) != 0) wedge_add(r, Rational(c * p), j, k);
    }
  }
  return r;
}

struct Algebra {
  std::array<Wedge2Q, kG2Dim> basis;
  MatQ B;        // 21 x 14
  MatQ Linv;     // 14 x 21 left inverse of B
  MatQ theta14;  // 14 x 14
  MatQ killing14;
  MatQ iwasawa_inv;  // 14 x 14
  // sparse structure constants: bracket(b_i, b_j) = sum over (m, coeff) in C[i][j]
  std::array<std::array<std::vector<std::pair<int, Rational>>, kG2Dim>, kG2Dim> C;

  Algebra() : B(kWedgeDim, kG2Dim), Linv(kG2Dim, kWedgeDim), theta14(kG2Dim, kG2Dim),
              killing14(kG2Dim, kG2Dim), iwasawa_inv(kG2Dim, kG2Dim) {
    build_basis();
    build_solver();
    build_structure_constants();
    build_theta();
    build_killing();
    build_iwasawa();
  }

  void build_basis() {
    auto one = Rational(1);
    auto term = [&](Wedge2Q& w, int i, int j) { wedge_add(w, one, i, j); };
    for (auto& w : basis) w = wedge_zero_q();
    // E_kj = e_j* ^ e_k
    auto set_E = [&](int idx, int k, int j) { term(basis[idx], estar_slot(j), e_slot(k)); };
    set_E(kE21, 2, 1);
    set_E(kE31, 3, 1);
    set_E(kE32, 3, 2);
    set_E(kE12, 1, 2);
    set_E(kE13, 1, 3);
    set_E(kE23, 2, 3);
    // eps1 = E22 - E33, eps2 = E11 - E22 with E_jj = e_j* ^ e_j
    term(basis[kEps1], estar_slot(2), e_slot(2));
    wedge_add(basis[kEps1], Rational(-1), estar_slot(3), e_slot(3));
    term(basis[kEps2], estar_slot(1), e_slot(1));
    wedge_add(basis[kEps2], Rational(-1), estar_slot(2), e_slot(2));
    // v_j = u0 ^ e_j + e_{j+1}* ^ e_{j+2}*, delta_j = u0 ^ e_j* + e_{j+1} ^ e_{j+2}
    for (int j = 1; j <= 3; ++j) {
      int j1 = mod3(j + 1), j2 = mod3(j + 2);
      term(basis[kV1 + (j - 1)], 3, e_slot(j));
      term(basis[kV1 + (j - 1)], estar_slot(j1), estar_slot(j2));
      term(basis[kDelta1 + (j - 1)], 3, estar_slot(j));
      term(basis[kDelta1 + (j - 1)], e_slot(j1), e_slot(j2));
    }
    for (int c = 0; c < kG2Dim; ++c)
      for (int r = 0; r < kWedgeDim; ++r) B(r, c) = basis[c][r];
  }

  void build_solver() {
    // Left inverse via (B^T B)^{-1} B^T; exact over Q.
    MatQ Bt = B.transpose();
    auto gram_inv = (Bt * B).inverse();
    if (!gram_inv) throw std::logic_error("algebra basis is degenerate");
    Linv = (*gram_inv) * Bt;
  }

  std::vector<Rational> solve_coords(const Wedge2Q& w) const {
    std::vector<Rational> wv(w.begin(), w.end());
    std::vector<Rational> x = Linv.apply(wv);
    // Verify the candidate reproduces w exactly (w must lie in the span).
    std::vector<Rational> back = B.apply(x);
    for (int r = 0; r < kWedgeDim; ++r)
      if (back[r] != wv[r]) throw std::logic_error("two-form is outside the algebra");
    return x;
  }

  void build_structure_constants() {
    for (int i = 0; i < kG2Dim; ++i)
      for (int j = 0; j < kG2Dim; ++j) {
        Wedge2Q br = bracket_wedge_q(basis[i], basis[j]);
        std::vector<Rational> x = solve_coords(br);
        for (int m = 0; m < kG2Dim; ++m)
          if (x[m] != 0) C[i][j].emplace_back(m, x[m]);
      }
  }

  void build_theta() {
    // iota: e_i <-> -e_i*, u0 -> -u0; theta(b_i ^ b_j) = iota(b_i) ^ iota(b_j).
    auto iota_slot = [](int s) -> int {
      if (s < 3) return s + 4;
      if (s == 3) return 3;
      return s - 4;
    };
    const auto& T = wedge_tables();
    for (int c = 0; c < kG2Dim; ++c) {
      Wedge2Q img = wedge_zero_q();
      for (int k = 0; k < kWedgeDim; ++k) {
        if (basis[c][k] == 0) continue;
        auto [i, j] = T.pairs[k];
        wedge_add(img, basis[c][k], iota_slot(i), iota_slot(j));  // two sign flips cancel
      }
      std::vector<Rational> x = solve_coords(img);
      for (int r = 0; r < kG2Dim; ++r) theta14(r, c) = x[r];
    }
  }

  void build_killing() {
    const auto& T = wedge_tables();
    for (int a = 0; a < kG2Dim; ++a)
      for (int b = a; b < kG2Dim; ++b) {
        Rational s(0);
        for (int ka = 0; ka < kWedgeDim; ++ka) {
          if (basis[a][ka] == 0) continue;
          auto [i, j] = T.pairs[ka];
          for (int kb = 0; kb < kWedgeDim; ++kb) {
            if (basis[b][kb] == 0) continue;
            auto [k, l] = T.pairs[kb];
            int val = pair_int(i, l) * pair_int(j, k) - pair_int(i, k) * pair_int(j, l);
            if (val != 0) s += basis[a][ka] * basis[b][kb] * val;
          }
        }
        killing14(a, b) = s;
        killing14(b, a) = s;
      }
  }

  void build_iwasawa() {
    // Columns: E12, E23, E13, v1, delta3 | eps1, eps2, v2 | u1, u2, u3, r1, r2, r3.
    MatQ M(kG2Dim, kG2Dim);
    auto set_col = [&](int col, const std::array<Rational, kG2Dim>& v) {
      for (int r = 0; r < kG2Dim; ++r) M(r, col) = v[r];
    };
    auto unit = [&](int idx) {
      std::array<Rational, kG2Dim> v{};
      v[idx] = 1;
      return v;
    };
    set_col(0, unit(kE12));
    set_col(1, unit(kE23));
    set_col(2, unit(kE13));
    set_col(3, unit(kV1));
    set_col(4, unit(kDelta3));
    set_col(5, unit(kEps1));
    set_col(6, unit(kEps2));
    set_col(7, unit(kV2));
    Rational q(1, 4);
    for (int j = 1; j <= 3; ++j) {
      // u_j = (E_{j+2,j+1} - E_{j+1,j+2} + v_j + delta_j)/4
      // r_j = (3E_{j+2,j+1} - 3E_{j+1,j+2} - v_j - delta_j)/4
      int j1 = mod3(j + 1), j2 = mod3(j + 2);
      auto eidx = [&](int k, int l) -> int {
        static const int map[4][4] = {{-1, -1, -1, -1},
                                      {-1, -1, kE12, kE13},
                                      {-1, kE21, -1, kE23},
                                      {-1, kE31, kE32, -1}};
        return map[k][l];
      };
      std::array<Rational, kG2Dim> u{}, rr{};
      u[eidx(j2, j1)] += q;
      u[eidx(j1, j2)] -= q;
      u[kV1 + (j - 1)] += q;
      u[kDelta1 + (j - 1)] += q;
      rr[eidx(j2, j1)] += 3 * q;
      rr[eidx(j1, j2)] -= 3 * q;
      rr[kV1 + (j - 1)] -= q;
      rr[kDelta1 + (j - 1)] -= q;
      set_col(8 + (j - 1), u);
      set_col(11 + (j - 1), rr);
    }
    auto inv = M.inverse();
    if (!inv) throw std::logic_error("iwasawa basis is degenerate");
    iwasawa_inv = *inv;
  }
};

const Algebra& algebra() {
  static const Algebra a;
  return a;
}

G2Element apply_q_matrix(const MatQ& m, const G2Element& x) {
  G2Element r;
  for (int i = 0; i < kG2Dim; ++i)
    for (int j = 0; j < kG2Dim; ++j)
      if (m(i, j) != 0) r.c[i] += x.c[j] * GaussianRational(m(i, j));
  return r;
}

}  // namespace

const char* g2_basis_name(int idx) { return kBasisNames[idx]; }

int wedge_index(int i, int j) { return wedge_tables().index[i][j]; }

const std::array<std::pair<int, int>, kWedgeDim>& wedge_pairs() { return wedge_tables().pairs; }

G2Element g2_basis(int idx) {
  G2Element x;
  x.c[idx] = GaussianRational(1);
  return x;
}

G2Element g2_E(int k, int j) {
  if (k == j || k < 1 || k > 3 || j < 1 || j > 3) throw std::invalid_argument("g2_E: need k != j in 1..3");
  static const int map[4][4] = {{-1, -1, -1, -1},
                                {-1, -1, kE12, kE13},
                                {-1, kE21, -1, kE23},
                                {-1, kE31, kE32, -1}};
  return g2_basis(map[k][j]);
}

G2Element g2_eps1() { return g2_basis(kEps1); }
G2Element g2_eps2() { return g2_basis(kEps2); }
G2Element g2_v(int j) { return g2_basis(kV1 + (j - 1)); }
G2Element g2_delta(int j) { return g2_basis(kDelta1 + (j - 1)); }

G2Element g2_diag(const GaussianRational& a1, const GaussianRational& a2, const GaussianRational& a3) {
  if (!(a1 + a2 + a3).is_zero()) throw std::invalid_argument("g2_diag: trace must vanish");
  // a1 E11 + a2 E22 + a3 E33 = (a1 + a2) eps1 + a1 eps2.
  G2Element x;
  x.c[kEps1] = a1 + a2;
  x.c[kEps2] = a1;
  return x;
}

G2Element g2_u(int j) {
  int j1 = mod3(j + 1), j2 = mod3(j + 2);
  GaussianRational q(frac(1, 4));
  G2Element x = (g2_E(j2, j1) - g2_E(j1, j2) + g2_v(j) + g2_delta(j)) * q;
  return x;
}

G2Element g2_r(int j) {
  int j1 = mod3(j + 1), j2 = mod3(j + 2);
  GaussianRational q(frac(1, 4));
  G2Element x = ((g2_E(j2, j1) - g2_E(j1, j2)) * GaussianRational(3) - g2_v(j) - g2_delta(j)) * q;
  return x;
}

CompactTriples compact_triples() {
  GaussianRational i = GaussianRational::i();
  CompactTriples t;
  t.h_u = g2_u(2) * (i + i);
  t.e_u = g2_u(1) - g2_u(3) * i;
  t.f_u = -g2_u(1) - g2_u(3) * i;
  t.h_r = g2_r(2) * (i + i);
  t.e_r = g2_r(1) - g2_r(3) * i;
  t.f_r = -g2_r(1) - g2_r(3) * i;
  return t;
}

G2Element g2_y(int j) { return g2_v(j) - g2_delta(j); }

G2Element g2_fsym(int j) {
  int j1 = mod3(j + 1), j2 = mod3(j + 2);
  return g2_E(j1, j2) + g2_E(j2, j1);
}

PBasisElems p_basis() {
  GaussianRational i = GaussianRational::i();
  GaussianRational two(2), third(frac(1, 3));
  PBasisElems p;
  G2Element e11_m_e33 = g2_diag(GaussianRational(1), GaussianRational(0), GaussianRational(-1));
  G2Element mix = g2_diag(GaussianRational(1), GaussianRational(-2), GaussianRational(1));
  p.d3 = g2_fsym(1) - g2_y(1) + (g2_fsym(3) + g2_y(3)) * i;
  p.h3 = -e11_m_e33 * two + g2_fsym(2) * (i + i);
  p.d1 = -mix * (two * third) + g2_y(2) * (two * third * i);
  p.h1 = (g2_fsym(1) * GaussianRational(3) + g2_y(1)) * third +
         (g2_fsym(3) * GaussianRational(3) - g2_y(3)) * (third * i);
  p.dm1 = -(g2_fsym(1) * GaussianRational(3) + g2_y(1)) * third +
          (g2_fsym(3) * GaussianRational(3) - g2_y(3)) * (third * i);
  p.hm1 = -mix * (two * third) - g2_y(2) * (two * third * i);
  p.dm3 = -e11_m_e33 * two - g2_fsym(2) * (i + i);
  p.hm3 = g2_y(1) - g2_fsym(1) + (g2_fsym(3) + g2_y(3)) * i;
  return p;
}

G2Element levi_embed(const MatG& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("levi_embed: need 2x2");
  G2Element x;
  x.c[kEps1] = m(0, 0);
  x.c[kEps2] = m(1, 1);
  x.c[kV2] = m(0, 1);
  x.c[kDelta2] = -m(1, 0);
  return x;
}

const MatQ& g2_basis_matrix() { return algebra().B; }

MatQ proj_v7_matrix() {
  MatQ P(7, kWedgeDim);
  for (int k = 0; k < kWedgeDim; ++k) {
    Wedge2Q w = wedge_zero_q();
    w[k] = 1;
    V7Q img = proj_v7(w);
    for (int r = 0; r < 7; ++r) P(r, k) = img[r];
  }
  return P;
}

Wedge2G to_wedge(const G2Element& x) {
  Wedge2G w{};
  const auto& A = algebra();
  for (int k = 0; k < kWedgeDim; ++k) w[k] = GaussianRational(0);
  for (int c = 0; c < kG2Dim; ++c) {
    if (x.c[c].is_zero()) continue;
    for (int k = 0; k < kWedgeDim; ++k)
      if (A.basis[c][k] != 0) w[k] += x.c[c] * GaussianRational(A.basis[c][k]);
  }
  return w;
}

G2Element from_wedge(const Wedge2G& w) {
  // Solve the real and imaginary parts separately with the rational solver.
  const auto& A = algebra();
  Wedge2Q wr = wedge_zero_q(), wi = wedge_zero_q();
  for (int k = 0; k < kWedgeDim; ++k) {
    wr[k] = w[k].re;
    wi[k] = w[k].im;
  }
  std::vector<Rational> xr = A.solve_coords(wr);
  std::vector<Rational> xi = A.solve_coords(wi);
  G2Element x;
  for (int m = 0; m < kG2Dim; ++m) x.c[m] = GaussianRational(xr[m], xi[m]);
  return x;
}

G2Element bracket(const G2Element& x, const G2Element& y) {
  const auto& A = algebra();
  G2Element r;
  for (int i = 0; i < kG2Dim; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < kG2Dim; ++j) {
      if (y.c[j].is_zero()) continue;
      GaussianRational xy = x.c[i] * y.c[j];
      for (const auto& [m, coeff] : A.C[i][j]) r.c[m] += xy * GaussianRational(coeff);
    }
  }
  return r;
}

GaussianRational killing_pair(const G2Element& x, const G2Element& y) {
  const auto& A = algebra();
  GaussianRational s;
  for (int i = 0; i < kG2Dim; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < kG2Dim; ++j) {
      if (y.c[j].is_zero() || A.killing14(i, j) == 0) continue;
      s += x.c[i] * y.c[j] * GaussianRational(A.killing14(i, j));
    }
  }
  return s;
}

G2Element cartan_theta(const G2Element& x) { return apply_q_matrix(algebra().theta14, x); }

std::pair<G2Element, G2Element> kp_decompose(const G2Element& x) {
  G2Element tx = cartan_theta(x);
  GaussianRational half(frac(1, 2));
  return {(x + tx) * half, (x - tx) * half};
}

MatQ btheta_gram() {
  const auto& A = algebra();
  MatQ g(kG2Dim, kG2Dim);
  // B_theta(b_i, b_j) = -(b_i, theta b_j) = -(killing14 * theta14)_{ij}
  MatQ kt = A.killing14 * A.theta14;
  for (int i = 0; i < kG2Dim; ++i)
    for (int j = 0; j < kG2Dim; ++j) g(i, j) = -kt(i, j);
  return g;
}

IwasawaParts iwasawa(const G2Element& x) {
  const auto& A = algebra();
  std::array<GaussianRational, kG2Dim> s{};
  for (int i = 0; i < kG2Dim; ++i)
    for (int j = 0; j < kG2Dim; ++j)
      if (A.iwasawa_inv(i, j) != 0) s[i] += x.c[j] * GaussianRational(A.iwasawa_inv(i, j));

  IwasawaParts out;
  out.cubic = {s[0], s[3], s[4], s[1]};  // coefficients of E12, v1, delta3, E23
  out.mu = s[2];
  out.m_coeffs = {s[5], s[6], s[7]};
  for (int k = 0; k < 6; ++k) out.k_coeffs[k] = s[8 + k];

  out.n_part = g2_basis(kE12) * s[0] + g2_basis(kE23) * s[1] + g2_basis(kE13) * s[2] +
               g2_basis(kV1) * s[3] + g2_basis(kDelta3) * s[4];
  out.m_part = g2_eps1() * s[5] + g2_eps2() * s[6] + g2_v(2) * s[7];
  out.k_part = g2_u(1) * s[8] + g2_u(2) * s[9] + g2_u(3) * s[10] + g2_r(1) * s[11] +
               g2_r(2) * s[12] + g2_r(3) * s[13];
  return out;
}

Z3Element z3_bracket(const Z3Element& a, const Z3Element& b) {
  Z3Element r;
  // sl3 part: [A, A'] - (3 x (x) g' - (x,g') I) + (3 x' (x) g - (x',g) I)
  r.sl3 = a.sl3 * b.sl3 - b.sl3 * a.sl3;
  GaussianRational xg, xg2;
  for (int i = 0; i < 3; ++i) {
    xg += a.vec[i] * b.dual[i];
    xg2 += b.vec[i] * a.dual[i];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r.sl3(i, j) += GaussianRational(3) * (b.vec[i] * a.dual[j] - a.vec[i] * b.dual[j]);
      if (i == j) r.sl3(i, j) += xg - xg2;
    }
  // V3 part: A x' - A' x + 2 g ^ g'
  auto cg = cross3(a.dual, b.dual);
  auto cx = cross3(a.vec, b.vec);
  for (int i = 0; i < 3; ++i) {
    r.vec[i] = cg[i] + cg[i];
    r.dual[i] = cx[i] + cx[i];
    for (int j = 0; j < 3; ++j) {
      r.vec[i] += a.sl3(i, j) * b.vec[j] - b.sl3(i, j) * a.vec[j];
      // dual action: (A . g)_i = -sum_j A_{ji} g_j
      r.dual[i] -= a.sl3(j, i) * b.dual[j] - b.sl3(j, i) * a.dual[j];
    }
  }
  return r;
}

G2Element model_iso(const Z3Element& a) {
  G2Element x = g2_diag(a.sl3(0, 0), a.sl3(1, 1), a.sl3(2, 2));
  static const int emap[3][3] = {{-1, kE12, kE13}, {kE21, -1, kE23}, {kE31, kE32, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) x.c[emap[i][j]] += a.sl3(i, j);
  for (int j = 0; j < 3; ++j) {
    x.c[kV1 + j] += a.vec[j];
    x.c[kDelta1 + j] += a.dual[j];
  }
  return x;
}

Z3Element z3_basis(int idx) {
  Z3Element z;
  switch (idx) {
    case kE21: z.sl3(1, 0) = GaussianRational(1); break;
    case kE31: z.sl3(2, 0) = GaussianRational(1); break;
    case kE32: z.sl3(2, 1) = GaussianRational(1); break;
    case kE12: z.sl3(0, 1) = GaussianRational(1); break;
    case kE13: z.sl3(0, 2) = GaussianRational(1); break;
    case kE23: z.sl3(1, 2) = GaussianRational(1); break;
    case kEps1:
      z.sl3(1, 1) = GaussianRational(1);
      z.sl3(2, 2) = GaussianRational(-1);
      break;
    case kEps2:
      z.sl3(0, 0) = GaussianRational(1);
      z.sl3(1, 1) = GaussianRational(-1);
      break;
    case kV1:
    case kV2:
    case kV3: z.vec[idx - kV1] = GaussianRational(1); break;
    case kDelta1:
    case kDelta2:
    case kDelta3: z.dual[idx - kDelta1] = GaussianRational(1); break;
    default: throw std::invalid_argument("z3_basis: index out of range");
  }
  return z;
}

std::string bracket_table_json() {
  const auto& A = algebra();
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int i = 0; i < kG2Dim; ++i)
    for (int j = 0; j < kG2Dim; ++j) {
      nlohmann::ordered_json entry;
      entry["i"] = i;
      entry["j"] = j;
      std::vector<std::string> coeffs(kG2Dim, "0");
      for (const auto& [m, c] : A.C[i][j]) coeffs[m] = c.get_str();
      entry["coeffs"] = coeffs;
      out.push_back(entry);
    }
  return out.dump();
}

}  // namespace g2tk

#include "g2tk/heis_so7.hpp"

#include <sstream>
#include <vector>

namespace g2tk {

bool WVector::is_integral() const {
  auto is_int = [](const Rational& x) { return x.get_den() == 1; };
  return is_int(a) && is_int(3 * b3) && is_int(3 * c3) && is_int(d);
}

Rational symplectic(const WVector& w, const WVector& w2) {
  return w.a * w2.d - 3 * w.b3 * w2.c3 + 3 * w.c3 * w2.b3 - w.d * w2.a;
}

namespace {

// Cubic coefficient transform under (x, y) |-> (p1 x + p2 y, q1 x + q2 y).
WVector substitute(const WVector& f, const Rational& p1, const Rational& p2, const Rational& q1,
                   const Rational& q2) {
  Rational A = f.a, B = f.cb(), C = f.cc(), D = f.d;
  Rational A2 = A * p1 * p1 * p1 + B * p1 * p1 * q1 + C * p1 * q1 * q1 + D * q1 * q1 * q1;
  Rational B2 = 3 * A * p1 * p1 * p2 + B * (p1 * p1 * q2 + 2 * p1 * p2 * q1) +
                C * (q1 * q1 * p2 + 2 * p1 * q1 * q2) + 3 * D * q1 * q1 * q2;
  Rational C2 = 3 * A * p1 * p2 * p2 + B * (p2 * p2 * q1 + 2 * p1 * p2 * q2) +
                C * (p1 * q2 * q2 + 2 * p2 * q1 * q2) + 3 * D * q1 * q2 * q2;
  Rational D2 = A * p2 * p2 * p2 + B * p2 * p2 * q2 + C * p2 * q2 * q2 + D * q2 * q2 * q2;
  return {A2, B2 / 3, C2 / 3, D2};
}

}  // namespace

WVector cubic_act_right(const MatQ& g, const WVector& f) {
  Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  if (det == 0) throw std::invalid_argument("cubic_act_right: singular matrix");
  // (x, y) g = (g00 x + g10 y, g01 x + g11 y)
  WVector r = substitute(f, g(0, 0), g(1, 0), g(0, 1), g(1, 1));
  Rational inv = 1 / det;
  return r * inv;
}

WVector cubic_act_left(const MatQ& m, const WVector& f) {
  Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det == 0) throw std::invalid_argument("cubic_act_left: singular matrix");
  // m^{-1} (u, v)^t has rows of adj(m)/det.
  Rational inv = 1 / det;
  WVector r = substitute(f, m(1, 1) * inv, -m(0, 1) * inv, -m(1, 0) * inv, m(0, 0) * inv);
  return r * (det * det);
}

std::string to_string(const WVector& w) {
  std::ostringstream os;
  os << w.a.get_str() << "," << w.cb().get_str() << "," << w.cc().get_str() << "," << w.d.get_str();
  return os.str();
}

WVector parse_wvector(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw std::invalid_argument("parse_wvector: expected a,b,c,d");
  WVector w;
  w.a = parse_rational(parts[0]);
  w.b3 = parse_rational(parts[1]) / 3;
  w.c3 = parse_rational(parts[2]) / 3;
  w.d = parse_rational(parts[3]);
  return w;
}

MatQ so7_gram() {
  MatQ g(7, 7);
  g(0, 5) = 1;
  g(5, 0) = 1;
  g(1, 6) = 1;
  g(6, 1) = 1;
  g(2, 4) = 1;
  g(4, 2) = 1;
  g(3, 3) = -2;
  return g;
}

V7Q so7_from_v7(const V7Q& x) {
  // f1..f7 = e1, e3*, e2*, u0, -e2, -e1*, -e3 against e1,e2,e3,u0,e1*,e2*,e3*.
  return {x[0], x[6], x[5], x[3], -x[1], -x[4], -x[2]};
}

V7Q v7_from_so7(const V7Q& x) { return {x[0], -x[4], -x[6], x[3], -x[5], x[2], x[1]}; }

MatQ m_embed(const MatQ& h) {
  if (h.rows() != 2 || h.cols() != 2) throw std::invalid_argument("m_embed: need 2x2");
  Rational det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
  if (det == 0) throw std::invalid_argument("m_embed: singular matrix");
  MatQ g(7, 7);
  // top-left: h on span(f1, f2)
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = h(i, j);
  // bottom-right: th^{-1} on span(f6, f7)
  Rational inv = 1 / det;
  g(5, 5) = h(1, 1) * inv;
  g(5, 6) = -h(1, 0) * inv;
  g(6, 5) = -h(0, 1) * inv;
  g(6, 6) = h(0, 0) * inv;
  // middle: conjugation on trace-zero 2x2 matrices in the basis
  // f3 = [[0,-1],[0,0]], f4 = [[1,0],[0,-1]], f5 = [[0,0],[1,0]].
  auto conj_col = [&](const Rational& m00, const Rational& m01, const Rational& m10) {
    // h [[m00,m01],[m10,-m00]] h^{-1}
    Rational a = h(0, 0), b = h(0, 1), c = h(1, 0), d = h(1, 1);
    // first compute X h^{-1} then h (X h^{-1}); done directly:
    Rational n00 = (a * m00 + b * m10) * d - (a * m01 - b * m00) * c;
    Rational n01 = -(a * m00 + b * m10) * b + (a * m01 - b * m00) * a;
    Rational n10 = (c * m00 + d * m10) * d - (c * m01 - d * m00) * c;
    n00 *= inv;
    n01 *= inv;
    n10 *= inv;
    // coordinates: coeff f3 = -n01, coeff f4 = n00, coeff f5 = n10
    return std::array<Rational, 3>{-n01, n00, n10};
  };
  std::array<Rational, 3> c3 = conj_col(0, -1, 0);
  std::array<Rational, 3> c4 = conj_col(1, 0, 0);
  std::array<Rational, 3> c5 = conj_col(0, 0, 1);
  for (int r = 0; r < 3; ++r) {
    g(2 + r, 2) = c3[r];
    g(2 + r, 3) = c4[r];
    g(2 + r, 4) = c5[r];
  }
  return g;
}

MatQ n_embed_lie(const WVector& w, const Rational& mu) {
  MatQ L(7, 7);
  const Rational alpha = w.a, beta = w.b3, gamma = w.c3, delta = w.d;
  // h: 3x2, rows (alpha beta; beta gamma; gamma delta)
  Rational h[3][2] = {{alpha, beta}, {beta, gamma}, {gamma, delta}};
  // S = antidiag(1,-2,1); h' = -th S is 2x3: h'_{ij} = -sum_k h_{kj'} S ...
  // (th)_{ik} = h_{ki}; (th S)_{ij} = sum_k h_{ki} S_{kj} with S(0,2)=1,
  // S(1,1)=-2, S(2,0)=1.
  Rational hp[2][3];
  for (int i = 0; i < 2; ++i) {
    hp[i][0] = -h[2][i];
    hp[i][1] = 2 * h[1][i];
    hp[i][2] = -h[0][i];
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) L(i, 2 + j) = hp[i][j];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) L(2 + i, 5 + j) = h[i][j];
  // corner: -mu J2 with J2 = [[0,1],[-1,0]]
  L(0, 6) = -mu;
  L(1, 5) = mu;
  return L;
}

MatQ n_embed(const WVector& w, const Rational& mu) {
  MatQ L = n_embed_lie(w, mu);
  MatQ L2 = L * L;  // only the upper-right 2x2 block is nonzero
  MatQ N = MatQ::identity(7) + L;
  Rational half = frac(1, 2);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) N(i, j) += L2(i, j) * half;
  return N;
}

}  // namespace g2tk

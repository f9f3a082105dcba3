#pragma once

#include <array>
#include <string>

#include "g2tk/rational.hpp"

namespace g2tk {

// Split octonions in the Zorn model over a scalar field T: elements are
// 2x2 "vector matrices" [[a, v],[phi, d]] with v a column 3-vector and phi a
// dual 3-vector.  The wedge identifications V3 ^ V3 -> V3* and V3* ^ V3* -> V3
// are fixed once and for all as e1^e2 |-> e3* (cyclically) and dually, i.e.
// the ordinary cross product in coordinates.
template <typename T>
struct Zorn {
  T a{};
  std::array<T, 3> v{};
  std::array<T, 3> phi{};
  T d{};

  static Zorn one() {
    Zorn x;
    x.a = T(1);
    x.d = T(1);
    return x;
  }
  static Zorn zero() { return Zorn{}; }

  bool operator==(const Zorn&) const = default;

  Zorn operator+(const Zorn& o) const {
    Zorn r;
    r.a = a + o.a;
    r.d = d + o.d;
    for (int i = 0; i < 3; ++i) {
      r.v[i] = v[i] + o.v[i];
      r.phi[i] = phi[i] + o.phi[i];
    }
    return r;
  }
  Zorn operator-(const Zorn& o) const {
    Zorn r;
    r.a = a - o.a;
    r.d = d - o.d;
    for (int i = 0; i < 3; ++i) {
      r.v[i] = v[i] - o.v[i];
      r.phi[i] = phi[i] - o.phi[i];
    }
    return r;
  }
  Zorn operator-() const { return zero() - *this; }
  Zorn operator*(const T& s) const {
    Zorn r = *this;
    r.a = r.a * s;
    r.d = r.d * s;
    for (int i = 0; i < 3; ++i) {
      r.v[i] = r.v[i] * s;
      r.phi[i] = r.phi[i] * s;
    }
    return r;
  }
};

template <typename T>
std::array<T, 3> cross3(const std::array<T, 3>& x, const std::array<T, 3>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

template <typename T>
T dot3(const std::array<T, 3>& phi, const std::array<T, 3>& v) {
  return phi[0] * v[0] + phi[1] * v[1] + phi[2] * v[2];
}

template <typename T>
Zorn<T> oct_mul(const Zorn<T>& x, const Zorn<T>& y) {
  Zorn<T> r;
  r.a = x.a * y.a + dot3(y.phi, x.v);
  r.d = dot3(x.phi, y.v) + x.d * y.d;
  std::array<T, 3> pw = cross3(x.phi, y.phi);  // phi ^ phi' in V3
  std::array<T, 3> vw = cross3(x.v, y.v);      // v ^ v' in V3*
  for (int i = 0; i < 3; ++i) {
    r.v[i] = x.a * y.v[i] + y.d * x.v[i] - pw[i];
    r.phi[i] = y.a * x.phi[i] + x.d * y.phi[i] + vw[i];
  }
  return r;
}

template <typename T>
T oct_norm(const Zorn<T>& x) {
  return x.a * x.d - dot3(x.phi, x.v);
}

template <typename T>
T oct_trace(const Zorn<T>& x) {
  return x.a + x.d;
}

template <typename T>
Zorn<T> oct_conj(const Zorn<T>& x) {
  Zorn<T> r;
  r.a = x.d;
  r.d = x.a;
  for (int i = 0; i < 3; ++i) {
    r.v[i] = -x.v[i];
    r.phi[i] = -x.phi[i];
  }
  return r;
}

// Im(x) = (x - x*)/2, the trace-zero part.
template <typename T>
Zorn<T> oct_im(const Zorn<T>& x) {
  Zorn<T> r = x - oct_conj(x);
  T half = T(1) / T(2);
  return r * half;
}

// (x, y) = N(x+y) - N(x) - N(y) = ad' + a'd - phi(v') - phi'(v).
template <typename T>
T oct_bilinear(const Zorn<T>& x, const Zorn<T>& y) {
  return x.a * y.d + y.a * x.d - dot3(x.phi, y.v) - dot3(y.phi, x.v);
}

// tr((x1 x2) x3); associates, i.e. equals tr(x1 (x2 x3)).
template <typename T>
T oct_trilinear(const Zorn<T>& x1, const Zorn<T>& x2, const Zorn<T>& x3) {
  return oct_trace(oct_mul(oct_mul(x1, x2), x3));
}

// Trace-zero octonions as 7-vectors in the ordered basis
// e1, e2, e3, u0, e1*, e2*, e3*.
template <typename T>
using V7 = std::array<T, 7>;

template <typename T>
Zorn<T> from_v7(const V7<T>& x) {
  Zorn<T> r;
  r.a = x[3];
  r.d = -x[3];
  for (int i = 0; i < 3; ++i) {
    r.v[i] = x[i];
    r.phi[i] = x[4 + i];
  }
  return r;
}

template <typename T>
V7<T> to_v7(const Zorn<T>& x) {
  if (!is_zero(oct_trace(x))) throw std::invalid_argument("to_v7: nonzero trace");
  V7<T> r{};
  r[3] = x.a;
  for (int i = 0; i < 3; ++i) {
    r[i] = x.v[i];
    r[4 + i] = x.phi[i];
  }
  return r;
}

// Pairing of V7 basis vectors: (e_i, e_j*) = -delta_ij, (u0, u0) = -2.
template <typename T>
T v7_pair(const V7<T>& x, const V7<T>& y) {
  T s = x[3] * y[3];
  s = -(s + s);
  for (int i = 0; i < 3; ++i) s -= x[i] * y[4 + i] + y[i] * x[4 + i];
  return s;
}

using Octonion = Zorn<Rational>;
using V7Q = V7<Rational>;

// Text form "a;v1,v2,v3;f1,f2,f3;d" with exact rational entries.
std::string to_string(const Octonion& x);
Octonion parse_octonion(const std::string& s);

}  // namespace g2tk

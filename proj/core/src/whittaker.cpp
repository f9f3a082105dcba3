#include "g2tk/whittaker.hpp"

#include <cmath>
#include <stdexcept>

#include "g2tk/bessel.hpp"

namespace g2tk {

Cplx symplectic(const CubicC& w, const CubicC& w2) {
  return w.a * w2.d - 3.0 * w.b3 * w2.c3 + 3.0 * w.c3 * w2.b3 - w.d * w2.a;
}

namespace {

CubicC substitute(const CubicC& f, Cplx p1, Cplx p2, Cplx q1, Cplx q2) {
  Cplx A = f.a, B = f.cb(), C = f.cc(), D = f.d;
  Cplx A2 = A * p1 * p1 * p1 + B * p1 * p1 * q1 + C * p1 * q1 * q1 + D * q1 * q1 * q1;
  Cplx B2 = 3.0 * A * p1 * p1 * p2 + B * (p1 * p1 * q2 + 2.0 * p1 * p2 * q1) +
            C * (q1 * q1 * p2 + 2.0 * p1 * q1 * q2) + 3.0 * D * q1 * q1 * q2;
  Cplx C2 = 3.0 * A * p1 * p2 * p2 + B * (p2 * p2 * q1 + 2.0 * p1 * p2 * q2) +
            C * (p1 * q2 * q2 + 2.0 * p2 * q1 * q2) + 3.0 * D * q1 * q2 * q2;
  Cplx D2 = A * p2 * p2 * p2 + B * p2 * p2 * q2 + C * p2 * q2 * q2 + D * q2 * q2 * q2;
  return {A2, B2 / 3.0, C2 / 3.0, D2};
}

}  // namespace

CubicC cubic_act_right(const std::array<Cplx, 4>& g, const CubicC& f) {
  Cplx det = g[0] * g[3] - g[1] * g[2];
  CubicC r = substitute(f, g[0], g[2], g[1], g[3]);
  return r * (1.0 / det);
}

CubicC cubic_act_left(const std::array<Cplx, 4>& m, const CubicC& f) {
  Cplx det = m[0] * m[3] - m[1] * m[2];
  Cplx inv = 1.0 / det;
  CubicC r = substitute(f, m[3] * inv, -m[1] * inv, -m[2] * inv, m[0] * inv);
  return r * (det * det);
}

Cplx h_w_eval(const CubicC& w, const Cplx& z) {
  return ((w.a * z + w.cb()) * z + w.cc()) * z + w.d;
}

Cplx h_w_deriv(const CubicC& w, const Cplx& z) {
  return (3.0 * w.a * z + 2.0 * w.cb()) * z + w.cc();
}

bool w_nonneg(const WVector& w) {
  Rational a = w.a, b = w.cb(), c = w.cc(), d = w.d;
  if (a != 0) {
    // all roots real iff disc >= 0
    Rational disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                    27 * a * a * d * d;
    return disc >= 0;
  }
  if (b != 0) return c * c - 4 * b * d >= 0;
  if (c != 0) return true;         // linear: single real root
  if (d != 0) return true;         // nonzero constant: no roots at all
  throw std::invalid_argument("w_nonneg: w = 0 is indeterminate (trivial character)");
}

bool w_nonneg(const CubicC& w, double tol) {
  double a = w.a.real(), b = w.cb().real(), c = w.cc().real(), d = w.d.real();
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (scale == 0.0) throw std::invalid_argument("w_nonneg: w = 0 is indeterminate (trivial character)");
  if (std::abs(a) > tol * scale) {
    double disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                  27 * a * a * d * d;
    return disc >= -tol * scale * scale * scale * scale;
  }
  if (std::abs(b) > tol * scale) return c * c - 4 * b * d >= -tol * scale * scale;
  return true;
}

namespace {

Cplx int_pow(Cplx base, int e) {
  if (e < 0) return 1.0 / int_pow(base, -e);
  Cplx r = 1.0;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

struct PointData {
  Cplx z;
  Cplx hw;       // h_w(z)
  double abs_hw;
  Cplx phase;    // |h|/h, unit modulus
  double u;      // w_scale * y^{-3/2} * |h_w(z)|
};

PointData point_data(const CubicC& w, double x, double y, double ws) {
  PointData p;
  p.z = Cplx(x, y);
  p.hw = h_w_eval(w, p.z);
  p.abs_hw = std::abs(p.hw);
  if (p.abs_hw < 1e-300) throw std::domain_error("whittaker: h_w vanishes at the evaluation point");
  p.phase = p.abs_hw / p.hw;
  p.u = ws * std::pow(y, -1.5) * p.abs_hw;
  return p;
}

}  // namespace

Cplx whittaker_component(const WhittakerParams& p, int v) {
  if (p.y <= 0 || p.w_scale <= 0) throw std::invalid_argument("whittaker: need y, w_scale > 0");
  if (!w_nonneg(p.w)) throw std::invalid_argument("whittaker: w is not nonnegative");
  CubicC w = CubicC::from(p.w);
  PointData pt = point_data(w, p.x, p.y, p.w_scale);
  double det_pow = std::pow(p.w_scale, 2 * p.n + 2);
  return int_pow(pt.phase, v) * det_pow * bessel_k(v, pt.u);
}

double factorial_norm(int n, int v) {
  double f = 1.0;
  for (int i = 2; i <= n + v; ++i) f *= i;
  double g = 1.0;
  for (int i = 2; i <= n - v; ++i) g *= i;
  return 1.0 / (f * g);
}

std::vector<Cplx> whittaker_full(const WhittakerParams& p) {
  std::vector<Cplx> out;
  out.reserve(2 * p.n + 1);
  for (int v = -p.n; v <= p.n; ++v) out.push_back(whittaker_component(p, v) * factorial_norm(p.n, v));
  return out;
}

PairingCheck pairing_lemma_check(const WVector& wv, double x, double y, double ws) {
  CubicC w = CubicC::from(wv);
  CubicC omega = -w;  // chi(n) = exp(i <omega, n>) with omega = -w
  const Cplx i(0.0, 1.0);
  // m = [[1,x],[0,1]] diag(sqrt y, 1/sqrt y) diag(ws, ws)
  double sy = std::sqrt(y);
  std::array<Cplx, 4> m{sy * ws, x * ws / sy, 0.0, ws / sy};

  // cubics in the (u, v) variables, as 4-tuples (a, b/3, c/3, d):
  CubicC mv_plus_iu3{-i, 1.0, i, -1.0};             // (-v+iu)^3
  CubicC mv_minus_iu3{i, 1.0, -i, -1.0};            // (-v-iu)^3
  CubicC mixed_a{-3.0 * i, -1.0, -i, -3.0};         // 3(-v-iu)^2(-v+iu)
  CubicC mixed_b{3.0 * i, -1.0, i, -3.0};           // 3(-v+iu)^2(-v-iu)

  Cplx z(x, y), zs(x, -y);
  Cplx pz = h_w_eval(w, z), pzs = h_w_eval(w, zs);
  Cplx dpz = h_w_deriv(w, z), dpzs = h_w_deriv(w, zs);
  double y32 = std::pow(y, -1.5);

  PairingCheck out;
  out.lhs[0] = symplectic(omega, cubic_act_left(m, mv_plus_iu3));
  out.rhs[0] = -i * ws * y32 * pzs;
  out.lhs[1] = symplectic(omega, cubic_act_left(m, mv_minus_iu3));
  out.rhs[1] = i * ws * y32 * pz;
  out.lhs[2] = symplectic(omega, cubic_act_left(m, mixed_a));
  out.rhs[2] = -ws * y32 * (2.0 * y * dpz + 3.0 * i * pz);
  out.lhs[3] = symplectic(omega, cubic_act_left(m, mixed_b));
  out.rhs[3] = -ws * y32 * (2.0 * y * dpzs - 3.0 * i * pzs);
  for (int k = 0; k < 4; ++k) out.max_abs_diff = std::max(out.max_abs_diff, std::abs(out.lhs[k] - out.rhs[k]));
  return out;
}

PhiFn closed_form_phi(int n, const WVector& wv) {
  CubicC w = CubicC::from(wv);
  return [n, w](int k, double x, double y, double ws) -> Cplx {
    PointData pt = point_data(w, x, y, ws);
    return int_pow(pt.phase, k) * std::pow(ws, 2 * n + 2) * bessel_k(k, pt.u);
  };
}

OdeReport schmid_residuals(int n, const WVector& wv, double x, double y, double ws, double step,
                           const PhiFn& phi) {
  CubicC w = CubicC::from(wv);
  CubicC omega = -w;
  const Cplx i(0.0, 1.0);
  double sy = std::sqrt(y);
  std::array<Cplx, 4> m{sy * ws, x * ws / sy, 0.0, ws / sy};

  // weight-raising cubics in (u, v), tuples (a, b/3, c/3, d)
  CubicC plus3{-i, -1.0, i, 1.0};    // (v+iu)^3
  CubicC minus3{i, -1.0, -i, 1.0};   // (v-iu)^3
  CubicC m21{-i, 1.0 / 3.0, -i / 3.0, 1.0};  // (v-iu)^2 (v+iu)
  CubicC m12{i, 1.0 / 3.0, i / 3.0, 1.0};    // (v+iu)^2 (v-iu)

  Cplx P_plus = symplectic(omega, cubic_act_left(m, plus3));
  Cplx P_minus = symplectic(omega, cubic_act_left(m, minus3));
  Cplx P_21 = symplectic(omega, cubic_act_left(m, m21));
  Cplx P_12 = symplectic(omega, cubic_act_left(m, m12));

  // five-point first derivatives: truncation O(step^4)
  double dw = step * ws, dy = step * y, dx = step;
  auto stencil = [](auto f, double h) {
    return (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
  };
  auto wdw = [&](int k) {
    return ws * stencil([&](double d) { return phi(k, x, y, ws + d); }, dw);
  };
  auto ydy = [&](int k) {
    return y * stencil([&](double d) { return phi(k, x, y + d, ws); }, dy);
  };
  auto ydx = [&](int k) {
    return y * stencil([&](double d) { return phi(k, x + d, y, ws); }, dx);
  };

  OdeReport rep;
  auto record = [&](int fam, Cplx t1, Cplx t2) {
    double scale = std::max(std::abs(t1), std::abs(t2));
    double resid = (scale > 1e-300) ? std::abs(t1 + t2) / scale : std::abs(t1 + t2);
    rep.family_max[fam] = std::max(rep.family_max[fam], resid);
    rep.max_rel_residual = std::max(rep.max_rel_residual, resid);
    ++rep.cases;
  };

  for (int k = -n; k < n; ++k) {
    Cplx pk = phi(k, x, y, ws), pk1 = phi(k + 1, x, y, ws);
    // (w d/dw - (2n+2) - k) phi_k + i <omega, m.(v+iu)^3> phi_{k+1} = 0
    record(0, wdw(k) - double(2 * n + 2 + k) * pk, i * P_plus * pk1);
    // -(w d/dw - (2n+2) + k + 1) phi_{k+1} + i <omega, m.(v-iu)^3> phi_k = 0
    record(1, -(wdw(k + 1) - double(2 * n + 2 - k - 1) * pk1), i * P_minus * pk);
    // -3i <omega, m.(v-iu)^2(v+iu)> phi_k - (-2 y d/dy + 2i y d/dx + 3(k+1)) phi_{k+1} = 0
    record(2, -3.0 * i * P_21 * pk, -(-2.0 * ydy(k + 1) + 2.0 * i * ydx(k + 1) + 3.0 * double(k + 1) * pk1));
    // -3i <omega, m.(v+iu)^2(v-iu)> phi_{k+1} + (-2 y d/dy - 2i y d/dx - 3k) phi_k = 0
    record(3, -3.0 * i * P_12 * pk1, -2.0 * ydy(k) - 2.0 * i * ydx(k) - 3.0 * double(k) * pk);
  }
  return rep;
}

OdeReport ode_residuals(const WhittakerParams& p, double step) {
  if (!w_nonneg(p.w)) throw std::invalid_argument("ode_residuals: w is not nonnegative");
  // reject grid points too close to a real zero of h_w
  CubicC w = CubicC::from(p.w);
  PointData pt = point_data(w, p.x, p.y, p.w_scale);
  if (pt.abs_hw < 1e-8) throw std::domain_error("ode_residuals: too close to a zero of h_w");
  return schmid_residuals(p.n, p.w, p.x, p.y, p.w_scale, step, closed_form_phi(p.n, p.w));
}

}  // namespace g2tk

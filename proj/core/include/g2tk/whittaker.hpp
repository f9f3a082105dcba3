#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "g2tk/heis_so7.hpp"

namespace g2tk {

using Cplx = std::complex<double>;

// Double-precision copy of the symplectic 4-tuple (a, b/3, c/3, d); complex
// coefficients so the weight-raising cubics (v +- iu)^3 live here too.
struct CubicC {
  Cplx a{}, b3{}, c3{}, d{};

  Cplx cb() const { return 3.0 * b3; }
  Cplx cc() const { return 3.0 * c3; }
  static CubicC from(const WVector& w) {
    return {w.a.get_d(), w.b3.get_d(), w.c3.get_d(), w.d.get_d()};
  }
  CubicC operator*(const Cplx& s) const { return {a * s, b3 * s, c3 * s, d * s}; }
  CubicC operator-() const { return {-a, -b3, -c3, -d}; }
};

Cplx symplectic(const CubicC& w, const CubicC& w2);

// Same two actions as the exact layer, over complex scalars.
CubicC cubic_act_right(const std::array<Cplx, 4>& g, const CubicC& f);  // g = (g00,g01,g10,g11)
CubicC cubic_act_left(const std::array<Cplx, 4>& m, const CubicC& f);

// h_w(z) = a z^3 + b z^2 + c z + d.
Cplx h_w_eval(const CubicC& w, const Cplx& z);
Cplx h_w_deriv(const CubicC& w, const Cplx& z);

// True iff h_w has no roots off the real axis (degenerate degrees allowed).
// Exact discriminant test; rejects w = 0 as indeterminate.
bool w_nonneg(const WVector& w);
// Floating version: companion-matrix-free cubic solve, imaginary parts
// compared against tol.
bool w_nonneg(const CubicC& w, double tol = 1e-12);

struct WhittakerParams {
  int n = 1;             // weight
  WVector w;             // real symplectic vector, must satisfy w >= 0
  double x = 0.0;        // [[1,x],[0,1]] diag(sqrt y, 1/sqrt y) diag(w_scale, w_scale)
  double y = 1.0;
  double w_scale = 1.0;
};

// Component value
//   (|j h_w(z)| / (j h_w(z)))^v det(m)^n |det(m)| K_v(|j(m,i) h_w(z)|)
// at the coordinatized m; j(m,i) = (ci+d)^3/det(m) and z = m.i = x + iy.
Cplx whittaker_component(const WhittakerParams& p, int v);

// All 2n+1 components, v = -n..n, with 1/((n+v)!(n-v)!) applied.
std::vector<Cplx> whittaker_full(const WhittakerParams& p);
double factorial_norm(int n, int v);  // 1/((n+v)!(n-v)!)

// omega = -w and p_chi = h_w; both sides of the four pairing identities
//   <omega, m.(-v+iu)^3> = -i w y^{-3/2} p_chi(z*)            (and mates)
// evaluated at the coordinatized m, including the derivative form of the
// mixed identities via exact differentiation of the cubic.
struct PairingCheck {
  std::array<Cplx, 4> lhs{}, rhs{};
  double max_abs_diff = 0.0;
};
PairingCheck pairing_lemma_check(const WVector& w, double x, double y, double w_scale);

// phi provider: k-th component as a function of (x, y, w_scale).
using PhiFn = std::function<Cplx(int k, double x, double y, double w)>;
PhiFn closed_form_phi(int n, const WVector& w);

// Residuals of the four first-order differential-difference families on the
// component functions, by central differences at one point.  Residuals are
// reported relative to the largest term magnitude in each equation.
struct OdeReport {
  double max_rel_residual = 0.0;
  std::array<double, 4> family_max{};
  int cases = 0;
};
OdeReport schmid_residuals(int n, const WVector& w, double x, double y, double ws, double step,
                           const PhiFn& phi);
OdeReport ode_residuals(const WhittakerParams& p, double step);

}  // namespace g2tk

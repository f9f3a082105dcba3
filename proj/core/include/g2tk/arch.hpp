#pragma once

#include <array>
#include <complex>

#include "g2tk/whittaker.hpp"

namespace g2tk {

// Int_0^inf K_mu(y) K_nu(y) y^{s-1} dy against the closed gamma-product
// form 2^{s-3} G((s+mu+nu)/2) G((s+mu-nu)/2) G((s-mu+nu)/2) G((s-mu-nu)/2) / G(s).
// Requires s > |mu| + |nu|.
struct MellinKK {
  double quadrature = 0.0;
  double gamma_form = 0.0;
  double rel_err = 0.0;
};
MellinKK mellin_kk(double s, double mu, double nu);

// (Gamma(s)/(2 Gamma(1/2))) Int_R e^{irx} (x^2+y^2)^{-s} dx versus
// (r/2y)^{s-1/2} K_{s-1/2}(r y); r, y > 0, s > 1/2.
struct FourierK {
  double quadrature = 0.0;
  double bessel_form = 0.0;
  double rel_err = 0.0;
};
FourierK fourier_k_identity(double s, double r, double y);

// Sum over j1 + j3 = n - j2 of ((n-j2)!/(j1! j3!)) K_{j3-j1}(x) versus
// (-2)^{n-j2} (d/dx)^{n-j2} K_0(x), the derivative expanded by the exact
// recurrences.
struct MultinomialBessel {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
};
MultinomialBessel multinomial_bessel_check(int n, int j2, double x);

// Rank-one projection data: given alpha = <vE_lift, m r0(i)>, beta =
// <vE_lift, nbar> and det(m), the projection to the long-root sl2 is
//   (1/4) det(m)^{-1} (alpha* e + 2i beta (h/(-2)) ... ) stored as the three
// coefficients (e, h, f) = (alpha*/(4 det), -i beta/(4 det), -alpha/(4 det)),
// with ||x||^2 = |det|^{-2} (|alpha|^2 + |beta|^2).
struct ArchXData {
  std::array<Cplx, 3> coeffs{};  // e, h, f coefficients
  double norm_sq = 0.0;
};
ArchXData arch_x_data(const Cplx& alpha, double beta, double det_m);

// r0(z) = (1, -z, z^2, -z^3) as a symplectic 4-tuple; the pairing
// <w, m . r0(z)> under the right-translation Levi action.
CubicC r0_tuple(const Cplx& z);
Cplx pair_r0(const WVector& w, const std::array<Cplx, 4>& m, const Cplx& z);

// J(nu) = Int_{H} |p(z)|^{-2 nu} y^{3 nu} dx dy / y^2 over the upper half
// plane, truncated to |x| <= x0, y0 <= y <= y1 with an analytic tail
// estimate; `value2` is the half-resolution value for stability checks.
struct JnuConfig {
  double x0 = 20.0;
  double y0 = 1e-3;
  double y1 = 50.0;
  int nx = 2000;  // x panels at full resolution
  int ny = 400;   // log-spaced y panels
};
struct JnuResult {
  double value = 0.0;
  double value_coarse = 0.0;
  double tail_estimate = 0.0;
  double rel_change = 0.0;
};
JnuResult j_nu(const std::array<double, 4>& cubic, double nu, const JnuConfig& cfg = {});

// The two gamma-ratio shapes of the archimedean value, and the elementary
// multiplication-formula factor connecting them.
double gamma_ratio_quaternionic(double s, double n);  // G(s+2n-3)G(s+n-2)G(s+n-3)/G((s+n-1)/2)
double gamma_ratio_integral_form(double s, double n);
// G(s+2n-3)G(s+n-2)G((s+n-3)/2)^2 / (G(s+n-3) G((3s+3n-7)/2))
double shintani_gamma_block(double nu);  // G(nu/2-1/6)G(nu/2)^2 G(nu/2+1/6)/G(nu)

// log of [integral_form * shintani_block(s+n-2) / quaternionic] minus the
// predicted elementary factor log(2^{9-2t} 3^{(8-3t)/2} pi^2 / Gamma(t-2)),
// t = s+n.  Zero (to rounding) by the duplication and triplication
// formulas.
double gamma_ratio_mult_identity_residual(double s, double n);

// False when any gamma argument is within `eps` of a pole.
bool gamma_args_safe(double s, double n, double eps = 1e-6);

}  // namespace g2tk

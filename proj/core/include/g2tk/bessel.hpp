#pragma once

#include <map>

namespace g2tk {

// Modified Bessel function of the second kind, K_nu(x) for real order and
// x > 0, by trapezoidal quadrature of the integral representation
//   K_nu(x) = Int_0^inf exp(-x cosh t) cosh(nu t) dt.
// The integrand is even and analytic, so the uniform trapezoid rule
// converges geometrically; the implementation halves the step until the
// value is stable to ~1e-13 relative.  Relative accuracy is better than
// 1e-10 throughout 0.1 <= x <= 50, |nu| <= 30.  Rejects x <= 0; throws on
// overflow (use log_bessel_k for the scaled value).
double bessel_k(double nu, double x);

// log K_nu(x), computed with the quadrature normalized by the peak of the
// integrand so very large orders stay in range.
double log_bessel_k(double nu, double x);

// n-th derivative of K_nu at x by differentiating the integral
// representation (each d/dx brings down -cosh t).  Independent of the
// recurrence identities, so it serves as their oracle.
double bessel_k_dx(double nu, double x, int order);

// Coefficients of K_m in the n-th derivative of K_0, obtained from
// K_0' = -K_1 and K_m' = -(K_{m-1} + K_{m+1})/2 with K_{-m} = K_m.
// Keys are m >= 0; the value multiplies K_m.
std::map<int, double> k0_derivative_coeffs(int n);

// (d/dx)^n K_0(x) via the exact recurrence expansion (not finite
// differences).
double k0_derivative(int n, double x);

}  // namespace g2tk

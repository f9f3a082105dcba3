#include "g2tk/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace g2tk {

namespace {

// log of the integrand exp(-x cosh t) cosh(nu t), stable for large nu t.
double log_integrand(double nu, double x, double t) {
  double a = std::abs(nu) * t;
  // log cosh(a) = a + log1p(exp(-2a)) - log 2
  double logcosh = (a > 30.0) ? a - std::log(2.0) : std::log(std::cosh(a));
  return -x * std::cosh(t) + logcosh;
}

// Location of the integrand's maximum: x sinh t = |nu|.
double peak_t(double nu, double x) {
  double r = std::abs(nu) / x;
  return std::asinh(r);
}

// Returns log of Int_0^inf exp(-x cosh t) cosh^order(t) cosh(nu t) dt.
double log_k_quadrature(double nu, double x, int order = 0) {
  if (!(x > 0.0)) throw std::invalid_argument("bessel_k: requires x > 0");
  double tp = peak_t(nu, x);
  double logmax = log_integrand(nu, x, tp) + order * std::log(std::cosh(tp));

  // Truncation point: integrand below exp(logmax - 46) (~1e-20 relative).
  auto log_f = [&](double t) { return log_integrand(nu, x, t) + order * std::log(std::cosh(t)); };
  double T = tp + 1.0;
  while (log_f(T) > logmax - 46.0) T += 1.0;

  auto scaled = [&](double t) { return std::exp(log_f(t) - logmax); };

  double h = 0.5;
  // Trapezoid on [0, T]; the t=0 endpoint carries weight 1/2, the far end
  // is negligible by construction.
  double sum = 0.5 * scaled(0.0);
  for (double t = h; t <= T; t += h) sum += scaled(t);
  double value = sum * h;
  for (int iter = 0; iter < 12; ++iter) {
    // refine: add midpoints
    double mids = 0.0;
    for (double t = h / 2.0; t <= T; t += h) mids += scaled(t);
    double next = (value + mids * h) / 2.0;
    h /= 2.0;
    bool done = std::abs(next - value) <= 1e-14 * std::abs(next);
    value = next;
    if (done && iter >= 2) break;
  }
  return std::log(value) + logmax;
}

}  // namespace

double bessel_k_dx(double nu, double x, int order) {
  double lk = log_k_quadrature(nu, x, order);
  double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(lk);
}

double log_bessel_k(double nu, double x) { return log_k_quadrature(nu, x); }

double bessel_k(double nu, double x) {
  double lk = log_k_quadrature(nu, x);
  if (lk > 700.0) throw std::overflow_error("bessel_k: overflow; use log_bessel_k");
  return std::exp(lk);
}

std::map<int, double> k0_derivative_coeffs(int n) {
  std::map<int, double> cur;
  cur[0] = 1.0;
  for (int step = 0; step < n; ++step) {
    std::map<int, double> next;
    for (const auto& [m, c] : cur) {
      if (m == 0) {
        next[1] -= c;  // K_0' = -K_1
      } else {
        // K_m' = -(K_{m-1} + K_{m+1})/2; fold K_{-1} into K_1 via symmetry
        next[std::abs(m - 1)] -= c / 2.0;
        next[m + 1] -= c / 2.0;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

double k0_derivative(int n, double x) {
  double s = 0.0;
  for (const auto& [m, c] : k0_derivative_coeffs(n)) s += c * bessel_k(m, x);
  return s;
}

}  // namespace g2tk

#include "g2tk/arch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "g2tk/bessel.hpp"

namespace g2tk {

namespace {

constexpr double kPi = std::numbers::pi;

// Trapezoid with step halving for smooth integrands on [a, b].
template <typename F>
double trapezoid(F f, double a, double b, double tol, int max_iter = 14) {
  double h = (b - a) / 16.0;
  double sum = 0.5 * (f(a) + f(b));
  for (double t = a + h; t < b - h / 2; t += h) sum += f(t);
  double value = sum * h;
  for (int it = 0; it < max_iter; ++it) {
    double mids = 0.0;
    for (double t = a + h / 2; t < b; t += h) mids += f(t);
    double next = (value + mids * h) / 2.0;
    h /= 2.0;
    bool done = std::abs(next - value) <= tol * std::abs(next);
    value = next;
    if (done && it >= 2) break;
  }
  return value;
}

// Adaptive Simpson.
template <typename F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
double adaptive_simpson(F f, double a, double b, double tol, int depth = 24) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

double lg(double x) { return std::lgamma(x); }

}  // namespace

MellinKK mellin_kk(double s, double mu, double nu) {
  if (!(s > std::abs(mu) + std::abs(nu)))
    throw std::invalid_argument("mellin_kk: requires s > |mu| + |nu|");
  double gap = s - std::abs(mu) - std::abs(nu);
  // substitute y = e^t
  double t_lo = std::min(-6.0, -42.0 / gap);
  double t_hi = 1.0;
  auto log_env = [&](double t) { return s * t - 2.0 * std::exp(t); };
  while (log_env(t_hi) > -46.0) t_hi += 0.5;
  auto f = [&](double t) {
    double yv = std::exp(t);
    return std::exp(log_bessel_k(mu, yv) + log_bessel_k(nu, yv) + s * t);
  };
  MellinKK out;
  out.quadrature = trapezoid(f, t_lo, t_hi, 1e-12);
  out.gamma_form = std::exp((s - 3.0) * std::log(2.0) + lg((s + mu + nu) / 2.0) +
                            lg((s + mu - nu) / 2.0) + lg((s - mu + nu) / 2.0) +
                            lg((s - mu - nu) / 2.0) - lg(s));
  out.rel_err = std::abs(out.quadrature - out.gamma_form) / std::abs(out.gamma_form);
  return out;
}

FourierK fourier_k_identity(double s, double r, double y) {
  if (!(s > 0.5) || !(r > 0.0) || !(y > 0.0))
    throw std::invalid_argument("fourier_k_identity: need s > 1/2, r > 0, y > 0");
  // even part: 2 Int_0^inf cos(r x) (x^2+y^2)^{-s} dx
  auto f = [&](double x) { return std::cos(r * x) * std::pow(x * x + y * y, -s); };
  double X = std::pow(1e-12, -1.0 / (2.0 * s - 1.0));  // tail < ~1e-12 absolute
  X = std::max(X, 50.0 / r);
  double integral = 2.0 * adaptive_simpson(f, 0.0, X, 1e-13);
  FourierK out;
  out.quadrature = std::exp(lg(s)) / (2.0 * std::sqrt(kPi)) * integral;
  out.bessel_form = std::pow(r / (2.0 * y), s - 0.5) * bessel_k(s - 0.5, r * y);
  out.rel_err = std::abs(out.quadrature - out.bessel_form) / std::abs(out.bessel_form);
  return out;
}

MultinomialBessel multinomial_bessel_check(int n, int j2, double x) {
  if (j2 < 0 || j2 > n) throw std::invalid_argument("multinomial_bessel_check: need 0 <= j2 <= n");
  int m = n - j2;
  MultinomialBessel out;
  double fact_m = 1.0;
  for (int i = 2; i <= m; ++i) fact_m *= i;
  for (int j1 = 0; j1 <= m; ++j1) {
    int j3 = m - j1;
    double f1 = 1.0, f3 = 1.0;
    for (int i = 2; i <= j1; ++i) f1 *= i;
    for (int i = 2; i <= j3; ++i) f3 *= i;
    out.lhs += fact_m / (f1 * f3) * bessel_k(j3 - j1, x);
  }
  out.rhs = std::pow(-2.0, m) * k0_derivative(m, x);
  out.rel_err = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
  return out;
}

ArchXData arch_x_data(const Cplx& alpha, double beta, double det_m) {
  if (det_m == 0.0) throw std::invalid_argument("arch_x_data: det = 0");
  ArchXData out;
  Cplx quarter = 1.0 / (4.0 * det_m);
  out.coeffs[0] = std::conj(alpha) * quarter;
  out.coeffs[1] = Cplx(0.0, -1.0) * beta * quarter;
  out.coeffs[2] = -alpha * quarter;
  out.norm_sq = (std::norm(alpha) + beta * beta) / (det_m * det_m);
  return out;
}

CubicC r0_tuple(const Cplx& z) { return {1.0, -z, z * z, -z * z * z}; }

Cplx pair_r0(const WVector& w, const std::array<Cplx, 4>& m, const Cplx& z) {
  return symplectic(CubicC::from(w), cubic_act_right(m, r0_tuple(z)));
}

JnuResult j_nu(const std::array<double, 4>& cubic, double nu, const JnuConfig& cfg) {
  auto p_abs = [&](double xx, double yy) {
    Cplx z(xx, yy);
    Cplx v = ((Cplx(cubic[0]) * z + cubic[1]) * z + cubic[2]) * z + cubic[3];
    return std::abs(v);
  };
  // Row integral over x at height y by composite Simpson (nx panels), then a
  // refinement pass with a per-row absolute budget so the near-real-axis
  // peaks do not blow up the work where the y-weight makes them irrelevant.
  auto row_simpson = [&](double yv, int nx) {
    double h = 2.0 * cfg.x0 / nx;
    double acc = 0.0;
    auto fx = [&](double xx) { return std::pow(p_abs(xx, yv), -2.0 * nu); };
    for (int i = 0; i < nx; ++i) {
      double a = -cfg.x0 + i * h;
      acc += h / 6.0 * (fx(a) + 4.0 * fx(a + h / 2.0) + fx(a + h));
    }
    return acc;
  };
  auto run = [&](int nx, int ny) {
    double lo = std::log(cfg.y0), hi = std::log(cfg.y1);
    double hl = (hi - lo) / ny;
    // first pass: coarse rows to size the budget
    std::vector<double> yvals(ny + 1), weights(ny + 1), coarse(ny + 1);
    double total = 0.0;
    for (int iy = 0; iy <= ny; ++iy) {
      yvals[iy] = std::exp(lo + hl * iy);
      weights[iy] = std::pow(yvals[iy], 3.0 * nu - 1.0) * hl * ((iy == 0 || iy == ny) ? 0.5 : 1.0);
      coarse[iy] = row_simpson(yvals[iy], nx / 4);
      total += coarse[iy] * weights[iy];
    }
    double acc = 0.0;
    for (int iy = 0; iy <= ny; ++iy) {
      double budget = 1e-9 * std::abs(total) / ((ny + 1) * std::max(weights[iy], 1e-300));
      auto fx = [&](double xx) { return std::pow(p_abs(xx, yvals[iy]), -2.0 * nu); };
      double row = (budget > std::abs(coarse[iy]))
                       ? coarse[iy]
                       : adaptive_simpson(fx, -cfg.x0, cfg.x0, budget, 28);
      acc += row * weights[iy];
    }
    return acc;
  };
  JnuResult out;
  out.value = run(cfg.nx, cfg.ny);
  out.value_coarse = run(cfg.nx / 2, cfg.ny / 2);
  out.rel_change = std::abs(out.value - out.value_coarse) / std::abs(out.value);
  // crude tail bounds: |p| ~ |a| |z|^3 for large |z|
  double a = std::abs(cubic[0]);
  if (a > 0) {
    double xtail = 2.0 * std::pow(a, -2.0 * nu) * std::pow(cfg.x0, 1.0 - 6.0 * nu) / (6.0 * nu - 1.0);
    double ywidth = std::pow(cfg.y1, 3.0 * nu - 1.0);
    double ytail = std::pow(a, -2.0 * nu) * 2.0 * cfg.x0 * std::pow(cfg.y1, -3.0 * nu - 1.0) /
                   (3.0 * nu + 1.0);
    out.tail_estimate = std::abs(xtail) * ywidth + std::abs(ytail);
  }
  return out;
}

double gamma_ratio_quaternionic(double s, double n) {
  return std::exp(lg(s + 2 * n - 3) + lg(s + n - 2) + lg(s + n - 3) - lg((s + n - 1) / 2));
}

double gamma_ratio_integral_form(double s, double n) {
  return std::exp(lg(s + 2 * n - 3) + lg(s + n - 2) + 2.0 * lg((s + n - 3) / 2) - lg(s + n - 3) -
                  lg((3 * s + 3 * n - 7) / 2));
}

double shintani_gamma_block(double nu) {
  return std::exp(lg(nu / 2 - 1.0 / 6.0) + 2.0 * lg(nu / 2) + lg(nu / 2 + 1.0 / 6.0) - lg(nu));
}

double gamma_ratio_mult_identity_residual(double s, double n) {
  double t = s + n;
  double nu = s + n - 2;
  double log_x = std::log(gamma_ratio_integral_form(s, n)) + std::log(shintani_gamma_block(nu)) -
                 std::log(gamma_ratio_quaternionic(s, n));
  double log_pred = (9.0 - 2.0 * t) * std::log(2.0) + 0.5 * (8.0 - 3.0 * t) * std::log(3.0) +
                    2.0 * std::log(kPi) - lg(t - 2.0);
  return log_x - log_pred;
}

bool gamma_args_safe(double s, double n, double eps) {
  std::vector<double> args = {s + 2 * n - 3, s + n - 2,
                              s + n - 3, (s + n - 1) / 2,
                              (s + n - 3) / 2, (3 * s + 3 * n - 7) / 2,
                              (s + n - 2) / 2 - 1.0 / 6.0, (s + n - 2) / 2,
                              (s + n - 2) / 2 + 1.0 / 6.0, s + n - 2};
  for (double a : args) {
    if (a > eps) continue;
    double nearest = std::round(a);
    if (nearest <= 0.0 && std::abs(a - nearest) < eps) return false;
    if (a <= 0.0 && std::abs(a - nearest) < eps) return false;
  }
  return true;
}

}  // namespace g2tk

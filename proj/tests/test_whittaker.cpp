#include <doctest.h>

#include <cmath>

#include "g2tk/arch.hpp"
#include "g2tk/bessel.hpp"
#include "g2tk/verify.hpp"
#include "g2tk/whittaker.hpp"

using namespace g2tk;

TEST_CASE("bessel quadrature against closed forms") {
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(std::sqrt(M_PI / 2) * std::exp(-1.0)).epsilon(1e-12));
  // symmetry in the order
  CHECK(bessel_k(-2.0, 1.7) == doctest::Approx(bessel_k(2.0, 1.7)).epsilon(1e-13));
  // large order stays finite through the log version
  CHECK(std::isfinite(log_bessel_k(30.0, 0.1)));
  CHECK(log_bessel_k(30.0, 0.1) > 100.0);
  CHECK_THROWS_AS(bessel_k(0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(bessel_k(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("derivative coefficients expand through the recurrences") {
  // K_0'' = (K_0 + K_2)/2
  auto c2 = k0_derivative_coeffs(2);
  CHECK(c2[0] == doctest::Approx(0.5));
  CHECK(c2[2] == doctest::Approx(0.5));
  double x = 1.7;
  CHECK(k0_derivative(2, x) ==
        doctest::Approx(0.5 * (bessel_k(0, x) + bessel_k(2, x))).epsilon(1e-12));
  // against differentiation under the integral sign
  for (int n = 1; n <= 5; ++n)
    CHECK(k0_derivative(n, 1.3) == doctest::Approx(bessel_k_dx(0.0, 1.3, n)).epsilon(1e-10));
}

TEST_CASE("nonnegativity predicate") {
  CHECK(w_nonneg(parse_wvector("0,1,-1,0")));
  CHECK(!w_nonneg(parse_wvector("1,0,0,1")));
  CHECK(w_nonneg(parse_wvector("1,0,0,0")));
  CHECK(w_nonneg(parse_wvector("0,0,1,0")));   // linear
  CHECK(w_nonneg(parse_wvector("0,0,0,2")));   // constant, no roots at all
  CHECK_THROWS_AS(w_nonneg(parse_wvector("0,0,0,0")), std::invalid_argument);
  // floating version agrees
  CHECK(w_nonneg(CubicC::from(parse_wvector("0,1,-1,0"))));
  CHECK(!w_nonneg(CubicC::from(parse_wvector("1,0,0,1"))));
}

TEST_CASE("component values and phases") {
  WVector w = parse_wvector("0,1,-1,0");
  WhittakerParams p{1, w, 0.1, 1.3, 0.7};
  // phase factor is unit modulus
  Cplx v1 = whittaker_component(p, 1);
  Cplx v0 = whittaker_component(p, 0);
  CHECK(std::abs(v0.imag()) < 1e-15);
  Cplx hw = h_w_eval(CubicC::from(w), Cplx(0.1, 1.3));
  double u = 0.7 * std::pow(1.3, -1.5) * std::abs(hw);
  CHECK(std::abs(v0.real() - std::pow(0.7, 4) * bessel_k(0, u)) < 1e-12 * std::abs(v0.real()));
  CHECK(std::abs(std::abs(v1 / v0) - bessel_k(1, u) / bessel_k(0, u)) < 1e-12);
  // exponential decay in the similitude direction, against the asymptotic
  // K_0(t) ~ e^{-t} sqrt(pi/2t)
  double u_rate = std::pow(1.3, -1.5) * std::abs(hw);
  double prev = 1e300;
  for (double scale : {6.0, 9.0, 12.0}) {
    double cur = std::abs(whittaker_component(WhittakerParams{1, w, 0.1, 1.3, scale}, 0));
    double uu = scale * u_rate;
    double asym = std::pow(scale, 4) * std::exp(-uu) * std::sqrt(M_PI / (2.0 * uu));
    CHECK(cur == doctest::Approx(asym).epsilon(0.05));
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(whittaker_full(p).size() == 3);
  // rejected inputs
  CHECK_THROWS_AS(whittaker_component(WhittakerParams{1, parse_wvector("1,0,0,1"), 0, 1, 1}, 0),
                  std::invalid_argument);
}

TEST_CASE("pairing identities at a point") {
  PairingCheck pc = pairing_lemma_check(parse_wvector("1,0,-1,0"), 0.25, 1.6, 0.8);
  CHECK(pc.max_abs_diff < 1e-10);
}

TEST_CASE("differential system residuals at the reference point") {
  WVector w = parse_wvector("0,1,-1,0");
  WhittakerParams p{2, w, 0.1, 1.3, 0.7};
  OdeReport rep = ode_residuals(p, 1e-4);
  CHECK(rep.max_rel_residual < 1e-5);
  CHECK(rep.cases == 4 * 4);  // four families, k = -2..1
}

TEST_CASE("mellin and gamma identities") {
  MellinKK m = mellin_kk(2.0, 0.0, 0.0);
  CHECK(m.gamma_form == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.rel_err < 1e-6);
  CHECK_THROWS_AS(mellin_kk(0.8, 0.5, 0.5), std::invalid_argument);
  MultinomialBessel mb = multinomial_bessel_check(5, 1, 1.5);
  CHECK(mb.rel_err < 1e-8);
  CHECK_THROWS_AS(multinomial_bessel_check(2, 3, 1.0), std::invalid_argument);
  for (double s : {4.0, 6.0})
    CHECK(std::abs(gamma_ratio_mult_identity_residual(s, 2.0)) < 1e-10);
}

TEST_CASE("rank-one projection data") {
  ArchXData d = arch_x_data(Cplx(3.0, 4.0), 2.0, 2.0);
  CHECK(d.coeffs[0] == Cplx(3.0, -4.0) / 8.0);
  CHECK(d.coeffs[2] == -Cplx(3.0, 4.0) / 8.0);
  CHECK(d.norm_sq == doctest::Approx((25.0 + 4.0) / 4.0));
  ArchXData d0 = arch_x_data(Cplx(0.0, 0.0), 0.0, 1.0);
  CHECK(d0.norm_sq == 0.0);
  CHECK_THROWS_AS(arch_x_data(Cplx(1.0, 0.0), 0.0, 0.0), std::invalid_argument);
  // r0(z) = (1, -z, z^2, -z^3) paired through the right action
  WVector ve = parse_wvector("1,0,-1,0");
  std::array<Cplx, 4> id{1.0, 0.0, 0.0, 1.0};
  Cplx alpha = pair_r0(ve, id, Cplx(0.0, 1.0));
  // <v_E, r0(i)> = a d' - b c'/3 + c b'/3 - d a' = i + i = 2i for
  // (a,b,c,d) = (1,0,-1,0) and r0(i) = (1,-3i,-3,i)
  CHECK(std::abs(alpha - Cplx(0.0, 2.0)) < 1e-15);
}

TEST_CASE("numerical suites are clean (quick)") {
  CheckList c;
  check_collapse_phase(c);
  check_gamma_ratio(c);
  for (const auto& f : c.failures) MESSAGE(f);
  CHECK(c.failures.empty());
}

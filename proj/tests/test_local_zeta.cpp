#include <doctest.h>

#include "g2tk/local_zeta.hpp"
#include "g2tk/verify.hpp"

using namespace g2tk;

TEST_CASE("P polynomials from determinant valuation and content") {
  CHECK(p_h_from(0, 0) == ZetaPoly::one_minus_zk(1));
  CHECK(p_h_from(2, 1) == ZetaPoly::monomial(1, 1) * ZetaPoly::one_minus_zk(2));
  CHECK(p_h_from(1, 0) == ZetaPoly::monomial(1, 1) * ZetaPoly::one_minus_zk(1));
  // non-ring classes contribute nothing
  CHECK(p_h_from(1, -1).is_zero());
  CHECK(p_h_from(-1, -2).is_zero());
}

TEST_CASE("normalizer polynomial at q = 5") {
  ZetaPoly b = b0(5);
  CHECK(b.coeff(0) == 1);
  CHECK(b.coeff(1) == 6);
  CHECK(b.coeff(2) == 5);
  CHECK(b.coeff(3) == 30);
  CHECK(b.coeff(4) == 25);
  CHECK(b.degree() == 4);
}

TEST_CASE("local factors of the cubic algebra") {
  CHECK(local_l_inverse(SplittingType::kSplit) ==
        ZetaPoly({Rational(1), Rational(-2), Rational(1)}, 0));
  CHECK(local_l_inverse(SplittingType::kPartial) == ZetaPoly({Rational(1), Rational(0), Rational(-1)}, 0));
  CHECK(local_l_inverse(SplittingType::kInert) == ZetaPoly({Rational(1), Rational(1), Rational(1)}, 0));
}

TEST_CASE("hecke translates") {
  LatticeClass id;
  id.p = 5;
  CHECK(hecke_translate(id, HeckeOp::kTp).size() == 6);
  std::vector<LatticeClass> center = hecke_translate(id, HeckeOp::kCenterP);
  REQUIRE(center.size() == 1);
  CHECK(center[0].det_val() == 2);
  std::vector<LatticeClass> inv = hecke_translate(id, HeckeOp::kTpInv);
  for (const LatticeClass& t : inv) CHECK(t.det_val() == -1);
}

TEST_CASE("identity class satisfies the split boundary case with the known factorization") {
  long q = 5;
  BinaryCubic f{1, 0, -1, 0};
  LatticeClass id;
  id.p = q;
  // B0 P - z^2 M = (1+qz)(1-z)^2(1+2z)
  ZetaPoly combo = b0(q) * p_h(id, f) - ZetaPoly::monomial(1, 2) * m_h(id, f);
  ZetaPoly expect = ZetaPoly({Rational(1), Rational(q)}, 0) * ZetaPoly::one_minus_zk(1) *
                    ZetaPoly::one_minus_zk(1) * ZetaPoly({Rational(1), Rational(2)}, 0);
  CHECK(combo == expect);
  CridentResult res = verify_crident(id, SplittingType::kSplit, f);
  CHECK(res.equal);
  // RHS = 1 + (3 - 1) z
  CHECK(res.rhs == ZetaPoly({Rational(1), Rational(2)}, 0));
}

TEST_CASE("inert class of content 2 reproduces the irreducible table row") {
  long q = 5;
  BinaryCubic f = sample_form(q, SplittingType::kInert);
  LatticeClass h = canonical_class(q, diag2(Rational(25), Rational(25)));
  CHECK(content(h, f) == 2);
  ZetaPoly combo = b0(q) * p_h(h, f) - ZetaPoly::monomial(1, 2) * m_h(h, f);
  ZetaPoly expect = ZetaPoly::monomial(1, 4 - 2) * ZetaPoly({Rational(1), Rational(q)}, 0) *
                    ZetaPoly::one_minus_zk(3);
  CHECK(combo == expect);
}

TEST_CASE("character sums at p = 5") {
  BinaryCubic f{1, 0, -1, 0};
  ExpSumResult k0 = exp_sum_dchi(5, 0, 0, f);
  CHECK(k0.normalized.real() == doctest::Approx(1.0));
  ExpSumResult k1 = exp_sum_dchi(5, 1, 0, f);
  CHECK(k1.normalized.real() == doctest::Approx(2.0).epsilon(1e-9));  // N - eps = 3 - 1
  ExpSumResult k1r = exp_sum_dchi(5, 1, 1, f);
  CHECK(k1r.normalized.real() == doctest::Approx(1.0).epsilon(1e-9));  // N - eps = 3 - 2
  ExpSumResult k2 = exp_sum_dchi(5, 2, 1, f);
  CHECK(std::abs(k2.raw) < 1e-6);
  // inert with r >= 1: the divisibility criterion fails and the sum is zero
  BinaryCubic fi = sample_form(5, SplittingType::kInert);
  ExpSumResult crit = exp_sum_dchi(5, 1, 1, fi);
  CHECK(crit.criterion_zero);
  CHECK_THROWS_AS(exp_sum_dchi(11, 2, 0, f), std::invalid_argument);  // budget cap
}

TEST_CASE("dirichlet rows and multiplicative assembly") {
  CheckList c;
  check_dirichlet_rows(c);
  for (const auto& f : c.failures) MESSAGE(f);
  CHECK(c.failures.empty());
}

TEST_CASE("division failures signal bugs, not inputs") {
  BinaryCubic f{1, 0, -1, 0};
  LatticeClass dp = canonical_class(5, diag2(Rational(5), Rational(1)));
  // not a ring: rejected before any division is attempted
  CHECK_THROWS_AS(verify_crident(dp, SplittingType::kSplit, f), std::invalid_argument);
  // wrong declared type rejected
  LatticeClass id;
  id.p = 5;
  CHECK_THROWS_AS(verify_crident(id, SplittingType::kInert, f), std::invalid_argument);
}

TEST_CASE("summed series with unit coefficients telescopes through the identity") {
  // With every coefficient set to 1, the q-weighted sum of the Hecke
  // combinations over ring classes equals the same weighted sum of the
  // required linear numerators, multiplied back by (1+qz) and the local
  // factor.  This is the assembled form of the per-class identity.
  long q = 5;
  BinaryCubic f = sample_form(q, SplittingType::kSplit);
  ZetaPoly lhs_sum, rhs_sum;
  ZetaPoly one_plus_qz({Rational(1), Rational(q)}, 0);
  ZetaPoly linv = local_l_inverse(SplittingType::kSplit);
  for (const SubringClass& s : subring_enum(f, q, 4)) {
    Rational weight = pow_p(q, 2 * s.det_val);  // |det h|^{-2}
    lhs_sum = lhs_sum + weight * (b0(q) * p_h(s.cls, f) - ZetaPoly::monomial(1, 2) * m_h(s.cls, f));
    CridentResult res = verify_crident(s.cls, SplittingType::kSplit, f);
    rhs_sum = rhs_sum + weight * (one_plus_qz * linv * res.rhs);
  }
  CHECK(lhs_sum == rhs_sum);
}

TEST_CASE("quick identity sweep at p = 5, all types") {
  for (SplittingType t : {SplittingType::kSplit, SplittingType::kPartial, SplittingType::kInert}) {
    CheckList c;
    check_crident(c, 5, t, 4, 3);
    for (const auto& f : c.failures) MESSAGE(f);
    CHECK(c.failures.empty());
  }
}

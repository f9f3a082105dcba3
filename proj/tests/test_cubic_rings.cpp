#include <doctest.h>

#include "g2tk/cubic_rings.hpp"
#include "g2tk/local_zeta.hpp"
#include "g2tk/verify.hpp"

using namespace g2tk;

TEST_CASE("multiplication tables for the two standard forms") {
  CubicRingTable t1(BinaryCubic{1, 0, 0, 0});
  CHECK(t1.omega_sq() == CubicElem{Rational(0), Rational(0), Rational(1)});
  CHECK(t1.theta_sq() == CubicElem{Rational(0), Rational(0), Rational(0)});
  CHECK(t1.omega_theta() == CubicElem{Rational(0), Rational(0), Rational(0)});
  CubicRingTable t2(BinaryCubic{0, 1, -1, 0});
  CHECK(t2.omega_sq() == CubicElem{Rational(0), Rational(-1), Rational(0)});
  CHECK(t2.theta_sq() == CubicElem{Rational(0), Rational(0), Rational(-1)});
}

TEST_CASE("lattice classes respect the maximal and scalar examples") {
  BinaryCubic f{1, 0, -1, 0};  // split at 5
  long p = 5;
  LatticeClass id;
  id.p = p;
  CHECK(t_lattice(id.rep(), f, p).is_ring);
  CHECK(content(id, f) == 0);
  CHECK(mat_val(id) == 0);
  CHECK(epsilon_class(id) == 1);

  LatticeClass pid = canonical_class(p, diag2(Rational(p), Rational(p)));
  CHECK(content(pid, f) == 1);
  CHECK(mat_val(pid) == 1);
  CHECK(epsilon_class(pid) == 1);

  LatticeClass p2id = canonical_class(p, diag2(Rational(25), Rational(25)));
  CHECK(content(p2id, f) == 2);

  LatticeClass dp = canonical_class(p, diag2(Rational(5), Rational(1)));
  CHECK(mat_val(dp) == 0);
  CHECK(epsilon_class(dp) == 2);
  CHECK(mat_val(canonical_class(p, diag2(Rational(25), Rational(5)))) == 1);
  CHECK_THROWS_AS(t_lattice(MatQ(2, 2), f, p), std::invalid_argument);
}

TEST_CASE("canonical form examples") {
  // index-p sublattices of the standard lattice at p=2
  LatticeClass id;
  id.p = 2;
  std::vector<LatticeClass> subs = sublattices_index_p(id);
  REQUIRE(subs.size() == 3);
  int with_b = 0;
  for (const LatticeClass& s : subs) {
    CHECK(s.det_val() == 1);
    if (s.b != 0) ++with_b;
  }
  CHECK(with_b == 1);  // [[2,1],[0,1]]
  // off-diagonal reduction mod p^a includes p-power denominators
  MatQ h(2, 2);
  h(0, 0) = frac(1, 2);
  h(0, 1) = frac(7, 2);
  h(1, 1) = Rational(4);
  LatticeClass cls = canonical_class(2, h);
  CHECK(cls.va == -1);
  CHECK(cls.vc == 2);
  CHECK(val_p(cls.b - frac(7, 2), 2) >= cls.va);
  CHECK(cls.b >= 0);
  CHECK(cls.b < pow_p(2, cls.va));
}

TEST_CASE("factor types over small primes") {
  CHECK(factor_type(BinaryCubic{0, 1, -1, 0}, 5) == FactorType::kThreeLines);
  CHECK(factor_type(BinaryCubic{1, 0, 0, 0}, 5) == FactorType::kTripleLine);
  CHECK(factor_type(BinaryCubic{1, 0, 1, 0}, 3) == FactorType::kLineQuadratic);
  CHECK(count_p1_zeros(BinaryCubic{0, 1, -1, 0}, 5) == 3);
  CHECK(count_p1_zeros(BinaryCubic{1, 0, 0, 0}, 5) == 1);
  CHECK(count_p1_zeros(BinaryCubic{1, 0, 1, 1}, 5) == 0);
  CHECK(factor_type(BinaryCubic{1, 0, 1, 1}, 5) == FactorType::kIrreducible);
  CHECK(count_p1_zeros(BinaryCubic{5, 5, 5, 5}, 5) == 6);
  CHECK_THROWS_AS(factor_type(BinaryCubic{5, 5, 5, 5}, 5), std::invalid_argument);
}

TEST_CASE("subring enumeration matches the zero counts at index p") {
  for (long p : {5L, 7L}) {
    for (SplittingType t : {SplittingType::kSplit, SplittingType::kPartial, SplittingType::kInert}) {
      BinaryCubic f = sample_form(p, t);
      int expected = count_p1_zeros(f, p);
      int found = 0;
      for (const SubringClass& s : subring_enum(f, p, 1))
        if (s.det_val == 1) ++found;
      CHECK(found == expected);
    }
  }
  // max_val = 0: only the maximal class
  BinaryCubic f = sample_form(5, SplittingType::kSplit);
  std::vector<SubringClass> all = subring_enum(f, 5, 0);
  REQUIRE(all.size() == 1);
  CHECK(all[0].cls == LatticeClass{5, 0, 0, Rational(0)});
}

TEST_CASE("subring counts by index match direct enumeration in the etale models") {
  // Frozen from an independent computation: sublattices of Z^3 (componentwise
  // product), Z x Z[sqrt(2)] and Z[t]/(t^3+t+1) containing 1 and closed under
  // multiplication, enumerated over Hermite bases at p = 5.
  struct Expected {
    SplittingType t;
    int counts[4];
  };
  const Expected table[3] = {{SplittingType::kSplit, {1, 3, 4, 9}},
                             {SplittingType::kPartial, {1, 1, 2, 7}},
                             {SplittingType::kInert, {1, 0, 1, 6}}};
  for (const Expected& e : table) {
    BinaryCubic f = sample_form(5, e.t);
    int counts[4] = {0, 0, 0, 0};
    for (const SubringClass& s : subring_enum(f, 5, 3)) ++counts[s.det_val];
    for (int v = 0; v <= 3; ++v) CHECK(counts[v] == e.counts[v]);
  }
}

TEST_CASE("form of a class is the independent content oracle") {
  BinaryCubic f = sample_form(5, SplittingType::kSplit);
  for (const SubringClass& s : subring_enum(f, 5, 3)) {
    auto form = form_of_class(s.cls, f);
    CHECK(form_min_val(form, 5) == s.content);
  }
  // non-ring: negative content, fractional form
  LatticeClass dp = canonical_class(5, diag2(Rational(5), Rational(1)));
  if (!t_lattice(dp.rep(), f, 5).is_ring) {
    CHECK(content(dp, f) < 0);
    CHECK(form_min_val(form_of_class(dp, f), 5) < 0);
  }
}

TEST_CASE("good prime guard") {
  CHECK_THROWS_AS(require_good_prime(BinaryCubic{1, 0, -1, 0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(require_good_prime(BinaryCubic{1, 0, -1, 0}, 2), std::invalid_argument);
  require_good_prime(BinaryCubic{1, 0, -1, 0}, 7);
  // x^3 + 5y^3 degenerates to a triple line mod 5
  CHECK_THROWS_AS(require_good_prime(BinaryCubic{1, 0, 0, 5}, 5), std::invalid_argument);
}

TEST_CASE("cubic ring suites are clean") {
  CheckList c;
  check_cubic_tables(c, 0, 60);
  check_gl2z_equivariance(c, 0, 120);
  check_hnf(c, 0);
  for (const auto& f : c.failures) MESSAGE(f);
  CHECK(c.failures.empty());
}

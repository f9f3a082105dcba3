#include <doctest.h>

#include <random>

#include "g2tk/matrix.hpp"
#include "g2tk/zeta_poly.hpp"

using namespace g2tk;

namespace {

Rational rr(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  return frac(num(rng), den(rng));
}

ZetaPoly rpoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> shift(-3, 3);
  int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(rr(rng));
  return ZetaPoly(std::move(c), shift(rng));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    Rational a = rr(rng), b = rr(rng);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
    CHECK(a.get_den() > 0);
  }
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(frac(-3, -6) == frac(1, 2));
  CHECK(parse_rational("22/7") == frac(22, 7));
}

TEST_CASE("p-adic valuations") {
  CHECK(val_p(Integer(250), 5) == 3);
  CHECK(val_p(frac(1, 25), 5) == -2);
  CHECK(val_p(frac(10, 3), 5) == 1);
  CHECK(val_p(Rational(0), 5) == kValInfinity);
  CHECK(p_integral(frac(3, 7), 5));
  CHECK(!p_integral(frac(3, 5), 5));
}

TEST_CASE("gaussian rationals form a field with involutive conjugation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    GaussianRational a(rr(rng), rr(rng)), b(rr(rng), rr(rng));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a - a).is_zero());
  }
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
}

TEST_CASE("polynomial product examples") {
  // (1-z)(1+z) = 1-z^2
  ZetaPoly a({Rational(1), Rational(-1)}, 0);
  ZetaPoly b({Rational(1), Rational(1)}, 0);
  CHECK(poly_mul(a, b) == ZetaPoly({Rational(1), Rational(0), Rational(-1)}, 0));
  // (1+qz) at q=5 times 0 is 0
  ZetaPoly qz({Rational(1), Rational(5)}, 0);
  CHECK(poly_mul(qz, ZetaPoly::zero()).is_zero());
  // (1-z)(1+z+z^2) = 1-z^3, by direct convolution
  ZetaPoly c({Rational(1), Rational(1), Rational(1)}, 0);
  CHECK(poly_mul(a, c) == ZetaPoly::one_minus_zk(3));
}

TEST_CASE("polynomial ring laws and Laurent bookkeeping") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    ZetaPoly a = rpoly(rng), b = rpoly(rng), c = rpoly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
  ZetaPoly laurent({Rational(1), Rational(2)}, -2);
  CHECK(laurent.coeff(-2) == 1);
  CHECK(laurent.coeff(-1) == 2);
  CHECK(laurent.degree() == -1);
  CHECK((laurent * ZetaPoly::monomial(1, 2)).lowest_exp() == 0);
  // inexact division reports failure
  CHECK(!ZetaPoly({Rational(1), Rational(1)}, 0).divide_exact(ZetaPoly::one_minus_zk(1)).has_value());
}

TEST_CASE("matrix rank by exact elimination") {
  CHECK(MatQ::identity(3).rank() == 3);
  CHECK(MatQ(4, 4).rank() == 0);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    MatQ m(4, 3);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rr(rng);
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("matrix solve and inverse are exact") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    MatQ m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rr(rng);
    auto inv = m.inverse();
    if (!inv) continue;
    CHECK(m * (*inv) == MatQ::identity(3));
    std::vector<Rational> rhs = {rr(rng), rr(rng), rr(rng)};
    auto x = m.solve(rhs);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == rhs);
  }
  // inconsistent system detected
  MatQ m(2, 1, {Rational(1), Rational(1)});
  CHECK(!m.solve({Rational(0), Rational(1)}).has_value());
}

#include <doctest.h>

#include <random>

#include "g2tk/octonion.hpp"
#include "g2tk/verify.hpp"

using namespace g2tk;

namespace {

Octonion ro(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> v(-9, 9);
  Octonion x;
  x.a = Rational(v(rng));
  x.d = Rational(v(rng));
  for (int i = 0; i < 3; ++i) {
    x.v[i] = Rational(v(rng));
    x.phi[i] = Rational(v(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("norm and trace on diagonal elements") {
  Octonion x;
  x.a = frac(3, 2);
  x.d = frac(-4, 3);
  CHECK(oct_norm(x) == frac(3, 2) * frac(-4, 3));
  CHECK(oct_trace(x) == frac(3, 2) + frac(-4, 3));
}

TEST_CASE("unit, conjugation, and quadratic relation") {
  std::mt19937_64 rng(3);
  Octonion one = Octonion::one();
  for (int t = 0; t < 200; ++t) {
    Octonion x = ro(rng);
    CHECK(oct_mul(one, x) == x);
    CHECK(oct_conj(oct_conj(x)) == x);
    CHECK(oct_mul(x, oct_conj(x)) == one * oct_norm(x));
    CHECK(oct_mul(x, x) == x * oct_trace(x) - one * oct_norm(x));
  }
}

TEST_CASE("norm multiplicativity over 200 random pairs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Octonion x = ro(rng), y = ro(rng);
    CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
  }
}

TEST_CASE("trilinear form associates in the trace") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    Octonion x = ro(rng), y = ro(rng), z = ro(rng);
    CHECK(oct_trilinear(x, y, z) == oct_trace(oct_mul(x, oct_mul(y, z))));
  }
}

TEST_CASE("v7 embedding and pairing") {
  V7Q v{};
  v[0] = 1;  // e1
  Octonion x = from_v7(v);
  CHECK(oct_trace(x) == 0);
  CHECK(to_v7(x) == v);
  V7Q u0{};
  u0[3] = 1;
  CHECK(v7_pair(u0, u0) == -2);
  V7Q e1s{};
  e1s[4] = 1;
  CHECK(v7_pair(v, e1s) == -1);
  Octonion bad = Octonion::one();
  CHECK_THROWS_AS(to_v7(bad), std::invalid_argument);
}

TEST_CASE("text round trip") {
  Octonion x;
  x.a = frac(-7, 3);
  x.v = {Rational(1), frac(1, 2), Rational(0)};
  x.phi = {Rational(0), Rational(-4), frac(9, 7)};
  x.d = Rational(12);
  CHECK(parse_octonion(to_string(x)) == x);
  CHECK_THROWS_AS(parse_octonion("1;2,3;4,5,6;7"), std::invalid_argument);
}

TEST_CASE("full octonion verification suite is clean") {
  CheckList c;
  check_octonion(c, 0, 100);
  CHECK(c.failures.empty());
  CHECK(c.cases > 500);
}

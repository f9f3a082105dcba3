#include <doctest.h>

#include <random>

#include "g2tk/heis_so7.hpp"
#include "g2tk/verify.hpp"

using namespace g2tk;

TEST_CASE("symplectic pairing formula") {
  WVector w = parse_wvector("1,0,0,0");
  WVector w2 = parse_wvector("0,0,0,1");
  CHECK(symplectic(w, w2) == 1);
  CHECK(symplectic(w2, w) == -1);
  CHECK(symplectic(w, w) == 0);
  // <w, w'> = ad' - bc'/3 + cb'/3 - da'
  WVector u = parse_wvector("1,2,3,4"), v = parse_wvector("5,6,7,8");
  CHECK(symplectic(u, v) == Rational(8) - frac(2 * 7, 3) + frac(3 * 6, 3) - Rational(4 * 5));
}

TEST_CASE("integrality predicate keeps the thirds separate") {
  WVector w = parse_wvector("1,2,3,4");
  CHECK(w.is_integral());
  CHECK(w.b3 == frac(2, 3));
  WVector w2 = w;
  w2.b3 = frac(1, 2);
  CHECK(!w2.is_integral());
  CHECK(parse_wvector(to_string(w)) == w);
}

TEST_CASE("right action twisted by det inverse") {
  WVector f = parse_wvector("1,2,3,4");
  CHECK(cubic_act_right(MatQ::identity(2), f) == f);
  WVector g = cubic_act_right(diag2(Rational(5), Rational(1)), f);
  CHECK(g.a == 25);
  CHECK(g.cb() == 10);
  CHECK(g.cc() == 3);
  CHECK(g.d == frac(4, 5));
  CHECK_THROWS_AS(cubic_act_right(MatQ(2, 2), f), std::invalid_argument);
  // group law
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> v(-4, 4);
  for (int t = 0; t < 50; ++t) {
    MatQ a(2, 2), b(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          a(i, j) = Rational(v(rng));
          b(i, j) = Rational(v(rng));
        }
    } while (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) == 0 || b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0) == 0);
    // right action: f.(ab) = (f.b).a; left action composes covariantly
    CHECK(cubic_act_right(a * b, f) == cubic_act_right(a, cubic_act_right(b, f)));
    CHECK(cubic_act_left(a * b, f) == cubic_act_left(a, cubic_act_left(b, f)));
  }
}

TEST_CASE("gram matrix of the ordered basis") {
  MatQ J = so7_gram();
  CHECK(J(3, 3) == -2);
  CHECK(J(0, 5) == 1);
  // coordinate change round trip
  V7Q v{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6), Rational(7)};
  CHECK(v7_from_so7(so7_from_v7(v)) == v);
}

TEST_CASE("levi and unipotent embeddings") {
  CHECK(m_embed(MatQ::identity(2)) == MatQ::identity(7));
  CHECK_THROWS_AS(m_embed(MatQ(2, 2)), std::invalid_argument);
  CHECK(n_embed(WVector{}, Rational(0)) == MatQ::identity(7));
  // beta picks out the middle column claimed in the construction
  WVector w;
  w.b3 = 1;
  MatQ L = n_embed_lie(w, Rational(0));
  CHECK(L(3, 5) == 1);  // -e1* |-> u0
  CHECK(L(2, 5) == 0);
}

TEST_CASE("full orthogonal-realization suite is clean") {
  CheckList c;
  check_so7(c, 0, 100);
  for (const auto& f : c.failures) MESSAGE(f);
  CHECK(c.failures.empty());
}

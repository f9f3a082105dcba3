#include <doctest.h>

#include <json.hpp>

#include <fstream>

#include "g2tk/g2_lie.hpp"
#include "g2tk/verify.hpp"

using namespace g2tk;

namespace {

GaussianRational gi() { return GaussianRational::i(); }

}  // namespace

TEST_CASE("bracket relations from the short-root families") {
  CHECK(bracket(g2_delta(2), g2_v(3)) == g2_E(3, 2) * GaussianRational(3));
  CHECK(bracket(g2_v(1), g2_v(2)) == g2_delta(3) * GaussianRational(2));
  // [delta_3, v_3] = 3E_33 - (E11+E22+E33) = -E11 - E22 + 2E33
  CHECK(bracket(g2_delta(3), g2_v(3)) ==
        g2_diag(GaussianRational(-1), GaussianRational(-1), GaussianRational(2)));
}

TEST_CASE("wedge action examples") {
  auto unit = [](int i) {
    V7<GaussianRational> v{};
    for (auto& x : v) x = GaussianRational(0);
    v[i] = GaussianRational(1);
    return v;
  };
  Wedge2G w{};
  for (auto& x : w) x = GaussianRational(0);
  wedge_add(w, GaussianRational(1), 3, 0);  // u0 ^ e1
  V7<GaussianRational> r = wedge_action(w, unit(3));
  V7<GaussianRational> expect = unit(0);
  expect[0] = GaussianRational(2);
  CHECK(r == expect);
}

TEST_CASE("kernel membership and dimension counts") {
  CHECK(g2_basis_matrix().rank() == 14);
  CHECK(proj_v7_matrix().rank() == 7);
  for (int i = 0; i < kG2Dim; ++i) {
    V7<GaussianRational> img = proj_v7(to_wedge(g2_basis(i)));
    for (const auto& x : img) CHECK(x.is_zero());
  }
}

TEST_CASE("from_wedge rejects two-forms outside the algebra") {
  Wedge2G w{};
  for (auto& x : w) x = GaussianRational(0);
  wedge_add(w, GaussianRational(1), 0, 1);  // e1 ^ e2 alone is not in the kernel
  CHECK_THROWS_AS(from_wedge(w), std::logic_error);
  // round trip on a legitimate element
  G2Element x = g2_v(2) * gi() + g2_E(2, 1) * GaussianRational(frac(3, 7));
  CHECK(from_wedge(to_wedge(x)) == x);
}

TEST_CASE("theta and eigenspace projections") {
  CHECK(cartan_theta(g2_v(2)) == g2_delta(2));
  CHECK(cartan_theta(g2_E(1, 2)) == -g2_E(2, 1));
  auto [k, p] = kp_decompose(g2_v(1));
  CHECK(k + p == g2_v(1));
  CHECK(cartan_theta(k) == k);
  CHECK(cartan_theta(p) == -p);
}

TEST_CASE("killing pairing values on the adapted basis") {
  PBasisElems pb = p_basis();
  CHECK(killing_pair(pb.hm3.conj(), pb.hm3) == GaussianRational(16));
  CHECK(killing_pair(pb.hm1.conj(), pb.hm1) == GaussianRational(frac(16, 3)));
  CHECK(killing_pair(pb.h1, pb.h1).is_zero());
  CHECK(killing_pair(pb.h3, pb.hm3).is_zero());
}

TEST_CASE("sl2 triples") {
  CompactTriples t = compact_triples();
  CHECK(bracket(t.h_u, t.e_u) == t.e_u * GaussianRational(2));
  CHECK(bracket(g2_u(1), g2_r(2)).is_zero());
  CHECK(bracket(g2_r(1), g2_r(2)) == g2_r(3));
  PBasisElems pb = p_basis();
  CHECK(bracket(t.h_r, pb.d3) == pb.d3 * GaussianRational(3));
  CHECK(bracket(t.h_u, pb.h1) == pb.h1);
  CHECK(pb.d3 == -pb.hm3.conj());
}

TEST_CASE("iwasawa decomposition of the recorded elements") {
  PBasisElems pb = p_basis();
  {
    IwasawaParts w = iwasawa(pb.hm3);
    CHECK(w.cubic[0] == gi() * GaussianRational(2));
    CHECK(w.cubic[1] == GaussianRational(2));
    CHECK(w.cubic[2] == -(gi() * GaussianRational(2)));
    CHECK(w.cubic[3] == GaussianRational(-2));
    CHECK(w.k_part == -(compact_triples().e_u * GaussianRational(4)));
  }
  {
    IwasawaParts w = iwasawa(pb.h3);
    CHECK(w.m_part == -(g2_eps1() + g2_eps2()) * GaussianRational(2));
    CHECK(w.k_part == -(compact_triples().h_u + compact_triples().h_r));
    CHECK(w.mu == gi() * GaussianRational(4));
  }
  {
    IwasawaParts w = iwasawa(g2_basis(kE12));
    CHECK(w.cubic[0] == GaussianRational(1));
    CHECK(w.cubic[1].is_zero());
    CHECK(w.m_part.is_zero());
    CHECK(w.k_part.is_zero());
  }
  // the m-part matrix convention round-trips through the Levi embedding
  {
    IwasawaParts w = iwasawa(pb.hm1);
    CHECK(levi_embed(w.m_matrix()) == w.m_part);
  }
}

TEST_CASE("graded model bracket rules") {
  // [e1, e2] = 2 e3* in the graded model
  Z3Element x1 = z3_basis(kV1), x2 = z3_basis(kV2);
  Z3Element b = z3_bracket(x1, x2);
  CHECK(b.dual[2] == GaussianRational(2));
  CHECK(model_iso(b) == bracket(g2_v(1), g2_v(2)));
  // [A, x] = Ax for the matrix part
  Z3Element A = z3_basis(kE12);
  Z3Element e2 = z3_basis(kV2);
  Z3Element ax = z3_bracket(A, e2);
  CHECK(ax.vec[0] == GaussianRational(1));
  CHECK(ax.vec[1].is_zero());
}

TEST_CASE("bracket table fixture regression") {
  std::ifstream in(std::string(G2TK_FIXTURE_DIR) + "/bracket_table.json");
  REQUIRE(in.good());
  nlohmann::json fixture = nlohmann::json::parse(in);
  nlohmann::json derived = nlohmann::json::parse(bracket_table_json());
  CHECK(fixture == derived);
}

TEST_CASE("full structure suites are clean") {
  CheckList c;
  check_lie_structure(c);
  check_cartan(c);
  check_triples(c);
  check_z3_model(c);
  check_lie_extra(c, 0);
  for (const auto& f : c.failures) MESSAGE(f);
  CHECK(c.failures.empty());
}

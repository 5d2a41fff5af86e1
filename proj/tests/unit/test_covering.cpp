#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoidlab/covering.hpp"
#include "support/oracles.hpp"

using namespace monoidlab;

TEST_CASE("contracted D_n dimensions equal |Op_n|") {
  const PrimeField f(10007);
  CHECK(build_contracted_Dn(1, f).algebra.dim() == 1);
  CHECK(build_contracted_Dn(3, f).algebra.dim() == 10);
  CHECK(build_contracted_Dn(4, f).algebra.dim() == 35);
  for (int n = 1; n <= 5; ++n)
    CHECK(build_contracted_Dn(n, f).algebra.dim() ==
          enumerate_elements(MonoidKind::Op, n).size());
}

TEST_CASE("D_n composition rules") {
  const PrimeField f(7);
  const ContractedDn dn = build_contracted_Dn(3, f);
  const auto d_12_1 = dn.index_of(true, {1, 2}, {1});
  const auto d_123_12 = dn.index_of(true, {1, 2, 3}, {1, 2});
  const auto r_12_12 = dn.index_of(false, {1, 2}, {1, 2});
  const auto r_13_12 = dn.index_of(false, {1, 3}, {1, 2});
  REQUIRE((d_12_1 && d_123_12 && r_12_12 && r_13_12));

  // r_{Z,Y} d_{Y,X} = d_{Z,X}
  const SparseCoord& rd = dn.algebra.product(*r_13_12, *d_12_1);
  REQUIRE(rd.size() == 1);
  CHECK(rd[0].first == *dn.index_of(true, {1, 3}, {1}));
  // d_{Z,Y} d_{Y,X} = 0 in the contracted algebra
  CHECK(dn.algebra.product(*d_123_12, *d_12_1).empty());
  // the identity morphism on the object composes trivially
  const SparseCoord& id_d = dn.algebra.product(*r_12_12, *d_12_1);
  REQUIRE(id_d.size() == 1);
  CHECK(id_d[0].first == *d_12_1);
  const SparseCoord& rr = dn.algebra.product(*r_12_12, *r_12_12);
  REQUIRE(rr.size() == 1);
  CHECK(rr[0].first == *r_12_12);
}

TEST_CASE("skeletal D_n has dimension 2n - 1") {
  const PrimeField f(10007);
  for (int n = 1; n <= 6; ++n)
    CHECK(build_skeletal_Dn(n, f).algebra.dim() == 2 * static_cast<std::size_t>(n) - 1);
}

TEST_CASE("CA_n as a category algebra has dimension 2|Op_n|") {
  const PrimeField f(10007);
  for (int n = 1; n <= 4; ++n)
    CHECK(cod_category_algebra(n, f).algebra.dim() ==
          2 * enumerate_elements(MonoidKind::Op, n).size());
}

TEST_CASE("F sends morphisms by the |X| mod 4 case split") {
  const PrimeField f(10007);
  const ContractedDn dn = build_contracted_Dn(3, f);
  const CodCategoryAlgebra ca = cod_category_algebra(3, f);
  const FMaps maps = build_F_maps(dn, ca);

  const auto r = dn.index_of(false, {1, 2}, {1, 2});
  REQUIRE(r);
  // |X| = 2: F picks the minus sign, F' the plus sign
  CHECK(ca.basis[maps.f_image[*r]].sign == -1);
  CHECK_FALSE(ca.basis[maps.f_image[*r]].is_delta);
  CHECK(ca.basis[maps.fprime_image[*r]].sign == 1);

  const auto d = dn.index_of(true, {1, 2}, {1});
  REQUIRE(d);
  // |X| = 1: F picks the plus sign
  CHECK(ca.basis[maps.f_image[*d]].sign == 1);
  CHECK(ca.basis[maps.f_image[*d]].is_delta);
  CHECK(ca.basis[maps.fprime_image[*d]].sign == -1);
}

TEST_CASE("product decomposition certifies kCOD_n ~ kOp_n x kOp_n") {
  for (int n = 1; n <= 4; ++n) {
    const PrimeField f(10007);
    const DecompositionReport rep = verify_product_decomposition(n, f);
    for (const auto& c : rep.checks) {
      INFO(c.name << " " << c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.ok);
    CHECK(rep.dim_can == 2 * rep.dim_k0dn);
  }
}

TEST_CASE("decomposition rank certificate is prime independent") {
  for (const std::uint32_t p : {10007u, 32003u}) {
    const PrimeField f(p);
    const DecompositionReport rep = verify_product_decomposition(3, f);
    CHECK(rep.ok);
  }
}

TEST_CASE("decomposition cap is enforced") {
  const PrimeField f(10007);
  CHECK_THROWS_AS(verify_product_decomposition(6, f), std::invalid_argument);
}

TEST_CASE("straightline quivers on both sides") {
  const PrimeField f(10007);
  SUBCASE("n = 4") {
    const StraightlineReport rep = opn_quiver_check(4, f);
    for (const auto& c : rep.checks) {
      INFO(c.name << " " << c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.ok);
    CHECK(rep.op_quiver.vertices.size() == 4);
    CHECK(rep.op_quiver.arrows.size() == 3);
    CHECK(rep.cod_quiver.vertices.size() == 8);
    CHECK(quiver_components(rep.cod_quiver).size() == 2);
  }
  SUBCASE("n = 1 degenerates to isolated vertices") {
    const StraightlineReport rep = opn_quiver_check(1, f);
    CHECK(rep.ok);
    CHECK(rep.op_quiver.vertices.size() == 1);
    CHECK(rep.op_quiver.arrows.empty());
    CHECK(rep.cod_quiver.vertices.size() == 2);
    CHECK(rep.cod_quiver.arrows.empty());
  }
}

TEST_CASE("characteristic 2 is rejected before any eps construction") {
  CHECK_THROWS_AS(PrimeField(2), char_two_error);
}

TEST_CASE("straight path recognizer") {
  Quiver q;
  q.vertices = {"a", "b", "c"};
  q.arrows = {{0, 1, 1}, {1, 2, 1}};
  CHECK(is_straight_path(q, {0, 1, 2}));
  q.arrows.push_back({2, 0, 1});  // close a cycle
  CHECK_FALSE(is_straight_path(q, {0, 1, 2}));
  q.arrows.pop_back();
  q.arrows[1].mult = 2;
  CHECK_FALSE(is_straight_path(q, {0, 1, 2}));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "monoidlab/schutz.hpp"
#include "support/oracles.hpp"

using namespace monoidlab;

namespace {

bool is_permutation_matrix(const FMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t row_ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) return false;
      if (m(i, j) == 1) ++row_ones;
      if (m(j, i) == 1) ++col_ones;
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("module dimensions") {
  const MonoidTable od3 = enumerate_monoid(MonoidKind::OD, 3);
  CHECK(schutz_module(od3, {1}).dim() == 3);
  CHECK(schutz_module(od3, {1, 2}).dim() == 6);
  const MonoidTable cod3 = enumerate_monoid(MonoidKind::COD, 3);
  CHECK(schutz_module(cod3, {1}).dim() == 6);
  CHECK_THROWS_AS(schutz_module(od3, {2, 3}), std::invalid_argument);
}

TEST_CASE("module axiom holds exhaustively over OD_4") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 4);
  for (const auto& X : p1_subsets(4)) {
    const SchutzModule mod = schutz_module(t, X);
    const int dim = mod.dim();
    // identity acts as the identity
    for (int j = 0; j < dim; ++j) CHECK(mod.sigma(t.identity)[j] == j);
    // sigma(s) o sigma(u) = sigma(su), with -1 absorbing
    for (std::size_t s = 0; s < t.size(); ++s) {
      for (std::size_t u = 0; u < t.size(); ++u) {
        const std::int32_t* su = mod.sigma(t.mul(s, u));
        const std::int32_t* ss = mod.sigma(s);
        const std::int32_t* uu = mod.sigma(u);
        for (int j = 0; j < dim; ++j) {
          const std::int32_t composed = uu[j] < 0 ? -1 : ss[uu[j]];
          CHECK(su[j] == composed);
        }
      }
    }
  }
}

TEST_CASE("h_tilde case analysis on OD_3") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 3);
  CHECK(h_tilde(t, {1, 3}, {1, 2}).size() == 2);
  const auto singleton = h_tilde(t, {1, 2}, {1});
  REQUIRE(singleton.size() == 1);
  CHECK(t.transforms[singleton[0]].img == std::vector<int>{2, 2, 2});
  CHECK(h_tilde(t, {1, 2, 3}, {1}).empty());
}

TEST_CASE("hom dimensions match |H~| on the worked examples") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 3);
  const PrimeField f(7);
  const SchutzModule l1 = schutz_module(t, {1});
  const SchutzModule l12 = schutz_module(t, {1, 2});
  const SchutzModule l123 = schutz_module(t, {1, 2, 3});
  CHECK(hom_space(l1, l12, f).basis.size() == 1);
  CHECK(hom_space(l123, l123, f).basis.size() == 2);
  CHECK(hom_space(l1, l123, f).basis.size() == 0);
}

TEST_CASE("hom bases intertwine and are linearly independent") {
  for (const MonoidKind kind : {MonoidKind::OD, MonoidKind::COD}) {
    const MonoidTable t = enumerate_monoid(kind, 3);
    const PrimeField f(10007);
    const auto sets = p1_subsets(3);
    for (const auto& X : sets) {
      for (const auto& Y : sets) {
        const SchutzModule target = schutz_module(t, X);
        const SchutzModule source = schutz_module(t, Y);
        const HomBasis hb = hom_space(target, source, f);
        for (const FMatrix& m : hb.basis) CHECK(intertwines(m, target, source));
        if (hb.basis.size() > 1) {
          FMatrix stack(f, hb.basis.size(), target.dim() * source.dim());
          for (std::size_t b = 0; b < hb.basis.size(); ++b)
            for (std::size_t e = 0; e < stack.cols(); ++e)
              stack(b, e) = hb.basis[b].data()[e];
          CHECK(reduce(stack).rank == hb.basis.size());
        }
      }
    }
  }
}

TEST_CASE("hom dimension table matches h_tilde for n <= 4") {
  const PrimeField f(7);
  for (int n = 1; n <= 4; ++n) {
    for (const MonoidKind kind : {MonoidKind::OD, MonoidKind::COD}) {
      const HomDimTable table = hom_dim_table(enumerate_monoid(kind, n), f);
      CHECK(table.all_match);
      std::size_t total = 0;
      for (const auto& e : table.pairs) total += e.dim;
      // the h_tilde sets partition the monoid
      CHECK(total == enumerate_elements(kind, n).size());
    }
  }
}

TEST_CASE("rho homomorphisms") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 3);
  const PrimeField f(7);
  SUBCASE("rho^1_{X,X} is the identity") {
    for (const auto& X : p1_subsets(3)) {
      const SchutzModule m = schutz_module(t, X);
      CHECK(rho_hom(m, m, 1, f) == FMatrix::identity(f, m.dim()));
    }
  }
  SUBCASE("rho^{-1} squares to the identity") {
    const SchutzModule m = schutz_module(t, {1, 2});
    const FMatrix r = rho_hom(m, m, -1, f);
    CHECK(r * r == FMatrix::identity(f, m.dim()));
  }
  SUBCASE("cross-class rho is a permutation matrix") {
    const FMatrix r = rho_hom(t, {1, 3}, {1, 2}, 1, f);
    CHECK(r.rows() == 6);
    CHECK(is_permutation_matrix(r));
  }
  SUBCASE("mutually inverse: rho^1_{Y,X} o rho^1_{X,Y} = id") {
    const auto sets = p1_subsets(3);
    for (const auto& X : sets)
      for (const auto& Y : sets) {
        if (X.size() != Y.size()) continue;
        const SchutzModule mx = schutz_module(t, X);
        const SchutzModule my = schutz_module(t, Y);
        const FMatrix a = rho_hom(mx, my, 1, f);  // kL_Y -> kL_X
        const FMatrix b = rho_hom(my, mx, 1, f);  // kL_X -> kL_Y
        CHECK(a * b == FMatrix::identity(f, mx.dim()));
        CHECK(b * a == FMatrix::identity(f, my.dim()));
      }
  }
  SUBCASE("size mismatch rejected") {
    CHECK_THROWS_AS(rho_hom(t, {1, 2}, {1}, 1, f), std::invalid_argument);
  }
}

TEST_CASE("delta homomorphisms") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 3);
  const PrimeField f(7);
  SUBCASE("delta(e_Y) has alternating unit coordinates") {
    const SchutzModule target = schutz_module(t, {1});
    const SchutzModule source = schutz_module(t, {1, 2});
    const FMatrix d = delta_hom(target, source, 1, f);
    const elem_t ey = t.index_of(canonical_function(3, {1, 2}, {1, 2}, 1), 1);
    const std::int32_t col = source.position(ey);
    REQUIRE(col >= 0);
    // d^1_{Y,X} = c_2 - c_1 for Y = {1,2}, X = {1}
    const std::int32_t pos_c2 = target.position(t.index_of(constant_transformation(3, 2), 1));
    const std::int32_t pos_c1 = target.position(t.index_of(constant_transformation(3, 1), 1));
    CHECK(d(pos_c2, col) == 1);
    CHECK(d(pos_c1, col) == f.neg(1));
  }
  SUBCASE("d^{-1} = d^1 * f^{-1}_{X,X}") {
    for (int n = 3; n <= 4; ++n) {
      const MonoidTable tn = enumerate_monoid(MonoidKind::OD, n);
      for (const auto& X : p1_subsets(n)) {
        for (const auto& Y : p1_subsets(n)) {
          if (Y.size() != X.size() + 1) continue;
          const SchutzModule target = schutz_module(tn, X);
          const Coord d1 = d_vector(tn, Y, X, 1, f);
          const Coord dm = d_vector(tn, Y, X, -1, f);
          // right-multiply d^1 by f^{-1}_{X,X} elementwise
          const elem_t fxx = tn.index_of(canonical_function(n, X, X, -1), 1);
          Coord mapped(target.dim(), 0);
          for (int j = 0; j < target.dim(); ++j) {
            if (d1[j] == 0) continue;
            const elem_t prod = tn.mul(target.basis()[j], fxx);
            const std::int32_t pos = target.position(prod);
            REQUIRE(pos >= 0);
            mapped[pos] = f.add(mapped[pos], d1[j]);
          }
          CHECK(mapped == dm);
        }
      }
    }
  }
  SUBCASE("wrong sizes rejected") {
    CHECK_THROWS_AS(delta_hom(t, {1, 2}, {1, 3}, 1, f), std::invalid_argument);
    CHECK_THROWS_AS(d_vector(t, {1}, {1, 2}, 1, f), std::invalid_argument);
  }
}

TEST_CASE("annihilation: low-rank elements kill d^1_{Y,X} over OD_4") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 4);
  const PrimeField f(7);
  for (const auto& X : p1_subsets(4)) {
    for (const auto& Y : p1_subsets(4)) {
      if (Y.size() != X.size() + 1) continue;
      const SchutzModule target = schutz_module(t, X);
      const Coord d = d_vector(t, Y, X, 1, f);
      for (std::size_t s = 0; s < t.size(); ++s) {
        if (t.rank_of(s) > static_cast<int>(X.size())) continue;
        const Coord sd = target.act(s, d, f);
        CHECK(std::all_of(sd.begin(), sd.end(),
                          [](std::uint32_t v) { return v == 0; }));
      }
    }
  }
}

TEST_CASE("skeleton algebra dimensions and structure") {
  const PrimeField f(10007);
  CHECK(skeleton_algebra(SkeletonKind::An, 1, f).algebra.dim() == 1);
  CHECK(skeleton_algebra(SkeletonKind::An, 3, f).algebra.dim() == 8);
  CHECK(skeleton_algebra(SkeletonKind::CAn, 3, f).algebra.dim() == 10);
  CHECK(skeleton_algebra(SkeletonKind::An, 6, f).algebra.dim() == 20);
  CHECK(skeleton_algebra(SkeletonKind::CAn, 6, f).algebra.dim() == 22);

  const SkeletonAlgebra a4 = skeleton_algebra(SkeletonKind::An, 4, f);
  CHECK(a4.eps_idempotents().size() == 7);  // 2n - 1
  CHECK(a4.delta_radical_candidate().size() == 5);  // 2n - 3
  CHECK(a4.index_of(false, 1, -1) == std::nullopt);  // eps_1^- vanishes in A_n

  const SkeletonAlgebra ca4 = skeleton_algebra(SkeletonKind::CAn, 4, f);
  CHECK(ca4.eps_idempotents().size() == 8);  // 2n
  CHECK(ca4.index_of(false, 1, -1).has_value());
}

TEST_CASE("relation suites hold") {
  const PrimeField f(10007);
  for (int n = 2; n <= 5; ++n) {
    const RelationReport od = verify_relations(SkeletonKind::An, n, f);
    for (const auto& c : od.checks) {
      INFO(c.name << ": " << c.first_failure);
      CHECK(c.pass);
    }
    CHECK(od.ok);
  }
  const RelationReport cod = verify_relations(SkeletonKind::CAn, 4, f);
  CHECK(cod.ok);
}

TEST_CASE("sign lemma instance at k = 2 carries a plus sign") {
  // rho_{k+1}^{-1} delta_k^a = (-1)^k delta_k^{-a}: for k = 2 the sign is +
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 5);
  const PrimeField f(10007);
  const SchutzModule l2 = schutz_module(t, {1, 2});
  const SchutzModule l3 = schutz_module(t, {1, 2, 3});
  const FMatrix d1 = delta_hom(l2, l3, 1, f);
  const FMatrix dm = delta_hom(l2, l3, -1, f);
  const FMatrix rm = rho_hom(l3, l3, -1, f);
  CHECK(d1 * rm == dm);  // op product rho_3^{-1} . delta_2^{+1} = +delta_2^{-1}
}

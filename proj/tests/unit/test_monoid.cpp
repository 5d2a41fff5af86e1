#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "monoidlab/monoid.hpp"
#include "support/oracles.hpp"

using namespace monoidlab;

TEST_CASE("enumeration agrees with the brute-force filter") {
  for (int n = 1; n <= 5; ++n) {
    const auto op_maps = test::all_monotone_maps(n, false);
    const auto od_maps = test::all_monotone_maps(n, true);

    std::set<std::vector<int>> op_expected, od_expected;
    for (const auto& t : op_maps) op_expected.insert(t.img);
    for (const auto& t : od_maps) od_expected.insert(t.img);

    std::set<std::vector<int>> op_actual, od_actual;
    for (const auto& lab : enumerate_elements(MonoidKind::Op, n))
      op_actual.insert(canonical_function(n, lab.Y, lab.X, lab.sign).img);
    for (const auto& lab : enumerate_elements(MonoidKind::OD, n))
      od_actual.insert(canonical_function(n, lab.Y, lab.X, lab.sign).img);

    CHECK(op_actual == op_expected);
    CHECK(od_actual == od_expected);
    CHECK(enumerate_elements(MonoidKind::Op, n).size() == op_expected.size());
    CHECK(enumerate_elements(MonoidKind::OD, n).size() == od_expected.size());
  }
}

TEST_CASE("element counts on the worked examples") {
  CHECK(enumerate_elements(MonoidKind::Op, 3).size() == 10);
  CHECK(enumerate_elements(MonoidKind::OD, 3).size() == 17);
  CHECK(enumerate_elements(MonoidKind::COD, 3).size() == 20);
}

TEST_CASE("size identities |OD_n| = 2|Op_n| - n and |COD_n| = 2|Op_n|") {
  for (int n = 1; n <= 6; ++n) {
    const std::size_t op = enumerate_elements(MonoidKind::Op, n).size();
    const std::size_t od = enumerate_elements(MonoidKind::OD, n).size();
    const std::size_t cod = enumerate_elements(MonoidKind::COD, n).size();
    CHECK(od == 2 * op - static_cast<std::size_t>(n));
    CHECK(cod == 2 * op);
    CHECK(cod == od + static_cast<std::size_t>(n));
  }
}

TEST_CASE("cayley tables: identity, closure and associativity") {
  for (const MonoidKind kind :
       {MonoidKind::Op, MonoidKind::OD, MonoidKind::COD, MonoidKind::SemidirectOpZ2}) {
    for (int n = 1; n <= 4; ++n) {
      const MonoidTable t = enumerate_monoid(kind, n);
      const std::size_t m = t.size();
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(t.mul(t.identity, i) == i);
        CHECK(t.mul(i, t.identity) == i);
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = 0; k < m; ++k)
            CHECK(t.mul(t.mul(i, j), k) == t.mul(i, t.mul(j, k)));
    }
  }
}

TEST_CASE("associativity sampled at n = 5") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 5);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t i = rng() % t.size(), j = rng() % t.size(), k = rng() % t.size();
    CHECK(t.mul(t.mul(i, j), k) == t.mul(i, t.mul(j, k)));
  }
}

TEST_CASE("composition law on labels: signs multiply when chains match") {
  for (int n = 2; n <= 4; ++n) {
    const MonoidTable t = enumerate_monoid(MonoidKind::OD, n);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (t.elements[i].X != t.elements[j].Y) continue;  // chain mismatch
        const CanonicalLabel& prod = t.elements[t.mul(i, j)];
        if (prod.is_constant()) continue;
        CHECK(prod.sign == t.elements[i].sign * t.elements[j].sign);
        CHECK(prod.X == t.elements[j].X);
        CHECK(prod.Y == t.elements[i].Y);
      }
    }
  }
}

TEST_CASE("deterministic element order") {
  const MonoidTable t = enumerate_monoid(MonoidKind::OD, 3);
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    CHECK(label_less(t.elements[i], t.elements[i + 1]));
  // constants first, identity is f^1_{[n],[n]}
  CHECK(t.elements[0].is_constant());
  CHECK(t.elements[t.identity].X == std::vector<int>{1, 2, 3});
  CHECK(t.elements[t.identity].Y == std::vector<int>{1, 2, 3});
  CHECK(t.elements[t.identity].sign == 1);
}

TEST_CASE("semidirect product Op_n x| Z_2") {
  CHECK(semidirect_table(2).size() == 6);

  const MonoidTable t = semidirect_table(3);
  CHECK(t.size() == 20);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t.mul(t.identity, i) == i);
    CHECK(t.mul(i, t.identity) == i);
  }
  // (c_1, h)(c_1, h) = (c_1 (h c_1 h), id) = (c_1, id)
  const elem_t c1h = t.index_of(constant_transformation(3, 1), -1);
  const elem_t c1 = t.index_of(constant_transformation(3, 1), 1);
  CHECK(t.mul(c1h, c1h) == c1);
}

TEST_CASE("phi is an isomorphism onto COD_n") {
  for (int n = 1; n <= 4; ++n) {
    const PhiReport rep = check_phi_isomorphism(n);
    INFO(rep.counterexample);
    CHECK(rep.ok());
    CHECK(rep.semidirect_size == rep.cod_size);
  }
  CHECK(check_phi_isomorphism(2).cod_size == 6);
  CHECK(check_phi_isomorphism(3).cod_size == 20);
}

TEST_CASE("psi is the natural quotient onto OD_n") {
  const PsiReport rep3 = check_psi_quotient(3);
  INFO(rep3.counterexample);
  CHECK(rep3.ok());
  CHECK(rep3.fiber2_count == 3);  // one doubled fiber per constant
  CHECK(rep3.fiber_sum == 20);

  CHECK(check_psi_quotient(1).ok());
  CHECK(check_psi_quotient(4).ok());
}

TEST_CASE("caps reject out-of-range n") {
  CHECK_THROWS_AS(enumerate_elements(MonoidKind::OD, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_elements(MonoidKind::OD, enumeration_cap() + 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_monoid(MonoidKind::OD, table_cap() + 1),
                  std::invalid_argument);
}

TEST_CASE("brute force counts match the closed forms") {
  // |Op_n| = C(2n-1, n-1)
  const std::size_t expected_op[] = {0, 1, 3, 10, 35, 126, 462};
  for (int n = 1; n <= 6; ++n) {
    const BruteForceCounts counts = brute_force_monotone_counts(n);
    CHECK(counts.op == expected_op[n]);
    CHECK(counts.od == 2 * expected_op[n] - static_cast<std::size_t>(n));
  }
}

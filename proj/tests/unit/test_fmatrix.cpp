#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monoidlab/fmatrix.hpp"

using namespace monoidlab;

namespace {

FMatrix from_rows(const PrimeField& f,
                  const std::vector<std::vector<std::uint32_t>>& rows) {
  FMatrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

FMatrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c,
                      std::mt19937& rng) {
  FMatrix m(f, r, c);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
  CHECK_THROWS_AS(PrimeField(2), char_two_error);
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  const PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_int(-1) == 6);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  const PrimeField big(10007);
  for (std::uint32_t a : {1u, 2u, 5003u, 10006u}) CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("rref on the spec examples") {
  const PrimeField f(7);
  SUBCASE("2x2 identity") {
    const RrefResult r = reduce(FMatrix::identity(f, 2));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("zero 3x4") {
    const RrefResult r = reduce(FMatrix(f, 3, 4));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
  }
  SUBCASE("hand-reduced rank-1 matrix") {
    // [[1,2],[2,4]] over F_7: row2 - 2 row1 = 0, so rref = [[1,2],[0,0]]
    const RrefResult r = reduce(from_rows(f, {{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.rref(0, 0) == 1);
    CHECK(r.rref(0, 1) == 2);
    CHECK(r.rref(1, 0) == 0);
    CHECK(r.rref(1, 1) == 0);
  }
}

TEST_CASE("rref properties on random matrices") {
  const PrimeField f(7);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const FMatrix m = random_matrix(f, r, c, rng);
    const RrefResult first = reduce(m);
    CHECK(first.rank == reduce(m.transpose()).rank);
    const RrefResult second = reduce(first.rref);
    CHECK(second.rref == first.rref);  // idempotent
  }
}

TEST_CASE("nullspace basics and verification by multiplication") {
  const PrimeField f(7);
  CHECK(nullspace(FMatrix::identity(f, 3)).empty());
  CHECK(nullspace(FMatrix(f, 2, 3)).size() == 3);

  const auto ns = nullspace(from_rows(f, {{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<std::uint32_t>{6, 1});  // free-column convention

  std::mt19937 rng(999);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const FMatrix m = random_matrix(f, r, c, rng);
    const auto basis = nullspace(m);
    CHECK(basis.size() == c - reduce(m).rank);
    for (const auto& v : basis) {
      const auto mv = mat_vec(m, v);
      CHECK(std::all_of(mv.begin(), mv.end(), [](std::uint32_t x) { return x == 0; }));
    }
  }
}

TEST_CASE("right inverse") {
  const PrimeField f(7);
  SUBCASE("identity inverts to identity") {
    const auto r = right_inverse(FMatrix::identity(f, 3));
    REQUIRE(r.has_value());
    CHECK(*r == FMatrix::identity(f, 3));
  }
  SUBCASE("wide all-ones row") {
    const FMatrix m = from_rows(f, {{1, 1, 1}});
    const auto r = right_inverse(m);
    REQUIRE(r.has_value());
    CHECK(m * *r == FMatrix::identity(f, 1));
  }
  SUBCASE("rank-deficient tall column") {
    CHECK_FALSE(right_inverse(from_rows(f, {{1}, {1}})).has_value());
  }
  SUBCASE("exists iff full row rank") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const FMatrix m = random_matrix(f, r, c, rng);
      const auto inv = right_inverse(m);
      CHECK(inv.has_value() == (reduce(m).rank == r));
      if (inv) CHECK(m * *inv == FMatrix::identity(f, r));
    }
  }
}

TEST_CASE("sparse incremental solver matches the dense path") {
  const PrimeField f(10007);
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 10;
    FMatrix m(f, rows, cols);
    SparseRref sparse(f, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<SparseRref::Entry> row;
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng() % 3 == 0) {
          const std::uint32_t v = rng() % f.modulus();
          m(i, j) = v;
          if (v != 0) row.push_back({static_cast<std::uint32_t>(j), v});
        }
      }
      sparse.insert(row);
    }
    CHECK(sparse.rank() == reduce(m).rank);
    CHECK(sparse.nullspace_basis() == nullspace(m));
  }
}

#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "huainf/enumerate.hpp"
#include "huainf/linalg.hpp"

using namespace huainf;
using namespace huainf::fixtures;

TEST_CASE("little Schroeder numbers") {
  const std::size_t expected[] = {1, 1, 3, 11, 45, 197};
  auto ge2 = [](int a) { return a >= 2; };
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_trees(n, ge2).size() == expected[n - 1]);
    CHECK(oracle_count(n) == expected[n - 1]);
    CHECK(enumerate_basis(Presentation::a_infinity(), n).size() == expected[n - 1]);
  }
  for (int n = 7; n <= 8; ++n) CHECK(enumerate_trees(n, ge2).size() == oracle_count(n));
  CHECK_THROWS(enumerate_trees(2, [](int a) { return a >= 0; }));
  CHECK(enumerate_trees(1, [](int a) { return a == 1; }, 2).size() == 3);
}

TEST_CASE("A-infinity(4) by degree") {
  auto b = basis_by_degree(Presentation::a_infinity(), 4);
  CHECK(b[0].size() == 5);
  CHECK(b[-1].size() == 5);
  CHECK(b[-2].size() == 1);
}

TEST_CASE("rank") {
  std::vector<SparseVector> rows{{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}, {{1, 2}}};
  CHECK(rank(rows) == 2);
  CHECK(rank(rows, Field::prime(2)) == 1);
  CHECK(rank({}) == 0);
  RowEchelon e;
  e.insert({{0, mpq_class(1, 3)}});
  CHECK(e.contains({{0, 5}}));
  CHECK_FALSE(e.contains({{1, 5}}));
}

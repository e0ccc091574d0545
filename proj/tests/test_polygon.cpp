#include <doctest.h>

#include "kron22/oracle.hpp"
#include "kron22/polygon.hpp"
#include "test_support.hpp"

using namespace kron22;

TEST_CASE("constraint rows carry the fixed coefficient table") {
  auto rows = polygon_constraints({1, 0, 1, 0});
  CHECK(rows[6] == ConstraintRow{1, -1, -1});
  CHECK(rows[0] == ConstraintRow{1, 0, 0});
  CHECK(rows[1] == ConstraintRow{1, 0, -1});

  CHECK(polygon_constraints({0, 0, 0, 0})[5] == ConstraintRow{-1, -1, 0});
  CHECK(polygon_constraints({2, 2, 2, 0})[2] == ConstraintRow{1, 1, -2});
  CHECK(polygon_constraints({1, 2, 3, 4})[4] == ConstraintRow{-1, 1, 7});
}

TEST_CASE("lattice point counts match hand enumeration") {
  auto count = [](ReducedIndex h) {
    auto rows = polygon_constraints(h);
    return count_lattice_points(rows);
  };
  CHECK(count({1, 0, 1, 0}) == 1);  // unique point (1,0)
  CHECK(count({1, 0, 0, 0}) == 0);  // infeasible
  CHECK(count({13, 8, 10, 6}) == 6);  // X in {13,14,15} contributing 3+2+1
}

TEST_CASE("count_lattice_points rejects unbounded systems") {
  std::vector<ConstraintRow> quadrant{{1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(count_lattice_points(quadrant), std::domain_error);
  std::vector<ConstraintRow> no_y_bound{{1, 0, 3}, {-1, 0, 3}, {0, 1, 0}};
  CHECK_THROWS_AS(count_lattice_points(no_y_bound), std::domain_error);
  std::vector<ConstraintRow> contradiction{{0, 0, -1}};
  CHECK(count_lattice_points(contradiction) == 0);
}

TEST_CASE("reduced coefficients by counting") {
  CHECK(reduced_kron_count({0, 0, 0, 0}) == 1);
  CHECK(reduced_kron_count({1, 0, 1, 0}) == 1);
  CHECK(reduced_kron_count({1, 0, 0, 0}) == 0);
  CHECK(reduced_kron_count({1, 0, 2, 0}) == 0);
  CHECK(reduced_kron_count({1, 0, 1, 1}) == 0);
  // the classical square of the standard-representation row
  CHECK(reduced_kron_count({1, 1, 0, 0}) == 1);
  CHECK(reduced_kron_count({1, 1, 1, 0}) == 1);
  CHECK(reduced_kron_count({1, 1, 2, 0}) == 1);
  CHECK(reduced_kron_count({1, 1, 1, 1}) == 1);

  CHECK_THROWS_AS(reduced_kron_count({0, 0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(reduced_kron_count({-1, 0, 0, 0}), std::domain_error);
}

TEST_CASE("swap symmetry and support bound on a box") {
  for (long long r = 0; r <= 12; ++r)
    for (long long s = 0; s <= r; ++s)
      for (long long g1 = 0; g1 <= 12; ++g1)
        for (long long g2 = 0; g2 <= g1; ++g2) {
          long long a = reduced_kron_count({r, s, g1, g2});
          CHECK(a == reduced_kron_count({s, r, g1, g2}));
          CHECK(a >= 0);
          if (g1 + g2 > r + s) CHECK(a == 0);
        }
}

TEST_CASE("counting agrees with the stabilized character oracle") {
  Oracle oracle(testing::test_oracle_config(40));
  std::vector<Oracle::ReducedQuery> queries;
  std::vector<long long> expected;
  for (long long r = 0; r <= 6; ++r)
    for (long long s = 0; s <= 6; ++s)
      for (long long g1 = 0; g1 <= 6; ++g1)
        for (long long g2 = 0; g2 <= g1; ++g2) {
          queries.push_back({Partition({r}), Partition({s}), Partition({g1, g2})});
          expected.push_back(reduced_kron_count({r, s, g1, g2}));
        }
  std::vector<long long> values = oracle.reduced_many(queries);
  REQUIRE(values.size() == expected.size());
  for (size_t i = 0; i < values.size(); ++i) CHECK(values[i] == expected[i]);
}

#include "doctest.h"
#include "mappeel/enumerate.hpp"
#include "mappeel/errors.hpp"
#include "mappeel/tree_counting.hpp"
#include "test_support.hpp"

using namespace mappeel;

TEST_SUITE("enumerate") {

TEST_CASE("univariate counts") {
  const UniSeries q = quad_counts(7);
  CHECK(q.coeffs() == std::vector<Integer>{0, 0, 1, 2, 9, 54, 378, 2916});
  const UniSeries t = tri_counts(6);
  CHECK(t.coeffs() == std::vector<Integer>{0, 0, 1, 4, 32, 336, 4096});
  CHECK_THROWS_AS(quad_counts(1), UsageError);
  CHECK_THROWS_AS(tri_counts(1), UsageError);
}

TEST_CASE("univariate counts match the closed forms") {
  const UniSeries q = quad_counts(120);
  const UniSeries t = tri_counts(120);
  for (unsigned long n = 2; n <= 120; ++n) {
    CHECK(q[n] == test_support::quad_closed_form(n));
    CHECK(t[n] == test_support::tri_closed_form(n));
  }
}

TEST_CASE("last-car kernels") {
  const UniSeries k = last_car_kernel(quad_counts(5));
  CHECK(k.order() == 4);
  CHECK(k.coeffs() == std::vector<Integer>{0, 0, 1, 6, 45});
  const UniSeries kt = last_car_kernel(tri_counts(6));
  CHECK(kt.coeffs() == std::vector<Integer>{0, 0, 1, 10, 128, 1848});
}

TEST_CASE("quadrangulations with a boundary") {
  const BiSeries q = quad_boundary_table(8);
  CHECK(q.coeff(1, 0) == 1);
  CHECK(q.coeff(2, 1) == 1);
  CHECK(q.coeff(3, 2) == 2);
  CHECK(q.coeff(4, 2) == 9);
  for (int n = 2; n <= 8; ++n) CHECK(q.coeff(n, 0) == 0);
  const TreeCountTable dp(Family::Quad, 8);
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= 2 * n - 2; ++p) CHECK(q.coeff(n, p) == dp.count(p, n));
}

TEST_CASE("Tutte ladder agrees with the bivariate solver") {
  for (int N : {1, 2, 5, 12}) {
    const UniSeries seed = N >= 2 ? quad_counts(N) : UniSeries(1);
    CHECK(quad_boundary_table_tutte(N, seed) == quad_boundary_table(N));
  }
  CHECK_THROWS_AS(quad_boundary_table_tutte(5, quad_counts(4)), UsageError);
}

TEST_CASE("a wrong ladder seed is caught") {
  UniSeries seed = quad_counts(6);
  seed.set(4, 10);
  CHECK_THROWS_AS(quad_boundary_table_tutte(6, seed), IntegrityError);
}

TEST_CASE("triangulations with a boundary") {
  const TriBoundaryTable tb = tri_boundary_table(7);
  const BiSeries& t = tb.table;
  CHECK(t.coeff(2, 1) == 1);
  const TreeCountTable dp(Family::Tri, 7);
  for (int n = 1; n <= 7; ++n)
    for (int p = 0; p <= 3 * n - 3; ++p) CHECK(t.coeff(n, p) == dp.count(p, n));
  CHECK(tb.seeded == std::vector<std::pair<int, int>>{{2, 1}});
  // The top cell p = 3n - 3 of every row is left open by the equation.
  REQUIRE(tb.oracle_filled.size() == 6);
  for (std::size_t i = 0; i < tb.oracle_filled.size(); ++i) {
    const int n = static_cast<int>(i) + 2;
    CHECK(tb.oracle_filled[i] == std::pair<int, int>{n, 3 * n - 3});
    CHECK(t.coeff(n, 3 * n - 3) == 0);
  }
}

TEST_CASE("boundary columns against the univariate counts") {
  const UniSeries t = tri_counts(10);
  const BiSeries tb = tri_boundary_table(10).table;
  for (int n = 2; n <= 10; ++n) {
    CHECK(tb.coeff(n, 1) == t.coeff(n));
    CHECK(tb.coeff(n, 2) == t.coeff(n));
  }
  for (int n = 3; n <= 10; ++n) CHECK(tb.coeff(n, 3) == t.coeff(n));
  // Two vertices cannot surround a triangle without an inner face of degree 1.
  CHECK(tb.coeff(2, 3) == 0);
  CHECK(quad_boundary_table(10).column(1) == quad_counts(10));
}

TEST_CASE("A table") {
  const CountTable a = a_table(12, 6, 6);
  CHECK(a.columns() == std::vector<std::string>{"p", "r", "n"});
  CHECK(a.get({2, 3, 0}) == 1);
  CHECK(a.get({3, 2, 0}) == 0);
  CHECK(a.get({1, 1, 1}) == 2);
  for (const auto& [k, v] : a.cells()) CHECK(v == count_marked_trees_dp(Family::Quad, k[0], k[1], k[2]));
}

TEST_CASE("B table") {
  const CountTable b = b_table(18, 11, 6);
  for (const auto& [k, v] : b.cells()) CHECK(v == count_marked_trees_dp(Family::Tri, k[0], k[1], k[2]));
}

TEST_CASE("two boundaries") {
  CHECK(quad_two_boundary_cell(2, 1, 1) == 1);
  CHECK(quad_two_boundary_cell(1, 1, 1) == 0);
  CHECK(quad_two_boundary_cell(3, 1, 5) == 0);

  const CountTable q = quad_two_boundary(6);
  for (const auto& [k, v] : q.cells()) CHECK(v == count_special_transition_dp(Family::Quad, k[1], k[2], k[0]));
  const CountTable t = tri_two_boundary(6);
  for (const auto& [k, v] : t.cells()) CHECK(v == count_special_transition_dp(Family::Tri, k[1], k[2], k[0]));
  CHECK(q.get({2, 1, 1}) == 1);
  CHECK(tri_two_boundary_cell(4, 2, 3) == t.get({4, 2, 3}));
}

TEST_CASE("q = 1 in the triangulation two-boundary table is the pointed one-boundary count") {
  // One extra boundary of perimeter 1 is a marked loop; check against the loop-tree DP.
  const CountTable t = tri_two_boundary(5);
  for (int n = 1; n <= 5; ++n)
    for (int p = 1; p <= 15; ++p) CHECK(t.get({n, p, 1}) == count_loop_trees_dp(p, n));
}

TEST_CASE("count tables") {
  CountTable t({"n"});
  CHECK_THROWS_AS(t.set({1}, -1), IntegrityError);
  CHECK_THROWS_AS(t.set({1, 2}, 1), UsageError);
  const CountTable q = table_from_series(quad_counts(4), 2);
  CHECK(q.to_csv() == "n,count\n2,1\n3,2\n4,9\n");
  const nlohmann::json j = q.to_json();
  CHECK(j["rows"][2]["count"] == "9");
  const CountTable b = table_from_series(quad_boundary_table(2), 1);
  CHECK(b.to_csv() == "n,p,count\n1,0,1\n1,1,0\n2,0,0\n2,1,1\n2,2,0\n");
}

TEST_CASE("divisions stay exact far out") {
  CHECK_NOTHROW(quad_counts(400));
  CHECK_NOTHROW(tri_counts(400));
  CHECK(quad_counts(400)[400] == test_support::quad_closed_form(400));
  CHECK(tri_counts(400)[400] == test_support::tri_closed_form(400));
  CHECK_NOTHROW(quad_boundary_table(40));
  CHECK_NOTHROW(tri_boundary_table(30));
}

}  // TEST_SUITE

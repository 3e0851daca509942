#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "mappeel/errors.hpp"
#include "mappeel/peeling.hpp"
#include "mappeel/planar_map.hpp"
#include "mappeel/tree_enumeration.hpp"
#include "test_support.hpp"

using namespace mappeel;

namespace {

PlanarMap relabel(const PlanarMap& m, std::mt19937& rng) {
  const int n = m.dart_count();
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<int> a(pi.size()), s(pi.size());
  for (int d = 0; d < n; ++d) {
    a[static_cast<std::size_t>(pi[static_cast<std::size_t>(d)])] = pi[static_cast<std::size_t>(m.opposite(d))];
    s[static_cast<std::size_t>(pi[static_cast<std::size_t>(d)])] = pi[static_cast<std::size_t>(m.vertex_next(d))];
  }
  const int dl = m.distinguished_loop();
  return PlanarMap(a, s, pi[static_cast<std::size_t>(m.root())], m.has_boundary(),
                   dl < 0 ? -1 : pi[static_cast<std::size_t>(dl)]);
}

// Cycle of length k; both faces have degree k.
PlanarMap cycle(int k) {
  std::vector<int> a(static_cast<std::size_t>(2 * k)), s(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    a[static_cast<std::size_t>(2 * i)] = 2 * i + 1;
    a[static_cast<std::size_t>(2 * i + 1)] = 2 * i;
    const int in = 2 * ((i + k - 1) % k) + 1;  // dart of the previous edge arriving at vertex i
    s[static_cast<std::size_t>(2 * i)] = in;
    s[static_cast<std::size_t>(in)] = 2 * i;
  }
  return PlanarMap(a, s, 0, true);
}

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("degenerate maps") {
  const PlanarMap v = PlanarMap::vertex_map();
  CHECK(validate_map(Family::Quad, v));
  CHECK(v.perimeter() == 0);
  CHECK(v.vertex_count() == 1);
  CHECK(canonical_code(v).empty());

  const PlanarMap e = PlanarMap::edge_map(true);
  CHECK(validate_map(Family::Quad, e));
  CHECK(e.vertex_count() == 2);
  CHECK(e.perimeter() == 2);
  CHECK(peel_label(Family::Quad, e) == 1);
}

TEST_CASE("constructor rejects broken permutations") {
  CHECK_THROWS_AS(PlanarMap({0, 1}, {0, 1}, 0, true), UsageError);   // opposite has fixed points
  CHECK_THROWS_AS(PlanarMap({1, 0}, {0, 0}, 0, true), UsageError);   // not a permutation
  CHECK_THROWS_AS(PlanarMap({1, 0}, {0, 1}, 2, true), UsageError);   // root out of range
}

TEST_CASE("a pentagonal inner face is reported") {
  const PlanarMap pent = cycle(5);
  const MapValidation v = validate_map(Family::Tri, pent);
  CHECK_FALSE(v);
  CHECK(v.message.find("face containing dart") != std::string::npos);
  CHECK(v.message.find("degree 5") != std::string::npos);
  CHECK(validate_map(Family::Quad, cycle(4)));
}

TEST_CASE("peeling the single edge") {
  const PeelStep s = peel_step(Family::Quad, PlanarMap::edge_map(true));
  CHECK(s.event.kind == PeelKind::Split);
  REQUIRE(s.parts.size() == 2);
  CHECK(s.parts[0].is_vertex_map());
  CHECK(s.parts[1].is_vertex_map());
  CHECK(serialize(peel_to_tree(Family::Quad, PlanarMap::edge_map(true))) == "1(0,0)");
  CHECK(are_isomorphic(build_map_from_tree(Family::Quad, parse_tree("1(0,0)")), PlanarMap::edge_map(true)));
}

TEST_CASE("the two three-vertex quadrangulations differ") {
  const PlanarMap a = build_map_from_tree(Family::Quad, parse_tree("1(2(0,1(0,0)))"));
  const PlanarMap b = build_map_from_tree(Family::Quad, parse_tree("1(2(1(0,0),0))"));
  CHECK(validate_map(Family::Quad, a));
  CHECK(validate_map(Family::Quad, b));
  CHECK(canonical_code(a) != canonical_code(b));
  CHECK_FALSE(are_isomorphic(a, b));
}

TEST_CASE("canonical codes ignore dart names") {
  std::mt19937 rng(3);
  for (Family f : {Family::Quad, Family::Tri})
    for (int n = 2; n <= 4; ++n)
      for_each_tree(f, 1, n, [&](const LabeledTree& t) {
        const PlanarMap m = build_map_from_tree(f, t);
        const PlanarMap r = relabel(m, rng);
        CHECK(canonical_code(r) == canonical_code(m));
        CHECK(are_isomorphic(r, m));
        CHECK(peel_to_tree(f, r) == t);
      });
}

TEST_CASE("quadrangulation root transform") {
  const PlanarMap e = PlanarMap::edge_map(false);
  const PlanarMap opened = root_transform_quad(e);
  CHECK(are_isomorphic(opened, PlanarMap::edge_map(true)));
  CHECK(inverse_root_transform_quad(opened) == e);

  // n = 4 quadrangulations without boundary have 2n - 4 = 4 edges; opening adds one.
  for_each_tree(Family::Quad, 1, 4, [&](const LabeledTree& t) {
    const PlanarMap with = build_map_from_tree(Family::Quad, t);
    const PlanarMap closed = inverse_root_transform_quad(with);
    CHECK_FALSE(closed.has_boundary());
    CHECK(closed.edge_count() == 4);
    CHECK(validate_map(Family::Quad, closed));
    const PlanarMap back = root_transform_quad(closed);
    CHECK(back.edge_count() == 5);
    CHECK(back == with);
  });
}

TEST_CASE("triangulation root transform") {
  const PlanarMap one = root_transform_tri(PlanarMap::edge_map(false), 0);
  CHECK(validate_map(Family::Tri, one));
  CHECK(one.edge_count() == 3 * 2 - 4);
  CHECK(one.perimeter() == 1);
  const UntransformedTri back = inverse_root_transform_tri(one, one.root());
  CHECK(back.map == PlanarMap::edge_map(false));

  // Closing the boundary of a 1-gon triangulation, then distinguishing a second edge.
  int checked = 0;
  for_each_tree(Family::Tri, 1, 4, [&](const LabeledTree& t) {
    const PlanarMap m = build_map_from_tree(Family::Tri, t);
    const UntransformedTri closed = inverse_root_transform_tri(m, m.root());
    CHECK_FALSE(closed.map.has_boundary());
    CHECK(root_transform_tri(closed.map, closed.edge) == m);
    for (int d = 0; d < m.dart_count(); ++d) {
      const PlanarMap twice = root_transform_tri(m, d);
      CHECK(validate_map(Family::Tri, twice));
      CHECK(twice.distinguished_loop() >= 0);
      CHECK(twice.perimeter() == 1);
      const UntransformedTri undone = inverse_root_transform_tri(twice, twice.distinguished_loop());
      CHECK(undone.map == m);
      CHECK(undone.edge == d);
      ++checked;
    }
  });
  CHECK(checked > 0);
}

TEST_CASE("map bijection up to five vertices") {
  for (Family f : {Family::Quad, Family::Tri})
    for (int n = 1; n <= 5; ++n)
      for (int p = 0; p <= label_bound(f, n); ++p) {
        std::set<std::vector<std::uint8_t>> codes;
        long long c = 0;
        for_each_tree(f, p, n, [&](const LabeledTree& t) {
          ++c;
          const PlanarMap m = build_map_from_tree(f, t);
          REQUIRE(validate_map(f, m));
          CHECK(m.vertex_count() == n);
          CHECK(peel_label(f, m) == p);
          const LabeledTree back = peel_to_tree(f, m);
          CHECK(back == t);
          if (n > 1) CHECK(inner_count(f, back) == m.edge_count());
          codes.insert(canonical_code(m));
        });
        CHECK(static_cast<long long>(codes.size()) == c);
      }
}

TEST_CASE("loop trees give maps with a distinguished loop") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= 3 * n; ++p)
      for_each_loop_tree(p, n, [&](const LabeledTree& t) {
        const PlanarMap m = build_map_from_tree(Family::Tri, t);
        REQUIRE(validate_map(Family::Tri, m));
        CHECK(m.distinguished_loop() >= 0);
        CHECK(peel_to_tree(Family::Tri, m) == t);
      });
}

TEST_CASE("large random quadrangulation: twelve vertices, half-perimeter six") {
  test_support::TreeSampler sampler(Family::Quad, 12, 2024);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledTree t = sampler.sample(6, 12);
    REQUIRE(validate(Family::Quad, t, 6));
    CHECK(inner_count(Family::Quad, t) == 2 * 12 - 6 - 2);
    const PlanarMap m = build_map_from_tree(Family::Quad, t);
    REQUIRE(validate_map(Family::Quad, m));
    CHECK(m.vertex_count() == 12);
    CHECK(m.perimeter() == 12);
    CHECK(m.edge_count() == 16);
    CHECK(peel_to_tree(Family::Quad, m) == t);
  }
}

TEST_CASE("large random triangulation: six vertices, perimeter five") {
  test_support::TreeSampler sampler(Family::Tri, 6, 77);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledTree t = sampler.sample(5, 6);
    const PlanarMap m = build_map_from_tree(Family::Tri, t);
    REQUIRE(validate_map(Family::Tri, m));
    CHECK(m.vertex_count() == 6);
    CHECK(m.perimeter() == 5);
    CHECK(peel_to_tree(Family::Tri, m) == t);
  }
}

TEST_CASE("map json round trip") {
  const PlanarMap m = build_map_from_tree(Family::Tri, parse_tree("2(1!loop,1(2(0,0)))"));
  CHECK(planar_map_from_json(to_json(m)) == m);
  CHECK(to_hex(canonical_code(PlanarMap::edge_map(true))).size() % 2 == 0);
}

}  // TEST_SUITE

#include <set>

#include "doctest.h"
#include "mappeel/errors.hpp"
#include "mappeel/labeled_tree.hpp"
#include "mappeel/tree_counting.hpp"
#include "mappeel/tree_enumeration.hpp"

using namespace mappeel;

namespace {

std::set<std::string> serialized(const std::vector<LabeledTree>& trees) {
  std::set<std::string> out;
  for (const auto& t : trees) out.insert(serialize(t));
  return out;
}

long long enumerated(Family f, int p, int n) {
  long long c = 0;
  for_each_tree(f, p, n, [&](const LabeledTree&) { ++c; });
  return c;
}

}  // namespace

TEST_SUITE("trees") {

TEST_CASE("valid small trees") {
  CHECK(validate(Family::Quad, parse_tree("1(0,0)"), 1));
  const LabeledTree q3 = parse_tree("1(2(0,1(0,0)))");
  CHECK(validate(Family::Quad, q3, 1));
  CHECK(leaf_count(q3) == 3);
  CHECK(inner_count(Family::Quad, q3) == 3);  // 2n - p - 2

  const LabeledTree t2 = parse_tree("1(2(0,0))");
  CHECK(validate(Family::Tri, t2, 1));
  CHECK(leaf_count(t2) == 2);
  CHECK(inner_count(Family::Tri, t2) == 2);  // 3n - p - 3

  const LabeledTree v = parse_tree("0");
  CHECK(validate(Family::Quad, v, 0));
  CHECK(leaf_count(v) == 0 + 1);
  CHECK(inner_count(Family::Quad, v) == 0);
}

TEST_CASE("validation names the rule and the node") {
  auto v = validate(Family::Quad, parse_tree("1(2(0,0))"), 1);
  CHECK_FALSE(v);
  CHECK(v.rule.find("binary rule") != std::string::npos);
  CHECK(v.path == "root/0");

  v = validate(Family::Quad, parse_tree("1(3(0,1(0,0)))"), 1);
  CHECK_FALSE(v);
  CHECK(v.rule.find("unary child label must be 2") != std::string::npos);
  CHECK(v.path == "root");

  v = validate(Family::Quad, parse_tree("2(0,1)"), 2);
  CHECK_FALSE(v);
  CHECK(v.rule == "leaf label must be 0");
  CHECK(v.path == "root/1");

  CHECK_FALSE(validate(Family::Quad, parse_tree("1(0,0)"), 2));
  CHECK_FALSE(validate(Family::Quad, parse_tree("1(0!leaf,0!leaf)"), 1));
  CHECK_FALSE(validate(Family::Quad, parse_tree("2(1!loop,0)"), 2));
  CHECK(validate(Family::Tri, parse_tree("2(1!loop,1(2(0,0)))"), 2));
  CHECK_FALSE(validate(Family::Tri, parse_tree("2(1(2(0,0)),1!loop)"), 2));
  CHECK_THROWS_AS(inner_count(Family::Quad, parse_tree("1(2(0,0))")), DomainError);
}

TEST_CASE("serialize and parse") {
  CHECK(serialize(parse_tree("1(0,0)")) == "1(0,0)");
  for (const char* s : {"1(2(0!leaf,1(0,0)))", "1(0,0!vertex)", "2(3!dist:3,0)", "2(1!loop,1(2(0,0)))", "0"})
    CHECK(serialize(parse_tree(s)) == s);
  CHECK(parse_tree("1(0,0)") == LabeledTree::binary(1, LabeledTree::leaf(0), LabeledTree::leaf(0)));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_tree("1(0,0,0)"), ParseError);
  try {
    parse_tree("1(0,0,0)");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);  // start of the third child
    CHECK(std::string(e.what()).find("at most two children") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_tree("1(0,0"), ParseError);
  CHECK_THROWS_AS(parse_tree("1(0,0))"), ParseError);
  CHECK_THROWS_AS(parse_tree("1(0!car,0)"), ParseError);
  CHECK_THROWS_AS(parse_tree("2(3!dist:2,0)"), ParseError);
  CHECK_THROWS_AS(parse_tree(""), ParseError);
}

TEST_CASE("tree editing helpers") {
  const LabeledTree t = parse_tree("1(2(0,1(0,0)))");
  CHECK(t.parents() == std::vector<int>{-1, 0, 1, 1, 3, 3});
  CHECK(t.subtree_end(3) == 6);
  CHECK(serialize(t.subtree(3)) == "1(0,0)");
  CHECK(t.marked_node() == -1);
  CHECK(serialize(t.with_mark(4, MarkKind::MarkedLeaf)) == "1(2(0,1(0!leaf,0)))");
}

TEST_CASE("count table examples") {
  CHECK(count_trees_dp(Family::Quad, 1, 3) == 2);
  CHECK(count_trees_dp(Family::Quad, 1, 6) == 378);
  CHECK(count_trees_dp(Family::Tri, 1, 4) == 32);
  CHECK(count_marked_trees_dp(Family::Quad, 2, 3, 0) == 1);
  CHECK(count_marked_trees_dp(Family::Quad, 3, 2, 0) == 0);
  CHECK(count_marked_trees_dp(Family::Quad, 1, 1, 1) == 2);
}

TEST_CASE("exhaustive generation") {
  CHECK(serialized(enumerate_trees(Family::Quad, 1, 2)) == std::set<std::string>{"1(0,0)"});
  CHECK(serialized(enumerate_trees(Family::Quad, 1, 3)) ==
        std::set<std::string>{"1(2(0,1(0,0)))", "1(2(1(0,0),0))"});
  CHECK(serialized(enumerate_trees(Family::Tri, 1, 2)) == std::set<std::string>{"1(2(0,0))"});
}

TEST_CASE("generated trees are valid, distinct and counted by the DP") {
  for (Family f : {Family::Quad, Family::Tri})
    for (int n = 1; n <= 5; ++n)
      for (int p = 0; p <= label_bound(f, n) + 1; ++p) {
        std::set<std::string> seen;
        for_each_tree(f, p, n, [&](const LabeledTree& t) {
          CHECK(validate(f, t, p));
          CHECK(leaf_count(t) == n);
          seen.insert(serialize(t));
        });
        CHECK(Integer(static_cast<unsigned long>(seen.size())) == count_trees_dp(f, p, n));
      }
}

TEST_CASE("DP agrees with generation up to six leaves") {
  for (Family f : {Family::Quad, Family::Tri})
    for (int n = 1; n <= 6; ++n)
      for (int p = 0; p <= label_bound(f, n); ++p)
        CHECK(Integer(std::to_string(enumerated(f, p, n))) == count_trees_dp(f, p, n));
}

TEST_CASE("inner vertex counts") {
  for (int n = 2; n <= 5; ++n) {
    for (int p = 1; p <= label_bound(Family::Quad, n); ++p)
      for_each_tree(Family::Quad, p, n, [&](const LabeledTree& t) { CHECK(inner_count(Family::Quad, t) == 2 * n - p - 2); });
    for (int p = 1; p <= label_bound(Family::Tri, n); ++p)
      for_each_tree(Family::Tri, p, n, [&](const LabeledTree& t) { CHECK(inner_count(Family::Tri, t) == 3 * n - p - 3); });
  }
}

TEST_CASE("marked and loop generators match their DPs") {
  for (Family f : {Family::Quad, Family::Tri})
    for (int n = 0; n <= 4; ++n)
      for (int p = 1; p <= 8; ++p)
        for (int r = 1; r <= 4; ++r) {
          long long c = 0;
          for_each_marked_tree(f, p, r, n, [&](const LabeledTree& t) {
            ++c;
            CHECK(validate(f, t, p));
          });
          CHECK(Integer(std::to_string(c)) == count_marked_trees_dp(f, p, r, n));
        }
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= 3 * n; ++p) {
      long long c = 0;
      for_each_loop_tree(p, n, [&](const LabeledTree& t) {
        ++c;
        CHECK(validate(Family::Tri, t, p));
      });
      CHECK(Integer(std::to_string(c)) == count_loop_trees_dp(p, n));
    }
}

}  // TEST_SUITE

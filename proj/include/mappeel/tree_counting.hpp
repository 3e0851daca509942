#pragma once

#include <functional>
#include <vector>

#include "mappeel/family.hpp"
#include "mappeel/integer.hpp"

namespace mappeel {

// Number of plain peeling trees N(p, n) with root label p and n zero-leaves,
// for n <= max_n. Built once, read-only afterwards.
class TreeCountTable {
 public:
  TreeCountTable(Family family, int max_n);

  Family family() const { return family_; }
  int max_n() const { return max_n_; }
  // 0 outside the computed range.
  const Integer& count(int p, int n) const;

 private:
  Family family_;
  int max_n_;
  std::vector<std::vector<Integer>> rows_;  // rows_[n][p]
};

// Trees with one extra marked ingredient, counted by label p and zero-leaves n.
// The ingredient contributes `base(p, n)` at the node where it sits.
class PointedCountTable {
 public:
  using Base = std::function<Integer(int p, int n)>;
  // bound(n) must be an upper bound on root labels of such trees with n zero-leaves.
  PointedCountTable(const TreeCountTable& plain, int max_n, const std::function<int(int)>& bound,
                    const Base& base);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  const Integer& count(int p, int n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

// Trees with one DistinguishedLeaf(r) and n zero-leaves. For r = 0 the
// distinguished leaf is a marked 0-leaf not included in n.
PointedCountTable marked_tree_table(const TreeCountTable& plain, int r, int max_n);
// Triangulation trees with one loop leaf.
PointedCountTable loop_tree_table(const TreeCountTable& plain, int max_n);
// Trees in which one unary step jumps from l to l + q - 1 (Quad) or l + q - 2 (Tri)
// instead of l + 1; these count maps with two boundaries.
PointedCountTable special_transition_table(const TreeCountTable& plain, int q, int max_n);

Integer count_trees_dp(Family family, int p, int n);
Integer count_marked_trees_dp(Family family, int p, int r, int n);
Integer count_loop_trees_dp(int p, int n);
Integer count_special_transition_dp(Family family, int p, int q, int n);

}  // namespace mappeel

#pragma once

#include <functional>
#include <vector>

#include "mappeel/labeled_tree.hpp"

namespace mappeel {

using TreeVisitor = std::function<void(const LabeledTree&)>;

// Every valid plain tree with root label p and n zero-leaves, exactly once, in a
// fixed order: leaf, unary step, then splits by left label and left leaf count.
void for_each_tree(Family family, int p, int n, const TreeVisitor& visit);
std::vector<LabeledTree> enumerate_trees(Family family, int p, int n);

// Triangulation trees with one loop leaf (stored as the left child).
void for_each_loop_tree(int p, int n, const TreeVisitor& visit);

// Trees with one DistinguishedLeaf(r) and n zero-leaves besides it. For r = 0 the
// distinguished leaf is a 0-leaf carrying MarkedLeaf.
void for_each_marked_tree(Family family, int p, int r, int n, const TreeVisitor& visit);

}  // namespace mappeel

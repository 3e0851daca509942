#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mappeel/labeled_tree.hpp"

namespace mappeel {

enum class Side { Left, Right };

// Output of the last-car decomposition. The first tree carries the contracted
// MarkedVertex (or the distinguished leaf for decompose_marked), every later tree
// one MarkedLeaf where the previous tree hangs.
struct TreeSequence {
  Family family = Family::Quad;
  // Root label of the decomposed tree; p = 1 and p = 2 both end on a root labelled 1.
  int root_label = 1;
  std::vector<LabeledTree> trees;
  // Quad only: side of the removed marked leaf under its parent.
  Side side = Side::Left;

  bool operator==(const TreeSequence& other) const = default;
};

// The marked node is the MarkedLeaf (Quad) or the LoopLeaf (Tri) of `tree`.
TreeSequence decompose(Family family, const LabeledTree& tree);
// Same, marking node `marked` first (a 0-leaf for Quad, the loop leaf for Tri).
TreeSequence decompose(Family family, const LabeledTree& tree, int marked);
// Inverse of decompose; the returned tree carries the mark.
LabeledTree glue(const TreeSequence& seq);

// Variant for a tree with a DistinguishedLeaf(r): no contraction, the leaf drops to r - 1
// (a MarkedLeaf 0 when r = 1).
TreeSequence decompose_marked(Family family, const LabeledTree& tree);
LabeledTree glue_marked(const TreeSequence& seq);

// Total number of 0-leaves over the sequence.
int leaf_total(const TreeSequence& seq);

nlohmann::json to_json(const TreeSequence& seq);
TreeSequence tree_sequence_from_json(const nlohmann::json& j);

}  // namespace mappeel

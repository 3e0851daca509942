#pragma once

#include <vector>

#include "mappeel/labeled_tree.hpp"
#include "mappeel/planar_map.hpp"

namespace mappeel {

enum class PeelKind {
  Reveal,     // the root edge borders an inner face, which joins the boundary
  Split,      // the root edge is a bridge
  LoopLeaf,   // the root edge is the distinguished loop (triangulations)
};

struct PeelEvent {
  PeelKind kind = PeelKind::Reveal;
  int p1 = 0;  // Split only: labels of the two parts
  int p2 = 0;
};

struct PeelStep {
  PeelEvent event;
  // Reveal: the remaining map. Split: component at the root's origin, then the other.
  // LoopLeaf: the map left after removing the loop.
  std::vector<PlanarMap> parts;
};

// Peeling label: half-perimeter (Quad) or perimeter (Tri).
int peel_label(Family family, const PlanarMap& map);

PeelStep peel_step(Family family, const PlanarMap& map);
LabeledTree peel_to_tree(Family family, const PlanarMap& map);
PlanarMap build_map_from_tree(Family family, const LabeledTree& tree);

}  // namespace mappeel

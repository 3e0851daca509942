#include "mappeel/peeling.hpp"

#include "map_edit.hpp"
#include "mappeel/errors.hpp"

namespace mappeel {

int peel_label(Family family, const PlanarMap& map) {
  const int per = map.perimeter();
  return family == Family::Quad ? per / 2 : per;
}

namespace {

bool on_face(const PlanarMap& map, int face_dart, int d) {
  int x = face_dart;
  do {
    if (x == d) return true;
    x = map.face_next(x);
  } while (x != face_dart);
  return false;
}

PeelStep step(Family family, const PlanarMap& map) {
  PeelStep out;
  const int rho = map.root();
  const int back = map.opposite(rho);
  MapEdit e(map);
  if (back == map.distinguished_loop()) {
    out.event.kind = PeelKind::LoopLeaf;
    const int next = map.vertex_next(back);
    e.remove_edge(rho);
    e.dloop = -1;
    out.parts.push_back(next == rho ? PlanarMap::vertex_map() : e.finish(next));
    return out;
  }
  if (on_face(map, rho, back)) {
    out.event.kind = PeelKind::Split;
    const int left = map.vertex_next(rho);
    const int right = map.vertex_next(back);
    e.remove_edge(rho);
    out.parts.push_back(left == rho ? PlanarMap::vertex_map() : e.finish(left));
    out.parts.push_back(right == back ? PlanarMap::vertex_map() : e.finish(right));
    out.event.p1 = peel_label(family, out.parts[0]);
    out.event.p2 = peel_label(family, out.parts[1]);
    return out;
  }
  out.event.kind = PeelKind::Reveal;
  const int next = map.vertex_next(rho);
  e.remove_edge(rho);
  e.root = next;
  out.parts.push_back(e.finish());
  return out;
}

void require_peelable(Family family, const PlanarMap& map, const char* op) {
  if (!map.is_vertex_map() && !map.has_boundary())
    throw DomainError(std::string(op) + ": map has no boundary");
  const auto v = validate_map(family, map);
  if (!v) throw DomainError(std::string(op) + ": invalid map (" + v.message + ")");
}

void peel_into(Family family, const PlanarMap& map, TreeBuilder& b) {
  if (map.is_vertex_map()) {
    b.push(0, MarkKind::None, 0);
    return;
  }
  const int label = peel_label(family, map);
  PeelStep s = step(family, map);
  switch (s.event.kind) {
    case PeelKind::Reveal:
      b.push(label, MarkKind::None, 1);
      peel_into(family, s.parts[0], b);
      break;
    case PeelKind::Split:
      b.push(label, MarkKind::None, 2);
      peel_into(family, s.parts[0], b);
      peel_into(family, s.parts[1], b);
      break;
    case PeelKind::LoopLeaf:
      b.push(label, MarkKind::None, 2);
      b.push(1, MarkKind::LoopLeaf, 0);
      peel_into(family, s.parts[0], b);
      break;
  }
}

// Appends the darts of m to e, shifted by e's current size; returns the shift.
int append(MapEdit& e, const PlanarMap& m) {
  const int off = static_cast<int>(e.a.size());
  for (int d = 0; d < m.dart_count(); ++d) {
    e.a.push_back(m.opposite(d) + off);
    e.s.push_back(m.vertex_next(d) + off);
    e.removed.push_back(0);
  }
  if (m.distinguished_loop() >= 0) e.dloop = m.distinguished_loop() + off;
  return off;
}

PlanarMap build(Family family, const LabeledTree& t, int i) {
  const Node& n = t.node(i);
  if (n.arity == 0) return PlanarMap::vertex_map();
  if (n.arity == 1) {
    MapEdit e(build(family, t, n.child[0]));
    // Undo a reveal: the new face is opposite(rho), r, ..., last.
    const int r = e.root;
    int last = r;
    for (int k = 0; k < (family == Family::Quad ? 2 : 1); ++k) last = e.face_next(last);
    const int before = e.face_prev(r);
    const int rho = e.add_edge();
    e.insert_after(e.alpha(before), rho);
    e.insert_after(e.alpha(last), e.alpha(rho));
    e.root = rho;
    return e.finish();
  }
  const Node& left = t.node(n.child[0]);
  if (left.mark == MarkKind::LoopLeaf) {
    const PlanarMap rest = build(family, t, n.child[1]);
    MapEdit e;
    if (!rest.is_vertex_map()) e = MapEdit(rest);
    const int loop = e.add_edge();
    const int back = e.alpha(loop);
    if (!rest.is_vertex_map()) {
      const int r = e.root;
      e.insert_after(e.alpha(e.face_prev(r)), back);
      e.insert_after(back, loop);
    } else {
      e.insert_after(back, loop);
    }
    e.root = back;
    e.dloop = loop;
    e.boundary = true;
    return e.finish();
  }
  const PlanarMap ml = build(family, t, n.child[0]);
  const PlanarMap mr = build(family, t, n.child[1]);
  MapEdit e;
  append(e, ml);
  const int off = append(e, mr);
  const int rho = e.add_edge();
  if (!ml.is_vertex_map()) e.insert_before(ml.root(), rho);
  if (!mr.is_vertex_map()) e.insert_before(mr.root() + off, e.alpha(rho));
  e.root = rho;
  e.boundary = true;
  return e.finish();
}

}  // namespace

PeelStep peel_step(Family family, const PlanarMap& map) {
  require_peelable(family, map, "peel_step");
  if (map.is_vertex_map()) throw DomainError("peel_step: the vertex map has no root edge");
  return step(family, map);
}

LabeledTree peel_to_tree(Family family, const PlanarMap& map) {
  require_peelable(family, map, "peel_to_tree");
  TreeBuilder b;
  peel_into(family, map, b);
  return b.build();
}

PlanarMap build_map_from_tree(Family family, const LabeledTree& tree) {
  if (tree.empty()) throw DomainError("build_map_from_tree: empty tree");
  const auto v = validate(family, tree, tree.root_label());
  if (!v) throw DomainError("build_map_from_tree: invalid tree (" + v.rule + " at " + v.path + ")");
  for (const auto& n : tree.nodes())
    if (n.mark != MarkKind::None && n.mark != MarkKind::LoopLeaf)
      throw DomainError("build_map_from_tree: only loop leaves may carry a mark");
  return build(family, tree, 0);
}

}  // namespace mappeel

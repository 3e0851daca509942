#include "mappeel/lastcar.hpp"

#include "mappeel/errors.hpp"

namespace mappeel {

namespace {

enum class Variant { LastCar, Marked };

// Scratch buffers reused across calls; decompose and glue run millions of times in tests.
struct Scratch {
  std::vector<int> parent;
  std::vector<char> on_branch;
  std::vector<char> is_cut;
  std::vector<int> branch;
  std::vector<int> tops;
  std::vector<char> on_path;
  std::vector<std::size_t> path_offset;
  TreeBuilder b;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

struct Cutter {
  const LabeledTree& t;
  std::vector<char>& on_branch;
  std::vector<char>& is_cut;
  int mark = -1;
  int contracted = -1;  // parent of the marked leaf, replaced by its sibling
  int sibling = -1;
  TreeBuilder& b;

  void emit(int v, int top) {
    const Node& n = t.node(v);
    if (v == contracted) {
      const std::size_t at = b.size();
      b.append_subtree(t, sibling);
      b.set_mark(at, MarkKind::MarkedVertex);
      return;
    }
    if (v == mark) {
      const int label = n.label - 1;
      b.push(label, label == 0 ? MarkKind::MarkedLeaf : MarkKind::DistinguishedLeaf, 0);
      return;
    }
    if (is_cut[static_cast<std::size_t>(v)] && v != top) {
      b.push(0, MarkKind::MarkedLeaf, 0);
      return;
    }
    const bool branch = on_branch[static_cast<std::size_t>(v)] != 0;
    b.push(branch ? n.label - 1 : n.label, MarkKind::None, n.arity);
    for (int c = 0; c < n.arity; ++c) emit(n.child[static_cast<std::size_t>(c)], top);
  }
};

TreeSequence cut(Family family, const LabeledTree& tree, int m, Variant variant) {
  const int p = tree.root_label();
  Scratch& sc = scratch();
  const auto& parent = sc.parent;
  tree.parents(sc.parent);
  sc.on_branch.assign(static_cast<std::size_t>(tree.size()), 0);
  sc.is_cut.assign(static_cast<std::size_t>(tree.size()), 0);
  Cutter c{tree, sc.on_branch, sc.is_cut, m, -1, -1, sc.b};
  TreeSequence seq;
  seq.family = family;
  seq.root_label = p;
  auto& branch = sc.branch;  // from the marked node up to the root
  branch.clear();
  for (int v = m; v >= 0; v = parent[static_cast<std::size_t>(v)]) {
    branch.push_back(v);
    c.on_branch[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t first = 1;
  if (variant == Variant::LastCar) {
    c.contracted = parent[static_cast<std::size_t>(m)];
    const Node& pn = tree.node(c.contracted);
    const bool left = pn.child[0] == m;
    c.sibling = left ? pn.child[1] : pn.child[0];
    seq.side = left ? Side::Left : Side::Right;
    first = 2;
  }
  // Branch vertices dropping to 0 are unary; the piece above each starts at its child.
  auto& tops = sc.tops;
  tops.clear();
  for (std::size_t i = first; i < branch.size(); ++i) {
    const int v = branch[i];
    if (tree.node(v).label != 1) continue;
    c.is_cut[static_cast<std::size_t>(v)] = 1;
    tops.push_back(tree.node(v).child[0]);
  }
  // A root labelled 1 becomes a lone 0 and is dropped, unless it is the contracted vertex.
  const bool root_dropped = c.is_cut[0] != 0;
  if (!root_dropped) tops.push_back(0);
  seq.trees.reserve(tops.size());
  for (int top : tops) {
    c.b.clear();
    c.emit(top, top);
    seq.trees.push_back(c.b.build());
  }
  return seq;
}

[[noreturn]] void reject(const std::string& what) { throw DomainError(what); }

struct Gluer {
  const TreeSequence& seq;
  Variant variant;
  std::vector<char>& on_path;  // flattened over the trees
  std::vector<std::size_t>& offset;
  TreeBuilder& b;

  void emit(std::size_t i, int v) {
    const LabeledTree& t = seq.trees[i];
    const Node& n = t.node(v);
    const bool path = on_path[offset[i] + static_cast<std::size_t>(v)] != 0;
    if (i > 0 && n.mark == MarkKind::MarkedLeaf) {
      b.push(1, MarkKind::None, 1);
      emit(i - 1, 0);
      return;
    }
    if (i == 0 && n.mark != MarkKind::None) {
      if (variant == Variant::Marked) {
        b.push(n.label + 1, MarkKind::DistinguishedLeaf, 0);
        return;
      }
      b.push(n.label + 1, MarkKind::None, 2);
      const bool quad = seq.family == Family::Quad;
      const bool leaf_left = !quad || seq.side == Side::Left;
      auto marked_leaf = [&] {
        if (quad)
          b.push(0, MarkKind::MarkedLeaf, 0);
        else
          b.push(1, MarkKind::LoopLeaf, 0);
      };
      if (leaf_left) marked_leaf();
      const std::size_t at = b.size();
      b.append_subtree(t, v);
      b.set_mark(at, MarkKind::None);
      if (!leaf_left) marked_leaf();
      return;
    }
    b.push(path ? n.label + 1 : n.label, n.mark, n.arity);
    for (int c = 0; c < n.arity; ++c) emit(i, n.child[static_cast<std::size_t>(c)]);
  }
};

LabeledTree join(const TreeSequence& seq, Variant variant) {
  if (seq.trees.empty()) reject("glue: empty sequence");
  const int p = seq.root_label;
  if (p < 1) reject("glue: root label must be >= 1");
  const std::size_t k = seq.trees.size();
  Scratch& sc = scratch();
  sc.on_path.clear();
  sc.path_offset.clear();
  sc.b.clear();
  Gluer g{seq, variant, sc.on_path, sc.path_offset, sc.b};
  for (std::size_t i = 0; i < k; ++i) {
    const LabeledTree& t = seq.trees[i];
    if (t.empty()) reject("glue: empty tree in sequence");
    const auto v = validate(seq.family, t, t.root_label());
    if (!v) reject("glue: tree " + std::to_string(i) + " breaks a local rule (" + v.rule + " at " + v.path + ")");
    const int m = t.marked_node();
    if (m < 0) reject("glue: tree " + std::to_string(i) + " has no mark");
    const MarkKind mk = t.node(m).mark;
    if (i == 0 && variant == Variant::LastCar) {
      if (mk != MarkKind::MarkedVertex) reject("glue: first tree must carry a MarkedVertex");
    } else if (i == 0) {
      if (mk != MarkKind::DistinguishedLeaf && mk != MarkKind::MarkedLeaf)
        reject("glue_marked: first tree must carry the distinguished leaf");
    } else if (mk != MarkKind::MarkedLeaf) {
      reject("glue: tree " + std::to_string(i) + " must carry a MarkedLeaf");
    }
    if (i + 1 < k && t.root_label() != 1) reject("glue: tree " + std::to_string(i) + " must have root label 1");
    const std::size_t base = sc.on_path.size();
    sc.path_offset.push_back(base);
    sc.on_path.resize(base + static_cast<std::size_t>(t.size()), 0);
    t.parents(sc.parent);
    for (int u = m; u >= 0; u = sc.parent[static_cast<std::size_t>(u)]) sc.on_path[base + static_cast<std::size_t>(u)] = 1;
  }
  const int last_root = seq.trees.back().root_label();
  const bool add_root = p == 1 && last_root == 1;
  if (!add_root && last_root != p - 1)
    reject("glue: last tree root label " + std::to_string(last_root) + " does not fit root label " +
           std::to_string(p));
  if (add_root) g.b.push(1, MarkKind::None, 1);
  g.emit(k - 1, 0);
  LabeledTree out = g.b.build();
  const auto v = validate(seq.family, out, p);
  if (!v) reject("glue: result breaks a local rule (" + v.rule + " at " + v.path + ")");
  return out;
}

}  // namespace

TreeSequence decompose(Family family, const LabeledTree& tree) {
  const int m = tree.marked_node();
  if (m < 0) throw DomainError("decompose: tree has no marked leaf");
  const auto v = validate(family, tree, tree.root_label());
  if (!v) throw DomainError("decompose: invalid tree (" + v.rule + " at " + v.path + ")");
  const Node& n = tree.node(m);
  if (family == Family::Quad) {
    if (n.mark != MarkKind::MarkedLeaf || n.arity != 0 || n.label != 0)
      throw DomainError("decompose: the marked node must be a 0-leaf");
    if (tree.root_label() == 1 && leaf_count(tree) == 2)
      throw BaseCaseError("decompose: the two-vertex map (root 1, n = 2) is the base case and has no decomposition");
  } else if (n.mark != MarkKind::LoopLeaf) {
    throw DomainError("decompose: the marked node must be the loop leaf");
  }
  return cut(family, tree, m, Variant::LastCar);
}

TreeSequence decompose(Family family, const LabeledTree& tree, int marked) {
  if (marked < 0 || marked >= tree.size()) throw DomainError("decompose: marked node out of range");
  const MarkKind want = family == Family::Quad ? MarkKind::MarkedLeaf : MarkKind::LoopLeaf;
  if (family == Family::Tri && tree.node(marked).mark != MarkKind::LoopLeaf)
    throw DomainError("decompose: the marked node must be the loop leaf");
  return decompose(family, tree.with_mark(marked, want));
}

LabeledTree glue(const TreeSequence& seq) { return join(seq, Variant::LastCar); }

TreeSequence decompose_marked(Family family, const LabeledTree& tree) {
  const int m = tree.marked_node();
  if (m < 0 || tree.node(m).mark != MarkKind::DistinguishedLeaf)
    throw DomainError("decompose_marked: tree has no distinguished leaf");
  const auto v = validate(family, tree, tree.root_label());
  if (!v) throw DomainError("decompose_marked: invalid tree (" + v.rule + " at " + v.path + ")");
  if (m == 0 && tree.root_label() == 1)
    throw BaseCaseError("decompose_marked: the lone distinguished leaf with label 1 is the base case");
  return cut(family, tree, m, Variant::Marked);
}

LabeledTree glue_marked(const TreeSequence& seq) { return join(seq, Variant::Marked); }

int leaf_total(const TreeSequence& seq) {
  int total = 0;
  for (const auto& t : seq.trees) total += leaf_count(t);
  return total;
}

nlohmann::json to_json(const TreeSequence& seq) {
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& t : seq.trees) trees.push_back(serialize(t));
  nlohmann::json j{{"family", to_string(seq.family)}, {"root_label", seq.root_label}, {"trees", trees}};
  if (seq.family == Family::Quad) j["side"] = seq.side == Side::Left ? "left" : "right";
  return j;
}

TreeSequence tree_sequence_from_json(const nlohmann::json& j) {
  TreeSequence seq;
  seq.family = family_from_string(j.at("family").get<std::string>());
  seq.root_label = j.at("root_label").get<int>();
  for (const auto& t : j.at("trees")) seq.trees.push_back(parse_tree(t.get<std::string>()));
  if (j.contains("side")) {
    const auto s = j.at("side").get<std::string>();
    if (s != "left" && s != "right") throw UsageError("tree sequence JSON: side must be left or right");
    seq.side = s == "left" ? Side::Left : Side::Right;
  }
  return seq;
}

}  // namespace mappeel

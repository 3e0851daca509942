#include "mappeel/labeled_tree.hpp"

#include <cctype>

#include "mappeel/errors.hpp"

namespace mappeel {

std::string to_string(Family f) { return f == Family::Quad ? "quad" : "tri"; }

Family family_from_string(const std::string& s) {
  if (s == "quad") return Family::Quad;
  if (s == "tri") return Family::Tri;
  throw UsageError("unknown family '" + s + "' (expected quad or tri)");
}

LabeledTree LabeledTree::from_preorder(const std::vector<Spec>& specs) {
  LabeledTree t;
  t.nodes_.resize(specs.size());
  // Stack of (node, next child slot) still waiting for children.
  thread_local std::vector<std::pair<int, int>> open;
  open.clear();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto& s = specs[k];
    if (s.arity < 0 || s.arity > 2) throw UsageError("from_preorder: arity must be 0, 1 or 2");
    const int i = static_cast<int>(k);
    if (i > 0) {
      if (open.empty()) throw UsageError("from_preorder: more than one root");
      auto& [parent, slot] = open.back();
      t.nodes_[static_cast<std::size_t>(parent)].child[static_cast<std::size_t>(slot)] = i;
      if (++slot == t.nodes_[static_cast<std::size_t>(parent)].arity) open.pop_back();
    }
    Node& n = t.nodes_[k];
    n.label = s.label;
    n.mark = s.mark;
    n.arity = static_cast<std::uint8_t>(s.arity);
    if (s.arity > 0) open.emplace_back(i, 0);
  }
  if (!open.empty()) throw UsageError("from_preorder: missing children");
  return t;
}

LabeledTree LabeledTree::leaf(int label, MarkKind mark) { return from_preorder({{label, mark, 0}}); }

LabeledTree LabeledTree::unary(int label, const LabeledTree& child, MarkKind mark) {
  TreeBuilder b;
  b.push(label, mark, 1);
  b.append_subtree(child, 0);
  return b.build();
}

LabeledTree LabeledTree::binary(int label, const LabeledTree& left, const LabeledTree& right, MarkKind mark) {
  TreeBuilder b;
  b.push(label, mark, 2);
  b.append_subtree(left, 0);
  b.append_subtree(right, 0);
  return b.build();
}

std::vector<int> LabeledTree::parents() const {
  std::vector<int> p;
  parents(p);
  return p;
}

void LabeledTree::parents(std::vector<int>& out) const {
  out.assign(nodes_.size(), -1);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (int c = 0; c < nodes_[i].arity; ++c) out[static_cast<std::size_t>(nodes_[i].child[c])] = static_cast<int>(i);
}

int LabeledTree::subtree_end(int i) const {
  int pending = 1;
  int j = i;
  while (pending > 0) {
    pending += nodes_.at(static_cast<std::size_t>(j)).arity - 1;
    ++j;
  }
  return j;
}

LabeledTree LabeledTree::subtree(int i) const {
  TreeBuilder b;
  b.append_subtree(*this, i);
  return b.build();
}

int LabeledTree::marked_node() const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].mark != MarkKind::None) return static_cast<int>(i);
  return -1;
}

LabeledTree LabeledTree::with_mark(int i, MarkKind mark, bool clear_others) const {
  LabeledTree t = *this;
  if (clear_others)
    for (auto& n : t.nodes_) n.mark = MarkKind::None;
  t.nodes_.at(static_cast<std::size_t>(i)).mark = mark;
  return t;
}

bool LabeledTree::operator==(const LabeledTree& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& a = nodes_[i];
    const Node& b = other.nodes_[i];
    if (a.label != b.label || a.mark != b.mark || a.arity != b.arity) return false;
  }
  return true;
}

void TreeBuilder::append_subtree(const LabeledTree& t, int i) {
  const int end = t.subtree_end(i);
  for (int j = i; j < end; ++j) {
    const Node& n = t.node(j);
    specs_.push_back({n.label, n.mark, n.arity});
  }
}

namespace {

std::string path_of(const LabeledTree& t, const std::vector<int>& parent, int i) {
  std::vector<int> steps;
  for (int v = i; parent[static_cast<std::size_t>(v)] >= 0; v = parent[static_cast<std::size_t>(v)]) {
    const Node& p = t.node(parent[static_cast<std::size_t>(v)]);
    steps.push_back(p.child[0] == v ? 0 : 1);
  }
  std::string s = "root";
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s += "/" + std::to_string(*it);
  return s;
}

}  // namespace

TreeValidation validate(Family family, const LabeledTree& tree, int root_label) {
  if (tree.empty()) return {false, "empty tree", "root"};
  // Parents are only needed to report a path, so they are built on failure.
  auto fail = [&](int i, std::string rule) {
    return TreeValidation{false, std::move(rule), path_of(tree, tree.parents(), i)};
  };
  if (tree.root_label() != root_label)
    return fail(0, "root label is " + std::to_string(tree.root_label()) + ", expected " + std::to_string(root_label));
  if (tree.node(0).mark == MarkKind::LoopLeaf) return fail(0, "loop leaf needs a sibling");
  int marks = 0;
  for (int i = 0; i < tree.size(); ++i) {
    const Node& n = tree.node(i);
    if (n.mark != MarkKind::None && ++marks > 1) return fail(i, "more than one marked node");
    if (n.label < 0) return fail(i, "negative label");
    if (n.arity == 0) {
      switch (n.mark) {
        case MarkKind::DistinguishedLeaf:
          if (n.label < 1) return fail(i, "distinguished leaf needs a label >= 1");
          break;
        case MarkKind::LoopLeaf:
          // Position relative to the sibling is checked at the parent.
          if (family != Family::Tri) return fail(i, "loop leaf outside a triangulation tree");
          if (n.label != 1) return fail(i, "loop leaf must have label 1");
          break;
        default:
          if (n.label != 0) return fail(i, "leaf label must be 0");
      }
      continue;
    }
    if (n.mark != MarkKind::None && n.mark != MarkKind::MarkedVertex)
      return fail(i, "inner vertex carries a leaf mark");
    if (n.label < 1) return fail(i, "inner vertex label must be >= 1");
    const Node& a = tree.node(n.child[0]);
    const bool a_loop = a.mark == MarkKind::LoopLeaf && a.arity == 0;
    if (n.arity == 1) {
      if (a_loop) return fail(n.child[0], "loop leaf needs a sibling");
      if (a.label != n.label + 1)
        return fail(i, "unary child label must be " + std::to_string(n.label + 1));
      continue;
    }
    const Node& b = tree.node(n.child[1]);
    if (b.mark == MarkKind::LoopLeaf && b.arity == 0) return fail(n.child[1], "loop leaf must be the left child");
    if (a_loop) {
      if (b.label != n.label - 1) return fail(i, "loop leaf sibling label must be " + std::to_string(n.label - 1));
      continue;
    }
    if (a.label + b.label + split_offset(family) != n.label)
      return fail(i, "binary rule l1 + l2 + " + std::to_string(split_offset(family)) + " = l violated");
  }
  return {};
}

int leaf_count(const LabeledTree& tree) {
  int c = 0;
  for (const auto& n : tree.nodes())
    if (n.arity == 0 && n.label == 0 && n.mark != MarkKind::DistinguishedLeaf) ++c;
  return c;
}

int inner_count(Family family, const LabeledTree& tree) {
  if (tree.empty()) throw DomainError("inner_count: empty tree");
  const auto v = validate(family, tree, tree.root_label());
  if (!v) throw DomainError("inner_count: invalid tree (" + v.rule + " at " + v.path + ")");
  int c = 0;
  for (const auto& n : tree.nodes())
    if (n.arity > 0) ++c;
  return c;
}

namespace {

void write(const LabeledTree& t, int i, std::string& out) {
  const Node& n = t.node(i);
  out += std::to_string(n.label);
  switch (n.mark) {
    case MarkKind::None: break;
    case MarkKind::MarkedLeaf: out += "!leaf"; break;
    case MarkKind::MarkedVertex: out += "!vertex"; break;
    case MarkKind::DistinguishedLeaf: out += "!dist:" + std::to_string(n.label); break;
    case MarkKind::LoopLeaf: out += "!loop"; break;
  }
  if (n.arity == 0) return;
  out += '(';
  write(t, n.child[0], out);
  if (n.arity == 2) {
    out += ',';
    write(t, n.child[1], out);
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  LabeledTree run() {
    skip();
    node();
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing characters", pos_);
    return LabeledTree::from_preorder(specs_);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a label", start);
    if (pos_ - start > 9) throw ParseError("label too large", start);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MarkKind mark(int label) {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
    const std::string word = s_.substr(start, end - start);
    pos_ = end;
    if (word == "leaf") return MarkKind::MarkedLeaf;
    if (word == "vertex") return MarkKind::MarkedVertex;
    if (word == "loop") return MarkKind::LoopLeaf;
    if (word == "dist") {
      if (eat(':')) {
        const std::size_t at = pos_;
        if (number() != label) throw ParseError("!dist:r must repeat the node label", at);
      }
      return MarkKind::DistinguishedLeaf;
    }
    throw ParseError("unknown mark '" + word + "'", start);
  }

  void node() {
    const int label = number();
    MarkKind m = MarkKind::None;
    if (eat('!')) m = mark(label);
    const std::size_t self = specs_.size();
    specs_.push_back({label, m, 0});
    if (!eat('(')) return;
    int arity = 0;
    do {
      if (arity == 2) throw ParseError("a node has at most two children", pos_);
      node();
      ++arity;
    } while (eat(','));
    if (!eat(')')) throw ParseError("expected ')'", pos_);
    specs_[self].arity = arity;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<LabeledTree::Spec> specs_;
};

}  // namespace

std::string serialize(const LabeledTree& tree) {
  std::string out;
  if (!tree.empty()) write(tree, 0, out);
  return out;
}

LabeledTree parse_tree(const std::string& text) { return Parser(text).run(); }

}  // namespace mappeel

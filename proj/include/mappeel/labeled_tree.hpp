#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mappeel/family.hpp"

namespace mappeel {

enum class MarkKind : std::uint8_t { None, MarkedLeaf, MarkedVertex, DistinguishedLeaf, LoopLeaf };

// A node of a LabeledTree. A DistinguishedLeaf(r) carries r as its label.
struct Node {
  int label = 0;
  MarkKind mark = MarkKind::None;
  std::uint8_t arity = 0;
  std::array<int, 2> child{-1, -1};
};

// Plane tree stored in preorder; node 0 is the root.
class LabeledTree {
 public:
  struct Spec {
    int label;
    MarkKind mark;
    int arity;
  };

  LabeledTree() = default;

  static LabeledTree leaf(int label, MarkKind mark = MarkKind::None);
  static LabeledTree unary(int label, const LabeledTree& child, MarkKind mark = MarkKind::None);
  static LabeledTree binary(int label, const LabeledTree& left, const LabeledTree& right,
                            MarkKind mark = MarkKind::None);
  // Builds from a preorder listing of (label, mark, arity); throws UsageError if malformed.
  static LabeledTree from_preorder(const std::vector<Spec>& nodes);

  bool empty() const { return nodes_.empty(); }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root_label() const { return nodes_.at(0).label; }

  // Parent index of every node, -1 for the root.
  std::vector<int> parents() const;
  void parents(std::vector<int>& out) const;
  // Index one past the last node of the subtree rooted at i.
  int subtree_end(int i) const;
  // Copy of the subtree rooted at i.
  LabeledTree subtree(int i) const;
  // Index of the unique node with a mark other than None, or -1.
  int marked_node() const;
  // Same tree with node i carrying the given mark (and no other marks when clear_others).
  LabeledTree with_mark(int i, MarkKind mark, bool clear_others = true) const;

  bool operator==(const LabeledTree& other) const;
  bool operator!=(const LabeledTree& other) const { return !(*this == other); }

 private:
  std::vector<Node> nodes_;
  friend class TreeBuilder;
};

// Appends nodes in preorder; used by generators and the last-car code.
class TreeBuilder {
 public:
  void reserve(std::size_t n) { specs_.reserve(n); }
  void push(int label, MarkKind mark, int arity) { specs_.push_back({label, mark, arity}); }
  void pop() { specs_.pop_back(); }
  void set_mark(std::size_t i, MarkKind mark) { specs_.at(i).mark = mark; }
  void clear() { specs_.clear(); }
  std::size_t size() const { return specs_.size(); }
  // Copies the subtree of t rooted at i.
  void append_subtree(const LabeledTree& t, int i);
  LabeledTree build() const { return LabeledTree::from_preorder(specs_); }

 private:
  std::vector<LabeledTree::Spec> specs_;
};

struct TreeValidation {
  bool ok = true;
  std::string rule;  // first violated rule, empty when ok
  std::string path;  // child indices from the root, e.g. "root/0/1"
  explicit operator bool() const { return ok; }
};

// Checks the peeling-tree rules of the family with the given root label.
TreeValidation validate(Family family, const LabeledTree& tree, int root_label);

// Number of leaves labelled 0 (marked or not).
int leaf_count(const LabeledTree& tree);
// Number of nodes with at least one child. Throws DomainError for invalid trees.
int inner_count(Family family, const LabeledTree& tree);

std::string serialize(const LabeledTree& tree);
LabeledTree parse_tree(const std::string& text);

}  // namespace mappeel

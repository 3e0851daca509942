#include "mappeel/tree_enumeration.hpp"

#include <optional>

#include "mappeel/errors.hpp"
#include "mappeel/tree_counting.hpp"

namespace mappeel {

namespace {

enum class Pointing { None, Loop, Distinguished };

struct Pending {
  int label;
  int leaves;
  bool pointed;
};

// Backtracking over pending subtrees; the count tables prune every dead branch,
// so each completed buffer is a distinct valid tree.
class Generator {
 public:
  Generator(const TreeCountTable& plain, const PointedCountTable* pointed, Pointing kind, int r,
            const TreeVisitor& visit)
      : plain_(plain), pointed_(pointed), kind_(kind), r_(r), visit_(visit), d_(split_offset(plain.family())) {}

  void run(int p, int n) {
    const bool pointed = kind_ != Pointing::None;
    if (count(p, n, pointed) == 0) return;
    stack_.push_back({p, n, pointed});
    step();
    stack_.pop_back();
  }

 private:
  const Integer& count(int p, int n, bool pointed) const {
    return pointed ? pointed_->count(p, n) : plain_.count(p, n);
  }

  void node(int label, MarkKind mark, int arity) { builder_.push(label, mark, arity); }

  void step() {
    if (stack_.empty()) {
      visit_(builder_.build());
      return;
    }
    const Pending it = stack_.back();
    stack_.pop_back();
    expand(it);
    stack_.push_back(it);
  }

  // Runs the continuation with the given items pushed (last one processed first).
  void with(std::initializer_list<Pending> items) {
    for (const auto& x : items) stack_.push_back(x);
    step();
    for (std::size_t i = 0; i < items.size(); ++i) stack_.pop_back();
  }

  void expand(const Pending& it) {
    const int l = it.label;
    const int k = it.leaves;
    if (!it.pointed) {
      if (l == 0 && k == 1) {
        node(0, MarkKind::None, 0);
        step();
        builder_.pop();
      }
    } else if (kind_ == Pointing::Distinguished) {
      if (l == r_ && k == 0) {
        node(l, r_ == 0 ? MarkKind::MarkedLeaf : MarkKind::DistinguishedLeaf, 0);
        step();
        builder_.pop();
      }
    } else if (l >= 1 && plain_.count(l - 1, k) != 0) {
      node(l, MarkKind::None, 2);
      node(1, MarkKind::LoopLeaf, 0);
      with({{l - 1, k, false}});
      builder_.pop();
      builder_.pop();
    }
    if (l < 1) return;
    if (count(l + 1, k, it.pointed) != 0) {
      node(l, MarkKind::None, 1);
      with({{l + 1, k, it.pointed}});
      builder_.pop();
    }
    node(l, MarkKind::None, 2);
    for (int p1 = 0; p1 <= l - d_; ++p1) {
      const int p2 = l - d_ - p1;
      if (!it.pointed) {
        for (int n1 = 1; n1 < k; ++n1)
          if (plain_.count(p1, n1) != 0 && plain_.count(p2, k - n1) != 0)
            with({{p2, k - n1, false}, {p1, n1, false}});
        continue;
      }
      for (int n1 = 0; n1 < k; ++n1)
        if (pointed_->count(p1, n1) != 0 && plain_.count(p2, k - n1) != 0)
          with({{p2, k - n1, false}, {p1, n1, true}});
      for (int n1 = 1; n1 <= k; ++n1)
        if (plain_.count(p1, n1) != 0 && pointed_->count(p2, k - n1) != 0)
          with({{p2, k - n1, true}, {p1, n1, false}});
    }
    builder_.pop();
  }

  const TreeCountTable& plain_;
  const PointedCountTable* pointed_;
  Pointing kind_;
  int r_;
  const TreeVisitor& visit_;
  int d_;
  std::vector<Pending> stack_;
  TreeBuilder builder_;
};

}  // namespace

void for_each_tree(Family family, int p, int n, const TreeVisitor& visit) {
  if (p < 0 || n < 1) return;
  const TreeCountTable plain(family, n);
  Generator(plain, nullptr, Pointing::None, 0, visit).run(p, n);
}

std::vector<LabeledTree> enumerate_trees(Family family, int p, int n) {
  std::vector<LabeledTree> out;
  for_each_tree(family, p, n, [&out](const LabeledTree& t) { out.push_back(t); });
  return out;
}

void for_each_loop_tree(int p, int n, const TreeVisitor& visit) {
  if (p < 0 || n < 1) return;
  const TreeCountTable plain(Family::Tri, n);
  const auto loops = loop_tree_table(plain, n);
  Generator(plain, &loops, Pointing::Loop, 0, visit).run(p, n);
}

void for_each_marked_tree(Family family, int p, int r, int n, const TreeVisitor& visit) {
  if (p < 0 || n < 0 || r < 0) return;
  const TreeCountTable plain(family, n);
  const auto marked = marked_tree_table(plain, r, n);
  Generator(plain, &marked, Pointing::Distinguished, r, visit).run(p, n);
}

}  // namespace mappeel

#include "mappeel/tree_counting.hpp"

#include <algorithm>

#include "mappeel/errors.hpp"

namespace mappeel {

namespace {

const Integer kZero = 0;

const Integer& lookup(const std::vector<std::vector<Integer>>& rows, int p, int n) {
  if (n < 0 || p < 0 || n >= static_cast<int>(rows.size())) return kZero;
  const auto& r = rows[static_cast<std::size_t>(n)];
  if (p >= static_cast<int>(r.size())) return kZero;
  return r[static_cast<std::size_t>(p)];
}

}  // namespace

TreeCountTable::TreeCountTable(Family family, int max_n) : family_(family), max_n_(max_n) {
  if (max_n < 0) throw UsageError("TreeCountTable: negative max_n");
  const int d = split_offset(family);
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  rows_[0].assign(1, 0);
  for (int n = 1; n <= max_n; ++n) {
    const int bound = label_bound(family, n);
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(bound) + 1, 0);
    // Labels are solved downward: the unary step reads label p + 1.
    for (int p = bound; p >= 0; --p) {
      Integer acc = (p == 0 && n == 1) ? 1 : 0;
      if (p >= 1) {
        acc += lookup(rows_, p + 1, n);
        for (int p1 = 0; p1 <= p - d; ++p1) {
          const int p2 = p - d - p1;
          for (int n1 = 1; n1 < n; ++n1) {
            const Integer& a = lookup(rows_, p1, n1);
            if (a == 0) continue;
            const Integer& b = lookup(rows_, p2, n - n1);
            if (b != 0) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
          }
        }
      }
      row[static_cast<std::size_t>(p)] = std::move(acc);
    }
  }
}

const Integer& TreeCountTable::count(int p, int n) const { return lookup(rows_, p, n); }

PointedCountTable::PointedCountTable(const TreeCountTable& plain, int max_n,
                                     const std::function<int(int)>& bound, const Base& base) {
  if (max_n < 0) throw UsageError("PointedCountTable: negative max_n");
  if (plain.max_n() < max_n) throw UsageError("PointedCountTable: plain table too small");
  const int d = split_offset(plain.family());
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    const int b = std::max(bound(n), 0);
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(b) + 1, 0);
    for (int p = b; p >= 0; --p) {
      Integer acc = base(p, n);
      if (p >= 1) {
        acc += lookup(rows_, p + 1, n);
        for (int p1 = 0; p1 <= p - d; ++p1) {
          const int p2 = p - d - p1;
          // Pointed part on the left; the plain right part needs a zero-leaf.
          for (int n1 = 0; n1 < n; ++n1) {
            const Integer& a = lookup(rows_, p1, n1);
            if (a == 0) continue;
            const Integer& c = plain.count(p2, n - n1);
            if (c != 0) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
          }
          // Pointed part on the right.
          for (int n1 = 1; n1 <= n; ++n1) {
            const Integer& a = plain.count(p1, n1);
            if (a == 0) continue;
            const Integer& c = lookup(rows_, p2, n - n1);
            if (c != 0) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
          }
        }
      }
      row[static_cast<std::size_t>(p)] = std::move(acc);
    }
  }
}

const Integer& PointedCountTable::count(int p, int n) const { return lookup(rows_, p, n); }

PointedCountTable marked_tree_table(const TreeCountTable& plain, int r, int max_n) {
  if (r < 0) throw UsageError("marked_tree_table: negative r");
  // Replacing the distinguished leaf by a smallest tree with root r gives a plain tree,
  // which bounds the labels.
  const bool quad = plain.family() == Family::Quad;
  const int extra = quad ? 2 * r : 3 * ((r + 1) / 2);
  auto bound = [quad, extra](int n) { return (quad ? 2 * n : 3 * n) + extra; };
  auto base = [r](int p, int n) { return Integer(p == r && n == 0 ? 1 : 0); };
  return PointedCountTable(plain, max_n, bound, base);
}

PointedCountTable loop_tree_table(const TreeCountTable& plain, int max_n) {
  if (plain.family() != Family::Tri) throw UsageError("loop_tree_table: loop leaves only exist for Tri");
  // A loop tree with n zero-leaves and root l has 3n - l - 1 inner vertices.
  auto bound = [](int n) { return 3 * n - 1; };
  auto base = [&plain](int p, int n) { return p >= 1 ? Integer(plain.count(p - 1, n)) : Integer(0); };
  return PointedCountTable(plain, max_n, bound, base);
}

PointedCountTable special_transition_table(const TreeCountTable& plain, int q, int max_n) {
  if (q < 1) throw UsageError("special_transition_table: q must be >= 1");
  const bool quad = plain.family() == Family::Quad;
  const int jump = quad ? q - 1 : q - 2;
  auto bound = [quad](int n) { return quad ? 2 * n : 3 * n; };
  auto base = [&plain, jump](int p, int n) {
    return (p >= 1 && p + jump >= 0) ? Integer(plain.count(p + jump, n)) : Integer(0);
  };
  return PointedCountTable(plain, max_n, bound, base);
}

Integer count_trees_dp(Family family, int p, int n) {
  if (p < 0 || n < 0) return 0;
  return TreeCountTable(family, n).count(p, n);
}

Integer count_marked_trees_dp(Family family, int p, int r, int n) {
  if (p < 0 || n < 0 || r < 0) return 0;
  const TreeCountTable plain(family, n);
  return marked_tree_table(plain, r, n).count(p, n);
}

Integer count_loop_trees_dp(int p, int n) {
  if (p < 0 || n < 0) return 0;
  const TreeCountTable plain(Family::Tri, n);
  return loop_tree_table(plain, n).count(p, n);
}

Integer count_special_transition_dp(Family family, int p, int q, int n) {
  if (p < 0 || n < 0) return 0;
  const TreeCountTable plain(family, n);
  return special_transition_table(plain, q, n).count(p, n);
}

}  // namespace mappeel

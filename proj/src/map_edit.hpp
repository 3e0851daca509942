#pragma once

#include <utility>
#include <vector>

#include "mappeel/planar_map.hpp"

namespace mappeel {

// Mutable copy of a map's permutations used while building or peeling.
// Removed darts are dropped and the rest renumbered in increasing order by finish().
struct MapEdit {
  std::vector<int> a;  // opposite
  std::vector<int> s;  // vertex_next
  std::vector<char> removed;
  int root = -1;
  bool boundary = true;
  int dloop = -1;

  MapEdit() = default;
  explicit MapEdit(const PlanarMap& m)
      : a(m.opposite_array()),
        s(m.vertex_next_array()),
        removed(a.size(), 0),
        root(m.root()),
        boundary(m.has_boundary()),
        dloop(m.distinguished_loop()) {}

  int alpha(int d) const { return a[static_cast<std::size_t>(d)]; }
  int sigma(int d) const { return s[static_cast<std::size_t>(d)]; }
  int face_next(int d) const { return sigma(alpha(d)); }
  int prev(int d) const {
    int y = d;
    while (sigma(y) != d) y = sigma(y);
    return y;
  }
  int face_prev(int d) const { return alpha(prev(d)); }

  // New edge of two lone darts; returns the first, its opposite is the next index.
  int add_edge() {
    const int d = static_cast<int>(a.size());
    a.push_back(d + 1);
    a.push_back(d);
    s.push_back(d);
    s.push_back(d + 1);
    removed.push_back(0);
    removed.push_back(0);
    return d;
  }

  // Puts lone dart x right after `at` in the rotation of at's vertex.
  void insert_after(int at, int x) {
    s[static_cast<std::size_t>(x)] = sigma(at);
    s[static_cast<std::size_t>(at)] = x;
  }
  void insert_before(int at, int x) { insert_after(prev(at), x); }

  void detach(int x) {
    const int p = prev(x);
    if (p != x) s[static_cast<std::size_t>(p)] = sigma(x);
    s[static_cast<std::size_t>(x)] = x;
  }

  void remove_edge(int d) {
    detach(d);
    detach(alpha(d));
    removed[static_cast<std::size_t>(d)] = 1;
    removed[static_cast<std::size_t>(alpha(d))] = 1;
  }

  // Keeps the darts reachable from `start` (all non-removed darts when start < 0).
  std::pair<PlanarMap, std::vector<int>> finish_with_map(int start = -1) const {
    const std::size_t n = a.size();
    std::vector<char> keep(n, 0);
    if (start < 0) {
      for (std::size_t d = 0; d < n; ++d) keep[d] = removed[d] ? 0 : 1;
    } else {
      std::vector<int> stack{start};
      keep[static_cast<std::size_t>(start)] = 1;
      while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        for (int x : {sigma(d), alpha(d)}) {
          if (keep[static_cast<std::size_t>(x)]) continue;
          keep[static_cast<std::size_t>(x)] = 1;
          stack.push_back(x);
        }
      }
    }
    std::vector<int> remap(n, -1);
    int next = 0;
    for (std::size_t d = 0; d < n; ++d)
      if (keep[d]) remap[d] = next++;
    std::vector<int> na(static_cast<std::size_t>(next)), ns(static_cast<std::size_t>(next));
    for (std::size_t d = 0; d < n; ++d) {
      if (!keep[d]) continue;
      na[static_cast<std::size_t>(remap[d])] = remap[static_cast<std::size_t>(a[d])];
      ns[static_cast<std::size_t>(remap[d])] = remap[static_cast<std::size_t>(s[d])];
    }
    auto mapped = [&](int d) { return d >= 0 && keep[static_cast<std::size_t>(d)] ? remap[static_cast<std::size_t>(d)] : -1; };
    int r = mapped(start >= 0 ? start : root);
    return {PlanarMap(std::move(na), std::move(ns), next == 0 ? -1 : r, boundary, mapped(dloop)), remap};
  }

  PlanarMap finish(int start = -1) const { return finish_with_map(start).first; }
};

}  // namespace mappeel

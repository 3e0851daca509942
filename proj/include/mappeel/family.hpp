#pragma once

#include <string>

namespace mappeel {

enum class Family { Quad, Tri };

// Binary rule: children labels sum to parent label minus this offset.
inline int split_offset(Family f) { return f == Family::Quad ? 1 : 2; }

// Largest root label of a plain peeling tree with n zero-leaves (n >= 1).
inline int label_bound(Family f, int n) {
  if (n < 1) return -1;
  return f == Family::Quad ? 2 * n - 2 : 3 * n - 3;
}

std::string to_string(Family f);
Family family_from_string(const std::string& s);

}  // namespace mappeel

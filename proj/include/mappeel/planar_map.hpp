#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mappeel/family.hpp"

namespace mappeel {

// Rooted planar map as darts with an involution `opposite` and a counterclockwise
// rotation `vertex_next`. face_next(d) = vertex_next(opposite(d)) walks the face on
// the right of d. The map with no darts is the vertex map.
class PlanarMap {
 public:
  PlanarMap() = default;  // vertex map
  // Throws UsageError if opposite is not a fixed-point-free involution, vertex_next is
  // not a permutation, or root / distinguished_loop are out of range.
  PlanarMap(std::vector<int> opposite, std::vector<int> vertex_next, int root, bool has_boundary,
            int distinguished_loop = -1);

  static PlanarMap vertex_map() { return PlanarMap(); }
  // Two vertices joined by one edge; root is dart 0.
  static PlanarMap edge_map(bool has_boundary);

  bool is_vertex_map() const { return opposite_.empty(); }
  int dart_count() const { return static_cast<int>(opposite_.size()); }
  int opposite(int d) const { return opposite_.at(static_cast<std::size_t>(d)); }
  int vertex_next(int d) const { return vertex_next_.at(static_cast<std::size_t>(d)); }
  int vertex_prev(int d) const;
  int face_next(int d) const { return vertex_next(opposite(d)); }
  int face_prev(int d) const { return opposite(vertex_prev(d)); }
  int root() const { return root_; }
  bool has_boundary() const { return has_boundary_; }
  // Dart with the distinguished 1-gon on its right, or -1.
  int distinguished_loop() const { return distinguished_loop_; }
  const std::vector<int>& opposite_array() const { return opposite_; }
  const std::vector<int>& vertex_next_array() const { return vertex_next_; }

  int vertex_count() const;
  int edge_count() const { return dart_count() / 2; }
  int face_count() const;
  int face_degree(int d) const;
  // Degree of the face right of the root; 0 for the vertex map or without boundary.
  int perimeter() const;
  bool connected() const;

  bool operator==(const PlanarMap& other) const = default;

 private:
  std::vector<int> opposite_;
  std::vector<int> vertex_next_;
  int root_ = -1;
  bool has_boundary_ = true;
  int distinguished_loop_ = -1;
};

struct MapValidation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

MapValidation validate_map(Family family, const PlanarMap& map);

// Opens the root edge of a quadrangulation without boundary into a 2-gon boundary.
PlanarMap root_transform_quad(const PlanarMap& map);
PlanarMap inverse_root_transform_quad(const PlanarMap& map);

// Doubles `edge` and puts a loop inside the double edge. Without boundary the loop's
// 1-gon becomes the boundary; with a boundary the loop becomes the distinguished loop.
PlanarMap root_transform_tri(const PlanarMap& map, int edge);

struct UntransformedTri {
  PlanarMap map;
  int edge;  // the distinguished oriented edge given to root_transform_tri
};
// `loop` is the root (1-gon boundary) or the distinguished loop.
UntransformedTri inverse_root_transform_tri(const PlanarMap& map, int loop);

// Root-preserving breadth-first labelling; equal codes iff root-preserving isomorphic.
std::vector<std::uint8_t> canonical_code(const PlanarMap& map);
std::string to_hex(const std::vector<std::uint8_t>& bytes);
bool are_isomorphic(const PlanarMap& a, const PlanarMap& b);

nlohmann::json to_json(const PlanarMap& map);
PlanarMap planar_map_from_json(const nlohmann::json& j);

}  // namespace mappeel

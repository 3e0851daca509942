#include "mappeel/planar_map.hpp"

#include <functional>

#include "mappeel/errors.hpp"
#include "map_edit.hpp"

namespace mappeel {

PlanarMap::PlanarMap(std::vector<int> opposite, std::vector<int> vertex_next, int root, bool has_boundary,
                     int distinguished_loop)
    : opposite_(std::move(opposite)),
      vertex_next_(std::move(vertex_next)),
      root_(root),
      has_boundary_(has_boundary),
      distinguished_loop_(distinguished_loop) {
  const int n = static_cast<int>(opposite_.size());
  if (static_cast<int>(vertex_next_.size()) != n) throw UsageError("PlanarMap: opposite and vertex_next sizes differ");
  if (n % 2 != 0) throw UsageError("PlanarMap: odd number of darts");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int d = 0; d < n; ++d) {
    const int o = opposite_[static_cast<std::size_t>(d)];
    if (o < 0 || o >= n || o == d || opposite_[static_cast<std::size_t>(o)] != d)
      throw UsageError("PlanarMap: opposite is not a fixed-point-free involution at dart " + std::to_string(d));
    const int s = vertex_next_[static_cast<std::size_t>(d)];
    if (s < 0 || s >= n || hit[static_cast<std::size_t>(s)])
      throw UsageError("PlanarMap: vertex_next is not a permutation at dart " + std::to_string(d));
    hit[static_cast<std::size_t>(s)] = 1;
  }
  if (n == 0) {
    root_ = -1;
    has_boundary_ = true;
    distinguished_loop_ = -1;
    return;
  }
  if (root_ < 0 || root_ >= n) throw UsageError("PlanarMap: root out of range");
  if (distinguished_loop_ < -1 || distinguished_loop_ >= n)
    throw UsageError("PlanarMap: distinguished loop out of range");
}

PlanarMap PlanarMap::edge_map(bool has_boundary) { return PlanarMap({1, 0}, {0, 1}, 0, has_boundary); }

int PlanarMap::vertex_prev(int d) const {
  int y = d;
  while (vertex_next(y) != d) y = vertex_next(y);
  return y;
}

namespace {

int count_orbits(int n, const std::function<int(int)>& next) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int orbits = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    ++orbits;
    for (int x = d; !seen[static_cast<std::size_t>(x)]; x = next(x)) seen[static_cast<std::size_t>(x)] = 1;
  }
  return orbits;
}

}  // namespace

int PlanarMap::vertex_count() const {
  if (is_vertex_map()) return 1;
  return count_orbits(dart_count(), [this](int d) { return vertex_next(d); });
}

int PlanarMap::face_count() const {
  if (is_vertex_map()) return 1;
  return count_orbits(dart_count(), [this](int d) { return face_next(d); });
}

int PlanarMap::face_degree(int d) const {
  int k = 1;
  for (int x = face_next(d); x != d; x = face_next(x)) ++k;
  return k;
}

int PlanarMap::perimeter() const {
  if (is_vertex_map() || !has_boundary_) return 0;
  return face_degree(root_);
}

bool PlanarMap::connected() const {
  if (is_vertex_map()) return true;
  std::vector<char> seen(static_cast<std::size_t>(dart_count()), 0);
  std::vector<int> stack{root_};
  seen[static_cast<std::size_t>(root_)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int x : {vertex_next(d), opposite(d)}) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      seen[static_cast<std::size_t>(x)] = 1;
      ++reached;
      stack.push_back(x);
    }
  }
  return reached == dart_count();
}

MapValidation validate_map(Family family, const PlanarMap& map) {
  auto fail = [](std::string m) { return MapValidation{false, std::move(m)}; };
  if (map.is_vertex_map()) return {};
  if (!map.connected()) return fail("map is not connected");
  const int euler = map.vertex_count() - map.edge_count() + map.face_count();
  if (euler != 2) return fail("Euler characteristic is " + std::to_string(euler) + ", expected 2");
  const int dloop = map.distinguished_loop();
  if (dloop >= 0 && family != Family::Tri) return fail("distinguished loop outside a triangulation");
  if (dloop >= 0 && !map.has_boundary()) return fail("distinguished loop requires a boundary");
  if (!map.has_boundary() && map.dart_count() == 2) return {};
  const int want = family == Family::Quad ? 4 : 3;
  std::vector<char> seen(static_cast<std::size_t>(map.dart_count()), 0);
  const int boundary_dart = map.has_boundary() ? map.root() : -1;
  if (boundary_dart >= 0) {
    const int deg = map.face_degree(boundary_dart);
    if (family == Family::Quad && deg % 2 != 0)
      return fail("boundary face has odd degree " + std::to_string(deg));
    for (int x = boundary_dart; !seen[static_cast<std::size_t>(x)]; x = map.face_next(x)) {
      if (x == dloop) return fail("distinguished loop lies on the boundary");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  if (dloop >= 0) {
    if (map.face_next(dloop) != dloop) return fail("distinguished loop does not bound a 1-gon on its right");
    seen[static_cast<std::size_t>(dloop)] = 1;
  }
  for (int d = 0; d < map.dart_count(); ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    const int deg = map.face_degree(d);
    for (int x = d; !seen[static_cast<std::size_t>(x)]; x = map.face_next(x)) seen[static_cast<std::size_t>(x)] = 1;
    if (deg != want)
      return fail("face containing dart " + std::to_string(d) + " has degree " + std::to_string(deg) +
                  ", expected " + std::to_string(want));
  }
  return {};
}

PlanarMap root_transform_quad(const PlanarMap& map) {
  if (map.has_boundary()) throw DomainError("root_transform_quad: map already has a boundary");
  const auto v = validate_map(Family::Quad, map);
  if (!v) throw DomainError("root_transform_quad: invalid quadrangulation (" + v.message + ")");
  if (map.dart_count() == 2) return PlanarMap::edge_map(true);
  MapEdit e(map);
  const int rho = e.root;
  const int e2 = e.add_edge();
  e.insert_after(rho, e2);
  e.insert_before(e.alpha(rho), e.alpha(e2));
  // The 2-gon (e2, opposite(rho)) lies on the right of e2.
  e.root = e2;
  e.boundary = true;
  return e.finish();
}

PlanarMap inverse_root_transform_quad(const PlanarMap& map) {
  if (!map.has_boundary() || map.is_vertex_map() || map.perimeter() != 2)
    throw DomainError("inverse_root_transform_quad: boundary must be a 2-gon");
  const auto v = validate_map(Family::Quad, map);
  if (!v) throw DomainError("inverse_root_transform_quad: invalid quadrangulation (" + v.message + ")");
  if (map.dart_count() == 2) return PlanarMap::edge_map(false);
  MapEdit e(map);
  const int e2 = e.root;
  const int rho = e.alpha(e.face_next(e2));
  e.remove_edge(e2);
  e.root = rho;
  e.boundary = false;
  return e.finish();
}

PlanarMap root_transform_tri(const PlanarMap& map, int edge) {
  if (map.is_vertex_map()) throw DomainError("root_transform_tri: the vertex map has no edge");
  if (edge < 0 || edge >= map.dart_count()) throw DomainError("root_transform_tri: edge out of range");
  if (map.distinguished_loop() >= 0) throw DomainError("root_transform_tri: map already has a distinguished loop");
  const auto v = validate_map(Family::Tri, map);
  if (!v) throw DomainError("root_transform_tri: invalid triangulation (" + v.message + ")");
  MapEdit e(map);
  const bool bare_edge = !map.has_boundary() && map.dart_count() == 2;
  int after = edge;
  if (!bare_edge) {
    const int e2 = e.add_edge();
    e.insert_after(edge, e2);
    e.insert_before(e.alpha(edge), e.alpha(e2));
    // opposite(e2) took the place of opposite(edge) on the face left of edge.
    if (e.boundary && e.root == e.alpha(edge)) e.root = e.alpha(e2);
  }
  // Corner after `edge` gets opposite(loop) then loop, so the loop's right side is a 1-gon.
  const int loop = e.add_edge();
  const int back = e.alpha(loop);
  e.insert_after(after, back);
  e.insert_after(back, loop);
  if (map.has_boundary()) {
    e.dloop = loop;
  } else {
    e.root = loop;
    e.boundary = true;
  }
  return e.finish();
}

UntransformedTri inverse_root_transform_tri(const PlanarMap& map, int loop) {
  const bool root_mode = map.has_boundary() && loop == map.root();
  if (!root_mode && loop != map.distinguished_loop())
    throw DomainError("inverse_root_transform_tri: dart is neither the root loop nor the distinguished loop");
  const auto v = validate_map(Family::Tri, map);
  if (!v) throw DomainError("inverse_root_transform_tri: invalid triangulation (" + v.message + ")");
  if (map.face_next(loop) != loop) throw DomainError("inverse_root_transform_tri: dart does not bound a 1-gon");
  const int back = map.opposite(loop);
  if (map.vertex_next(back) != loop)
    throw DomainError("inverse_root_transform_tri: loop is not nested in a corner");
  MapEdit e(map);
  const int edge = map.vertex_prev(back);
  if (edge == loop) throw DomainError("inverse_root_transform_tri: loop is the only edge");
  const bool bare_edge = root_mode && map.dart_count() == 4;
  if (!bare_edge) {
    // The face left of the loop must be the triangle (opposite(edge), back, e2).
    const int e2 = map.vertex_next(loop);
    if (map.face_degree(back) != 3 || map.face_next(back) != e2 || map.face_next(e2) != map.opposite(edge))
      throw DomainError("inverse_root_transform_tri: loop does not sit in a doubled edge");
    if (map.has_boundary() && !root_mode && map.root() == map.opposite(e2)) e.root = map.opposite(edge);
    e.remove_edge(loop);
    e.remove_edge(e2);
  } else {
    e.remove_edge(loop);
  }
  if (root_mode) {
    e.root = edge;
    e.boundary = false;
  } else {
    e.dloop = -1;
  }
  auto [m, remap] = e.finish_with_map();
  return {m, remap[static_cast<std::size_t>(edge)]};
}

std::vector<std::uint8_t> canonical_code(const PlanarMap& map) {
  std::vector<std::uint8_t> out;
  if (map.is_vertex_map()) return out;
  const int n = map.dart_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  label[static_cast<std::size_t>(map.root())] = 0;
  order.push_back(map.root());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    for (int x : {map.vertex_next(d), map.opposite(d)}) {
      if (label[static_cast<std::size_t>(x)] >= 0) continue;
      label[static_cast<std::size_t>(x)] = static_cast<int>(order.size());
      order.push_back(x);
    }
  }
  auto put = [&out](int v) {
    const auto u = static_cast<std::uint32_t>(v);
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(u >> s));
  };
  const bool loop = map.distinguished_loop() >= 0;
  out.push_back(static_cast<std::uint8_t>((map.has_boundary() ? 1 : 0) | (loop ? 2 : 0)));
  put(static_cast<int>(order.size()));
  for (int d : order) {
    put(label[static_cast<std::size_t>(map.vertex_next(d))]);
    put(label[static_cast<std::size_t>(map.opposite(d))]);
  }
  if (loop) put(label[static_cast<std::size_t>(map.distinguished_loop())]);
  return out;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

bool are_isomorphic(const PlanarMap& a, const PlanarMap& b) { return canonical_code(a) == canonical_code(b); }

nlohmann::json to_json(const PlanarMap& map) {
  nlohmann::json darts = nlohmann::json::array();
  for (int d = 0; d < map.dart_count(); ++d) darts.push_back(d);
  nlohmann::json j{{"darts", darts},
                   {"opposite", map.opposite_array()},
                   {"vertex_next", map.vertex_next_array()},
                   {"has_boundary", map.has_boundary()}};
  j["root"] = map.is_vertex_map() ? nlohmann::json(nullptr) : nlohmann::json(map.root());
  j["distinguished_loop"] =
      map.distinguished_loop() < 0 ? nlohmann::json(nullptr) : nlohmann::json(map.distinguished_loop());
  return j;
}

PlanarMap planar_map_from_json(const nlohmann::json& j) {
  auto opposite = j.at("opposite").get<std::vector<int>>();
  auto next = j.at("vertex_next").get<std::vector<int>>();
  if (j.contains("darts") && j.at("darts").size() != opposite.size())
    throw UsageError("map JSON: darts and opposite lengths differ");
  const int root = j.contains("root") && !j.at("root").is_null() ? j.at("root").get<int>() : -1;
  const bool boundary = j.value("has_boundary", true);
  const int loop = j.contains("distinguished_loop") && !j.at("distinguished_loop").is_null()
                       ? j.at("distinguished_loop").get<int>()
                       : -1;
  return PlanarMap(std::move(opposite), std::move(next), root, boundary, loop);
}

}  // namespace mappeel

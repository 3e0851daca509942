#include "mappeel/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mappeel/enumerate.hpp"
#include "mappeel/errors.hpp"
#include "mappeel/lastcar.hpp"
#include "mappeel/peeling.hpp"
#include "mappeel/tree_counting.hpp"
#include "mappeel/tree_enumeration.hpp"

namespace mappeel {

bool OracleReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.ok; });
}

namespace {

void require_max_n(int max_n) {
  if (max_n < 2) throw UsageError("oracle: --max-n must be >= 2");
}

// Records a mismatch unless one is already recorded.
void fail(OracleCheck& c, const std::string& what) {
  if (c.ok) {
    c.ok = false;
    c.first_mismatch = what;
  }
}

std::string cell(int n, int p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

void compare_cell(OracleCheck& c, int n, int p, const Integer& a, const Integer& b) {
  ++c.instances;
  if (a != b) fail(c, cell(n, p) + ": " + a.get_str() + " != " + b.get_str());
}

}  // namespace

OracleReport oracle_compare(Family family, int max_n, int enum_max_n) {
  require_max_n(max_n);
  OracleReport r{family, max_n, {}};
  const TreeCountTable dp(family, max_n);
  const bool quad = family == Family::Quad;
  const BiSeries solver = quad ? quad_boundary_table(max_n) : tri_boundary_table(max_n).table;
  const UniSeries uni = quad ? quad_counts(max_n) : tri_counts(max_n);

  OracleCheck vs_dp{"solver-vs-dp", 0, true, {}};
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= label_bound(family, n); ++p) compare_cell(vs_dp, n, p, solver.coeff(n, p), dp.count(p, n));
  r.checks.push_back(vs_dp);

  OracleCheck column{"univariate-vs-dp", 0, true, {}};
  for (int n = 2; n <= max_n; ++n) compare_cell(column, n, 1, uni.coeff(n), dp.count(1, n));
  r.checks.push_back(column);

  if (quad) {
    const BiSeries ladder = quad_boundary_table_tutte(max_n, uni);
    OracleCheck vs_ladder{"solver-vs-ladder", 0, true, {}};
    for (int n = 1; n <= max_n; ++n)
      for (int p = 0; p <= n; ++p) compare_cell(vs_ladder, n, p, solver.coeff(n, p), ladder.coeff(n, p));
    r.checks.push_back(vs_ladder);
  }

  OracleCheck vs_enum{"dp-vs-enumeration", 0, true, {}};
  for (int n = 1; n <= std::min(max_n, enum_max_n); ++n)
    for (int p = 0; p <= label_bound(family, n); ++p) {
      long long count = 0;
      for_each_tree(family, p, n, [&](const LabeledTree&) { ++count; });
      compare_cell(vs_enum, n, p, dp.count(p, n), Integer(std::to_string(count)));
    }
  r.checks.push_back(vs_enum);
  return r;
}

namespace {

void check_quad_lastcar(OracleCheck& c, int max_n) {
  bool seen[2] = {false, false};
  for (int n = 2; n <= max_n; ++n)
    for (int p = 1; p <= label_bound(Family::Quad, n); ++p)
      for_each_tree(Family::Quad, p, n, [&](const LabeledTree& t) {
        for (int i = 0; i < t.size(); ++i) {
          const auto& node = t.node(i);
          if (node.arity != 0 || node.label != 0) continue;
          if (p == 1 && n == 2) continue;  // the base case has no decomposition
          ++c.instances;
          const TreeSequence s = decompose(Family::Quad, t, i);
          seen[s.side == Side::Left ? 0 : 1] = true;
          if (glue(s) != t.with_mark(i, MarkKind::MarkedLeaf))
            fail(c, "glue(decompose) differs on " + serialize(t) + " leaf " + std::to_string(i));
          const int k = static_cast<int>(s.trees.size());
          if (leaf_total(s) != n + k - 2) fail(c, "leaf count on " + serialize(t) + " leaf " + std::to_string(i));
        }
      });
  if (max_n >= 3 && !(seen[0] && seen[1])) fail(c, "only one side bit occurred");
}

void check_tri_lastcar(OracleCheck& c, int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= 3 * n; ++p)
      for_each_loop_tree(p, n, [&](const LabeledTree& t) {
        ++c.instances;
        const TreeSequence s = decompose(Family::Tri, t);
        if (glue(s) != t) fail(c, "glue(decompose) differs on " + serialize(t));
        const int k = static_cast<int>(s.trees.size());
        if (leaf_total(s) != n + k - 1) fail(c, "leaf count on " + serialize(t));
      });
}

void check_maps(OracleCheck& c, Family family, int max_n) {
  const TreeCountTable dp(family, max_n);
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= label_bound(family, n); ++p) {
      std::set<std::vector<std::uint8_t>> codes;
      long long built = 0;
      for_each_tree(family, p, n, [&](const LabeledTree& t) {
        ++c.instances;
        ++built;
        const PlanarMap m = build_map_from_tree(family, t);
        if (const MapValidation v = validate_map(family, m); !v.ok) {
          fail(c, "invalid map from " + serialize(t) + ": " + v.message);
          return;
        }
        if (m.vertex_count() != n) fail(c, "vertex count of the map from " + serialize(t));
        if (peel_to_tree(family, m) != t) fail(c, "peel(build) differs on " + serialize(t));
        codes.insert(canonical_code(m));
      });
      if (static_cast<long long>(codes.size()) != built)
        fail(c, cell(n, p) + ": " + std::to_string(built - static_cast<long long>(codes.size())) + " isomorphic duplicates");
      if (Integer(std::to_string(built)) != dp.count(p, n))
        fail(c, cell(n, p) + ": built " + std::to_string(built) + " maps, dp says " + dp.count(p, n).get_str());
    }
}

void check_loop_maps(OracleCheck& c, int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= 3 * n; ++p)
      for_each_loop_tree(p, n, [&](const LabeledTree& t) {
        ++c.instances;
        const PlanarMap m = build_map_from_tree(Family::Tri, t);
        if (const MapValidation v = validate_map(Family::Tri, m); !v.ok) {
          fail(c, "invalid map from " + serialize(t) + ": " + v.message);
          return;
        }
        if (peel_to_tree(Family::Tri, m) != t) fail(c, "peel(build) differs on " + serialize(t));
      });
}

}  // namespace

OracleCheck lastcar_roundtrip(Family family, int max_n) {
  OracleCheck c{"lastcar", 0, true, {}};
  if (family == Family::Quad)
    check_quad_lastcar(c, max_n);
  else
    check_tri_lastcar(c, max_n);
  return c;
}

OracleCheck map_roundtrip(Family family, int max_n) {
  OracleCheck c{"map-tree", 0, true, {}};
  check_maps(c, family, max_n);
  return c;
}

OracleCheck loop_map_roundtrip(int max_n) {
  OracleCheck c{"loop-map-tree", 0, true, {}};
  check_loop_maps(c, max_n);
  return c;
}

OracleReport oracle_roundtrip(Family family, int max_n, int map_max_n) {
  require_max_n(max_n);
  OracleReport r{family, max_n, {}};
  r.checks.push_back(lastcar_roundtrip(family, max_n));
  const int m = std::min(max_n, map_max_n);
  r.checks.push_back(map_roundtrip(family, m));
  // loop maps grow much faster than plain ones
  if (family == Family::Tri) r.checks.push_back(loop_map_roundtrip(std::min(m, 5)));
  return r;
}

nlohmann::json to_json(const OracleReport& r) {
  nlohmann::json j;
  j["family"] = to_string(r.family);
  j["max_n"] = r.max_n;
  j["status"] = r.ok() ? "pass" : "fail";
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"instances", c.instances},
                           {"status", c.ok ? "pass" : "fail"},
                           {"first_mismatch", c.ok ? nlohmann::json(nullptr) : nlohmann::json(c.first_mismatch)}});
  return j;
}

std::string to_text(const OracleReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << to_string(r.family) << ' ' << c.name << " max_n=" << r.max_n << " instances=" << c.instances << ' '
       << (c.ok ? "pass" : "FAIL");
    if (!c.ok) os << ' ' << c.first_mismatch;
    os << '\n';
  }
  return os.str();
}

}  // namespace mappeel

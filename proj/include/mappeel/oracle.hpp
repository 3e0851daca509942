#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mappeel/family.hpp"

namespace mappeel {

struct OracleCheck {
  std::string name;
  long long instances = 0;
  bool ok = true;
  std::string first_mismatch;  // empty when ok
};

struct OracleReport {
  Family family = Family::Quad;
  int max_n = 0;
  std::vector<OracleCheck> checks;
  bool ok() const;
};

// Cell-by-cell agreement of the recursions, the Tutte ladder (Quad), the tree DP
// and, for n <= enum_max_n, exhaustive tree generation. max_n >= 2.
OracleReport oracle_compare(Family family, int max_n, int enum_max_n = 6);

// decompose/glue on every last-car instance with n <= max_n, plus map <-> tree on
// every tree with n <= map_max_n (capped at max_n). max_n >= 2.
OracleReport oracle_roundtrip(Family family, int max_n, int map_max_n = 6);

// The two halves of oracle_roundtrip. lastcar_roundtrip also requires both quad side
// bits to occur; map_roundtrip checks validity, vertex counts, distinct canonical codes
// and the per-(p, n) count against the tree DP.
OracleCheck lastcar_roundtrip(Family family, int max_n);
OracleCheck map_roundtrip(Family family, int max_n);
// Triangulation trees with a loop leaf through the map bijection.
OracleCheck loop_map_roundtrip(int max_n);

nlohmann::json to_json(const OracleReport& r);
std::string to_text(const OracleReport& r);

}  // namespace mappeel

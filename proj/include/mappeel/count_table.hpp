#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mappeel/integer.hpp"
#include "mappeel/series.hpp"

namespace mappeel {

// Exact counts keyed by an index tuple, e.g. (n), (n, p), (n, p, q) or (p, r, n).
class CountTable {
 public:
  explicit CountTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  // Throws UsageError on a key of the wrong width, IntegrityError on a negative value.
  void set(const std::vector<int>& key, Integer value);
  // 0 for absent keys.
  Integer get(const std::vector<int>& key) const;
  bool contains(const std::vector<int>& key) const { return cells_.count(key) != 0; }
  std::size_t size() const { return cells_.size(); }
  const std::map<std::vector<int>, Integer>& cells() const { return cells_; }

  // Header row of the column names plus "count", one row per key in lexicographic order.
  std::string to_csv() const;
  nlohmann::json to_json() const;

  bool operator==(const CountTable& other) const = default;

 private:
  std::vector<std::string> columns_;
  std::map<std::vector<int>, Integer> cells_;
};

// Rows (n, count) for first_n <= n <= order.
CountTable table_from_series(const UniSeries& s, std::size_t first_n = 0);
// Rows (n, p, count) for first_n <= n <= order and p <= ybound(n).
CountTable table_from_series(const BiSeries& s, std::size_t first_n = 0);

}  // namespace mappeel

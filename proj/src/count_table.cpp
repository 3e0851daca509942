#include "mappeel/count_table.hpp"

#include "mappeel/errors.hpp"

namespace mappeel {

CountTable::CountTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw UsageError("CountTable: no index columns");
}

void CountTable::set(const std::vector<int>& key, Integer value) {
  if (key.size() != columns_.size())
    throw UsageError("CountTable: key has " + std::to_string(key.size()) + " indices, expected " +
                     std::to_string(columns_.size()));
  if (value < 0) throw IntegrityError("CountTable: negative count " + value.get_str());
  cells_[key] = std::move(value);
}

Integer CountTable::get(const std::vector<int>& key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? Integer(0) : it->second;
}

std::string CountTable::to_csv() const {
  std::string out;
  for (const auto& c : columns_) out += c + ",";
  out += "count\n";
  for (const auto& [key, value] : cells_) {
    for (int k : key) out += std::to_string(k) + ",";
    out += value.get_str() + "\n";
  }
  return out;
}

nlohmann::json CountTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : cells_) {
    nlohmann::json row;
    for (std::size_t i = 0; i < key.size(); ++i) row[columns_[i]] = key[i];
    row["count"] = value.get_str();
    rows.push_back(row);
  }
  return nlohmann::json{{"columns", columns_}, {"rows", rows}};
}

CountTable table_from_series(const UniSeries& s, std::size_t first_n) {
  CountTable t({"n"});
  for (std::size_t n = first_n; n <= s.order(); ++n) t.set({static_cast<int>(n)}, s[n]);
  return t;
}

CountTable table_from_series(const BiSeries& s, std::size_t first_n) {
  CountTable t({"n", "p"});
  for (std::size_t n = first_n; n <= s.order(); ++n)
    for (std::size_t p = 0; p <= s.ybound(n); ++p) t.set({static_cast<int>(n), static_cast<int>(p)}, s.row(n)[p]);
  return t;
}

}  // namespace mappeel

#include "mappeel/series.hpp"

#include <algorithm>
#include "json.hpp"
#include <string>

#include "mappeel/errors.hpp"

namespace mappeel {

namespace {

void require_same_order(const UniSeries& a, const UniSeries& b, const char* op) {
  if (a.order() != b.order())
    throw UsageError(std::string(op) + ": truncation orders differ (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
}

void require_same_shape(const BiSeries& a, const BiSeries& b, const char* op) {
  if (!a.same_shape(b)) throw UsageError(std::string(op) + ": bivariate series shapes differ");
}

}  // namespace

UniSeries::UniSeries(std::size_t order) : coeffs_(order + 1) {}

UniSeries::UniSeries(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1)
    throw UsageError("UniSeries: " + std::to_string(coeffs_.size()) +
                     " coefficients exceed order " + std::to_string(order));
  coeffs_.resize(order + 1);
}

UniSeries UniSeries::monomial(std::size_t order, std::size_t degree, const Integer& c) {
  UniSeries s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

Integer UniSeries::coeff(long long n) const {
  if (n < 0 || static_cast<std::size_t>(n) > order()) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

UniSeries add(const UniSeries& a, const UniSeries& b) {
  require_same_order(a, b, "add");
  UniSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n] + b[n]);
  return r;
}

UniSeries sub(const UniSeries& a, const UniSeries& b) {
  require_same_order(a, b, "sub");
  UniSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n] - b[n]);
  return r;
}

UniSeries mul(const UniSeries& a, const UniSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t order = a.order();
  std::vector<Integer> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] != 0) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return UniSeries(order, std::move(c));
}

UniSeries scale(const Integer& c, const UniSeries& a) {
  UniSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, c * a[n]);
  return r;
}

UniSeries point_x(const UniSeries& a) {
  UniSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, Integer(static_cast<unsigned long>(n)) * a[n]);
  return r;
}

UniSeries geom_div(const UniSeries& a, const UniSeries& u) {
  require_same_order(a, u, "geom_div");
  if (u[0] != 0) throw DomainError("geom_div: u has nonzero constant term " + u[0].get_str());
  // r = a + u r, solved coefficient by coefficient.
  const std::size_t order = a.order();
  std::vector<Integer> r(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Integer acc = a[n];
    for (std::size_t j = 1; j <= n; ++j) {
      if (u[j] != 0 && r[n - j] != 0) mpz_addmul(acc.get_mpz_t(), u[j].get_mpz_t(), r[n - j].get_mpz_t());
    }
    r[n] = std::move(acc);
  }
  return UniSeries(order, std::move(r));
}

UniSeries divide_by_x(const UniSeries& a) {
  if (a[0] != 0) throw DomainError("divide_by_x: nonzero constant term");
  if (a.order() == 0) throw UsageError("divide_by_x: order 0 series");
  std::vector<Integer> c(a.coeffs().begin() + 1, a.coeffs().end());
  return UniSeries(a.order() - 1, std::move(c));
}

UniSeries multiply_by_x(const UniSeries& a) {
  std::vector<Integer> c;
  c.reserve(a.order() + 2);
  c.emplace_back(0);
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return UniSeries(a.order() + 1, std::move(c));
}

UniSeries truncate(const UniSeries& a, std::size_t order) {
  if (order > a.order())
    throw UsageError("truncate: order " + std::to_string(order) + " above " + std::to_string(a.order()));
  return UniSeries(order, std::vector<Integer>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

Integer coeff(const UniSeries& a, long long n) { return a.coeff(n); }

UniSeries operator+(const UniSeries& a, const UniSeries& b) { return add(a, b); }
UniSeries operator-(const UniSeries& a, const UniSeries& b) { return sub(a, b); }
UniSeries operator*(const UniSeries& a, const UniSeries& b) { return mul(a, b); }
UniSeries operator*(const Integer& c, const UniSeries& a) { return scale(c, a); }

BiSeries::BiSeries(std::size_t order, std::vector<std::size_t> ybounds) {
  if (ybounds.size() != order + 1)
    throw UsageError("BiSeries: need " + std::to_string(order + 1) + " y-bounds, got " +
                     std::to_string(ybounds.size()));
  rows_.reserve(order + 1);
  for (std::size_t b : ybounds) rows_.emplace_back(b + 1);
}

BiSeries BiSeries::with_bound(std::size_t order, const std::function<std::size_t(std::size_t)>& ybound) {
  std::vector<std::size_t> b(order + 1);
  for (std::size_t n = 0; n <= order; ++n) b[n] = ybound(n);
  return BiSeries(order, std::move(b));
}

BiSeries BiSeries::quad(std::size_t order) {
  return with_bound(order, [](std::size_t n) { return n; });
}

BiSeries BiSeries::tri(std::size_t order) {
  return with_bound(order, [](std::size_t n) { return n >= 1 ? 3 * n - 3 : 0; });
}

const std::vector<std::size_t> BiSeries::ybounds() const {
  std::vector<std::size_t> b;
  b.reserve(rows_.size());
  for (const auto& r : rows_) b.push_back(r.size() - 1);
  return b;
}

bool BiSeries::same_shape(const BiSeries& other) const {
  if (rows_.size() != other.rows_.size()) return false;
  for (std::size_t n = 0; n < rows_.size(); ++n)
    if (rows_[n].size() != other.rows_[n].size()) return false;
  return true;
}

Integer BiSeries::coeff(long long n, long long p) const {
  if (n < 0 || p < 0 || static_cast<std::size_t>(n) > order()) return 0;
  const auto& r = rows_[static_cast<std::size_t>(n)];
  if (static_cast<std::size_t>(p) >= r.size()) return 0;
  return r[static_cast<std::size_t>(p)];
}

void BiSeries::set(std::size_t n, std::size_t p, Integer v) {
  if (n > order() || p > ybound(n))
    throw UsageError("BiSeries::set: (" + std::to_string(n) + "," + std::to_string(p) + ") out of bounds");
  rows_[n][p] = std::move(v);
}

UniSeries BiSeries::column(std::size_t p) const {
  UniSeries s(order());
  for (std::size_t n = 0; n <= order(); ++n)
    if (p < rows_[n].size()) s.set(n, rows_[n][p]);
  return s;
}

BiSeries BiSeries::rebound(const std::vector<std::size_t>& ybounds) const {
  BiSeries r(ybounds.size() - 1, ybounds);
  for (std::size_t n = 0; n <= order(); ++n) {
    for (std::size_t p = 0; p < rows_[n].size(); ++p) {
      if (rows_[n][p] == 0) continue;
      if (n > r.order() || p > r.ybound(n))
        throw IntegrityError("rebound: nonzero coefficient at (" + std::to_string(n) + "," +
                             std::to_string(p) + ") would be dropped");
      r.rows_[n][p] = rows_[n][p];
    }
  }
  return r;
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
  require_same_shape(a, b, "add");
  BiSeries r = a;
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (std::size_t p = 0; p <= a.ybound(n); ++p) r.set(n, p, a.row(n)[p] + b.row(n)[p]);
  return r;
}

BiSeries sub(const BiSeries& a, const BiSeries& b) {
  require_same_shape(a, b, "sub");
  BiSeries r = a;
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (std::size_t p = 0; p <= a.ybound(n); ++p) r.set(n, p, a.row(n)[p] - b.row(n)[p]);
  return r;
}

namespace {

void accumulate(const BiSeries& r, std::size_t n, std::size_t p, const Integer& a, const Integer& b,
                std::vector<std::vector<Integer>>& rows) {
  if (p > r.ybound(n))
    throw DomainError("product term x^" + std::to_string(n) + " y^" + std::to_string(p) +
                      " exceeds the y-bound " + std::to_string(r.ybound(n)));
  mpz_addmul(rows[n][p].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

BiSeries from_rows(const BiSeries& shape, std::vector<std::vector<Integer>> rows) {
  BiSeries r(shape.order(), shape.ybounds());
  for (std::size_t n = 0; n <= r.order(); ++n)
    for (std::size_t p = 0; p <= r.ybound(n); ++p) r.set(n, p, std::move(rows[n][p]));
  return r;
}

std::vector<std::vector<Integer>> zero_rows(const BiSeries& shape) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t n = 0; n <= shape.order(); ++n) rows.emplace_back(shape.ybound(n) + 1);
  return rows;
}

}  // namespace

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  require_same_shape(a, b, "mul");
  auto rows = zero_rows(a);
  for (std::size_t i = 0; i <= a.order(); ++i)
    for (std::size_t p = 0; p <= a.ybound(i); ++p) {
      if (a.row(i)[p] == 0) continue;
      for (std::size_t j = 0; i + j <= a.order(); ++j)
        for (std::size_t q = 0; q <= b.ybound(j); ++q)
          if (b.row(j)[q] != 0) accumulate(a, i + j, p + q, a.row(i)[p], b.row(j)[q], rows);
    }
  return from_rows(a, std::move(rows));
}

BiSeries mul(const BiSeries& a, const UniSeries& u) {
  if (a.order() != u.order()) throw UsageError("mul: truncation orders differ");
  auto rows = zero_rows(a);
  for (std::size_t i = 0; i <= a.order(); ++i)
    for (std::size_t p = 0; p <= a.ybound(i); ++p) {
      if (a.row(i)[p] == 0) continue;
      for (std::size_t j = 0; i + j <= a.order(); ++j)
        if (u[j] != 0) accumulate(a, i + j, p, a.row(i)[p], u[j], rows);
    }
  return from_rows(a, std::move(rows));
}

BiSeries scale(const Integer& c, const BiSeries& a) {
  BiSeries r = a;
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (std::size_t p = 0; p <= a.ybound(n); ++p) r.set(n, p, c * a.row(n)[p]);
  return r;
}

BiSeries point_x(const BiSeries& a) {
  BiSeries r = a;
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (std::size_t p = 0; p <= a.ybound(n); ++p)
      r.set(n, p, Integer(static_cast<unsigned long>(n)) * a.row(n)[p]);
  return r;
}

BiSeries partial_y(const BiSeries& a) {
  BiSeries r(a.order(), a.ybounds());
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (std::size_t p = 1; p <= a.ybound(n); ++p)
      r.set(n, p - 1, Integer(static_cast<unsigned long>(p)) * a.row(n)[p]);
  return r;
}

BiSeries point_y(const BiSeries& a) {
  BiSeries r = a;
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (std::size_t p = 0; p <= a.ybound(n); ++p)
      r.set(n, p, Integer(static_cast<unsigned long>(p)) * a.row(n)[p]);
  return r;
}

BiSeries shift(const BiSeries& a, std::size_t dx, std::size_t dy) {
  BiSeries r(a.order(), a.ybounds());
  for (std::size_t n = 0; n + dx <= a.order(); ++n)
    for (std::size_t p = 0; p <= a.ybound(n); ++p) {
      if (a.row(n)[p] == 0) continue;
      if (p + dy > r.ybound(n + dx))
        throw DomainError("shift: term x^" + std::to_string(n + dx) + " y^" + std::to_string(p + dy) +
                          " exceeds the y-bound");
      r.set(n + dx, p + dy, a.row(n)[p]);
    }
  return r;
}

BiSeries divide_by_x(const BiSeries& a) {
  if (a.order() == 0) throw UsageError("divide_by_x: order 0 series");
  for (const auto& c : a.row(0))
    if (c != 0) throw DomainError("divide_by_x: nonzero x^0 row");
  auto b = a.ybounds();
  std::vector<std::size_t> lower(b.begin() + 1, b.end());
  // Bounds shift with the rows so the result keeps every coefficient.
  BiSeries r(a.order() - 1, lower);
  for (std::size_t n = 1; n <= a.order(); ++n)
    for (std::size_t p = 0; p <= a.ybound(n); ++p) r.set(n - 1, p, a.row(n)[p]);
  return r;
}

Integer coeff(const BiSeries& a, long long n, long long p) { return a.coeff(n, p); }

void to_json(nlohmann::json& j, const UniSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  j = nlohmann::json{{"order", s.order()}, {"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, UniSeries& s) {
  const auto order = j.at("order").get<std::size_t>();
  std::vector<Integer> c;
  for (const auto& v : j.at("coeffs")) c.push_back(integer_from_string(v.get<std::string>()));
  if (c.size() != order + 1) throw UsageError("series JSON: coeffs length does not match order");
  s = UniSeries(order, std::move(c));
}

void to_json(nlohmann::json& j, const BiSeries& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n <= s.order(); ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : s.row(n)) row.push_back(c.get_str());
    rows.push_back(row);
  }
  j = nlohmann::json{{"order", s.order()}, {"rows", rows}};
}

BiSeries bi_series_from_json(const nlohmann::json& j) {
  const auto order = j.at("order").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (rows.size() != order + 1) throw UsageError("series JSON: rows length does not match order");
  std::vector<std::size_t> bounds;
  for (const auto& r : rows) {
    if (r.empty()) throw UsageError("series JSON: empty row");
    bounds.push_back(r.size() - 1);
  }
  BiSeries s(order, bounds);
  for (std::size_t n = 0; n <= order; ++n)
    for (std::size_t p = 0; p < rows[n].size(); ++p)
      s.set(n, p, integer_from_string(rows[n][p].get<std::string>()));
  return s;
}

}  // namespace mappeel

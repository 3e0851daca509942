#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "json.hpp"

#include "mappeel/integer.hpp"

namespace mappeel {

// Formal power series in x truncated after x^order.
class UniSeries {
 public:
  explicit UniSeries(std::size_t order);
  UniSeries(std::size_t order, std::vector<Integer> coeffs);

  static UniSeries monomial(std::size_t order, std::size_t degree, const Integer& c = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  // Returns 0 for negative or out-of-range indices.
  Integer coeff(long long n) const;
  const Integer& operator[](std::size_t n) const { return coeffs_.at(n); }
  void set(std::size_t n, Integer v) { coeffs_.at(n) = std::move(v); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool operator==(const UniSeries& other) const = default;

 private:
  std::vector<Integer> coeffs_;
};

UniSeries add(const UniSeries& a, const UniSeries& b);
UniSeries sub(const UniSeries& a, const UniSeries& b);
UniSeries mul(const UniSeries& a, const UniSeries& b);
UniSeries scale(const Integer& c, const UniSeries& a);
UniSeries point_x(const UniSeries& a);
// a / (1 - u); u must have zero constant term.
UniSeries geom_div(const UniSeries& a, const UniSeries& u);
// a / x, one order lower. Requires a[0] == 0.
UniSeries divide_by_x(const UniSeries& a);
// x * a, one order higher.
UniSeries multiply_by_x(const UniSeries& a);
UniSeries truncate(const UniSeries& a, std::size_t order);
Integer coeff(const UniSeries& a, long long n);

UniSeries operator+(const UniSeries& a, const UniSeries& b);
UniSeries operator-(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const Integer& c, const UniSeries& a);

// Bivariate series: for each n <= order a polynomial in y of degree <= ybound(n).
class BiSeries {
 public:
  BiSeries(std::size_t order, std::vector<std::size_t> ybounds);

  static BiSeries quad(std::size_t order);  // ybound(n) = n
  static BiSeries tri(std::size_t order);   // ybound(n) = max(3n-3, 0)
  static BiSeries with_bound(std::size_t order, const std::function<std::size_t(std::size_t)>& ybound);

  std::size_t order() const { return rows_.size() - 1; }
  std::size_t ybound(std::size_t n) const { return rows_.at(n).size() - 1; }
  const std::vector<std::size_t> ybounds() const;
  bool same_shape(const BiSeries& other) const;

  Integer coeff(long long n, long long p) const;
  void set(std::size_t n, std::size_t p, Integer v);
  const std::vector<Integer>& row(std::size_t n) const { return rows_.at(n); }

  // Univariate series [y^p] of this series.
  UniSeries column(std::size_t p) const;
  // Same coefficients under different y-bounds; throws IntegrityError if a
  // nonzero coefficient would be dropped.
  BiSeries rebound(const std::vector<std::size_t>& ybounds) const;

  bool operator==(const BiSeries& other) const = default;

 private:
  std::vector<std::vector<Integer>> rows_;
};

BiSeries add(const BiSeries& a, const BiSeries& b);
BiSeries sub(const BiSeries& a, const BiSeries& b);
// Product of two bivariate series; a term landing above the y-bound throws DomainError.
BiSeries mul(const BiSeries& a, const BiSeries& b);
// Product with a series in x only.
BiSeries mul(const BiSeries& a, const UniSeries& u);
BiSeries scale(const Integer& c, const BiSeries& a);
BiSeries point_x(const BiSeries& a);
BiSeries partial_y(const BiSeries& a);
BiSeries point_y(const BiSeries& a);
// Multiplication by x^dx y^dy, truncated in x; a term above the y-bound throws DomainError.
BiSeries shift(const BiSeries& a, std::size_t dx, std::size_t dy);
// Division by x; requires the x^0 row to vanish. Result order is one lower.
BiSeries divide_by_x(const BiSeries& a);
Integer coeff(const BiSeries& a, long long n, long long p);

void to_json(nlohmann::json& j, const UniSeries& s);
void from_json(const nlohmann::json& j, UniSeries& s);
void to_json(nlohmann::json& j, const BiSeries& s);
BiSeries bi_series_from_json(const nlohmann::json& j);

}  // namespace mappeel

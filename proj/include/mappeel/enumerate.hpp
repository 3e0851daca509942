#pragma once

#include <utility>
#include <vector>

#include "mappeel/count_table.hpp"
#include "mappeel/series.hpp"

namespace mappeel {

// Q_n for n <= N from the last-car recursion (Q_2 = 1). N >= 2.
UniSeries quad_counts(int N);
// T_n for n <= N from the triangulation recursion (T_2 = 1). N >= 2.
UniSeries tri_counts(int N);

// (C* - C) / (1 - C*/x) with C* = x C'. Input of order N + 1, result of order N.
UniSeries last_car_kernel(const UniSeries& counts);

// Q_n^(p) from the bivariate last-car equation, solved in increasing n.
BiSeries quad_boundary_table(int N);
// Q_n^(p) from Tutte's ladder Q^(p+1) = Q^(p) - sum_{a+b=p-1} Q^(a) Q^(b), seeded by 𝔔.
BiSeries quad_boundary_table_tutte(int N, const UniSeries& seed);

struct TriBoundaryTable {
  BiSeries table;
  // Cells where the equation gives no information, filled from the tree DP.
  std::vector<std::pair<int, int>> oracle_filled;
  // Cells fixed by convention (T_2 = 1).
  std::vector<std::pair<int, int>> seeded;
};
// T_n^(p) from the bivariate triangulation equation, p <= 3n - 3.
TriBoundaryTable tri_boundary_table(int N);

// A_n^(p,r) (Quad) / B_n^(p,r) (Tri) for 1 <= p <= pmax, 1 <= r <= rmax, 0 <= n <= N.
// Columns (p, r, n).
CountTable a_table(int pmax, int rmax, int N);
CountTable b_table(int pmax, int rmax, int N);

// Q_n^(p,q) for 1 <= n <= N and 1 <= p, q <= 2N. Columns (n, p, q).
CountTable quad_two_boundary(int N);
// T_n^(p,q) for 1 <= n <= N and 1 <= p, q <= 3N. Columns (n, p, q).
CountTable tri_two_boundary(int N);
Integer quad_two_boundary_cell(int n, int p, int q);
Integer tri_two_boundary_cell(int n, int p, int q);

}  // namespace mappeel

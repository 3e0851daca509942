#include "mappeel/enumerate.hpp"

#include <algorithm>

#include "mappeel/errors.hpp"
#include "mappeel/tree_counting.hpp"

namespace mappeel {

namespace {

// sum_{k=2}^{n-1} w(k) C_k C_{n+1-k}, pairing k with n+1-k to halve the products.
template <class Weight>
Integer convolution(const std::vector<Integer>& c, int n, Weight w) {
  Integer acc = 0;
  Integer prod;
  for (int k = 2; 2 * k <= n + 1; ++k) {
    const int j = n + 1 - k;
    unsigned long weight = w(k);
    if (j != k) weight += w(j);
    mpz_mul(prod.get_mpz_t(), c[static_cast<std::size_t>(k)].get_mpz_t(), c[static_cast<std::size_t>(j)].get_mpz_t());
    mpz_addmul_ui(acc.get_mpz_t(), prod.get_mpz_t(), weight);
  }
  return acc;
}

void require_order(int N, int min, const char* op) {
  if (N < min) throw UsageError(std::string(op) + ": N must be >= " + std::to_string(min));
}

}  // namespace

UniSeries quad_counts(int N) {
  require_order(N, 2, "quad_counts");
  std::vector<Integer> q(static_cast<std::size_t>(N) + 1);
  q[2] = 1;
  for (int n = 3; n <= N; ++n) {
    Integer s = convolution(q, n, [n](int k) { return static_cast<unsigned long>(k) * static_cast<unsigned long>(n + 1 - k); });
    s += Integer(4 * n - 10) * q[static_cast<std::size_t>(n) - 1];
    q[static_cast<std::size_t>(n)] = exact_divide(s, n);
  }
  return UniSeries(static_cast<std::size_t>(N), std::move(q));
}

UniSeries tri_counts(int N) {
  require_order(N, 2, "tri_counts");
  std::vector<Integer> t(static_cast<std::size_t>(N) + 1);
  t[2] = 1;
  for (int n = 3; n <= N; ++n) {
    Integer s = convolution(t, n, [n](int k) { return static_cast<unsigned long>(3 * k - 4) * static_cast<unsigned long>(n + 1 - k); });
    t[static_cast<std::size_t>(n)] = exact_divide(s, n - 2);
  }
  return UniSeries(static_cast<std::size_t>(N), std::move(t));
}

UniSeries last_car_kernel(const UniSeries& counts) {
  if (counts.order() < 1) throw UsageError("last_car_kernel: order must be >= 1");
  const std::size_t N = counts.order() - 1;
  const UniSeries pointed = point_x(counts);
  return geom_div(truncate(pointed - counts, N), divide_by_x(pointed));
}

namespace {

// Kernel coefficients K_0..K_j of a count sequence known up to index j:
// K_j = (j-1) C_j + sum_{i=1}^{j-2} (i+1) C_{i+1} K_{j-i}.
Integer kernel_step(const std::vector<Integer>& c, const std::vector<Integer>& k, int j) {
  Integer acc = Integer(j - 1) * c[static_cast<std::size_t>(j)];
  for (int i = 1; i <= j - 2; ++i) {
    const Integer& a = c[static_cast<std::size_t>(i) + 1];
    const Integer& b = k[static_cast<std::size_t>(j - i)];
    if (a != 0 && b != 0) acc += Integer(i + 1) * a * b;
  }
  return acc;
}

}  // namespace

BiSeries quad_boundary_table(int N) {
  require_order(N, 1, "quad_boundary_table");
  BiSeries t = BiSeries::quad(static_cast<std::size_t>(N));
  t.set(1, 0, 1);
  std::vector<Integer> q(static_cast<std::size_t>(N) + 1);  // [y^1] column
  std::vector<Integer> k(static_cast<std::size_t>(N) + 1);  // kernel
  for (int n = 2; n <= N; ++n) {
    // The right side at x^n only needs the kernel up to x^(n-1).
    k[static_cast<std::size_t>(n) - 1] = kernel_step(q, k, n - 1);
    for (int p = 1; p <= n; ++p) {
      Integer rhs = 0;
      for (int m = 1; m <= n - 1; ++m) {
        const Integer c = t.coeff(m, p - 1);
        if (c != 0 && k[static_cast<std::size_t>(n - m)] != 0) rhs += Integer(6 * m) * c * k[static_cast<std::size_t>(n - m)];
      }
      rhs += Integer(2 * (3 * n - p - 4)) * t.coeff(n - 1, p - 1);
      t.set(static_cast<std::size_t>(n), static_cast<std::size_t>(p), exact_divide(rhs, n));
    }
    q[static_cast<std::size_t>(n)] = t.coeff(n, 1);
  }
  return t;
}

BiSeries quad_boundary_table_tutte(int N, const UniSeries& seed) {
  require_order(N, 1, "quad_boundary_table_tutte");
  if (seed.order() != static_cast<std::size_t>(N)) throw UsageError("quad_boundary_table_tutte: seed order differs from N");
  const std::size_t order = static_cast<std::size_t>(N);
  std::vector<UniSeries> col;
  col.push_back(UniSeries::monomial(order, 1));
  col.push_back(seed);
  for (int p = 1; p + 1 <= N; ++p) {
    UniSeries next = col[static_cast<std::size_t>(p)];
    for (int a = 0; a <= p - 1; ++a) next = next - col[static_cast<std::size_t>(a)] * col[static_cast<std::size_t>(p - 1 - a)];
    col.push_back(std::move(next));
  }
  BiSeries t = BiSeries::quad(order);
  for (std::size_t p = 0; p < col.size(); ++p)
    for (std::size_t n = 0; n <= order; ++n) {
      const Integer& c = col[p][n];
      if (p <= n)
        t.set(n, p, c);
      else if (c != 0)
        throw IntegrityError("quad_boundary_table_tutte: nonzero Q_" + std::to_string(n) + "^(" + std::to_string(p) +
                             ") above the bound p <= n");
    }
  return t;
}

TriBoundaryTable tri_boundary_table(int N) {
  require_order(N, 1, "tri_boundary_table");
  TriBoundaryTable out{BiSeries::tri(static_cast<std::size_t>(N)), {}, {}};
  BiSeries& t = out.table;
  t.set(1, 0, 1);
  const TreeCountTable dp(Family::Tri, N);
  std::vector<Integer> c(static_cast<std::size_t>(N) + 1);  // [y^1] column
  std::vector<Integer> k(static_cast<std::size_t>(N) + 1);  // kernel K_T
  for (int n = 2; n <= N; ++n) {
    // p = 0: (6n - 6) T_n^(0) = 0.
    // p = 1: the kernel term 4 K_T[n] contains 4 (n-1) T_n^(1) itself; moving it left
    // leaves (2n - 4) T_n^(1) = 4 (K_T[n] - (n-1) T_n^(1)).
    const Integer rest = kernel_step(c, k, n);  // with c[n] still 0
    if (n == 2) {
      if (rest != 0) throw IntegrityError("tri_boundary_table: inconsistent seed cell (2,1)");
      t.set(2, 1, 1);
      out.seeded.emplace_back(2, 1);
    } else {
      t.set(static_cast<std::size_t>(n), 1, exact_divide(4 * rest, 2 * n - 4));
    }
    c[static_cast<std::size_t>(n)] = t.coeff(n, 1);
    k[static_cast<std::size_t>(n)] = kernel_step(c, k, n);
    for (int p = 2; p <= 3 * n - 3; ++p) {
      Integer rhs = 0;
      for (int m = 1; m <= n - 1; ++m) {
        const Integer a = t.coeff(m, p - 1);
        const int j = n + 1 - m;
        if (a != 0 && k[static_cast<std::size_t>(j)] != 0) rhs += Integer(4 * m) * a * k[static_cast<std::size_t>(j)];
      }
      rhs += Integer(4 * n - 2 * p - 2) * t.coeff(n, p - 1);
      const int lead = 6 * n - 2 * p - 6;
      if (lead != 0) {
        t.set(static_cast<std::size_t>(n), static_cast<std::size_t>(p), exact_divide(rhs, lead));
        continue;
      }
      // The equation reduces to 0 = rhs here and says nothing about the cell.
      if (rhs != 0)
        throw IntegrityError("tri_boundary_table: degenerate cell (" + std::to_string(n) + "," + std::to_string(p) +
                             ") has nonzero constraint " + rhs.get_str());
      t.set(static_cast<std::size_t>(n), static_cast<std::size_t>(p), dp.count(p, n));
      out.oracle_filled.emplace_back(n, p);
    }
  }
  return out;
}

namespace {

// Shared A/B recursion. `one` must have order >= N + 1.
CountTable marked_recursion(int pmax, int rmax, int N, const BiSeries& one) {
  if (pmax < 1 || rmax < 1 || N < 0) throw UsageError("a_table/b_table: need pmax >= 1, rmax >= 1, N >= 0");
  const auto P = static_cast<std::size_t>(pmax);
  const auto R = static_cast<std::size_t>(rmax);
  const auto M = static_cast<std::size_t>(N);
  // a[r][p][n], p indexed from 1.
  std::vector<std::vector<std::vector<Integer>>> a(R + 1, std::vector<std::vector<Integer>>(P + 1, std::vector<Integer>(M + 1)));
  for (std::size_t p = 1; p <= P; ++p)
    for (std::size_t n = 0; n <= M; ++n)
      a[0][p][n] = Integer(static_cast<unsigned long>(n + 1)) * one.coeff(static_cast<long long>(n) + 1, static_cast<long long>(p));
  for (std::size_t r = 1; r <= R; ++r)
    for (std::size_t n = 0; n <= M; ++n)
      for (std::size_t p = 1; p <= P; ++p) {
        if (n == 0) {
          a[r][p][0] = r >= p ? 1 : 0;
          continue;
        }
        Integer v = a[r - 1][std::max<std::size_t>(p - 1, 1)][n];
        for (std::size_t k = 0; k < n; ++k) {
          const Integer& f = a[r - 1][1][k];
          // For r = 1, k = 0 this would read the cell being computed; its factor is 0.
          if (f != 0) v += f * a[1][p][n - k];
        }
        a[r][p][n] = std::move(v);
      }
  CountTable t({"p", "r", "n"});
  for (std::size_t p = 1; p <= P; ++p)
    for (std::size_t r = 1; r <= R; ++r)
      for (std::size_t n = 0; n <= M; ++n)
        t.set({static_cast<int>(p), static_cast<int>(r), static_cast<int>(n)}, a[r][p][n]);
  return t;
}

}  // namespace

CountTable a_table(int pmax, int rmax, int N) {
  return marked_recursion(pmax, rmax, N, quad_boundary_table(std::max(N, 0) + 1));
}

CountTable b_table(int pmax, int rmax, int N) {
  return marked_recursion(pmax, rmax, N, tri_boundary_table(std::max(N, 0) + 1).table);
}

namespace {

Integer quad_two_cell(const CountTable& a, const BiSeries& q, int n, int p, int qq) {
  Integer s = 0;
  for (int r = 1; r <= n; ++r)
    for (int k = 0; k <= n - r - qq; ++k) {
      const Integer x = a.get({p, r, k});
      if (x != 0) s += x * q.coeff(n - k, r + qq - 1);
    }
  return s;
}

Integer tri_two_cell(const CountTable& b, const BiSeries& t, int n, int p, int q) {
  Integer s = 0;
  for (int r = 1; r <= 2 * n - q; ++r) {
    const int kmax = std::min(n, n - (r + q) / 2 + 1);
    for (int k = 0; k <= kmax; ++k) {
      const Integer x = b.get({p, r, k});
      if (x != 0) s += x * t.coeff(n - k, r + q - 2);
    }
  }
  return s;
}

}  // namespace

CountTable quad_two_boundary(int N) {
  require_order(N, 1, "quad_two_boundary");
  const CountTable a = a_table(2 * N, N, N);
  const BiSeries q = quad_boundary_table(N);
  CountTable out({"n", "p", "q"});
  for (int n = 1; n <= N; ++n)
    for (int p = 1; p <= 2 * N; ++p)
      for (int qq = 1; qq <= 2 * N; ++qq) out.set({n, p, qq}, quad_two_cell(a, q, n, p, qq));
  return out;
}

CountTable tri_two_boundary(int N) {
  require_order(N, 1, "tri_two_boundary");
  const CountTable b = b_table(3 * N, std::max(2 * N - 1, 1), N);
  const BiSeries t = tri_boundary_table(N).table;
  CountTable out({"n", "p", "q"});
  for (int n = 1; n <= N; ++n)
    for (int p = 1; p <= 3 * N; ++p)
      for (int q = 1; q <= 3 * N; ++q) out.set({n, p, q}, tri_two_cell(b, t, n, p, q));
  return out;
}

Integer quad_two_boundary_cell(int n, int p, int q) {
  if (n < 1 || p < 1 || q < 1) throw UsageError("quad_two_boundary_cell: n, p, q must be >= 1");
  return quad_two_cell(a_table(p, n, n), quad_boundary_table(n), n, p, q);
}

Integer tri_two_boundary_cell(int n, int p, int q) {
  if (n < 1 || p < 1 || q < 1) throw UsageError("tri_two_boundary_cell: n, p, q must be >= 1");
  return tri_two_cell(b_table(p, std::max(2 * n - 1, 1), n), tri_boundary_table(n).table, n, p, q);
}

}  // namespace mappeel

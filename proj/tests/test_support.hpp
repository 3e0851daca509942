#pragma once

#include <random>
#include <string>
#include <vector>

#include "mappeel/integer.hpp"
#include "mappeel/labeled_tree.hpp"
#include "mappeel/series.hpp"
#include "mappeel/tree_counting.hpp"

namespace test_support {

using mappeel::Integer;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer double_factorial(unsigned long n) {
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

// Rooted quadrangulations with n vertices (n - 2 faces): 2 * 3^f (2f)! / (f! (f + 2)!).
inline Integer quad_closed_form(unsigned long n) {
  const unsigned long f = n - 2;
  Integer pow3;
  mpz_ui_pow_ui(pow3.get_mpz_t(), 3, f);
  return 2 * pow3 * factorial(2 * f) / (factorial(f) * factorial(f + 2));
}

// Rooted triangulations (loops and multiple edges allowed) with n vertices, m = n - 2:
// 2^(2m+1) (3m)!! / ((m + 2)! m!!).
inline Integer tri_closed_form(unsigned long n) {
  const unsigned long m = n - 2;
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 2 * m + 1);
  return pow2 * double_factorial(3 * m) / (factorial(m + 2) * double_factorial(m));
}

inline mappeel::UniSeries random_series(std::size_t order, std::mt19937& rng, int lo = -20, int hi = 20) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Integer> c(order + 1);
  for (auto& x : c) x = d(rng);
  return mappeel::UniSeries(order, std::move(c));
}

// Uniform plain peeling tree with root label p and n zero-leaves, drawn with the DP counts.
class TreeSampler {
 public:
  TreeSampler(mappeel::Family family, int max_n, unsigned long seed)
      : family_(family), counts_(family, max_n), rand_(gmp_randinit_default) {
    rand_.seed(seed);
  }

  mappeel::LabeledTree sample(int p, int n) {
    builder_.clear();
    draw(p, n);
    return builder_.build();
  }

 private:
  void draw(int p, int n) {
    Integer r = rand_.get_z_range(counts_.count(p, n));
    if (p == 0 && n == 1) {
      builder_.push(0, mappeel::MarkKind::None, 0);
      return;
    }
    const Integer& up = counts_.count(p + 1, n);
    if (r < up) {
      builder_.push(p, mappeel::MarkKind::None, 1);
      draw(p + 1, n);
      return;
    }
    r -= up;
    const int d = mappeel::split_offset(family_);
    for (int p1 = 0; p1 <= p - d; ++p1)
      for (int n1 = 1; n1 < n; ++n1) {
        const Integer w = counts_.count(p1, n1) * counts_.count(p - d - p1, n - n1);
        if (r < w) {
          builder_.push(p, mappeel::MarkKind::None, 2);
          draw(p1, n1);
          draw(p - d - p1, n - n1);
          return;
        }
        r -= w;
      }
  }

  mappeel::Family family_;
  mappeel::TreeCountTable counts_;
  gmp_randclass rand_;
  mappeel::TreeBuilder builder_;
};

}  // namespace test_support

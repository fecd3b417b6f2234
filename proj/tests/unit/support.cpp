#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "equik/normal_forms.hpp"

namespace equik::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  }
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    u.add_row_multiple(i, j, Integer(uniform(rng, -2, 2)));
  }
  return u;
}

FgAbelianGroup random_group(Rng& rng, std::size_t max_rank, long max_torsion, std::size_t max_factors) {
  const auto rank = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_rank)));
  const auto factors = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_factors)));
  IntVector orders;
  for (std::size_t i = 0; i < factors; ++i) orders.emplace_back(uniform(rng, 2, max_torsion));
  return FgAbelianGroup::from_cyclic_factors(rank, orders);
}

Presentation scrambled_presentation(Rng& rng, const FgAbelianGroup& g) {
  const std::size_t t = g.torsion.size();
  const std::size_t gens = g.free_rank + t;
  IntMatrix d(t, gens);
  for (std::size_t i = 0; i < t; ++i) d(i, i) = g.torsion[i];
  return {gens, random_unimodular(rng, t) * d * random_unimodular(rng, gens)};
}

Integer bareiss_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(m(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t bareiss_rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(rank, c) - m(i, c) * m(rank, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

namespace {

// Calls f on every increasing k-subset of {0..n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
      }
      g = gcd(g, bareiss_determinant(sub));
    });
  });
  return g;
}

FgAbelianGroup tensor_oracle(const Presentation& a, const Presentation& b) {
  const IntMatrix rel = vstack(kronecker(a.relations, IntMatrix::identity(b.generators)),
                               kronecker(IntMatrix::identity(a.generators), b.relations));
  return normalize({a.generators * b.generators, rel});
}

FgAbelianGroup tor_oracle(const Presentation& a, const Presentation& b) {
  const std::size_t ga = a.generators, gb = b.generators;
  const std::size_t ra = a.relations.rows(), rb = b.relations.rows();
  // C_2 = P1 (x) Q1, C_1 = P0 (x) Q1 + P1 (x) Q0, C_0 = P0 (x) Q0.
  IntMatrix d2(ra * rb, ga * rb + ra * gb);
  const IntMatrix left = kronecker(a.relations, IntMatrix::identity(rb));
  const IntMatrix right = kronecker(IntMatrix::identity(ra), b.relations);
  for (std::size_t i = 0; i < ra * rb; ++i) {
    for (std::size_t j = 0; j < ga * rb; ++j) d2(i, j) = left(i, j);
    for (std::size_t j = 0; j < ra * gb; ++j) d2(i, ga * rb + j) = -right(i, j);
  }
  const IntMatrix d1 = vstack(kronecker(IntMatrix::identity(ga), b.relations),
                              kronecker(a.relations, IntMatrix::identity(gb)));
  const IntMatrix cycles = kernel_basis(d1);
  Presentation h1{cycles.rows(), IntMatrix(0, cycles.rows())};
  for (std::size_t i = 0; i < d2.rows(); ++i) {
    auto coords = lattice_coordinates(cycles, d2.row(i));
    if (!coords) throw std::logic_error("boundary is not a cycle");
    h1.relations.append_row(*coords);
  }
  return normalize(h1);
}

}  // namespace equik::testing

#include "equik/normal_forms.hpp"

#include "equik/error.hpp"

namespace equik {

namespace {

// Diagonalizes `d` in place. When `u` / `v` are non-null the row and column
// operations are mirrored into them so that u * A * v == d holds throughout.
void diagonalize(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  const std::size_t steps = std::min(m, n);
  Integer q;

  auto row_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    d.add_row_multiple(target, source, f);
    if (u) u->add_row_multiple(target, source, f);
  };
  auto col_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    d.add_col_multiple(target, source, f);
    if (v) v->add_col_multiple(target, source, f);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block, first in row-major
      // order on ties.
      std::size_t pi = m;
      std::size_t pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          const Integer& x = d(i, j);
          if (sgn(x) == 0) continue;
          if (pi == m || mpz_cmpabs(x.get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) return;

      d.swap_rows(t, pi);
      if (u) u->swap_rows(t, pi);
      d.swap_cols(t, pj);
      if (v) v->swap_cols(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (sgn(d(i, t)) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (sgn(d(t, j)) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Enforce d_t | every trailing entry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(d(i, j)) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      row_add(t, bad, Integer(1));
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

}  // namespace

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (sgn(d(i, i)) != 0) ++r;
  }
  return r;
}

IntVector SnfDecomposition::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (sgn(d(i, i)) != 0) out.push_back(d(i, i));
  }
  return out;
}

std::size_t HnfResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nonzero = false;
    for (const auto& x : h.row(i)) {
      if (sgn(x) != 0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) break;
    ++r;
  }
  return r;
}

SnfDecomposition snf(const IntMatrix& a) {
  SnfDecomposition out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  diagonalize(out.d, &out.u, &out.v);
  return out;
}

IntVector smith_invariants(const IntMatrix& a) {
  IntMatrix d = a;
  diagonalize(d, nullptr, nullptr);
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (sgn(d(i, i)) != 0) out.push_back(d(i, i));
  }
  return out;
}

namespace {

void hermite_reduce(IntMatrix& h, IntMatrix* transform) {
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  Integer q;
  auto row_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    h.add_row_multiple(target, source, f);
    if (transform) transform->add_row_multiple(target, source, f);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == m || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == m) break;
      h.swap_rows(r, best);
      if (transform) transform->swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        row_add(i, r, -q);
        if (sgn(h(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      if (transform) transform->negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      row_add(i, r, -q);
    }
    ++r;
  }
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  HnfResult out{a, IntMatrix::identity(a.rows())};
  hermite_reduce(out.h, &out.transform);
  return out;
}

std::size_t matrix_rank(const IntMatrix& a) {
  IntMatrix h = a;
  hermite_reduce(h, nullptr);
  return HnfResult{std::move(h), {}}.rank();
}

IntMatrix hnf_basis(const IntMatrix& a) {
  IntMatrix h = a;
  hermite_reduce(h, nullptr);
  const std::size_t r = HnfResult{h, {}}.rank();
  IntMatrix out(0, a.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(h.row(i));
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  HnfResult res = hnf(a);
  const std::size_t r = res.rank();
  IntMatrix ker(0, a.rows());
  for (std::size_t i = r; i < a.rows(); ++i) ker.append_row(res.transform.row(i));
  return hnf_basis(ker);
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  const IntVector factors = smith_invariants(a);
  CokernelInvariants out;
  out.free_rank = a.cols() - factors.size();
  for (const auto& f : factors) {
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, std::span<const Integer> v) {
  if (v.size() != basis.cols()) throw InvalidArgument("vector length does not match lattice ambient rank");
  IntVector rest(v.begin(), v.end());
  IntVector coords(basis.rows());
  std::size_t col = 0;
  Integer q;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    while (col < basis.cols() && sgn(basis(i, col)) == 0) {
      if (sgn(rest[col]) != 0) return std::nullopt;
      ++col;
    }
    if (col == basis.cols()) break;
    if (!mpz_divisible_p(rest[col].get_mpz_t(), basis(i, col).get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), rest[col].get_mpz_t(), basis(i, col).get_mpz_t());
    coords[i] = q;
    if (sgn(q) != 0) {
      for (std::size_t j = col; j < basis.cols(); ++j) rest[j] -= q * basis(i, j);
    }
    ++col;
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool lattice_contains(const IntMatrix& basis, std::span<const Integer> v) {
  return lattice_coordinates(basis, v).has_value();
}

bool lattice_subset(const IntMatrix& sub_basis, const IntMatrix& basis) {
  for (std::size_t i = 0; i < sub_basis.rows(); ++i) {
    if (!lattice_contains(basis, sub_basis.row(i))) return false;
  }
  return true;
}

std::optional<IntVector> solve_left(const IntMatrix& a, std::span<const Integer> v) {
  HnfResult res = hnf(a);
  const std::size_t r = res.rank();
  IntMatrix basis(0, a.cols());
  for (std::size_t i = 0; i < r; ++i) basis.append_row(res.h.row(i));
  auto coords = lattice_coordinates(basis, v);
  if (!coords) return std::nullopt;
  IntVector x(a.rows());
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn((*coords)[i]) == 0) continue;
    for (std::size_t j = 0; j < a.rows(); ++j) x[j] += (*coords)[i] * res.transform(i, j);
  }
  return x;
}

}  // namespace equik

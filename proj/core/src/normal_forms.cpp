#include "kustab/normal_forms.hpp"

#include <algorithm>
#include <utility>

#include "kustab/error.hpp"

namespace kustab {
namespace {

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += factor * a(src, j);
}

void add_col_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += factor * a(i, src);
}

void negate_row(IntMatrix& a, std::size_t i) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with == k) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat determinant(const RatMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<Int> smith_invariants(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Int> out;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m;
      std::size_t pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return out;
      a.swap_rows(t, pi);
      a.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        add_row_multiple(a, i, t, -tdiv(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        add_col_multiple(a, j, t, -tdiv(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      add_row_multiple(a, t, bad_row, Int(1));
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

IntMatrix row_hermite(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    bool pivot = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i)
        if (a(i, col) != 0 && (best == m || abs(a(i, col)) < abs(a(best, col)))) best = i;
      if (best == m) break;
      pivot = true;
      a.swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (a(i, col) == 0) continue;
        add_row_multiple(a, i, row, -tdiv(a(i, col), a(row, col)));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!pivot) continue;
    if (a(row, col) < 0) negate_row(a, row);
    for (std::size_t i = 0; i < row; ++i) add_row_multiple(a, i, row, -fdiv(a(i, col), a(row, col)));
    ++row;
  }
  IntMatrix out(row, n);
  for (std::size_t i = 0; i < row; ++i) out.set_row(i, a.row(i));
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  std::size_t p = 0;
  for (std::size_t r = 0; r < a.rows() && p < n; ++r) {
    bool pivot = false;
    while (true) {
      std::size_t best = n;
      for (std::size_t j = p; j < n; ++j)
        if (a(r, j) != 0 && (best == n || abs(a(r, j)) < abs(a(r, best)))) best = j;
      if (best == n) break;
      pivot = true;
      a.swap_cols(p, best);
      u.swap_cols(p, best);
      bool clean = true;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (a(r, j) == 0) continue;
        const Int q = -tdiv(a(r, j), a(r, p));
        add_col_multiple(a, j, p, q);
        add_col_multiple(u, j, p, q);
        if (a(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (pivot) ++p;
  }
  IntMatrix basis(n - p, n);
  for (std::size_t k = p; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - p, i) = u(i, k);
  return row_hermite(std::move(basis));
}

IntMatrix unimodular_to_first_axis(const IntVector& v) {
  const std::size_t n = v.size();
  IntMatrix col(n, 1);
  for (std::size_t i = 0; i < n; ++i) col(i, 0) = v[i];
  IntMatrix u = IntMatrix::identity(n);
  while (true) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (col(i, 0) != 0 && (best == n || abs(col(i, 0)) < abs(col(best, 0)))) best = i;
    if (best == n) throw InputError("unimodular completion of the zero vector");
    col.swap_rows(0, best);
    u.swap_rows(0, best);
    bool clean = true;
    for (std::size_t i = 1; i < n; ++i) {
      if (col(i, 0) == 0) continue;
      const Int q = -tdiv(col(i, 0), col(0, 0));
      add_row_multiple(col, i, 0, q);
      add_row_multiple(u, i, 0, q);
      if (col(i, 0) != 0) clean = false;
    }
    if (clean) break;
  }
  if (col(0, 0) < 0) negate_row(u, 0);
  return u;
}

std::optional<IntVector> solve_unit_pairing(const IntVector& a) {
  if (content(a) != 1) return std::nullopt;
  const IntMatrix u = unimodular_to_first_axis(a);
  return u.row_vector(0);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw InputError("singular matrix has no inverse");
    a.swap_rows(p, k);
    inv.swap_rows(p, k);
    const Rat pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Signature signature(const RatMatrix& m) {
  if (!m.symmetric()) throw InputError("signature of a non-symmetric matrix");
  RatMatrix a = m;
  Signature sig;
  while (a.rows() > 0) {
    const std::size_t n = a.rows();
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!a(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      // Zero diagonal: e_i <- e_i + e_j makes a nonzero diagonal entry 2 a_ij.
      std::size_t oi = n, oj = n;
      for (std::size_t i = 0; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += n;
        break;
      }
      for (std::size_t k = 0; k < n; ++k) a(oi, k) += a(oj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, oi) += a(k, oj);
      p = oi;
    }
    const Rat pivot = a(p, p);
    (pivot.sign() > 0 ? sig.positive : sig.negative) += 1;
    RatMatrix next(n - 1, n - 1);
    for (std::size_t i = 0, ni = 0; i < n; ++i) {
      if (i == p) continue;
      for (std::size_t j = 0, nj = 0; j < n; ++j) {
        if (j == p) continue;
        next(ni, nj) = a(i, j) - a(i, p) * a(p, j) / pivot;
        ++nj;
      }
      ++ni;
    }
    a = std::move(next);
  }
  return sig;
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace kustab

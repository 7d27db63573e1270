// Copyright 2026 The lapdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lapdual/error.hpp"
#include "lapdual/matrix.hpp"

namespace lapdual {

using Rational = boost::multiprecision::cpp_rational;

/// Square integer matrix with determinant +1 or -1.
class UnimodularWitness {
 public:
  UnimodularWitness() = default;

  /// Checks the determinant; throws NotUnimodular otherwise.
  explicit UnimodularWitness(IntMatrix u);

  static UnimodularWitness identity(std::size_t n) {
    UnimodularWitness w;
    w.u_ = IntMatrix::identity(n);
    return w;
  }

  /// Skips the determinant check; callers must already know `u` is unimodular.
  static UnimodularWitness trusted(IntMatrix u) {
    UnimodularWitness w;
    w.u_ = std::move(u);
    return w;
  }

  const IntMatrix& matrix() const noexcept { return u_; }
  std::size_t size() const noexcept { return u_.rows(); }

 private:
  IntMatrix u_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer det_bareiss(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline UnimodularWitness::UnimodularWitness(IntMatrix u) : u_(std::move(u)) {
  if (!u_.is_square()) throw Error(ErrorCode::NotUnimodular, "witness is not square");
  Integer d = det_bareiss(u_);
  if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "witness determinant is " + d.str());
}

struct HermiteResult {
  IntMatrix h;
  UnimodularWitness u;  // u * a == h
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: echelon with pivots moving right going
/// down, positive pivots, entries above each pivot reduced into [0, pivot),
/// zero rows at the bottom. The form is canonical for the row lattice.
inline HermiteResult hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t r = a.rows(), c = a.cols();
  std::size_t p = 0;
  for (std::size_t col = 0; col < c && p < r; ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = p; i < r; ++i)
        if (h(i, col) != 0 && (!best || abs(h(i, col)) < abs(h(*best, col)))) best = i;
      if (!best) break;
      h.swap_rows(p, *best);
      u.swap_rows(p, *best);
      bool clean = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(p, col);
        h.add_row(i, p, -q);
        u.add_row(i, p, -q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(p, col) == 0) continue;
    if (h(p, col) < 0) {
      h.negate_row(p);
      u.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = floor_div(h(i, col), h(p, col));
      h.add_row(i, p, -q);
      u.add_row(i, p, -q);
    }
    ++p;
  }
  return {std::move(h), UnimodularWitness::trusted(std::move(u)), p};
}

inline std::size_t rank(const IntMatrix& a) { return hermite_normal_form(a).rank; }

struct SnfResult {
  std::vector<Integer> diag;  // length min(rows, cols); d1 | d2 | ...
  UnimodularWitness left;     // left * a * right == diag-padded matrix
  UnimodularWitness right;

  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
  }
};

inline SnfResult smith_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix left = IntMatrix::identity(r);
  IntMatrix right = IntMatrix::identity(c);
  const std::size_t n = std::min(r, c);

  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (m(i, j) != 0 && (!piv || abs(m(i, j)) < abs(m(piv->first, piv->second)))) piv = {i, j};
    if (!piv) break;
    m.swap_rows(t, piv->first);
    left.swap_rows(t, piv->first);
    m.swap_cols(t, piv->second);
    right.swap_cols(t, piv->second);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t) == 0) continue;
        Integer q = m(i, t) / m(t, t);
        m.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j) == 0) continue;
        Integer q = m(t, j) / m(t, t);
        m.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived; move the smallest one onto the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (m(i, t) != 0 && abs(m(i, t)) < abs(m(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (m(t, j) != 0 && abs(m(t, j)) < abs(m(bi, bj))) bi = t, bj = j;
        if (bi != t) {
          m.swap_rows(t, bi);
          left.swap_rows(t, bi);
        }
        if (bj != t) {
          m.swap_cols(t, bj);
          right.swap_cols(t, bj);
        }
        continue;
      }
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < r && !bad_row; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      m.add_row(t, *bad_row, 1);
      left.add_row(t, *bad_row, 1);
    }
    if (m(t, t) < 0) {
      m.negate_row(t);
      left.negate_row(t);
    }
  }

  SnfResult res{std::vector<Integer>(n), UnimodularWitness::trusted(std::move(left)),
                UnimodularWitness::trusted(std::move(right))};
  for (std::size_t i = 0; i < n; ++i) res.diag[i] = m(i, i);
  return res;
}

/// Exact inverse of a unimodular matrix.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotUnimodular, "matrix is not square");
  Integer d = det_bareiss(a);
  if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "determinant is " + d.str());
  // The HNF of a unimodular matrix is the identity, so the transform is the inverse.
  return hermite_normal_form(a).u.matrix();
}

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix, by congruence diagonalization
/// over the rationals.
inline Inertia inertia(const IntMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "inertia requires a symmetric matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));

  Inertia res;
  std::size_t k = 0;
  while (k < n) {
    std::optional<std::size_t> piv;
    for (std::size_t i = k; i < n; ++i)
      if (m[i][i] != 0) {
        piv = i;
        break;
      }
    if (!piv) {
      // Zero diagonal: a nonzero off-diagonal entry gives a nonzero diagonal
      // after the congruence row_i += row_j, col_i += col_j.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m[i][j] != 0) {
            off = {i, j};
            break;
          }
      if (!off) break;
      auto [i, j] = *off;
      for (std::size_t t = 0; t < n; ++t) m[i][t] += m[j][t];
      for (std::size_t t = 0; t < n; ++t) m[t][i] += m[t][j];
      piv = i;
    }
    std::swap(m[k], m[*piv]);
    for (auto& row : m) std::swap(row[k], row[*piv]);
    const Rational d = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / d;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) m[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i) m[i][k] = 0;
    if (d > 0) ++res.positive;
    else ++res.negative;
    ++k;
  }
  res.zero = n - res.positive - res.negative;
  return res;
}

}  // namespace lapdual

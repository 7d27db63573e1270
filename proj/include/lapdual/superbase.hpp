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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "lapdual/error.hpp"
#include "lapdual/graph.hpp"
#include "lapdual/laplacian.hpp"
#include "lapdual/matrix.hpp"
#include "lapdual/normal_form.hpp"

namespace lapdual {

// ---------------------------------------------------------------------------
// Recovering a directed graph from a matrix whose Gram has small trace.

struct RecoveredGraph {
  MultiGraph graph;
  Orientation orientation;
};

struct CenterViolation {
  ErrorCode code = ErrorCode::TraceTooLarge;
  std::size_t column = 0;  // first column of c*a that is not -1/+1 shaped
  Integer trace = 0;
  Integer bound = 0;
};

using CenterOutcome = std::variant<RecoveredGraph, CenterViolation>;

/// Reads c*a as an incidence matrix: one vertex per row, one edge per column
/// (tail at the -1, head at the +1). Zero columns become loops at vertex 0.
inline CenterOutcome lemma_center_recover(const IntMatrix& a, const UnimodularWitness& c) {
  if (c.size() != a.rows()) throw Error(ErrorCode::ShapeMismatch, "witness order differs from row count");
  IntMatrix ca = c.matrix() * a;
  IntMatrix b = ca * ca.transpose();
  for (const auto& s : row_sums(b))
    if (s != 0) throw Error(ErrorCode::RowSumNonzero, "c*a*a^T*c^T has a nonzero row sum");

  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < ca.cols(); ++j) {
    for (std::size_t i = 0; i < ca.rows(); ++i)
      if (ca(i, j) != 0) {
        ++nonzero;
        break;
      }
  }
  const Integer tr = b.trace();
  const Integer bound = 2 * Integer(nonzero);

  std::vector<Edge> edges;
  std::vector<bool> reversed;
  std::size_t bad = ca.cols();
  for (std::size_t j = 0; j < ca.cols() && bad == ca.cols(); ++j) {
    std::size_t tail = ca.rows(), head = ca.rows(), others = 0;
    for (std::size_t i = 0; i < ca.rows(); ++i) {
      const Integer& x = ca(i, j);
      if (x == -1 && tail == ca.rows()) tail = i;
      else if (x == 1 && head == ca.rows()) head = i;
      else if (x != 0) ++others;
    }
    const bool zero = tail == ca.rows() && head == ca.rows() && others == 0;
    if (zero) {
      edges.push_back({0, 0});
      reversed.push_back(false);
    } else if (tail < ca.rows() && head < ca.rows() && others == 0) {
      edges.push_back({std::min(tail, head), std::max(tail, head)});
      reversed.push_back(tail > head);
    } else {
      bad = j;
    }
  }
  if (tr > bound || bad != ca.cols()) {
    CenterViolation v;
    v.code = ErrorCode::TraceTooLarge;
    v.column = bad;
    v.trace = tr;
    v.bound = bound;
    return v;
  }
  const std::size_t n = std::max<std::size_t>(ca.rows(), 1);
  return RecoveredGraph{MultiGraph(n, std::move(edges), "recovered"), Orientation(std::move(reversed))};
}

inline RecoveredGraph lemma_center_recover_or_throw(const IntMatrix& a, const UnimodularWitness& c) {
  auto out = lemma_center_recover(a, c);
  if (auto* v = std::get_if<CenterViolation>(&out))
    throw Error(ErrorCode::TraceTooLarge, "trace " + v->trace.str() + " exceeds " + v->bound.str() +
                                              "; column " + std::to_string(v->column) + " is not an edge");
  return std::get<RecoveredGraph>(std::move(out));
}

// ---------------------------------------------------------------------------
// Superbase descent.

/// v_a += q v_b and v_c -= q v_b: keeps the rows summing to zero.
struct SuperbaseMove {
  std::size_t a = 0, b = 0, c = 0;
  Integer q = 0;
  friend bool operator==(const SuperbaseMove&, const SuperbaseMove&) = default;
};

inline void apply_superbase_move(IntMatrix& f_hat, const SuperbaseMove& mv) {
  f_hat.add_row(mv.a, mv.b, mv.q);
  f_hat.add_row(mv.c, mv.b, -mv.q);
}

/// T with T * f_hat equal to the moved superbase.
inline IntMatrix superbase_move_matrix(std::size_t rows, const SuperbaseMove& mv) {
  IntMatrix t = IntMatrix::identity(rows);
  t(mv.a, mv.b) += mv.q;
  t(mv.c, mv.b) -= mv.q;
  return t;
}

struct SuperbaseState {
  IntMatrix f_hat;
  IntMatrix gram;
  Integer trace = 0;
  /// Moves applied to the superbase of `start_forest`, in order.
  std::vector<SuperbaseMove> move_log;
  ForestCertificate start_forest;
  Integer target = 0;  // 2(m - i)
  bool reached_target = false;
  bool budget_exhausted = false;
  std::uint64_t steps = 0;
  std::size_t restarts = 0;
};

namespace detail {

inline void refresh(SuperbaseState& s) {
  s.gram = s.f_hat * s.f_hat.transpose();
  s.trace = s.gram.trace();
}

inline SuperbaseState start_state(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                                  const ReductionSpec& spec) {
  SuperbaseState s;
  s.start_forest = f;
  s.f_hat = superbase_matrix(g, o, f, spec);
  refresh(s);
  return s;
}

/// Steepest descent; the lowest (a, b, c) wins ties. Returns false when the
/// budget ran out first.
inline bool descend(SuperbaseState& s, std::uint64_t budget) {
  const std::size_t r = s.f_hat.rows();
  while (true) {
    Integer best = 0;
    SuperbaseMove mv;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        if (b == a) continue;
        const Integer& gbb = s.gram(b, b);
        if (gbb == 0) continue;
        for (std::size_t c = 0; c < r; ++c) {
          if (c == a || c == b) continue;
          if (++s.steps > budget) return false;
          // Trace change is 2 q^2 g_bb + 2 q (g_ab - g_cb).
          Integer d = s.gram(a, b) - s.gram(c, b);
          Integer q = -nearest_div(d, 2 * gbb);
          if (q == 0) continue;
          Integer delta = 2 * q * q * gbb + 2 * q * d;
          if (delta < best) {
            best = delta;
            mv = {a, b, c, q};
          }
        }
      }
    if (best >= 0) return true;
    apply_superbase_move(s.f_hat, mv);
    s.move_log.push_back(mv);
    refresh(s);
  }
}

inline ForestCertificate random_forest(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  DisjointSets ds(g.num_vertices());
  std::vector<EdgeId> forest;
  for (EdgeId e : order)
    if (ds.unite(g.edge(e).u, g.edge(e).v)) forest.push_back(e);
  return make_forest_certificate(g, std::move(forest));
}

}  // namespace detail

/// Searches for a superbase of the flow lattice with trace 2(m - i). Restart
/// 0 descends from the given forest; later restarts alternate between a
/// fresh random forest and a random kick of the best state so far.
inline SuperbaseState superbase_trace_minimize(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                                               const ReductionSpec& spec, std::uint64_t budget, std::uint64_t seed) {
  check_forest(g, f);
  const auto classes = classify_edges(g);
  const Integer target = 2 * Integer(g.num_edges() - classes.isthmuses.size());
  std::mt19937_64 rng(seed);
  std::uint64_t used = 0;

  SuperbaseState best;
  bool have_best = false;
  bool exhausted = false;
  for (std::size_t restart = 0; !exhausted; ++restart) {
    SuperbaseState s;
    if (restart == 0) {
      s = detail::start_state(g, o, f, spec);
    } else if (restart % 2 == 1 || best.f_hat.rows() < 3) {
      s = detail::start_state(g, o, detail::random_forest(g, rng), spec);
    } else {
      s = best;
      const std::size_t r = s.f_hat.rows();
      for (int k = 0; k < 3; ++k) {
        std::size_t a = rng() % r, b = rng() % r, c = rng() % r;
        if (a == b || b == c || a == c) continue;
        SuperbaseMove mv{a, b, c, (rng() & 1) ? Integer(1) : Integer(-1)};
        apply_superbase_move(s.f_hat, mv);
        s.move_log.push_back(mv);
      }
      detail::refresh(s);
    }
    s.steps = 0;
    exhausted = !detail::descend(s, budget - used);
    used += std::min(s.steps, budget - used);
    if (!have_best || s.trace < best.trace) {
      best = std::move(s);
      have_best = true;
    }
    best.restarts = restart;
    if (best.trace <= target) break;
    if (used >= budget) exhausted = true;
  }
  best.steps = used;
  best.target = target;
  best.reached_target = best.trace == target;
  best.budget_exhausted = !best.reached_target && exhausted;
  return best;
}

/// U with rows 1.. of f_hat equal to U * F(M). F has -I' on the cotree
/// columns, so U is read off those columns.
inline UnimodularWitness superbase_witness(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                                           const ReductionSpec& spec, const IntMatrix& f_hat) {
  IntMatrix flow = flow_matrix(g, o, f, spec);
  const std::size_t k = flow.rows();
  if (f_hat.rows() != k + 1 || f_hat.cols() != g.num_edges())
    throw Error(ErrorCode::ShapeMismatch, "superbase shape does not match the flow lattice");
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 1);
  IntMatrix u = Integer(-1) * f_hat.select(rows, f.cotree_edges);
  if (!(u * flow == f_hat.select_rows(rows)))
    throw Error(ErrorCode::InvalidMatrix, "superbase rows are not in the flow lattice");
  return UnimodularWitness(std::move(u));
}

/// Z = [[1, -1^T U], [0, U]], so that Z * [0; F(M)] = f_hat.
inline UnimodularWitness superbase_z(const UnimodularWitness& u) {
  const std::size_t k = u.size();
  IntMatrix z(k + 1, k + 1);
  z(0, 0) = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      z(i + 1, j + 1) = u.matrix()(i, j);
      z(0, j + 1) -= u.matrix()(i, j);
    }
  return UnimodularWitness::trusted(std::move(z));
}

/// [0; F(M)]: the matrix the Z witness acts on.
inline IntMatrix padded_flow(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                             const ReductionSpec& spec) {
  return vstack(IntMatrix(1, g.num_edges()), flow_matrix(g, o, f, spec));
}

}  // namespace lapdual

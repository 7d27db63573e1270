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
#include <optional>
#include <vector>

#include "lapdual/graph.hpp"
#include "lapdual/matrix.hpp"
#include "lapdual/normal_form.hpp"

namespace lapdual {

/// One chosen vertex per connected component; those rows (and columns) are
/// deleted by the reduced matrices.
struct ReductionSpec {
  std::vector<VertexId> v0;  // sorted

  friend bool operator==(const ReductionSpec&, const ReductionSpec&) = default;
};

/// Smallest-index vertex of every component.
inline ReductionSpec default_reduction(const MultiGraph& g) {
  ReductionSpec s;
  for (const auto& comp : components(g)) s.v0.push_back(comp.front());
  return s;
}

inline ReductionSpec make_reduction(const MultiGraph& g, std::vector<VertexId> v0) {
  std::sort(v0.begin(), v0.end());
  auto lab = component_labels(g);
  std::vector<int> hits(lab.count, 0);
  for (std::size_t i = 0; i < v0.size(); ++i) {
    if (v0[i] >= g.num_vertices()) throw Error(ErrorCode::InvalidReductionSpec, "vertex out of range");
    if (i > 0 && v0[i] == v0[i - 1]) throw Error(ErrorCode::InvalidReductionSpec, "repeated vertex");
    ++hits[lab.label[v0[i]]];
  }
  for (int h : hits)
    if (h != 1) throw Error(ErrorCode::InvalidReductionSpec, "need exactly one vertex per component");
  return {std::move(v0)};
}

inline void check_reduction(const MultiGraph& g, const ReductionSpec& s) {
  if (make_reduction(g, s.v0) != s) throw Error(ErrorCode::InvalidReductionSpec, "vertex list must be sorted");
}

/// Vertices kept by a reduction, ascending; these index the reduced rows.
inline std::vector<VertexId> kept_vertices(const MultiGraph& g, const ReductionSpec& s) {
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!std::binary_search(s.v0.begin(), s.v0.end(), v)) keep.push_back(v);
  return keep;
}

inline IntMatrix laplacian(const MultiGraph& g) {
  IntMatrix l(g.num_vertices(), g.num_vertices());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
  }
  return l;
}

inline IntMatrix reduced_laplacian(const MultiGraph& g, const ReductionSpec& s) {
  check_reduction(g, s);
  auto keep = kept_vertices(g, s);
  return laplacian(g).select(keep, keep);
}

/// Vertex-by-edge incidence: -1 at the tail, +1 at the head, loop columns zero.
inline IntMatrix incidence(const MultiGraph& g, const Orientation& o) {
  o.check_against(g);
  IntMatrix n(g.num_vertices(), g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) continue;
    n(o.tail(g, e), e) = -1;
    n(o.head(g, e), e) = 1;
  }
  return n;
}

inline IntMatrix reduced_incidence(const MultiGraph& g, const Orientation& o, const ReductionSpec& s) {
  check_reduction(g, s);
  return incidence(g, o).select_rows(kept_vertices(g, s));
}

/// C(M): rows follow the forest edges, columns the cotree edges (both in
/// ascending edge order, recorded alongside).
struct CutBlock {
  IntMatrix matrix;
  std::vector<EdgeId> row_edges;
  std::vector<EdgeId> col_edges;
};

inline CutBlock cut_block(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                          const ReductionSpec& s) {
  check_forest(g, f);
  IntMatrix n = reduced_incidence(g, o, s);
  IntMatrix tree = n.select_columns(f.forest_edges);
  IntMatrix rest = n.select_columns(f.cotree_edges);
  CutBlock c;
  c.row_edges = f.forest_edges;
  c.col_edges = f.cotree_edges;
  c.matrix = tree.rows() == 0 ? IntMatrix(0, f.cotree_edges.size()) : inverse_unimodular(tree) * rest;
  return c;
}

/// (I | C(M)) with columns placed back in edge order; rows are the
/// fundamental cuts.
inline IntMatrix fundamental_cut_matrix(const MultiGraph& g, const CutBlock& c) {
  IntMatrix out(c.row_edges.size(), g.num_edges());
  for (std::size_t i = 0; i < c.row_edges.size(); ++i) {
    out(i, c.row_edges[i]) = 1;
    for (std::size_t j = 0; j < c.col_edges.size(); ++j) out(i, c.col_edges[j]) = c.matrix(i, j);
  }
  return out;
}

namespace detail {

inline IntMatrix flow_from_cut_block(const MultiGraph& g, const CutBlock& c) {
  const std::size_t k = c.col_edges.size();
  IntMatrix f(k, g.num_edges());
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < c.row_edges.size(); ++i) f(j, c.row_edges[i]) = c.matrix(i, j);
    f(j, c.col_edges[j]) = -1;
  }
  return f;
}

}  // namespace detail

/// F(M) = (C(M)^T | -I') in edge order; row j is the fundamental circuit of
/// the j-th cotree edge.
inline IntMatrix flow_matrix(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                             const ReductionSpec& s) {
  return detail::flow_from_cut_block(g, cut_block(g, o, f, s));
}

/// Prepends to F the negated sum of its rows, giving a superbase of the flow
/// lattice (row 0 is the dependent row).
inline IntMatrix superbase_from_flow(const IntMatrix& flow, std::size_t num_edges) {
  IntMatrix hat(flow.rows() + 1, num_edges);
  for (std::size_t i = 0; i < flow.rows(); ++i)
    for (std::size_t j = 0; j < num_edges; ++j) {
      hat(i + 1, j) = flow(i, j);
      hat(0, j) -= flow(i, j);
    }
  return hat;
}

inline IntMatrix superbase_matrix(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                                  const ReductionSpec& s) {
  return superbase_from_flow(flow_matrix(g, o, f, s), g.num_edges());
}

/// I' + C^T C.
inline IntMatrix dual_gram(const CutBlock& c) {
  const std::size_t k = c.col_edges.size();
  IntMatrix ct = c.matrix.transpose();
  return IntMatrix::identity(k) + ct * c.matrix;
}

/// I + C C^T.
inline IntMatrix cut_gram(const CutBlock& c) {
  return IntMatrix::identity(c.row_edges.size()) + c.matrix * c.matrix.transpose();
}

struct DualLaplacianPair {
  IntMatrix reduced;            // W (I' + C^T C) W^T
  IntMatrix unreduced;          // reduced, bordered last to zero row/col sums
  UnimodularWitness witness;    // W
  IntMatrix base;               // I' + C^T C
};

inline DualLaplacianPair reduced_dual_laplacian(const MultiGraph& g, const Orientation& o,
                                                const ForestCertificate& f, const ReductionSpec& s,
                                                const std::optional<UnimodularWitness>& w = std::nullopt) {
  DualLaplacianPair p;
  p.base = dual_gram(cut_block(g, o, f, s));
  p.witness = w ? *w : UnimodularWitness::identity(p.base.rows());
  if (p.witness.size() != p.base.rows())
    throw Error(ErrorCode::NotUnimodular, "witness order differs from the cycle rank");
  p.reduced = congruent_transform(p.witness.matrix(), p.base);
  p.unreduced = border_zero_sum(p.reduced);
  return p;
}

/// Signed-permutation-free witness U with U * N_{V0} = N_{V0'}, built from
/// the row operations that swap each component's deleted vertex.
inline IntMatrix reduction_change_witness(const MultiGraph& g, const ReductionSpec& from, const ReductionSpec& to) {
  check_reduction(g, from);
  check_reduction(g, to);
  auto keep_from = kept_vertices(g, from);
  auto keep_to = kept_vertices(g, to);
  auto lab = component_labels(g);
  const std::size_t r = keep_from.size();
  // Row of the full incidence for vertex x, expressed over the kept rows of
  // `from`: a kept vertex is itself; a deleted vertex is minus the sum of
  // the kept vertices of its component.
  auto express = [&](VertexId x) {
    std::vector<Integer> coef(r);
    auto it = std::lower_bound(keep_from.begin(), keep_from.end(), x);
    if (it != keep_from.end() && *it == x) {
      coef[static_cast<std::size_t>(it - keep_from.begin())] = 1;
    } else {
      for (std::size_t i = 0; i < r; ++i)
        if (lab.label[keep_from[i]] == lab.label[x]) coef[i] = -1;
    }
    return coef;
  };
  IntMatrix u(keep_to.size(), r);
  for (std::size_t i = 0; i < keep_to.size(); ++i) {
    auto coef = express(keep_to[i]);
    for (std::size_t j = 0; j < r; ++j) u(i, j) = coef[j];
  }
  return u;
}

}  // namespace lapdual

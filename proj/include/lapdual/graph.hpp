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
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lapdual/error.hpp"
#include "lapdual/matrix.hpp"

namespace lapdual {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Unordered endpoint pair; `u == v` is a loop. The stored order (u, v) is
/// also the default direction u -> v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph with loops and parallel edges. Edge k keeps index k for
/// the lifetime of the object; all modifiers return new graphs.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t num_vertices, std::vector<Edge> edges, std::string name = {})
      : n_(num_vertices), edges_(std::move(edges)), name_(std::move(name)) {
    for (std::size_t k = 0; k < edges_.size(); ++k)
      if (edges_[k].u >= n_ || edges_[k].v >= n_)
        throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(k) + " has an endpoint outside [0, n)");
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t num_loops() const {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
  }

  MultiGraph with_edge(VertexId u, VertexId v) const {
    auto es = edges_;
    es.push_back({u, v});
    return MultiGraph(n_, std::move(es), name_);
  }

  MultiGraph with_vertices(std::size_t extra) const { return MultiGraph(n_ + extra, edges_, name_); }

  /// Removes the listed edges; the survivors keep their relative order.
  MultiGraph without_edges(const std::vector<EdgeId>& drop) const {
    std::vector<bool> gone(edges_.size(), false);
    for (EdgeId e : drop) gone.at(e) = true;
    std::vector<Edge> es;
    for (std::size_t k = 0; k < edges_.size(); ++k)
      if (!gone[k]) es.push_back(edges_[k]);
    return MultiGraph(n_, std::move(es), name_);
  }

  /// Relabels vertex v as perm[v].
  MultiGraph relabeled(const std::vector<VertexId>& perm) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& e : edges_) es.push_back({perm.at(e.u), perm.at(e.v)});
    return MultiGraph(n_, std::move(es), name_);
  }

  /// Edge k of the result is edge order[k] of this graph.
  MultiGraph with_edge_order(const std::vector<EdgeId>& order) const {
    std::vector<Edge> es;
    es.reserve(order.size());
    for (EdgeId e : order) es.push_back(edges_.at(e));
    return MultiGraph(n_, std::move(es), name_);
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
};

/// Per-edge direction bit. Unreversed edge {u, v} points u -> v; the bit of a
/// loop is carried but ignored.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> reversed) : reversed_(std::move(reversed)) {}

  static Orientation natural(const MultiGraph& g) { return Orientation(std::vector<bool>(g.num_edges(), false)); }

  std::size_t size() const noexcept { return reversed_.size(); }
  bool reversed(EdgeId e) const { return reversed_.at(e); }
  const std::vector<bool>& bits() const noexcept { return reversed_; }

  VertexId tail(const MultiGraph& g, EdgeId e) const { return reversed(e) ? g.edge(e).v : g.edge(e).u; }
  VertexId head(const MultiGraph& g, EdgeId e) const { return reversed(e) ? g.edge(e).u : g.edge(e).v; }

  Orientation flipped(EdgeId e) const {
    auto r = reversed_;
    r.at(e) = !r.at(e);
    return Orientation(std::move(r));
  }

  void check_against(const MultiGraph& g) const {
    if (reversed_.size() != g.num_edges())
      throw Error(ErrorCode::ShapeMismatch, "orientation length differs from edge count");
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<bool> reversed_;
};

/// Coordinates indexed by edge.
using EdgeVector = std::vector<Integer>;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Component label per vertex, numbered by smallest member vertex.
struct ComponentLabels {
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

inline ComponentLabels component_labels(const MultiGraph& g, const std::vector<bool>* skip_edge = nullptr) {
  detail::DisjointSets ds(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!skip_edge || !(*skip_edge)[e]) ds.unite(g.edge(e).u, g.edge(e).v);
  ComponentLabels res;
  res.label.assign(g.num_vertices(), 0);
  std::vector<std::optional<std::size_t>> id(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto root = ds.find(v);
    if (!id[root]) id[root] = res.count++;
    res.label[v] = *id[root];
  }
  return res;
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
  auto lab = component_labels(g);
  std::vector<std::vector<VertexId>> classes(lab.count);
  for (VertexId v = 0; v < g.num_vertices(); ++v) classes[lab.label[v]].push_back(v);
  return classes;
}

inline std::size_t num_components(const MultiGraph& g) { return component_labels(g).count; }

/// A maximal forest and its complement, both strictly increasing.
struct ForestCertificate {
  std::vector<EdgeId> forest_edges;
  std::vector<EdgeId> cotree_edges;

  friend bool operator==(const ForestCertificate&, const ForestCertificate&) = default;
};

/// Validates an explicit forest choice and fills in the cotree.
inline ForestCertificate make_forest_certificate(const MultiGraph& g, std::vector<EdgeId> forest) {
  std::sort(forest.begin(), forest.end());
  if (std::adjacent_find(forest.begin(), forest.end()) != forest.end())
    throw Error(ErrorCode::NotMaximalForest, "repeated forest edge");
  detail::DisjointSets ds(g.num_vertices());
  for (EdgeId e : forest) {
    if (e >= g.num_edges()) throw Error(ErrorCode::NotMaximalForest, "forest edge out of range");
    if (!ds.unite(g.edge(e).u, g.edge(e).v))
      throw Error(ErrorCode::NotMaximalForest, "forest contains a circuit at edge " + std::to_string(e));
  }
  const std::size_t c = num_components(g);
  if (forest.size() + c != g.num_vertices())
    throw Error(ErrorCode::NotMaximalForest, "forest is not maximal");
  ForestCertificate f;
  f.forest_edges = std::move(forest);
  std::size_t k = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (k < f.forest_edges.size() && f.forest_edges[k] == e) ++k;
    else f.cotree_edges.push_back(e);
  }
  return f;
}

inline void check_forest(const MultiGraph& g, const ForestCertificate& f) {
  auto rebuilt = make_forest_certificate(g, f.forest_edges);
  if (rebuilt != f) throw Error(ErrorCode::NotMaximalForest, "cotree list does not complement the forest");
}

/// Greedy scan by ascending edge index.
inline ForestCertificate maximal_forest(const MultiGraph& g) {
  detail::DisjointSets ds(g.num_vertices());
  ForestCertificate f;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (ds.unite(g.edge(e).u, g.edge(e).v)) f.forest_edges.push_back(e);
    else f.cotree_edges.push_back(e);
  }
  return f;
}

namespace detail {

template <typename Visit>
void for_each_maximal_forest(const MultiGraph& g, Visit&& visit) {
  const std::size_t m = g.num_edges();
  const std::size_t target = g.num_vertices() - num_components(g);
  std::vector<EdgeId> chosen;
  // Union-find snapshots are cheap at desk scale; copy on descent.
  auto rec = [&](auto&& self, EdgeId next, const DisjointSets& ds) -> bool {
    if (chosen.size() == target) return visit(chosen);
    for (EdgeId e = next; e + (target - chosen.size()) <= m; ++e) {
      DisjointSets d2 = ds;
      if (!d2.unite(g.edge(e).u, g.edge(e).v)) continue;
      chosen.push_back(e);
      if (!self(self, e + 1, d2)) return false;
      chosen.pop_back();
    }
    return true;
  };
  rec(rec, 0, DisjointSets(g.num_vertices()));
}

}  // namespace detail

/// Every maximal forest, lexicographic by edge-index set. Throws CapExceeded
/// once more than `cap` forests exist.
inline std::vector<ForestCertificate> enumerate_maximal_forests(const MultiGraph& g, std::size_t cap) {
  std::vector<ForestCertificate> out;
  bool exceeded = false;
  detail::for_each_maximal_forest(g, [&](const std::vector<EdgeId>& forest) {
    if (out.size() == cap) {
      exceeded = true;
      return false;
    }
    ForestCertificate f;
    f.forest_edges = forest;
    std::size_t k = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (k < forest.size() && forest[k] == e) ++k;
      else f.cotree_edges.push_back(e);
    }
    out.push_back(std::move(f));
    return true;
  });
  if (exceeded) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " maximal forests");
  return out;
}

/// Forest edge sets as bitmasks (requires m <= 64).
inline std::vector<std::uint64_t> maximal_forest_masks(const MultiGraph& g, std::size_t cap) {
  if (g.num_edges() > 64) throw Error(ErrorCode::CapExceeded, "bitmask enumeration supports at most 64 edges");
  std::vector<std::uint64_t> out;
  bool exceeded = false;
  detail::for_each_maximal_forest(g, [&](const std::vector<EdgeId>& forest) {
    if (out.size() == cap) {
      exceeded = true;
      return false;
    }
    std::uint64_t mask = 0;
    for (EdgeId e : forest) mask |= std::uint64_t{1} << e;
    out.push_back(mask);
    return true;
  });
  if (exceeded) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " maximal forests");
  return out;
}

/// The unique circuit of forest + e as a signed edge vector. The entry of e
/// is -1; forest edges carry +1 where the walk tail(e) -> head(e) through the
/// forest agrees with their direction. This equals the row of the flow matrix
/// belonging to e. A loop is its own circuit.
inline EdgeVector fundamental_circuit_vector(const MultiGraph& g, const Orientation& o, const ForestCertificate& f,
                                             EdgeId e) {
  o.check_against(g);
  if (!std::binary_search(f.cotree_edges.begin(), f.cotree_edges.end(), e))
    throw Error(ErrorCode::NotCotreeEdge, "edge " + std::to_string(e) + " is not a cotree edge");
  EdgeVector vec(g.num_edges());
  vec[e] = -1;
  if (g.edge(e).is_loop()) return vec;

  // Walk the forest from tail(e); remember the edge used to reach each vertex.
  const VertexId start = o.tail(g, e), goal = o.head(g, e);
  std::vector<std::vector<EdgeId>> adj(g.num_vertices());
  for (EdgeId t : f.forest_edges) {
    adj[g.edge(t).u].push_back(t);
    adj[g.edge(t).v].push_back(t);
  }
  std::vector<std::optional<EdgeId>> via(g.num_vertices());
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId t : adj[x]) {
      VertexId y = g.edge(t).u == x ? g.edge(t).v : g.edge(t).u;
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = t;
      stack.push_back(y);
    }
  }
  if (!seen[goal]) throw Error(ErrorCode::NotMaximalForest, "forest does not span the endpoints of a cotree edge");
  for (VertexId y = goal; y != start;) {
    EdgeId t = *via[y];
    VertexId x = g.edge(t).u == y ? g.edge(t).v : g.edge(t).u;
    // Traversed x -> y.
    vec[t] = (o.tail(g, t) == x) ? 1 : -1;
    y = x;
  }
  return vec;
}

/// Signed cut of vertex set W: +1 for non-loop edges directed into W, -1 for
/// edges directed out of W.
inline EdgeVector cut_vector(const MultiGraph& g, const Orientation& o, const std::vector<VertexId>& w) {
  o.check_against(g);
  std::vector<bool> in(g.num_vertices(), false);
  for (VertexId v : w) {
    if (v >= g.num_vertices()) throw Error(ErrorCode::InvalidGraph, "cut vertex out of range");
    in[v] = true;
  }
  const auto members = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  if (members == 0 || members == g.num_vertices())
    throw Error(ErrorCode::EmptyOrFullSet, "cut set must be a proper nonempty subset");
  EdgeVector vec(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) continue;
    bool t = in[o.tail(g, e)], h = in[o.head(g, e)];
    if (h && !t) vec[e] = 1;
    else if (t && !h) vec[e] = -1;
  }
  return vec;
}

struct EdgeClasses {
  std::vector<EdgeId> loops;
  std::vector<EdgeId> isthmuses;
};

inline EdgeClasses classify_edges(const MultiGraph& g) {
  EdgeClasses res;
  const std::size_t c = num_components(g);
  std::vector<bool> skip(g.num_edges(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) {
      res.loops.push_back(e);
      continue;
    }
    skip[e] = true;
    if (component_labels(g, &skip).count > c) res.isthmuses.push_back(e);
    skip[e] = false;
  }
  return res;
}

/// Rank of the cycle space, m - n + c.
inline std::size_t cycle_rank(const MultiGraph& g) { return g.num_edges() + num_components(g) - g.num_vertices(); }

}  // namespace lapdual

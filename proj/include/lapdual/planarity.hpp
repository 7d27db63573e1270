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
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lapdual/error.hpp"
#include "lapdual/graph.hpp"
#include "lapdual/laplacian.hpp"
#include "lapdual/superbase.hpp"
#include "lapdual/two_isomorphism.hpp"

namespace lapdual {

// ---------------------------------------------------------------------------
// Kuratowski minor search.

struct KuratowskiEvidence {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K5;
  /// Disjoint connected vertex sets of the input graph; for K33 the first
  /// three form one side.
  std::vector<std::vector<VertexId>> branch_sets;
};

inline const char* to_string(KuratowskiEvidence::Kind k) { return k == KuratowskiEvidence::Kind::K5 ? "K5" : "K3,3"; }

/// Independent check that the branch sets really model the claimed minor.
inline bool verify_kuratowski_evidence(const MultiGraph& g, const KuratowskiEvidence& ev) {
  const bool k5 = ev.kind == KuratowskiEvidence::Kind::K5;
  const std::size_t parts = k5 ? 5 : 6;
  if (ev.branch_sets.size() != parts) return false;
  std::vector<int> owner(g.num_vertices(), -1);
  for (std::size_t p = 0; p < parts; ++p) {
    if (ev.branch_sets[p].empty()) return false;
    for (VertexId v : ev.branch_sets[p]) {
      if (v >= g.num_vertices() || owner[v] != -1) return false;
      owner[v] = static_cast<int>(p);
    }
  }
  // Each branch set induces a connected subgraph.
  detail::DisjointSets ds(g.num_vertices());
  for (const auto& e : g.edges())
    if (owner[e.u] != -1 && owner[e.u] == owner[e.v]) ds.unite(e.u, e.v);
  for (const auto& set : ev.branch_sets)
    for (VertexId v : set)
      if (ds.find(v) != ds.find(set.front())) return false;
  std::vector<std::vector<bool>> touch(parts, std::vector<bool>(parts, false));
  for (const auto& e : g.edges())
    if (owner[e.u] != -1 && owner[e.v] != -1 && owner[e.u] != owner[e.v])
      touch[owner[e.u]][owner[e.v]] = touch[owner[e.v]][owner[e.u]] = true;
  for (std::size_t a = 0; a < parts; ++a)
    for (std::size_t b = a + 1; b < parts; ++b) {
      const bool needed = k5 || ((a < 3) != (b < 3));
      if (needed && !touch[a][b]) return false;
    }
  return true;
}

struct KuratowskiResult {
  enum class Status { Planar, Nonplanar, Unknown };
  Status status = Status::Unknown;
  std::optional<KuratowskiEvidence> evidence;
  /// Simple graph had more than 3n - 6 edges.
  bool euler_bound_violated = false;
  std::uint64_t states = 0;
};

inline const char* to_string(KuratowskiResult::Status s) {
  switch (s) {
    case KuratowskiResult::Status::Planar: return "Planar";
    case KuratowskiResult::Status::Nonplanar: return "Nonplanar";
    case KuratowskiResult::Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace detail {

class MinorSearch {
 public:
  MinorSearch(const MultiGraph& g, std::uint64_t budget) : budget_(budget) {
    n_ = g.num_vertices();
    State s;
    s.alive = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    s.adj.assign(n_, 0);
    s.branch.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) s.branch[v] = std::uint64_t{1} << v;
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      s.adj[e.u] |= std::uint64_t{1} << e.v;
      s.adj[e.v] |= std::uint64_t{1} << e.u;
    }
    root_ = std::move(s);
  }

  KuratowskiResult run() {
    KuratowskiResult res;
    State s = root_;
    reduce(s);
    std::size_t n = std::popcount(s.alive), m = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (s.alive >> v & 1) m += std::popcount(s.adj[v]);
    m /= 2;
    res.euler_bound_violated = n >= 3 && m > 3 * n - 6;
    auto out = search(s);
    res.states = states_;
    if (out == Outcome::Found) {
      res.status = KuratowskiResult::Status::Nonplanar;
      res.evidence = found_;
    } else if (out == Outcome::None) {
      res.status = KuratowskiResult::Status::Planar;
    }
    return res;
  }

 private:
  struct State {
    std::uint64_t alive = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::uint64_t> branch;
  };
  enum class Outcome { Found, None, Budget };

  static void remove(State& s, std::size_t v) {
    for (std::uint64_t nb = s.adj[v]; nb; nb &= nb - 1) s.adj[std::countr_zero(nb)] &= ~(std::uint64_t{1} << v);
    s.adj[v] = 0;
    s.alive &= ~(std::uint64_t{1} << v);
  }

  static void contract(State& s, std::size_t x, std::size_t y) {
    s.branch[y] |= s.branch[x];
    for (std::uint64_t nb = s.adj[x]; nb; nb &= nb - 1) {
      std::size_t w = std::countr_zero(nb);
      if (w == y) continue;
      s.adj[w] |= std::uint64_t{1} << y;
      s.adj[y] |= std::uint64_t{1} << w;
    }
    remove(s, x);
  }

  // Drop vertices of degree <= 1 and suppress degree-2 vertices; neither can
  // matter for a minor of minimum degree 3.
  static void reduce(State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint64_t al = s.alive; al; al &= al - 1) {
        std::size_t v = std::countr_zero(al);
        int d = std::popcount(s.adj[v]);
        if (d <= 1) {
          remove(s, v);
          changed = true;
        } else if (d == 2) {
          contract(s, v, std::countr_zero(s.adj[v]));
          changed = true;
        }
      }
    }
  }

  std::vector<std::size_t> vertices(const State& s) const {
    std::vector<std::size_t> vs;
    for (std::uint64_t al = s.alive; al; al &= al - 1) vs.push_back(std::countr_zero(al));
    return vs;
  }

  static std::vector<VertexId> unpack(std::uint64_t mask) {
    std::vector<VertexId> out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
  }

  bool find_subgraph(const State& s) {
    auto vs = vertices(s);
    const std::size_t n = vs.size();
    auto adj = [&](std::size_t a, std::size_t b) { return (s.adj[a] >> b & 1) != 0; };
    // K5
    std::array<std::size_t, 5> pick{};
    auto k5 = [&](auto&& self, std::size_t from, std::size_t depth) -> bool {
      if (depth == 5) return true;
      for (std::size_t i = from; i < n; ++i) {
        if (std::popcount(s.adj[vs[i]]) < 4) continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) ok = adj(pick[d], vs[i]);
        if (!ok) continue;
        pick[depth] = vs[i];
        if (self(self, i + 1, depth + 1)) return true;
      }
      return false;
    };
    if (k5(k5, 0, 0)) {
      KuratowskiEvidence ev;
      ev.kind = KuratowskiEvidence::Kind::K5;
      for (auto v : pick) ev.branch_sets.push_back(unpack(s.branch[v]));
      found_ = std::move(ev);
      return true;
    }
    // K3,3: a side {a, b, c} and three common neighbours outside it.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          std::size_t a = vs[i], b = vs[j], c = vs[k];
          std::uint64_t common = s.adj[a] & s.adj[b] & s.adj[c];
          common &= ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c));
          if (std::popcount(common) < 3) continue;
          KuratowskiEvidence ev;
          ev.kind = KuratowskiEvidence::Kind::K33;
          for (auto v : {a, b, c}) ev.branch_sets.push_back(unpack(s.branch[v]));
          for (int t = 0; t < 3; ++t) {
            std::size_t v = std::countr_zero(common);
            common &= common - 1;
            ev.branch_sets.push_back(unpack(s.branch[v]));
          }
          found_ = std::move(ev);
          return true;
        }
    return false;
  }

  std::string key(const State& s) const {
    std::string k(reinterpret_cast<const char*>(&s.alive), sizeof s.alive);
    for (std::uint64_t al = s.alive; al; al &= al - 1) {
      std::uint64_t a = s.adj[std::countr_zero(al)];
      k.append(reinterpret_cast<const char*>(&a), sizeof a);
    }
    return k;
  }

  // Contractions alone suffice: contracting every branch set of a minor
  // model leaves the minor as a subgraph.
  Outcome search(const State& s) {
    if (++states_ > budget_) return Outcome::Budget;
    if (std::popcount(s.alive) < 5) return Outcome::None;
    if (find_subgraph(s)) return Outcome::Found;
    if (!seen_.insert(key(s)).second) return Outcome::None;
    bool budget_hit = false;
    for (std::size_t u : vertices(s))
      for (std::uint64_t nb = s.adj[u] & ~((std::uint64_t{2} << u) - 1); nb; nb &= nb - 1) {
        std::size_t v = std::countr_zero(nb);
        State t = s;
        contract(t, v, u);
        reduce(t);
        auto r = search(t);
        if (r == Outcome::Found) return r;
        if (r == Outcome::Budget) budget_hit = true;
        if (states_ > budget_) return Outcome::Budget;
      }
    return budget_hit ? Outcome::Budget : Outcome::None;
  }

  std::size_t n_ = 0;
  std::uint64_t budget_;
  std::uint64_t states_ = 0;
  State root_;
  std::unordered_set<std::string> seen_;
  KuratowskiEvidence found_;
};

}  // namespace detail

/// Searches for a K5 or K3,3 minor by edge contraction. Budget counts
/// visited minors.
inline KuratowskiResult kuratowski_oracle(const MultiGraph& g, std::uint64_t budget) {
  if (g.num_vertices() > 64) return {};
  auto res = detail::MinorSearch(g, budget).run();
  if (res.evidence && !verify_kuratowski_evidence(g, *res.evidence))
    throw Error(ErrorCode::InvalidGraph, "internal error: Kuratowski witness failed verification");
  return res;
}

// ---------------------------------------------------------------------------
// MacLane: a cycle basis with every edge in at most two members.

struct MacLaneResult {
  enum class Status { Planar, Nonplanar, Unknown };
  Status status = Status::Unknown;
  std::vector<std::uint64_t> basis;  // edge masks, when Planar
  std::uint64_t steps = 0;
};

inline const char* to_string(MacLaneResult::Status s) {
  switch (s) {
    case MacLaneResult::Status::Planar: return "Planar";
    case MacLaneResult::Status::Nonplanar: return "Nonplanar";
    case MacLaneResult::Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace detail {

inline bool is_circuit(const MultiGraph& g, std::uint64_t mask) {
  if (!mask) return false;
  std::vector<int> deg(g.num_vertices(), 0);
  DisjointSets ds(g.num_vertices());
  VertexId any = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    const Edge& e = g.edge(std::countr_zero(m));
    deg[e.u] += 1;
    deg[e.v] += 1;
    ds.unite(e.u, e.v);
    any = e.u;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) return false;
    if (deg[v] != 0 && ds.find(v) != ds.find(any)) return false;
  }
  return true;
}

class MacLaneSearch {
 public:
  MacLaneSearch(std::size_t m, std::size_t rank, std::vector<std::uint64_t> circuits, std::uint64_t budget)
      : m_(m), rank_(rank), circuits_(std::move(circuits)), budget_(budget), use_(m, 0) {
    for (auto c : circuits_) coverable_ |= c;
  }

  MacLaneResult run() {
    MacLaneResult res;
    auto r = search(0);
    res.steps = steps_;
    if (r == 1) {
      res.status = MacLaneResult::Status::Planar;
      res.basis = found_;
    } else if (r == 0) {
      res.status = MacLaneResult::Status::Nonplanar;
    }
    return res;
  }

 private:
  std::uint64_t reduce(std::uint64_t x) const {
    for (int b = 63; b >= 0 && x; --b)
      if ((x >> b & 1) && piv_[b]) x ^= piv_[b];
    return x;
  }

  bool fits(std::uint64_t c) const {
    for (; c; c &= c - 1)
      if (use_[std::countr_zero(c)] >= 2) return false;
    return true;
  }

  // 1 found, 0 exhausted, -1 budget.
  int search(std::size_t chosen) {
    if (chosen == rank_) {
      found_ = picked_;
      return 1;
    }
    if (++steps_ > budget_) return -1;
    std::uint64_t covered = 0;
    for (auto c : picked_) covered |= c;
    std::uint64_t open = coverable_ & ~covered;
    // Every basis member could be the one covering the lowest open edge;
    // once all edges are covered, any independent circuit may come next.
    std::uint64_t need = open ? (open & -open) : 0;
    std::size_t spare = 0;
    for (std::size_t e = 0; e < m_; ++e) spare += 2 - use_[e];
    if (spare < rank_ - chosen) return 0;
    bool budget_hit = false;
    for (std::size_t i = 0; i < circuits_.size(); ++i) {
      std::uint64_t c = circuits_[i];
      if (need && !(c & need)) continue;
      if (!need && free_last_ >= 0 && static_cast<std::ptrdiff_t>(i) <= free_last_) continue;
      if (!fits(c)) continue;
      std::uint64_t r = reduce(c);
      if (!r) continue;
      int b = 63 - std::countl_zero(r);
      piv_[b] = r;
      for (std::uint64_t t = c; t; t &= t - 1) ++use_[std::countr_zero(t)];
      picked_.push_back(c);
      std::ptrdiff_t saved_last = free_last_;
      if (!need) free_last_ = static_cast<std::ptrdiff_t>(i);
      int out = search(chosen + 1);
      free_last_ = saved_last;
      picked_.pop_back();
      for (std::uint64_t t = c; t; t &= t - 1) --use_[std::countr_zero(t)];
      piv_[b] = 0;
      if (out == 1) return 1;
      if (out == -1) budget_hit = true;
      if (steps_ > budget_) return -1;
    }
    return budget_hit ? -1 : 0;
  }

  std::size_t m_, rank_;
  std::vector<std::uint64_t> circuits_;
  std::uint64_t budget_;
  std::vector<int> use_;
  std::uint64_t coverable_ = 0;
  std::array<std::uint64_t, 64> piv_{};
  std::vector<std::uint64_t> picked_, found_;
  std::ptrdiff_t free_last_ = -1;  // increasing picks once everything is covered
  std::uint64_t steps_ = 0;
};

}  // namespace detail

/// Exhaustive search over cycle bases. Circuits are enumerated as the
/// connected 2-regular members of the GF(2) cycle space, so the cycle rank is
/// capped at `max_rank`.
inline MacLaneResult maclane_oracle(const MultiGraph& g, std::uint64_t budget, std::size_t max_rank = 16) {
  MacLaneResult res;
  const std::size_t k = cycle_rank(g);
  if (g.num_edges() > 64 || k > max_rank) return res;
  if (k == 0) {
    res.status = MacLaneResult::Status::Planar;
    return res;
  }
  auto f = maximal_forest(g);
  auto o = Orientation::natural(g);
  std::vector<std::uint64_t> fundamental;
  for (EdgeId e : f.cotree_edges) {
    auto v = fundamental_circuit_vector(g, o, f, e);
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) mask |= std::uint64_t{1} << j;
    fundamental.push_back(mask);
  }
  std::vector<std::uint64_t> circuits;
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << k); ++sel) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (sel >> i & 1) mask ^= fundamental[i];
    if (detail::is_circuit(g, mask)) circuits.push_back(mask);
  }
  std::stable_sort(circuits.begin(), circuits.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  return detail::MacLaneSearch(g.num_edges(), k, std::move(circuits), budget).run();
}

// ---------------------------------------------------------------------------
// Abstract duality.

struct DualReport {
  bool passed = false;
  std::string detail;
  std::size_t forests1 = 0;
  std::size_t forests2 = 0;
};

/// Checks that beta sends the complement of every maximal forest of g1 to a
/// maximal forest of g2, and that the forest counts agree.
inline DualReport verify_abstract_dual(const MultiGraph& g1, const MultiGraph& g2, const std::vector<EdgeId>& beta,
                                       std::size_t cap = 1u << 20) {
  if (g1.num_edges() != g2.num_edges() || beta.size() != g1.num_edges())
    throw Error(ErrorCode::ShapeMismatch, "duality needs equal edge counts and a full edge map");
  DualReport rep;
  std::vector<bool> hit(beta.size(), false);
  for (EdgeId t : beta) {
    if (t >= beta.size() || hit[t]) {
      rep.detail = "edge map is not a bijection";
      return rep;
    }
    hit[t] = true;
  }
  const std::size_t m = g1.num_edges();
  const std::size_t r1 = g1.num_vertices() - num_components(g1);
  const std::size_t r2 = g2.num_vertices() - num_components(g2);
  if (r2 != m - r1) {
    rep.detail = "forest size " + std::to_string(r2) + ", expected " + std::to_string(m - r1);
    return rep;
  }
  auto f1 = maximal_forest_masks(g1, cap);
  auto f2 = maximal_forest_masks(g2, cap);
  rep.forests1 = f1.size();
  rep.forests2 = f2.size();
  if (f1.size() != f2.size()) {
    rep.detail = "forest counts differ";
    return rep;
  }
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::unordered_set<std::uint64_t> set2(f2.begin(), f2.end());
  for (auto mask : f1)
    if (!set2.count(detail::map_mask(all & ~mask, beta))) {
      rep.detail = "a forest complement does not map to a forest";
      return rep;
    }
  rep.passed = true;
  rep.detail = "ok";
  return rep;
}

struct DualCertificate {
  MultiGraph dual_graph;
  Orientation dual_orientation;
  UnimodularWitness witness_z;        // witness_z * a == N(dual)
  std::vector<EdgeId> edge_bijection;  // edge e of the input is edge beta[e] of the dual
  IntMatrix a;                         // [0; F(M)] for the forest below
  ForestCertificate forest;
  Orientation orientation;
  /// U with L_{0}(dual) = U (I' + C^T C) U^T.
  UnimodularWitness laplacian_witness;
  Integer trace = 0;
};

/// Checks Z * a == N(dual) and the Laplacian congruence against the input.
inline bool check_certificate_algebra(const MultiGraph& g, const DualCertificate& c) {
  if (!(c.witness_z.matrix() * c.a == incidence(c.dual_graph, c.dual_orientation))) return false;
  if (c.dual_graph.num_vertices() == 0) return false;
  IntMatrix base = dual_gram(cut_block(g, c.orientation, c.forest, default_reduction(g)));
  IntMatrix lhs = reduced_laplacian(c.dual_graph, make_reduction(c.dual_graph, {0}));
  return num_components(c.dual_graph) == 1 && lhs == congruent_transform(c.laplacian_witness.matrix(), base);
}

struct PlanarityVerdict {
  enum class Status { Planar, Nonplanar, Unknown };
  Status status = Status::Unknown;
  std::optional<DualCertificate> certificate;
  std::optional<KuratowskiEvidence> evidence;
  Integer best_trace = 0;
  Integer target_trace = 0;
  std::uint64_t descent_steps = 0;
  std::uint64_t minor_states = 0;
};

inline const char* to_string(PlanarityVerdict::Status s) {
  switch (s) {
    case PlanarityVerdict::Status::Planar: return "Planar";
    case PlanarityVerdict::Status::Nonplanar: return "Nonplanar";
    case PlanarityVerdict::Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace detail {

/// Lifts a minimal superbase of the loop- and isthmus-free part back to the
/// full graph: isthmus columns stay zero, each loop gets its own row.
inline IntMatrix lift_superbase(const MultiGraph& g, const std::vector<EdgeId>& kept, const std::vector<EdgeId>& loops,
                                const IntMatrix& core) {
  IntMatrix out(core.rows() + loops.size(), g.num_edges());
  for (std::size_t i = 0; i < core.rows(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) out(i, kept[j]) = core(i, j);
  for (std::size_t l = 0; l < loops.size(); ++l) {
    out(core.rows() + l, loops[l]) = 1;
    out(0, loops[l]) = -1;
  }
  return out;
}

}  // namespace detail

/// Planar only with a dual certificate from a trace-minimal superbase;
/// Nonplanar only with a verified Kuratowski minor.
inline PlanarityVerdict decide_planarity(const MultiGraph& g, std::uint64_t budget, std::uint64_t seed) {
  PlanarityVerdict v;
  const auto classes = classify_edges(g);
  std::vector<bool> strip(g.num_edges(), false);
  for (EdgeId e : classes.loops) strip[e] = true;
  for (EdgeId e : classes.isthmuses) strip[e] = true;
  std::vector<EdgeId> kept;
  std::vector<Edge> core_edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!strip[e]) {
      kept.push_back(e);
      core_edges.push_back(g.edge(e));
    }
  MultiGraph core(g.num_vertices(), core_edges, g.name());
  auto state = superbase_trace_minimize(core, Orientation::natural(core), maximal_forest(core),
                                        default_reduction(core), budget, seed);
  v.descent_steps = state.steps;
  v.target_trace = 2 * Integer(g.num_edges() - classes.isthmuses.size());
  v.best_trace = state.trace + 2 * Integer(classes.loops.size());

  if (state.reached_target) {
    DualCertificate c;
    c.orientation = Orientation::natural(g);
    c.forest = maximal_forest(g);
    const auto spec = default_reduction(g);
    IntMatrix f_hat = detail::lift_superbase(g, kept, classes.loops, state.f_hat);
    c.laplacian_witness = superbase_witness(g, c.orientation, c.forest, spec, f_hat);
    c.witness_z = superbase_z(c.laplacian_witness);
    c.a = padded_flow(g, c.orientation, c.forest, spec);
    auto rec = lemma_center_recover_or_throw(c.a, c.witness_z);
    c.dual_graph = MultiGraph(rec.graph.num_vertices(), rec.graph.edges(), g.name().empty() ? "dual" : g.name() + "*");
    c.dual_orientation = rec.orientation;
    c.edge_bijection.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) c.edge_bijection[e] = e;
    c.trace = (f_hat * f_hat.transpose()).trace();
    if (c.trace != v.target_trace || !check_certificate_algebra(g, c))
      throw Error(ErrorCode::InvalidMatrix, "internal error: dual certificate failed its own checks");
    v.status = PlanarityVerdict::Status::Planar;
    v.certificate = std::move(c);
    return v;
  }

  auto k = kuratowski_oracle(g, budget);
  v.minor_states = k.states;
  if (k.status == KuratowskiResult::Status::Nonplanar) {
    v.status = PlanarityVerdict::Status::Nonplanar;
    v.evidence = std::move(k.evidence);
  }
  return v;
}

/// Certificate for a planar graph; throws NonplanarInput or BudgetExceeded.
inline DualCertificate construct_abstract_dual(const MultiGraph& g, std::uint64_t budget, std::uint64_t seed) {
  auto v = decide_planarity(g, budget, seed);
  if (v.status == PlanarityVerdict::Status::Nonplanar) throw Error(ErrorCode::NonplanarInput, "graph has a Kuratowski minor");
  if (v.status == PlanarityVerdict::Status::Unknown)
    throw Error(ErrorCode::BudgetExceeded, "no trace-minimal superbase found within budget");
  return std::move(*v.certificate);
}

}  // namespace lapdual

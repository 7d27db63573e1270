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
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lapdual/congruence.hpp"
#include "lapdual/error.hpp"
#include "lapdual/graph.hpp"
#include "lapdual/laplacian.hpp"
#include "lapdual/superbase.hpp"
#include "lapdual/two_isomorphism.hpp"

namespace lapdual {

enum class Tri { True, False, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

struct ConditionVerdict {
  Tri status = Tri::Unknown;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Column matchings for the row-equivalence conditions.

/// Column j of `a` is matched to column beta[j] of `b`, scaled by sign[j].
struct ColumnMatch {
  std::vector<EdgeId> beta;
  std::vector<int> sign;
  /// Strict case: U with U * a == matched b.
  std::optional<UnimodularWitness> witness;
};

struct ColumnMatchResult {
  Tri status = Tri::Unknown;
  std::optional<ColumnMatch> match;
  std::uint64_t steps = 0;
};

/// b with its columns rearranged by a match: column j is sign[j] * b[:, beta[j]].
inline IntMatrix apply_column_match(const IntMatrix& b, const std::vector<EdgeId>& beta, const std::vector<int>& sign) {
  IntMatrix out(b.rows(), beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) out(i, j) = sign[j] * b(i, beta[j]);
  return out;
}

namespace detail {

inline Integer column_gcd(const IntMatrix& m, std::size_t j) {
  Integer g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) g = boost::multiprecision::gcd(g, m(i, j));
  return g;
}

/// Backtracking over signed column bijections, pruned by column gcds
/// and by comparing the HNF of every matched column prefix.
class ColumnMatcher {
 public:
  ColumnMatcher(const IntMatrix& a, const IntMatrix& b, bool loose, std::uint64_t budget)
      : a_(a), b_(b), loose_(loose), budget_(budget), m_(a.cols()) {
    for (std::size_t j = 0; j < m_; ++j) {
      fa_.push_back(fingerprint(a_, j));
      fb_.push_back(fingerprint(b_, j));
    }
    // Columns equal to an earlier one up to sign may take images in
    // increasing order only.
    twin_.assign(m_, m_);
    for (std::size_t j = 0; j < m_; ++j)
      for (std::size_t k = 0; k < j && twin_[j] == m_; ++k) {
        bool same = true, opp = true;
        for (std::size_t i = 0; i < a_.rows(); ++i) {
          same = same && a_(i, j) == a_(i, k);
          opp = opp && a_(i, j) == -a_(i, k);
        }
        if (same || opp) twin_[j] = k;
      }
  }

  ColumnMatchResult run() {
    ColumnMatchResult res;
    if (a_.cols() != b_.cols() || (!loose_ && a_.rows() != b_.rows())) {
      res.status = Tri::False;
      return res;
    }
    auto fa = fa_, fb = fb_;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) {
      res.status = Tri::False;
      return res;
    }
    beta_.assign(m_, 0);
    sign_.assign(m_, 1);
    used_.assign(m_, false);
    int r = search(0);
    res.steps = steps_;
    if (r == 1) {
      res.status = Tri::True;
      ColumnMatch cm{beta_, sign_, std::nullopt};
      if (!loose_) cm.witness = strict_row_equivalence(a_, apply_column_match(b_, beta_, sign_));
      res.match = std::move(cm);
    } else if (r == 0) {
      res.status = Tri::False;
    }
    return res;
  }

 private:
  // Row operations keep the gcd of a column (zero columns included); the
  // number of nonzero entries is not invariant, so it is not used.
  using Print = Integer;

  static Print fingerprint(const IntMatrix& m, std::size_t j) { return column_gcd(m, j); }

  bool prefix_ok(std::size_t len) const {
    std::vector<std::size_t> cols(len);
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<std::size_t> rows_a(a_.rows()), rows_b(b_.rows());
    std::iota(rows_a.begin(), rows_a.end(), 0);
    std::iota(rows_b.begin(), rows_b.end(), 0);
    IntMatrix pa = a_.select(rows_a, cols);
    IntMatrix pb(b_.rows(), len);
    for (std::size_t j = 0; j < len; ++j)
      for (std::size_t i = 0; i < b_.rows(); ++i) pb(i, j) = sign_[j] * b_(i, beta_[j]);
    auto ha = hermite_normal_form(pa);
    auto hb = hermite_normal_form(pb);
    if (!loose_) return ha.h == hb.h;
    if (ha.rank != hb.rank) return false;
    for (std::size_t i = 0; i < ha.rank; ++i)
      for (std::size_t j = 0; j < len; ++j)
        if (ha.h(i, j) != hb.h(i, j)) return false;
    return true;
  }

  int search(std::size_t j) {
    if (j == m_) return 1;
    bool budget_hit = false;
    for (std::size_t t = 0; t < m_; ++t) {
      if (used_[t] || fa_[j] != fb_[t]) continue;
      if (twin_[j] != m_ && t < beta_[twin_[j]]) continue;
      const bool zero = fb_[t] == 0;
      for (int s : {1, -1}) {
        if (zero && s == -1) continue;
        if (++steps_ > budget_) return -1;
        beta_[j] = t;
        sign_[j] = s;
        if (!prefix_ok(j + 1)) continue;
        used_[t] = true;
        int r = search(j + 1);
        used_[t] = false;
        if (r == 1) return 1;
        if (r == -1) budget_hit = true;
        if (steps_ > budget_) return -1;
      }
    }
    return budget_hit ? -1 : 0;
  }

  const IntMatrix& a_;
  const IntMatrix& b_;
  bool loose_;
  std::uint64_t budget_;
  std::size_t m_;
  std::vector<Print> fa_, fb_;
  std::vector<std::size_t> twin_;
  std::vector<EdgeId> beta_;
  std::vector<int> sign_;
  std::vector<bool> used_;
  std::uint64_t steps_ = 0;
};

}  // namespace detail

/// Signed column bijection making a and b strictly (or loosely) row equivalent.
inline ColumnMatchResult match_columns(const IntMatrix& a, const IntMatrix& b, bool loose, std::uint64_t budget) {
  return detail::ColumnMatcher(a, b, loose, budget).run();
}

// ---------------------------------------------------------------------------
// Constructive direction: congruent reduced Laplacians give strictly row
// equivalent reduced incidence matrices.

/// The graph with all of V0 identified to a new vertex 0; kept vertices
/// follow in ascending order. Edge indices are unchanged.
inline MultiGraph identify_reduction(const MultiGraph& g, const ReductionSpec& s) {
  auto keep = kept_vertices(g, s);
  std::vector<VertexId> map(g.num_vertices(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) map[keep[i]] = i + 1;
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    es.push_back({map[e.u], map[e.v]});
  }
  return MultiGraph(keep.size() + 1, std::move(es), g.name());
}

struct ConstructiveMatch {
  UnimodularWitness z;            // Z = W X Y
  MultiGraph g3;                  // read off Z * N(G1')
  Orientation o1;                 // natural on g1
  Orientation o2;                 // chosen on g2
  std::vector<EdgeId> beta;       // edge e of g1 -> edge beta[e] of g2
  UnimodularWitness row_witness;  // U * N_{V01}(g1) == N_{V02}(g2) with columns matched
};

/// Given U with U L_{V01}(g1) U^T = L_{V02}(g2), rebuilds the directed
/// graph G3 from Z N(G1') and matches its edges to g2. Returns nothing if a
/// step fails (which would contradict the witness).
inline std::optional<ConstructiveMatch> constructive_row_equivalence(const MultiGraph& g1, const ReductionSpec& s1,
                                                                     const MultiGraph& g2, const ReductionSpec& s2,
                                                                     const UnimodularWitness& u) {
  if (!(congruent_transform(u.matrix(), reduced_laplacian(g1, s1)) == reduced_laplacian(g2, s2))) return std::nullopt;
  if (g1.num_edges() != g2.num_edges()) return std::nullopt;
  const std::size_t r = u.size();
  MultiGraph h1 = identify_reduction(g1, s1);
  MultiGraph h2 = identify_reduction(g2, s2);
  ConstructiveMatch out;
  out.o1 = Orientation::natural(g1);

  IntMatrix w = IntMatrix::identity(r + 1), x = IntMatrix::identity(r + 1), y = IntMatrix::identity(r + 1);
  for (std::size_t j = 1; j <= r; ++j) {
    w(0, j) = -1;
    y(0, j) = 1;
    for (std::size_t i = 1; i <= r; ++i) x(i, j) = u.matrix()(i - 1, j - 1);
  }
  out.z = UnimodularWitness::trusted(w * x * y);
  IntMatrix n1 = incidence(h1, Orientation::natural(h1));
  auto rec = lemma_center_recover(n1, out.z);
  if (!std::holds_alternative<RecoveredGraph>(rec)) return std::nullopt;
  auto g3 = std::get<RecoveredGraph>(std::move(rec));
  out.g3 = g3.graph;
  if (!(laplacian(g3.graph) == laplacian(h2))) return std::nullopt;

  // Same Laplacian with the same vertex order: endpoints agree edge for edge.
  std::vector<bool> taken(g2.num_edges(), false), rev(g2.num_edges(), false);
  out.beta.assign(g1.num_edges(), 0);
  for (EdgeId e = 0; e < g1.num_edges(); ++e) {
    const Edge& a = g3.graph.edge(e);
    bool found = false;
    for (EdgeId t = 0; t < g2.num_edges() && !found; ++t) {
      if (taken[t]) continue;
      const Edge& b = h2.edge(t);
      if (a.is_loop() != b.is_loop()) continue;
      if (!a.is_loop() && !(std::min(b.u, b.v) == a.u && std::max(b.u, b.v) == a.v)) continue;
      taken[t] = found = true;
      out.beta[e] = t;
      // Direct g2's edge so that its column equals column e of N(G3).
      if (!a.is_loop()) rev[t] = b.u != g3.orientation.tail(g3.graph, e);
    }
    if (!found) return std::nullopt;
  }
  out.o2 = Orientation(std::move(rev));
  IntMatrix lhs = u.matrix() * reduced_incidence(g1, out.o1, s1);
  IntMatrix rhs = apply_column_match(reduced_incidence(g2, out.o2, s2), out.beta, std::vector<int>(out.beta.size(), 1));
  if (!(lhs == rhs)) return std::nullopt;
  out.row_witness = u;
  return out;
}

// ---------------------------------------------------------------------------
// Unreduced version.

/// R with R L(g) R^T = diag(L_{V0}(g), 0): add each component's kept rows
/// into its V0 row, then move the V0 rows last.
inline UnimodularWitness reduction_block_witness(const MultiGraph& g, const ReductionSpec& s) {
  check_reduction(g, s);
  auto lab = component_labels(g);
  auto keep = kept_vertices(g, s);
  const std::size_t n = g.num_vertices();
  IntMatrix add = IntMatrix::identity(n);
  for (VertexId v : s.v0)
    for (VertexId w = 0; w < n; ++w)
      if (w != v && lab.label[w] == lab.label[v]) add(v, w) = 1;
  std::vector<std::size_t> order(keep.begin(), keep.end());
  order.insert(order.end(), s.v0.begin(), s.v0.end());
  return UnimodularWitness::trusted(add.select_rows(order));
}

/// Rank of L(g) over Q; equals n - c.
inline std::size_t laplacian_rank(const MultiGraph& g) { return rank(laplacian(g)); }

/// From V with V L(g1) V^T = L(g2), the top-left block of R2 V R1^{-1}
/// carries L_{V01}(g1) to L_{V02}(g2).
inline std::optional<UnimodularWitness> reduced_from_unreduced_witness(const MultiGraph& g1, const ReductionSpec& s1,
                                                                       const MultiGraph& g2, const ReductionSpec& s2,
                                                                       const UnimodularWitness& v) {
  const std::size_t r1 = g1.num_vertices() - s1.v0.size(), r2 = g2.num_vertices() - s2.v0.size();
  if (r1 != r2 || g1.num_vertices() != g2.num_vertices()) return std::nullopt;
  IntMatrix r1m = reduction_block_witness(g1, s1).matrix();
  IntMatrix r2m = reduction_block_witness(g2, s2).matrix();
  IntMatrix full = r2m * v.matrix() * inverse_unimodular(r1m);
  std::vector<std::size_t> head(r1);
  std::iota(head.begin(), head.end(), 0);
  IntMatrix u1 = full.select(head, head);
  if (det_bareiss(u1) * det_bareiss(u1) != 1) return std::nullopt;
  if (!(congruent_transform(u1, reduced_laplacian(g1, s1)) == reduced_laplacian(g2, s2))) return std::nullopt;
  return UnimodularWitness::trusted(std::move(u1));
}

/// From U with U L_{V01}(g1) U^T = L_{V02}(g2) (equal vertex counts), a
/// witness for L(g1) and L(g2): R2^{-1} diag(U, I) R1.
inline std::optional<UnimodularWitness> unreduced_from_reduced_witness(const MultiGraph& g1, const ReductionSpec& s1,
                                                                       const MultiGraph& g2, const ReductionSpec& s2,
                                                                       const UnimodularWitness& u) {
  if (g1.num_vertices() != g2.num_vertices() || s1.v0.size() != s2.v0.size()) return std::nullopt;
  IntMatrix lift = direct_sum(u.matrix(), IntMatrix::identity(s1.v0.size()));
  IntMatrix v = inverse_unimodular(reduction_block_witness(g2, s2).matrix()) * lift *
                reduction_block_witness(g1, s1).matrix();
  if (!(congruent_transform(v, laplacian(g1)) == laplacian(g2))) return std::nullopt;
  return UnimodularWitness::trusted(std::move(v));
}

// ---------------------------------------------------------------------------
// Report.

struct PropertyXReport {
  /// Conditions 1-4, in order: congruent reduced Laplacians, strictly row
  /// equivalent reduced incidences, loosely row equivalent incidences,
  /// 2-isomorphism.
  std::array<ConditionVerdict, 4> conditions;
  bool consistent = true;

  CongruenceVerdict congruence;
  std::optional<ColumnMatch> strict_match;
  std::optional<ColumnMatch> loose_match;
  TwoIsoResult two_iso;
  /// 1 => 2 rebuilt from the congruence witness, when condition 1 holds.
  std::optional<ConstructiveMatch> constructive;
  bool constructive_ok = false;

  // Unreduced version.
  ConditionVerdict unreduced_congruent;
  bool unreduced_expected = false;  // 2-isomorphic with equal n and c (when condition 4 is decided)
  bool unreduced_consistent = true;
  bool rank_lemma_ok = false;
  std::optional<UnimodularWitness> unreduced_witness;
};

namespace detail {

inline bool decided_agree(const std::array<ConditionVerdict, 4>& c) {
  std::optional<Tri> seen;
  for (const auto& v : c) {
    if (v.status == Tri::Unknown) continue;
    if (seen && *seen != v.status) return false;
    seen = v.status;
  }
  return true;
}

inline Tri from_bool(bool b) { return b ? Tri::True : Tri::False; }

}  // namespace detail

/// Evaluates the four conditions independently (each with its own budget)
/// and the unreduced statement. Throws LoopCountMismatch outside the
/// hypothesis, BudgetExceeded when the forest enumeration itself is too big.
inline PropertyXReport property_x_report(const MultiGraph& g1, const MultiGraph& g2, std::uint64_t budget,
                                         std::optional<ReductionSpec> spec1 = std::nullopt,
                                         std::optional<ReductionSpec> spec2 = std::nullopt) {
  if (g1.num_loops() != g2.num_loops())
    throw Error(ErrorCode::LoopCountMismatch, "graphs have different numbers of loops");
  const ReductionSpec s1 = spec1 ? *spec1 : default_reduction(g1);
  const ReductionSpec s2 = spec2 ? *spec2 : default_reduction(g2);
  check_reduction(g1, s1);
  check_reduction(g2, s2);
  PropertyXReport rep;

  // 4: brute force.
  rep.two_iso = decide_2_isomorphism_bruteforce(g1, g2, budget);
  if (rep.two_iso.status == TwoIsoResult::Status::BudgetExceeded && rep.two_iso.reason != "search budget exhausted")
    throw Error(ErrorCode::BudgetExceeded, rep.two_iso.reason);
  auto& c4 = rep.conditions[3];
  c4.status = rep.two_iso.status == TwoIsoResult::Status::TwoIsomorphic      ? Tri::True
              : rep.two_iso.status == TwoIsoResult::Status::NotTwoIsomorphic ? Tri::False
                                                                             : Tri::Unknown;
  c4.detail = rep.two_iso.reason.empty() ? "bijection found" : rep.two_iso.reason;

  // 1: congruence of reduced Laplacians.
  IntMatrix l1 = reduced_laplacian(g1, s1), l2 = reduced_laplacian(g2, s2);
  rep.congruence = decide_congruence(l1, l2, budget);
  auto& c1 = rep.conditions[0];
  switch (rep.congruence.status) {
    case CongruenceVerdict::Status::Congruent: c1 = {Tri::True, "witness found"}; break;
    case CongruenceVerdict::Status::NotCongruent:
      c1 = {Tri::False, std::string("separated by ") + to_string(rep.congruence.separating_invariant->kind)};
      break;
    case CongruenceVerdict::Status::Unknown: c1 = {Tri::Unknown, "search budget exhausted"}; break;
  }

  // 2 and 3: column matchings.
  const std::size_t m = g1.num_edges();
  if (m != g2.num_edges()) {
    rep.conditions[1] = {Tri::False, "edge counts differ"};
    rep.conditions[2] = {Tri::False, "edge counts differ"};
  } else {
    auto strict = match_columns(reduced_incidence(g1, Orientation::natural(g1), s1),
                                reduced_incidence(g2, Orientation::natural(g2), s2), false, budget);
    rep.conditions[1] = {strict.status, strict.status == Tri::Unknown ? "search budget exhausted" : "column search"};
    rep.strict_match = strict.match;
    auto loose = match_columns(incidence(g1, Orientation::natural(g1)), incidence(g2, Orientation::natural(g2)), true,
                               budget);
    rep.conditions[2] = {loose.status, loose.status == Tri::Unknown ? "search budget exhausted" : "column search"};
    rep.loose_match = loose.match;
  }
  rep.consistent = detail::decided_agree(rep.conditions);

  if (rep.congruence.witness) {
    rep.constructive = constructive_row_equivalence(g1, s1, g2, s2, *rep.congruence.witness);
    rep.constructive_ok = rep.constructive.has_value() &&
                          strict_row_equivalence(reduced_incidence(g1, rep.constructive->o1, s1),
                                                 apply_column_match(reduced_incidence(g2, rep.constructive->o2, s2),
                                                                    rep.constructive->beta,
                                                                    std::vector<int>(m, 1)))
                              .has_value();
  }

  // Unreduced statement.
  rep.rank_lemma_ok = laplacian_rank(g1) == g1.num_vertices() - num_components(g1) &&
                      laplacian_rank(g2) == g2.num_vertices() - num_components(g2);
  const bool same_nc = g1.num_vertices() == g2.num_vertices() && num_components(g1) == num_components(g2);
  auto un = decide_congruence(laplacian(g1), laplacian(g2), budget);
  if (un.status == CongruenceVerdict::Status::Congruent) {
    rep.unreduced_congruent = {Tri::True, "witness found"};
    rep.unreduced_witness = un.witness;
  } else if (un.status == CongruenceVerdict::Status::NotCongruent) {
    rep.unreduced_congruent = {Tri::False, std::string("separated by ") + to_string(un.separating_invariant->kind)};
  } else if (rep.congruence.witness && same_nc) {
    // Lift the reduced witness through the block form.
    rep.unreduced_witness = unreduced_from_reduced_witness(g1, s1, g2, s2, *rep.congruence.witness);
    if (rep.unreduced_witness) rep.unreduced_congruent = {Tri::True, "lifted from the reduced witness"};
  }
  if (c4.status != Tri::Unknown) {
    rep.unreduced_expected = c4.status == Tri::True && same_nc;
    if (rep.unreduced_congruent.status != Tri::Unknown)
      rep.unreduced_consistent = (rep.unreduced_congruent.status == Tri::True) == rep.unreduced_expected;
  }
  return rep;
}

}  // namespace lapdual

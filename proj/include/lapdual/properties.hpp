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
#include <utility>
#include <vector>

#include "lapdual/congruence.hpp"
#include "lapdual/error.hpp"
#include "lapdual/graph.hpp"
#include "lapdual/laplacian.hpp"
#include "lapdual/planarity.hpp"
#include "lapdual/property_x.hpp"
#include "lapdual/superbase.hpp"

namespace lapdual {

struct PropertyReport {
  std::string tag;
  bool passed = true;
  std::vector<std::string> details;
  std::vector<std::pair<std::string, IntMatrix>> witnesses;
  std::vector<std::vector<EdgeId>> forests;

  void check(bool ok, const std::string& what) {
    if (!ok) passed = false;
    details.push_back((ok ? "ok: " : "FAILED: ") + what);
  }
  void note(const std::string& what) { details.push_back(what); }
};

struct PropertyOptions {
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  /// Largest number of maximal forests any enumeration may visit.
  std::size_t forest_cap = 1u << 16;
  /// Forests compared pairwise by VIII* and IX*.
  std::size_t forest_sample = 12;
};

inline const std::vector<std::string>& property_tags() {
  static const std::vector<std::string> tags = {"I",  "II", "III", "IV", "V",   "VI",  "VII", "VIII", "IX",  "X",
                                                "XI", "I*", "II*", "IV*", "V*", "VI*", "VII*", "VIII*", "IX*", "X*"};
  return tags;
}

namespace detail {

/// Largest-index vertex of every component; the alternative to the default.
inline ReductionSpec alternate_reduction(const MultiGraph& g) {
  std::vector<VertexId> v0;
  for (const auto& comp : components(g)) v0.push_back(comp.back());
  return make_reduction(g, std::move(v0));
}

inline bool is_unimodular(const IntMatrix& u) {
  if (!u.is_square()) return false;
  Integer d = det_bareiss(u);
  return d == 1 || d == -1;
}

inline std::size_t count_forests(const MultiGraph& g, std::size_t cap) {
  std::size_t count = 0;
  bool over = false;
  for_each_maximal_forest(g, [&](const std::vector<EdgeId>&) {
    if (++count > cap) {
      over = true;
      return false;
    }
    return true;
  });
  if (over) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " maximal forests");
  return count;
}

inline MultiGraph induced(const MultiGraph& g, const std::vector<VertexId>& verts) {
  std::vector<VertexId> map(g.num_vertices(), g.num_vertices());
  for (std::size_t i = 0; i < verts.size(); ++i) map[verts[i]] = i;
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (map[e.u] < verts.size() && map[e.v] < verts.size()) es.push_back({map[e.u], map[e.v]});
  return MultiGraph(verts.size(), std::move(es));
}

inline MultiGraph loopless(const MultiGraph& g) { return g.without_edges(classify_edges(g).loops); }

inline std::vector<EdgeId> mask_to_edges(std::uint64_t mask) {
  std::vector<EdgeId> out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<EdgeId>(std::countr_zero(mask)));
  return out;
}

/// A deterministic 2-isomorphic copy: vertices and edges listed backwards.
inline MultiGraph scrambled_copy(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) perm[v] = n - 1 - v;
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) order[e] = g.num_edges() - 1 - e;
  return g.with_edge_order(order).relabeled(perm);
}

inline std::vector<ForestCertificate> forest_sample(const MultiGraph& g, const PropertyOptions& opt) {
  auto all = enumerate_maximal_forests(g, opt.forest_cap);
  if (all.size() <= opt.forest_sample) return all;
  std::vector<ForestCertificate> out;
  for (std::size_t i = 0; i < opt.forest_sample; ++i) out.push_back(all[i * all.size() / opt.forest_sample]);
  return out;
}

/// D_rows F D_cols relates F(M) for two orientations: flipping a cotree edge
/// negates its row and its column, flipping a forest edge negates its column.
inline IntMatrix orientation_row_signs(const MultiGraph& g, const ForestCertificate& f, const Orientation& from,
                                       const Orientation& to) {
  const std::size_t k = f.cotree_edges.size();
  IntMatrix s = IntMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = f.cotree_edges[i];
    if (from.reversed(e) != to.reversed(e) && !g.edge(e).is_loop()) s(i, i) = -1;
  }
  return s;
}

inline IntMatrix orientation_col_signs(const MultiGraph& g, const Orientation& from, const Orientation& to) {
  IntMatrix d = IntMatrix::identity(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (from.reversed(e) != to.reversed(e) && !g.edge(e).is_loop()) d(e, e) = -1;
  return d;
}

/// Z with Z * F_hat(old) = F_hat(new) when rows 1.. satisfy F(new) = U F(old).
inline IntMatrix bordered_witness(const IntMatrix& u) {
  const std::size_t k = u.rows();
  IntMatrix z(k + 1, k + 1);
  z(0, 0) = 1;
  for (std::size_t j = 0; j < k; ++j) {
    Integer col = 0;
    for (std::size_t i = 0; i < k; ++i) {
      z(i + 1, j + 1) = u(i, j);
      col += u(i, j);
    }
    z(0, j + 1) = 1 - col;
  }
  return z;
}

}  // namespace detail

/// One verifier per property tag. Each report lists the checks made and the
/// witness matrices used. Throws UnknownTag or CapExceeded.
inline PropertyReport verify_property(const MultiGraph& g, const std::string& tag, const PropertyOptions& opt = {}) {
  const auto& tags = property_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end())
    throw Error(ErrorCode::UnknownTag, "unknown property tag '" + tag + "'");
  PropertyReport rep;
  rep.tag = tag;
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  const auto classes = classify_edges(g);
  const std::size_t loops = classes.loops.size(), isthmuses = classes.isthmuses.size();
  const auto spec = default_reduction(g);
  const auto o = Orientation::natural(g);
  const auto f = maximal_forest(g);
  const IntMatrix lap = laplacian(g);
  const IntMatrix red = reduced_laplacian(g, spec);

  if (tag == "I") {
    rep.check(lap.is_symmetric(), "L(G) is symmetric");
    rep.check(red.is_symmetric(), "L_V0(G) is symmetric");
  } else if (tag == "II") {
    MultiGraph more = g;
    for (VertexId v = 0; v < n; ++v) more = more.with_edge(v, v);
    rep.check(laplacian(more) == lap, "adding a loop at every vertex leaves L unchanged");
    rep.check(laplacian(detail::loopless(g)) == lap, "removing all loops leaves L unchanged");
    rep.check(reduced_laplacian(more, spec) == red, "the same holds for L_V0");
  } else if (tag == "III") {
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[v] = n - 1 - v;
    MultiGraph h = detail::loopless(g).relabeled(perm);
    IntMatrix p(n, n);
    for (VertexId v = 0; v < n; ++v) p(perm[v], v) = 1;
    rep.witnesses.push_back({"P", p});
    rep.check(congruent_transform(p, lap) == laplacian(h),
              "relabeling the loopless graph permutes L simultaneously on rows and columns");
    if (m > 0 && !g.edge(0).is_loop()) {
      MultiGraph other = g.without_edges({0});
      rep.check(!(laplacian(other) == lap), "deleting a non-loop edge changes L");
    }
  } else if (tag == "IV") {
    bool sums = true;
    for (const auto& s : row_sums(lap)) sums = sums && s == 0;
    for (const auto& s : column_sums(lap)) sums = sums && s == 0;
    rep.check(sums, "row and column sums of L are zero");
    const std::size_t forests = detail::count_forests(g, opt.forest_cap);
    rep.check(det_bareiss(red) == Integer(forests),
              "det L_V0 = " + det_bareiss(red).str() + ", maximal forests = " + std::to_string(forests));
  } else if (tag == "V") {
    rep.check(lap.trace() == 2 * Integer(m - loops), "Tr L = " + lap.trace().str() + " = 2(m - l)");
    if (loops < m) rep.check(red.trace() < 2 * Integer(m - loops), "Tr L_V0 < 2(m - l)");
  } else if (tag == "VI") {
    auto lab = component_labels(g);
    bool off = true;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b)
        if (lab.label[a] != lab.label[b] && lap(a, b) != 0) off = false;
    rep.check(off, "entries between different components vanish");
    for (const auto& comp : components(g))
      rep.check(laplacian(detail::induced(g, comp)) == lap.select(comp, comp),
                "diagonal block of the component at vertex " + std::to_string(comp.front()) + " is its Laplacian");
  } else if (tag == "VII") {
    IntMatrix nn = incidence(g, o);
    rep.check(nn * nn.transpose() == lap, "N N^T = L");
    IntMatrix nr = reduced_incidence(g, o, spec);
    rep.check(nr * nr.transpose() == red, "N_V0 N_V0^T = L_V0");
  } else if (tag == "VIII" || tag == "IX") {
    const auto alt = detail::alternate_reduction(g);
    IntMatrix u = reduction_change_witness(g, spec, alt);
    rep.witnesses.push_back({"U", u});
    rep.check(detail::is_unimodular(u), "U is unimodular");
    if (tag == "VIII")
      rep.check(u * reduced_incidence(g, o, spec) == reduced_incidence(g, o, alt), "U N_V0 = N_V0'");
    else
      rep.check(congruent_transform(u, red) == reduced_laplacian(g, alt), "U L_V0 U^T = L_V0'");
  } else if (tag == "X") {
    MultiGraph h = detail::scrambled_copy(g);
    auto px = property_x_report(g, h, opt.budget);
    bool all_true = true;
    for (std::size_t i = 0; i < 4; ++i) {
      rep.note("condition " + std::to_string(i + 1) + ": " + to_string(px.conditions[i].status) + " (" +
               px.conditions[i].detail + ")");
      all_true = all_true && px.conditions[i].status == Tri::True;
    }
    rep.check(px.consistent, "decided conditions agree");
    rep.check(all_true, "all four conditions hold for a 2-isomorphic copy");
    rep.check(px.constructive_ok, "congruence witness rebuilds strictly row equivalent reduced incidences");
    if (px.congruence.witness) rep.witnesses.push_back({"U", px.congruence.witness->matrix()});
    if (px.constructive) rep.witnesses.push_back({"Z", px.constructive->z.matrix()});
  } else if (tag == "XI") {
    auto c = cut_block(g, o, f, spec);
    IntMatrix nm = reduced_incidence(g, o, spec).select_columns(f.forest_edges);
    rep.witnesses.push_back({"N_V0(M)", nm});
    rep.forests.push_back(f.forest_edges);
    rep.check(nm.rows() == 0 || detail::is_unimodular(nm), "N_V0(M) is unimodular");
    rep.check(congruent_transform(nm, cut_gram(c)) == red, "N_V0(M) (I + C C^T) N_V0(M)^T = L_V0");
  } else if (tag == "I*") {
    auto p = reduced_dual_laplacian(g, o, f, spec);
    rep.check(p.reduced.is_symmetric() && p.unreduced.is_symmetric(), "reduced and unreduced duals are symmetric");
  } else if (tag == "II*") {
    const IntMatrix base = reduced_dual_laplacian(g, o, f, spec).base;
    MultiGraph more = g.with_vertices(1).with_edge(0, n);
    auto f2 = f.forest_edges;
    f2.push_back(m);
    auto fc = make_forest_certificate(more, f2);
    rep.check(reduced_dual_laplacian(more, Orientation::natural(more), fc, default_reduction(more)).base == base,
              "adding an isthmus leaves I' + C^T C unchanged");
    if (isthmuses > 0) {
      MultiGraph less = g.without_edges(classes.isthmuses);
      std::vector<EdgeId> kept;
      std::size_t idx = 0;
      for (EdgeId e = 0; e < m; ++e) {
        if (std::binary_search(classes.isthmuses.begin(), classes.isthmuses.end(), e)) continue;
        if (std::binary_search(f.forest_edges.begin(), f.forest_edges.end(), e)) kept.push_back(idx);
        ++idx;
      }
      auto fl = make_forest_certificate(less, kept);
      rep.check(reduced_dual_laplacian(less, Orientation::natural(less), fl, default_reduction(less)).base == base,
                "removing the isthmuses leaves I' + C^T C unchanged");
    }
  } else if (tag == "IV*") {
    auto p = reduced_dual_laplacian(g, o, f, spec);
    IntMatrix hat = superbase_matrix(g, o, f, spec);
    IntMatrix un = hat * hat.transpose();
    bool sums = true;
    for (const auto& s : row_sums(un)) sums = sums && s == 0;
    for (const auto& s : column_sums(un)) sums = sums && s == 0;
    rep.check(sums, "rows and columns of the unreduced dual sum to zero");
    const std::size_t forests = detail::count_forests(g, opt.forest_cap);
    rep.check(det_bareiss(p.base) == Integer(forests),
              "det(I' + C^T C) = " + det_bareiss(p.base).str() + ", maximal forests = " + std::to_string(forests));
  } else if (tag == "V*") {
    const Integer bound = 2 * Integer(m - isthmuses);
    auto forests = enumerate_maximal_forests(g, opt.forest_cap);
    bool even = true, above = true;
    for (const auto& fc : forests) {
      IntMatrix hat = superbase_matrix(g, o, fc, spec);
      Integer t = (hat * hat.transpose()).trace();
      even = even && t % 2 == 0;
      above = above && t >= bound;
    }
    rep.check(even, "every F_hat(M) F_hat(M)^T over " + std::to_string(forests.size()) + " forests has even trace");
    rep.check(above, "every such trace is at least 2(m - i) = " + bound.str());
    auto s = superbase_trace_minimize(g, o, f, spec, opt.budget, opt.seed);
    rep.witnesses.push_back({"F_hat", s.f_hat});
    rep.check(s.trace >= bound && s.trace % 2 == 0,
              "descended superbase has even trace " + s.trace.str() + " >= " + bound.str());
  } else if (tag == "VI*") {
    auto comps = components(g);
    if (comps.size() <= 1) {
      rep.note("graph is connected; nothing to add");
    } else {
      MultiGraph joined = g;
      auto f2 = f.forest_edges;
      for (std::size_t k = 1; k < comps.size(); ++k) {
        joined = joined.with_edge(comps[0].front(), comps[k].front());
        f2.push_back(joined.num_edges() - 1);
      }
      auto fc = make_forest_certificate(joined, f2);
      auto a = reduced_dual_laplacian(g, o, f, spec);
      auto b = reduced_dual_laplacian(joined, Orientation::natural(joined), fc, default_reduction(joined));
      rep.check(num_components(joined) == 1, "joined graph is connected");
      rep.check(a.base == b.base && a.unreduced == b.unreduced, "joining components by isthmuses keeps both duals");
    }
  } else if (tag == "VII*") {
    IntMatrix fm = flow_matrix(g, o, f, spec);
    IntMatrix hat = superbase_matrix(g, o, f, spec);
    auto p = reduced_dual_laplacian(g, o, f, spec);
    rep.witnesses.push_back({"F", fm});
    rep.witnesses.push_back({"F_hat", hat});
    rep.witnesses.push_back({"F_hat F_hat^T", hat * hat.transpose()});
    rep.check(fm * fm.transpose() == p.base, "F F^T = I' + C^T C");
    IntMatrix un = hat * hat.transpose();
    std::vector<std::size_t> tail(fm.rows());
    std::iota(tail.begin(), tail.end(), 1);
    bool sums = true;
    for (const auto& s : row_sums(un)) sums = sums && s == 0;
    rep.check(un.select(tail, tail) == p.base && sums, "F_hat F_hat^T borders I' + C^T C with zero row sums");
  } else if (tag == "VIII*") {
    auto forests = detail::forest_sample(g, opt);
    const auto alt = detail::alternate_reduction(g);
    IntMatrix f0 = flow_matrix(g, o, forests.front(), spec);
    for (const auto& fc : forests) {
      rep.forests.push_back(fc.forest_edges);
      for (const auto* s : {&spec, &alt}) {
        IntMatrix fi = flow_matrix(g, o, fc, *s);
        auto w = strict_row_equivalence(f0, fi);
        rep.check(w.has_value() && w->matrix() * f0 == fi,
                  "F(M) for forest #" + std::to_string(rep.forests.size() - 1) + " is U F(M_0)");
      }
    }
  } else if (tag == "IX*") {
    auto forests = detail::forest_sample(g, opt);
    std::mt19937_64 rng(opt.seed);
    std::vector<bool> bits(m);
    for (EdgeId e = 0; e < m; ++e) bits[e] = rng() & 1;
    const Orientation o2(bits);
    IntMatrix f0 = flow_matrix(g, o, forests.front(), spec);
    IntMatrix l0 = f0 * f0.transpose();
    IntMatrix hat0 = superbase_matrix(g, o, forests.front(), spec);
    IntMatrix u0 = hat0 * hat0.transpose();
    for (const auto& fc : forests) {
      rep.forests.push_back(fc.forest_edges);
      // Same orientation: the row-equivalence witness is a congruence witness.
      IntMatrix fi = flow_matrix(g, o, fc, spec);
      IntMatrix u = strict_row_equivalence(f0, fi)->matrix();
      // Other orientation: F(M, o2) = S F(M, o) D.
      IntMatrix s = detail::orientation_row_signs(g, fc, o, o2);
      IntMatrix d = detail::orientation_col_signs(g, o, o2);
      IntMatrix fo = flow_matrix(g, o2, fc, spec);
      const bool sign_rule = s * fi * d == fo;
      IntMatrix w = s * u;
      rep.check(sign_rule && congruent_transform(w, l0) == fo * fo.transpose(),
                "reduced dual for forest #" + std::to_string(rep.forests.size() - 1) + " (random orientation) is W L* W^T");
      IntMatrix z = detail::bordered_witness(w);
      IntMatrix hat = superbase_matrix(g, o2, fc, spec);
      rep.check(detail::is_unimodular(z) && congruent_transform(z, u0) == hat * hat.transpose(),
                "unreduced dual is congruent through the bordered witness");
      if (rep.forests.size() == forests.size()) rep.witnesses.push_back({"W", w});
    }
  } else if (tag == "X*") {
    auto v = decide_planarity(g, opt.budget, opt.seed);
    if (v.status == PlanarityVerdict::Status::Nonplanar) {
      rep.note("graph is nonplanar (Kuratowski minor found); the property concerns planar graphs");
    } else if (v.status == PlanarityVerdict::Status::Unknown) {
      rep.check(false, "planarity undecided within budget");
    } else {
      const auto& c = *v.certificate;
      rep.witnesses.push_back({"Z", c.witness_z.matrix()});
      rep.witnesses.push_back({"U", c.laplacian_witness.matrix()});
      rep.check(c.dual_graph.num_loops() == isthmuses, "dual has as many loops as G has isthmuses");
      rep.check(check_certificate_algebra(g, c), "a reduced Laplacian of the dual is a reduced dual Laplacian of G");
      rep.check(verify_abstract_dual(g, c.dual_graph, c.edge_bijection, opt.forest_cap).passed,
                "forest complements match under the edge map");
    }
  }
  return rep;
}

}  // namespace lapdual

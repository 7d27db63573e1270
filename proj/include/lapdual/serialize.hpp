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

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lapdual/congruence.hpp"
#include "lapdual/error.hpp"
#include "lapdual/graph.hpp"
#include "lapdual/matrix.hpp"
#include "lapdual/planarity.hpp"
#include "lapdual/properties.hpp"
#include "lapdual/two_isomorphism.hpp"

namespace lapdual {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

inline std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) malformed(std::string(what) + " must be true or false");
  return j.get<bool>();
}

inline std::uint64_t as_count(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

inline Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (!j.is_string()) malformed("matrix entries must be decimal strings");
  const auto& s = j.get_ref<const std::string&>();
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) malformed("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') malformed("bad integer literal '" + s + "'");
  return Integer(s);
}

}  // namespace detail

// Graphs: {"name", "num_vertices", "edges": [[u, v], ...]}, 0-based.

inline Json to_json(const MultiGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"name", g.name()}, {"num_vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

inline MultiGraph graph_from_json(const Json& j) {
  const std::size_t n = detail::as_index(detail::field(j, "num_vertices"), "num_vertices");
  const Json& es = detail::field(j, "edges");
  if (!es.is_array()) detail::malformed("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) detail::malformed("each edge must be a pair [u, v]");
    edges.push_back({detail::as_index(e[0], "endpoint"), detail::as_index(e[1], "endpoint")});
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) detail::malformed("name must be a string");
    name = j["name"].get<std::string>();
  }
  return MultiGraph(n, std::move(edges), std::move(name));
}

// Matrices: {"rows", "cols", "data": [["1", "-2"], ...]}.

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

inline IntMatrix matrix_from_json(const Json& j) {
  const std::size_t r = detail::as_index(detail::field(j, "rows"), "rows");
  const std::size_t c = detail::as_index(detail::field(j, "cols"), "cols");
  const Json& es = detail::field(j, "data");
  if (!es.is_array() || es.size() != r) detail::malformed("data must hold 'rows' rows");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!es[i].is_array() || es[i].size() != c) detail::malformed("every row must hold 'cols' entries");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = detail::parse_integer(es[i][k]);
  }
  return m;
}

inline Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Json to_json(const Orientation& o) {
  Json a = Json::array();
  for (bool b : o.bits()) a.push_back(b ? 1 : 0);
  return a;
}

inline Orientation orientation_from_json(const Json& j) {
  if (!j.is_array()) detail::malformed("orientation must be an array of 0/1");
  std::vector<bool> bits;
  for (const auto& b : j) {
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) detail::malformed("orientation bits are 0 or 1");
    bits.push_back(b.get<int>() == 1);
  }
  return Orientation(std::move(bits));
}

inline Json index_array(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline std::vector<std::size_t> index_array_from_json(const Json& j) {
  if (!j.is_array()) detail::malformed("expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(detail::as_index(x, "index"));
  return out;
}

// Congruence verdicts: {"status", "witness", "separating_invariant"}.

inline Json to_json(const CongruenceVerdict& v) {
  Json sep = nullptr;
  if (v.separating_invariant)
    sep = Json{{"kind", to_string(v.separating_invariant->kind)},
               {"left", v.separating_invariant->left},
               {"right", v.separating_invariant->right}};
  return Json{{"status", to_string(v.status)},
              {"witness", v.witness ? to_json(v.witness->matrix()) : Json(nullptr)},
              {"separating_invariant", std::move(sep)},
              {"steps", v.steps}};
}

inline CongruenceVerdict verdict_from_json(const Json& j) {
  CongruenceVerdict v;
  const auto status = detail::as_string(detail::field(j, "status"), "status");
  if (status == "Congruent") v.status = CongruenceVerdict::Status::Congruent;
  else if (status == "NotCongruent") v.status = CongruenceVerdict::Status::NotCongruent;
  else if (status == "Unknown") v.status = CongruenceVerdict::Status::Unknown;
  else detail::malformed("unknown verdict status '" + status + "'");
  const Json& w = detail::field(j, "witness");
  if (!w.is_null()) v.witness = UnimodularWitness(matrix_from_json(w));
  const Json& s = detail::field(j, "separating_invariant");
  if (!s.is_null()) {
    const auto kind = detail::as_string(detail::field(s, "kind"), "kind");
    SeparatingInvariant sep{InvariantKind::Size, detail::as_string(detail::field(s, "left"), "left"),
                            detail::as_string(detail::field(s, "right"), "right")};
    bool known = false;
    for (auto k : {InvariantKind::Size, InvariantKind::Rank, InvariantKind::Det, InvariantKind::Inertia, InvariantKind::Snf})
      if (kind == to_string(k)) sep.kind = k, known = true;
    if (!known) detail::malformed("unknown invariant '" + kind + "'");
    v.separating_invariant = std::move(sep);
  }
  if (j.contains("steps")) v.steps = detail::as_count(j["steps"], "steps");
  return v;
}

// Dual certificates.

inline Json to_json(const DualCertificate& c) {
  return Json{{"dual_graph", to_json(c.dual_graph)},
              {"dual_orientation", to_json(c.dual_orientation)},
              {"witness_z", to_json(c.witness_z.matrix())},
              {"beta", index_array(c.edge_bijection)},
              {"trace", c.trace.str()},
              {"forest", index_array(c.forest.forest_edges)},
              {"orientation", to_json(c.orientation)},
              {"a", to_json(c.a)},
              {"laplacian_witness", to_json(c.laplacian_witness.matrix())}};
}

/// Parses a certificate for the given source graph; the algebra is not
/// trusted and must be rechecked by the caller.
inline DualCertificate certificate_from_json(const Json& j, const MultiGraph& g) {
  DualCertificate c;
  c.dual_graph = graph_from_json(detail::field(j, "dual_graph"));
  c.dual_orientation = orientation_from_json(detail::field(j, "dual_orientation"));
  c.witness_z = UnimodularWitness(matrix_from_json(detail::field(j, "witness_z")));
  c.edge_bijection = index_array_from_json(detail::field(j, "beta"));
  c.trace = detail::parse_integer(detail::field(j, "trace"));
  c.forest = make_forest_certificate(g, index_array_from_json(detail::field(j, "forest")));
  c.orientation = orientation_from_json(detail::field(j, "orientation"));
  c.a = matrix_from_json(detail::field(j, "a"));
  c.laplacian_witness = UnimodularWitness(matrix_from_json(detail::field(j, "laplacian_witness")));
  return c;
}

inline Json to_json(const KuratowskiEvidence& ev) {
  Json sets = Json::array();
  for (const auto& s : ev.branch_sets) sets.push_back(index_array(s));
  return Json{{"kind", to_string(ev.kind)}, {"branch_sets", std::move(sets)}};
}

inline KuratowskiEvidence evidence_from_json(const Json& j) {
  KuratowskiEvidence ev;
  const auto kind = detail::as_string(detail::field(j, "kind"), "kind");
  if (kind == "K5") ev.kind = KuratowskiEvidence::Kind::K5;
  else if (kind == "K3,3") ev.kind = KuratowskiEvidence::Kind::K33;
  else detail::malformed("unknown minor kind '" + kind + "'");
  const Json& sets = detail::field(j, "branch_sets");
  if (!sets.is_array()) detail::malformed("branch_sets must be an array");
  for (const auto& s : sets) ev.branch_sets.push_back(index_array_from_json(s));
  return ev;
}

inline Json to_json(const PlanarityVerdict& v) {
  return Json{{"status", to_string(v.status)},
              {"certificate", v.certificate ? to_json(*v.certificate) : Json(nullptr)},
              {"evidence", v.evidence ? to_json(*v.evidence) : Json(nullptr)},
              {"best_trace", v.best_trace.str()},
              {"target_trace", v.target_trace.str()},
              {"descent_steps", v.descent_steps},
              {"minor_states", v.minor_states}};
}

inline PlanarityVerdict planarity_verdict_from_json(const Json& j, const MultiGraph& g) {
  PlanarityVerdict v;
  const auto status = detail::as_string(detail::field(j, "status"), "status");
  if (status == "Planar") v.status = PlanarityVerdict::Status::Planar;
  else if (status == "Nonplanar") v.status = PlanarityVerdict::Status::Nonplanar;
  else if (status == "Unknown") v.status = PlanarityVerdict::Status::Unknown;
  else detail::malformed("unknown planarity status '" + status + "'");
  if (const Json& c = detail::field(j, "certificate"); !c.is_null()) v.certificate = certificate_from_json(c, g);
  if (const Json& e = detail::field(j, "evidence"); !e.is_null()) v.evidence = evidence_from_json(e);
  v.best_trace = detail::parse_integer(detail::field(j, "best_trace"));
  v.target_trace = detail::parse_integer(detail::field(j, "target_trace"));
  v.descent_steps = detail::as_count(detail::field(j, "descent_steps"), "descent_steps");
  v.minor_states = detail::as_count(detail::field(j, "minor_states"), "minor_states");
  return v;
}

inline Json to_json(const TwoIsoResult& r) {
  const char* status = r.status == TwoIsoResult::Status::TwoIsomorphic      ? "TwoIsomorphic"
                       : r.status == TwoIsoResult::Status::NotTwoIsomorphic ? "NotTwoIsomorphic"
                                                                            : "BudgetExceeded";
  return Json{{"status", status},
              {"bijection", r.bijection ? index_array(*r.bijection) : Json(nullptr)},
              {"reason", r.reason},
              {"steps", r.steps}};
}

inline TwoIsoResult two_iso_from_json(const Json& j) {
  TwoIsoResult r;
  const auto status = detail::as_string(detail::field(j, "status"), "status");
  if (status == "TwoIsomorphic") r.status = TwoIsoResult::Status::TwoIsomorphic;
  else if (status == "NotTwoIsomorphic") r.status = TwoIsoResult::Status::NotTwoIsomorphic;
  else if (status == "BudgetExceeded") r.status = TwoIsoResult::Status::BudgetExceeded;
  else detail::malformed("unknown 2-isomorphism status '" + status + "'");
  if (const Json& b = detail::field(j, "bijection"); !b.is_null()) r.bijection = index_array_from_json(b);
  r.reason = detail::as_string(detail::field(j, "reason"), "reason");
  r.steps = detail::as_count(detail::field(j, "steps"), "steps");
  return r;
}

inline Json to_json(const PropertyReport& r) {
  Json w = Json::array();
  for (const auto& [name, m] : r.witnesses) w.push_back(Json{{"name", name}, {"matrix", to_json(m)}});
  Json f = Json::array();
  for (const auto& fs : r.forests) f.push_back(index_array(fs));
  return Json{{"tag", r.tag}, {"passed", r.passed}, {"details", r.details}, {"witnesses", std::move(w)},
              {"forests", std::move(f)}};
}

inline PropertyReport property_report_from_json(const Json& j) {
  PropertyReport r;
  r.tag = detail::as_string(detail::field(j, "tag"), "tag");
  r.passed = detail::as_bool(detail::field(j, "passed"), "passed");
  const Json& d = detail::field(j, "details");
  if (!d.is_array()) detail::malformed("details must be an array");
  for (const auto& x : d) r.details.push_back(detail::as_string(x, "detail"));
  const Json& w = detail::field(j, "witnesses");
  if (!w.is_array()) detail::malformed("witnesses must be an array");
  for (const auto& x : w)
    r.witnesses.emplace_back(detail::as_string(detail::field(x, "name"), "name"),
                             matrix_from_json(detail::field(x, "matrix")));
  const Json& f = detail::field(j, "forests");
  if (!f.is_array()) detail::malformed("forests must be an array");
  for (const auto& x : f) r.forests.push_back(index_array_from_json(x));
  return r;
}

inline Json to_json(const DualReport& r) {
  return Json{{"passed", r.passed}, {"detail", r.detail}, {"forests1", r.forests1}, {"forests2", r.forests2}};
}

inline DualReport dual_report_from_json(const Json& j) {
  DualReport r;
  r.passed = detail::as_bool(detail::field(j, "passed"), "passed");
  r.detail = detail::as_string(detail::field(j, "detail"), "detail");
  r.forests1 = detail::as_count(detail::field(j, "forests1"), "forests1");
  r.forests2 = detail::as_count(detail::field(j, "forests2"), "forests2");
  return r;
}

inline Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

/// Graphviz text; edges are labelled e1.. like the printed examples.
inline std::string to_dot(const MultiGraph& g, const std::optional<Orientation>& o = std::nullopt) {
  std::ostringstream out;
  const bool directed = o.has_value();
  std::string name;
  for (char ch : g.name().empty() ? std::string("G") : g.name()) {
    if (ch == '"' || ch == '\\') name += '\\';
    name += ch;
  }
  out << (directed ? "digraph" : "graph") << " \"" << name << "\" {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "  v" << v + 1 << ";\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    VertexId a = directed ? o->tail(g, e) : g.edge(e).u;
    VertexId b = directed ? o->head(g, e) : g.edge(e).v;
    out << "  v" << a + 1 << (directed ? " -> " : " -- ") << "v" << b + 1 << " [label=\"e" << e + 1 << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lapdual

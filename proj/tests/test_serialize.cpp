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

#include <gtest/gtest.h>

#include "lapdual/serialize.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lapdual;
using fixture::mat;

namespace {

ErrorCode parse_error(const std::string& text, bool matrix) {
  try {
    auto j = Json::parse(text);
    if (matrix) matrix_from_json(j);
    else graph_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidMatrix;  // sentinel: nothing thrown
}

// Emitted text re-parses and re-emits byte for byte.
template <typename T, typename Parse>
void expect_text_round_trip(const T& value, Parse parse) {
  const std::string once = to_json(value).dump();
  const std::string twice = to_json(parse(Json::parse(once))).dump();
  EXPECT_EQ(once, twice);
}

}  // namespace

TEST(Json, GraphRoundTrip) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_multigraph(rng, 1 + t % 7, t % 10, false, 0.2);
    auto back = graph_from_json(Json::parse(to_json(g).dump()));
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    ASSERT_EQ(back.num_edges(), g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(back.edge(e).u, g.edge(e).u);
      EXPECT_EQ(back.edge(e).v, g.edge(e).v);
    }
  }
}

TEST(Json, MatrixRoundTripAndBignums) {
  IntMatrix a = mat({{1, -2}, {0, 3}});
  a(1, 0) = Integer("-98765432109876543210987654321");
  auto j = to_json(a);
  EXPECT_EQ(j["data"][1][0], "-98765432109876543210987654321");
  EXPECT_EQ(j["data"][0][0], "1");
  EXPECT_EQ(matrix_from_json(Json::parse(j.dump())), a);
  EXPECT_EQ(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"data":[[1,-4]]})")), mat({{1, -4}}));
  auto empty = matrix_from_json(Json::parse(to_json(IntMatrix(0, 3)).dump()));
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 3u);
}

TEST(Json, MalformedInputs) {
  for (const char* bad : {R"({"edges":[]})", R"({"num_vertices":2,"edges":[[0]]})",
                          R"({"num_vertices":-1,"edges":[]})", R"({"num_vertices":2,"edges":[["a",1]]})",
                          R"([1,2])", R"({"num_vertices":2,"edges":{}})"})
    EXPECT_EQ(parse_error(bad, false), ErrorCode::MalformedInput) << bad;
  EXPECT_EQ(parse_error(R"({"num_vertices":2,"edges":[[0,2]]})", false), ErrorCode::InvalidGraph);
  for (const char* bad : {R"({"rows":1,"cols":1})", R"({"rows":1,"cols":2,"data":[["1"]]})",
                          R"({"rows":1,"cols":1,"data":[["1x"]]})", R"({"rows":1,"cols":1,"data":[[""]]})",
                          R"({"rows":1,"cols":1,"data":[[1.5]]})", R"({"rows":2,"cols":1,"data":[["1"]]})"})
    EXPECT_EQ(parse_error(bad, true), ErrorCode::MalformedInput) << bad;
}

TEST(Json, CongruenceVerdictRoundTrip) {
  auto yes = decide_congruence(fixture::k3_laplacian(), fixture::theta_second_dual(), 1'000'000);
  expect_text_round_trip(yes, verdict_from_json);
  auto back = verdict_from_json(Json::parse(to_json(yes).dump()));
  EXPECT_EQ(back.status, yes.status);
  EXPECT_EQ(back.witness->matrix(), yes.witness->matrix());
  auto no = decide_congruence(mat({{3}}), mat({{12}}), 10);
  expect_text_round_trip(no, verdict_from_json);
  auto nb = verdict_from_json(Json::parse(to_json(no).dump()));
  EXPECT_EQ(nb.separating_invariant->kind, InvariantKind::Det);
  EXPECT_EQ(nb.separating_invariant->right, "12");
  EXPECT_TRUE(to_json(no)["witness"].is_null());
}

TEST(Json, PlanarityRoundTrip) {
  for (const auto& g : {fixture::bowtie_bridge(), fixture::k33(), fixture::apex_square()}) {
    auto v = decide_planarity(g, 1'000'000, 0);
    expect_text_round_trip(v, [&](const Json& j) { return planarity_verdict_from_json(j, g); });
    auto back = planarity_verdict_from_json(Json::parse(to_json(v).dump()), g);
    EXPECT_EQ(back.status, v.status);
    if (v.certificate) {
      EXPECT_EQ(back.certificate->witness_z.matrix(), v.certificate->witness_z.matrix());
      EXPECT_EQ(back.certificate->edge_bijection, v.certificate->edge_bijection);
      EXPECT_TRUE(check_certificate_algebra(g, *back.certificate));
    }
  }
}

TEST(Json, OtherReportsRoundTrip) {
  auto iso = decide_2_isomorphism_bruteforce(fixture::k4(), fixture::k4(), 100000);
  expect_text_round_trip(iso, two_iso_from_json);
  auto no = decide_2_isomorphism_bruteforce(fixture::theta(), fixture::triangle(), 100000);
  expect_text_round_trip(no, two_iso_from_json);
  auto rep = verify_property(fixture::bowtie_bridge(), "IX*");
  expect_text_round_trip(rep, property_report_from_json);
  auto dual = verify_abstract_dual(fixture::theta(), fixture::triangle(), {0, 1, 2});
  expect_text_round_trip(dual, dual_report_from_json);
  KuratowskiEvidence ev{KuratowskiEvidence::Kind::K33, {{0}, {1}, {2}, {3, 7}, {4}, {5}}};
  expect_text_round_trip(ev, evidence_from_json);
}

TEST(Json, OutputIsDeterministic) {
  auto a = to_json(decide_planarity(fixture::apex_square(), 1'000'000, 3)).dump(2);
  auto b = to_json(decide_planarity(fixture::apex_square(), 1'000'000, 3)).dump(2);
  EXPECT_EQ(a, b);
}

TEST(Dot, RendersEdgesWithLabels) {
  auto th = fixture::theta();
  auto dot = to_dot(th);
  EXPECT_NE(dot.find("graph \"theta\""), std::string::npos);
  EXPECT_NE(dot.find("v1 -- v2 [label=\"e3\"]"), std::string::npos);
  auto directed = to_dot(th, Orientation::natural(th).flipped(1));
  EXPECT_NE(directed.find("v2 -> v1 [label=\"e2\"]"), std::string::npos);
  EXPECT_NE(to_dot(MultiGraph(1, {}, "a\"b")).find("\"a\\\"b\""), std::string::npos);
}

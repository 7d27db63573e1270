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

#include <random>

#include "lapdual/congruence.hpp"
#include "lapdual/laplacian.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lapdual;
using fixture::mat;

namespace {

MultiGraph quadrupled(const MultiGraph& g) {
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    for (int k = 0; k < 4; ++k) es.push_back(e);
  return MultiGraph(g.num_vertices(), es);
}

IntMatrix reduced_k3() {
  auto g = fixture::triangle();
  return reduced_laplacian(g, default_reduction(g));
}

void expect_replays(const CongruenceVerdict& v, const IntMatrix& a, const IntMatrix& b) {
  ASSERT_EQ(v.status, CongruenceVerdict::Status::Congruent);
  ASSERT_TRUE(v.witness);
  auto d = det_bareiss(v.witness->matrix());
  EXPECT_TRUE(d == 1 || d == -1);
  EXPECT_EQ(congruent_transform(v.witness->matrix(), a), b);
}

}  // namespace

TEST(Invariants, QuadrupledTriangleIsSeparatedByDeterminant) {
  auto a = congruence_invariants(reduced_k3());
  auto q = quadrupled(fixture::triangle());
  auto b = congruence_invariants(reduced_laplacian(q, default_reduction(q)));
  EXPECT_EQ(a.det, 3);
  EXPECT_EQ(b.det, Integer(oracle::forests_by_subsets(q).size()));
  EXPECT_EQ(b.det, 48);
  auto sep = separating_invariant(a, b);
  ASSERT_TRUE(sep);
  EXPECT_EQ(sep->kind, InvariantKind::Det);
}

TEST(Invariants, IdenticalAndThetaDuals) {
  auto a = congruence_invariants(reduced_k3());
  EXPECT_FALSE(separating_invariant(a, congruence_invariants(reduced_k3())));
  auto x = congruence_invariants(fixture::k3_laplacian());
  auto y = congruence_invariants(fixture::theta_second_dual());
  EXPECT_FALSE(separating_invariant(x, y));
  EXPECT_EQ(x.rank, 2u);
  EXPECT_EQ(x.snf, y.snf);
}

TEST(Invariants, NotSymmetric) {
  try {
    congruence_invariants(mat({{1, 2}, {3, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(DecideCongruence, SameMatrix) {
  auto a = fixture::bowtie_superbase_gram();
  auto v = decide_congruence(a, a, 1000);
  expect_replays(v, a, a);
  EXPECT_EQ(v.witness->matrix(), IntMatrix::identity(4));
}

TEST(DecideCongruence, ThetaUnreducedDuals) {
  auto a = fixture::k3_laplacian(), b = fixture::theta_second_dual();
  expect_replays(decide_congruence(a, b, 1'000'000), a, b);
  expect_replays(decide_congruence(b, a, 1'000'000), b, a);
}

TEST(DecideCongruence, ScaledByFour) {
  auto a = reduced_k3();
  auto v = decide_congruence(a, Integer(4) * a, 1000);
  ASSERT_EQ(v.status, CongruenceVerdict::Status::NotCongruent);
  ASSERT_TRUE(v.separating_invariant);
  EXPECT_EQ(v.separating_invariant->kind, InvariantKind::Det);
  EXPECT_EQ(v.separating_invariant->left, "3");
  EXPECT_EQ(v.separating_invariant->right, "48");
}

TEST(DecideCongruence, SeparatedBySizeRankInertiaSnf) {
  using K = InvariantKind;
  auto kind = [](const IntMatrix& a, const IntMatrix& b) {
    auto v = decide_congruence(a, b, 1000);
    EXPECT_EQ(v.status, CongruenceVerdict::Status::NotCongruent);
    return v.separating_invariant ? v.separating_invariant->kind : K::Size;
  };
  EXPECT_EQ(kind(mat({{1}}), mat({{1, 0}, {0, 1}})), K::Size);
  EXPECT_EQ(kind(mat({{1, 0}, {0, 0}}), mat({{1, 0}, {0, 1}})), K::Rank);
  EXPECT_EQ(kind(mat({{1, 0}, {0, 1}}), mat({{-1, 0}, {0, -1}})), K::Inertia);
  EXPECT_EQ(kind(mat({{1, 0}, {0, 4}}), mat({{2, 0}, {0, 2}})), K::Snf);
}

TEST(DecideCongruence, SearchFindsNonDiagonalWitness) {
  expect_replays(decide_congruence(mat({{1, 0}, {0, 1}}), mat({{2, 1}, {1, 1}}), 1000), mat({{1, 0}, {0, 1}}),
                 mat({{2, 1}, {1, 1}}));
}

TEST(DecideCongruence, EvenAndOddFormsStayUndecided) {
  // Equal size, det, inertia and Smith form, but one form is even and the
  // other odd: not congruent, and no prefilter invariant can say so.
  auto w = decide_congruence(mat({{0, 1}, {1, 0}}), mat({{1, 0}, {0, -1}}), 2000);
  EXPECT_EQ(w.status, CongruenceVerdict::Status::Unknown);
  EXPECT_FALSE(w.witness);
}

TEST(DecideCongruence, RandomConjugatesOfLaplacians) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_multigraph(rng, 3 + t % 3, 4 + t % 4, true, 0.0);
    auto a = reduced_laplacian(g, default_reduction(g));
    auto u = oracle::random_unimodular(rng, a.rows(), 6);
    auto b = congruent_transform(u, a);
    auto v = decide_congruence(a, b, 1'000'000);
    if (v.status == CongruenceVerdict::Status::Unknown) continue;  // budget only
    expect_replays(v, a, b);
  }
}

TEST(DecideCongruence, NotSymmetricInput) {
  try {
    decide_congruence(mat({{0, 1}, {0, 0}}), mat({{0, 1}, {0, 0}}), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(StrictRowEquivalence, TwoReductions) {
  auto g = fixture::bowtie_bridge();
  auto o = Orientation::natural(g);
  auto a = reduced_incidence(g, o, make_reduction(g, {2}));
  auto b = reduced_incidence(g, o, make_reduction(g, {6}));
  auto w = strict_row_equivalence(a, b);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->matrix() * a, b);
}

TEST(StrictRowEquivalence, TwoTreesOfK4) {
  auto g = fixture::k4();
  auto o = Orientation::natural(g);
  auto s = default_reduction(g);
  auto a = flow_matrix(g, o, make_forest_certificate(g, {0, 1, 2}), s);
  auto b = flow_matrix(g, o, make_forest_certificate(g, {2, 3, 4}), s);
  auto w = strict_row_equivalence(a, b);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->matrix() * a, b);
}

TEST(StrictRowEquivalence, Negatives) {
  EXPECT_FALSE(strict_row_equivalence(mat({{1, 0}}), mat({{2, 0}})));
  EXPECT_FALSE(strict_row_equivalence(mat({{1, 0}}), mat({{1, 0}, {0, 0}})));
  try {
    strict_row_equivalence(mat({{1, 0}}), mat({{1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}

TEST(LooseRowEquivalence, Examples) {
  auto a = mat({{1, 2, 3}, {0, 1, 1}});
  auto padded = vstack(a, IntMatrix(1, 3));
  auto r = loose_row_equivalence(a, padded);
  ASSERT_TRUE(r.equivalent);
  EXPECT_EQ(r.witness->matrix() * pad_rows(a, r.padded_rows), pad_rows(padded, r.padded_rows));

  auto k3 = fixture::triangle();
  auto o = Orientation::natural(k3);
  EXPECT_TRUE(loose_row_equivalence(incidence(k3, o), reduced_incidence(k3, o, default_reduction(k3))).equivalent);
  EXPECT_FALSE(loose_row_equivalence(mat({{2, 0}}), mat({{1, 0}})).equivalent);
}

TEST(SignedCanonical, InvariantUnderSignedPermutations) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 4;
    auto b = oracle::random_matrix(rng, n, n, -2, 2);
    IntMatrix a = b + b.transpose();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    IntMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, p[i]) = (rng() & 1) ? 1 : -1;
    auto ca = signed_canonical_form(a), cb = signed_canonical_form(congruent_transform(q, a));
    EXPECT_EQ(ca.matrix, cb.matrix);
    EXPECT_EQ(congruent_transform(ca.q, a), ca.matrix);
  }
}

TEST(SplitRadical, SeparatesKernel) {
  auto l = fixture::k3_laplacian();
  auto s = split_radical(l);
  auto t = congruent_transform(s.v, l);
  EXPECT_EQ(s.core.rows(), 2u);
  EXPECT_EQ(t, direct_sum(s.core, IntMatrix(1, 1)));
}

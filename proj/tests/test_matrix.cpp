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

#include <cmath>

#include <random>

#include "lapdual/normal_form.hpp"
#include "support/oracles.hpp"

using namespace lapdual;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> v;
  for (auto r : rows) v.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(v);
}

bool divisibility_chain(const std::vector<Integer>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0) {
      if (d[i + 1] != 0) return false;
    } else if (d[i + 1] % d[i] != 0) {
      return false;
    }
  }
  return true;
}

bool is_row_hnf(const IntMatrix& h) {
  std::size_t lead = 0;
  bool zero_seen = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    if (i > 0 && j < lead) return false;
    if (h(i, j) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, j) < 0 || h(k, j) >= h(i, j)) return false;
    lead = j + 1;
  }
  return true;
}

}  // namespace

TEST(Determinant, Identity) { EXPECT_EQ(det_bareiss(IntMatrix::identity(3)), 1); }

TEST(Determinant, ReducedLaplacianOfTriangle) {
  IntMatrix l = M({{2, -1}, {-1, 2}});
  EXPECT_EQ(det_bareiss(l), 3);
  EXPECT_EQ(det_bareiss(l), Integer(oracle::forests_by_subsets(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}})).size()));
}

TEST(Determinant, NotSquare) {
  try {
    det_bareiss(IntMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 6;
    auto a = oracle::random_matrix(rng, n, n, -9, 9);
    EXPECT_EQ(det_bareiss(a), oracle::det_cofactor(a));
  }
}

TEST(Determinant, NoOverflowOnLargeEntries) {
  Integer big("123456789012345678901234567890");
  IntMatrix a = M({{1, 0}, {0, 1}});
  a(0, 0) = big;
  a(1, 1) = big;
  EXPECT_EQ(det_bareiss(a), big * big);
}

TEST(Hermite, ZeroMatrix) {
  auto r = hermite_normal_form(IntMatrix(2, 3));
  EXPECT_TRUE(r.h.is_zero());
  EXPECT_EQ(r.u.matrix(), IntMatrix::identity(2));
  EXPECT_EQ(r.rank, 0u);
}

TEST(Hermite, SmallExample) {
  IntMatrix a = M({{2, 4}, {1, 1}});
  auto r = hermite_normal_form(a);
  EXPECT_EQ(r.h, M({{1, 1}, {0, 2}}));
  EXPECT_EQ(r.u.matrix() * a, r.h);
  auto d = det_bareiss(r.u.matrix());
  EXPECT_TRUE(d == 1 || d == -1);
}

TEST(Hermite, RandomMatricesGiveCanonicalForms) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
    auto a = oracle::random_matrix(rng, r, c);
    auto h = hermite_normal_form(a);
    EXPECT_EQ(h.u.matrix() * a, h.h);
    EXPECT_TRUE(is_row_hnf(h.h));
    EXPECT_EQ(h.rank, oracle::rank_rational(a));
    // Same lattice after a unimodular change of rows: same form.
    auto u = oracle::random_unimodular(rng, r);
    EXPECT_EQ(hermite_normal_form(u * a).h, h.h);
  }
}

TEST(Smith, Identity) {
  auto s = smith_normal_form(IntMatrix::identity(4));
  EXPECT_EQ(s.diag, std::vector<Integer>(4, 1));
}

TEST(Smith, ReducedLaplacianOfTriangle) {
  IntMatrix l = M({{2, -1}, {-1, 2}});
  auto s = smith_normal_form(l);
  EXPECT_EQ(s.diag, (std::vector<Integer>{1, 3}));
  EXPECT_EQ(s.diag, oracle::smith_by_minors(l));
}

TEST(Smith, ZeroMatrix) {
  auto s = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(s.diag, std::vector<Integer>(2, 0));
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    auto a = oracle::random_matrix(rng, r, c, -6, 6);
    auto s = smith_normal_form(a);
    EXPECT_EQ(s.diag, oracle::smith_by_minors(a));
    EXPECT_TRUE(divisibility_chain(s.diag));
    EXPECT_EQ(s.left.matrix() * a * s.right.matrix(), s.diagonal_matrix(r, c));
  }
}

TEST(Smith, CongruentMatricesShareDiagonal) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + t % 4;
    auto b = oracle::random_matrix(rng, n, n);
    IntMatrix a = b + b.transpose();
    auto u = oracle::random_unimodular(rng, n);
    EXPECT_EQ(smith_normal_form(congruent_transform(u, a)).diag, smith_normal_form(a).diag);
  }
}

TEST(InverseUnimodular, Examples) {
  EXPECT_EQ(inverse_unimodular(M({{-1}})), M({{-1}}));
  EXPECT_EQ(inverse_unimodular(IntMatrix::identity(3)), IntMatrix::identity(3));
  try {
    inverse_unimodular(M({{2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
  }
}

TEST(InverseUnimodular, RandomRoundTrip) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 6;
    auto u = oracle::random_unimodular(rng, n, 20);
    auto v = inverse_unimodular(u);
    EXPECT_EQ(u * v, IntMatrix::identity(n));
    EXPECT_EQ(v * u, IntMatrix::identity(n));
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(M({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), (Inertia{2, 0, 1}));
  EXPECT_EQ(inertia(M({{0}})), (Inertia{0, 0, 1}));
  EXPECT_EQ(inertia(M({{6, -3, -1, -2}, {-3, 3, 0, 0}, {-1, 0, 3, -2}, {-2, 0, -2, 4}})), (Inertia{3, 0, 1}));
  EXPECT_EQ(inertia(M({{0, 1}, {1, 0}})), (Inertia{1, 1, 0}));
  try {
    inertia(M({{0, 1}, {0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(Inertia, MatchesRationalOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 6;
    auto b = oracle::random_matrix(rng, n, n, -2, 2);
    IntMatrix a = b + b.transpose();
    auto got = inertia(a);
    auto want = oracle::inertia_rational(a);
    EXPECT_EQ(got.positive, want.pos);
    EXPECT_EQ(got.negative, want.neg);
    EXPECT_EQ(got.zero, want.zero);
  }
}

TEST(Witness, RejectsNonUnimodular) {
  EXPECT_THROW(UnimodularWitness(M({{2, 0}, {0, 1}})), Error);
  EXPECT_THROW(UnimodularWitness(IntMatrix(2, 3)), Error);
  EXPECT_NO_THROW(UnimodularWitness(M({{2, 1}, {1, 1}})));
}

TEST(Division, FloorAndNearestForEverySignPair) {
  for (int a = -9; a <= 9; ++a)
    for (int b : {-4, -3, -1, 1, 2, 5}) {
      Integer f = floor_div(Integer(a), Integer(b));
      EXPECT_EQ(f, static_cast<int>(std::floor(static_cast<double>(a) / b))) << a << "/" << b;
      Integer q = nearest_div(Integer(a), Integer(b));
      Integer r = Integer(a) - q * b;
      EXPECT_LE(2 * abs(r), abs(Integer(b))) << a << "/" << b;
    }
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(floor_div(Integer(7), Integer(-2)), -4);
  EXPECT_EQ(nearest_div(Integer(7), Integer(-3)), -2);
  EXPECT_EQ(nearest_div(Integer(-8), Integer(-3)), 3);
}

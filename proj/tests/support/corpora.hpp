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

// Seeded graph corpora for the property suites and the acceptance run.

#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "support/oracles.hpp"

namespace corpus {

using lapdual::Edge;
using lapdual::MultiGraph;
using lapdual::VertexId;

inline MultiGraph shuffled(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> es;
  for (const auto& e : g.edges()) es.push_back((rng() & 1) ? Edge{perm[e.u], perm[e.v]} : Edge{perm[e.v], perm[e.u]});
  std::shuffle(es.begin(), es.end(), rng);
  return MultiGraph(g.num_vertices(), es, g.name());
}

inline MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  std::vector<Edge> es = a.edges();
  for (const auto& e : b.edges()) es.push_back({e.u + a.num_vertices(), e.v + a.num_vertices()});
  return MultiGraph(a.num_vertices() + b.num_vertices(), es);
}

// Vertex x of b is glued onto vertex y of a; further gluings likewise.
inline MultiGraph glued(const MultiGraph& a, const MultiGraph& b, const std::vector<std::pair<VertexId, VertexId>>& pins) {
  std::vector<VertexId> map(b.num_vertices(), 0);
  std::size_t next = a.num_vertices();
  for (VertexId x = 0; x < b.num_vertices(); ++x) {
    bool pinned = false;
    for (auto [bx, ay] : pins)
      if (bx == x) {
        map[x] = ay;
        pinned = true;
      }
    if (!pinned) map[x] = next++;
  }
  std::vector<Edge> es = a.edges();
  for (const auto& e : b.edges()) es.push_back({map[e.u], map[e.v]});
  return MultiGraph(next, es);
}

// Connected multigraphs with n <= 5 and m <= 8: every small shape first,
// then seeded random ones (loops and parallels included).
inline std::vector<MultiGraph> matrix_tree_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<MultiGraph> out;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : oracle::connected_simple_catalog(n))
      if (g.num_edges() <= 8) out.push_back(g);
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    std::size_t n = 1 + rng() % 5;
    std::size_t m = (n - 1) + rng() % (9 - (n - 1));
    out.push_back(oracle::random_multigraph(rng, n, m, true, 0.12));
  }
  return out;
}

struct Pair {
  MultiGraph g1;
  MultiGraph g2;
  std::string kind;
};

// Pairs with equal loop counts and m <= 8. About half are 2-isomorphic by
// construction (relabeling, Whitney twists, block re-gluing).
inline std::vector<Pair> property_x_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Pair> out;
  auto small = [&](std::size_t n, std::size_t m) { return oracle::random_multigraph(rng, n, m, true, 0.1); };
  while (out.size() < count) {
    switch (out.size() % 6) {
      case 0: {
        auto g = small(2 + rng() % 4, 2 + rng() % 7);
        out.push_back({g, shuffled(g, rng), "relabeled"});
        break;
      }
      case 1: {
        // Twist b about the 2-separation {a0, a1}.
        auto a = oracle::random_multigraph(rng, 3 + rng() % 2, 3 + rng() % 2, true, 0.0);
        auto b = oracle::random_multigraph(rng, 3, 3, true, 0.0);
        auto straight = glued(a, b, {{0, 0}, {1, 1}});
        auto twisted = glued(a, b, {{0, 1}, {1, 0}});
        out.push_back({straight, shuffled(twisted, rng), "twist"});
        break;
      }
      case 2: {
        auto a = small(2 + rng() % 3, 2 + rng() % 3);
        auto b = small(2 + rng() % 2, 1 + rng() % 3);
        auto one = glued(a, b, {{0, rng() % a.num_vertices()}});
        out.push_back({disjoint_union(a, b), shuffled(one, rng), "block-union"});
        break;
      }
      case 3: {
        // Same n, m and loop count, otherwise random.
        std::size_t n = 2 + rng() % 4, m = n - 1 + rng() % (9 - n + 1);
        auto g = oracle::random_multigraph(rng, n, m, true, 0.0);
        auto h = oracle::random_multigraph(rng, n, m, true, 0.0);
        out.push_back({g, h, "random"});
        break;
      }
      case 4: {
        // One edge moved.
        auto g = oracle::random_multigraph(rng, 3 + rng() % 3, 4 + rng() % 5, true, 0.0);
        auto es = g.edges();
        std::size_t k = rng() % es.size();
        es[k].v = (es[k].v + 1) % g.num_vertices();
        if (es[k].v == es[k].u) es[k].v = (es[k].v + 1) % g.num_vertices();
        out.push_back({g, MultiGraph(g.num_vertices(), es), "rewired"});
        break;
      }
      default: {
        // One more loop on each side, placed differently.
        auto g = small(2 + rng() % 4, 2 + rng() % 6);
        auto h = shuffled(g, rng);
        out.push_back({g.with_edge(0, 0), h.with_edge(h.num_vertices() - 1, h.num_vertices() - 1), "loops"});
        break;
      }
    }
  }
  return out;
}

}  // namespace corpus

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

// The worked-example graphs and their published matrices.

#pragma once

#include <initializer_list>
#include <vector>

#include "lapdual/graph.hpp"
#include "lapdual/matrix.hpp"

namespace fixture {

using lapdual::Integer;
using lapdual::IntMatrix;
using lapdual::MultiGraph;

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> v;
  for (auto r : rows) v.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(v);
}

// Two vertices, three parallel edges.
inline MultiGraph theta() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}, "theta"); }

inline MultiGraph triangle() { return MultiGraph(3, {{0, 1}, {0, 2}, {1, 2}}, "K3"); }

// Two triangles joined by a bridge; edges e1..e9 directed as drawn.
inline MultiGraph bowtie_bridge() {
  return MultiGraph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}}, "bowtie-bridge");
}
inline std::vector<lapdual::EdgeId> bowtie_tree() { return {0, 1, 3, 4, 5, 7}; }

// Its drawn dual: 4 vertices, a loop at v2, directed as drawn.
inline MultiGraph bowtie_dual() {
  return MultiGraph(4, {{1, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 3}, {3, 2}, {2, 0}, {0, 3}, {3, 0}}, "bowtie-dual");
}

// Square with a diagonal and an apex joined to all four corners.
inline MultiGraph apex_square() {
  return MultiGraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {2, 4}, {1, 4}, {0, 4}, {3, 4}}, "apex-square");
}

inline MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "K4"); }

inline MultiGraph k5() {
  std::vector<lapdual::Edge> es;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) es.push_back({i, j});
  return MultiGraph(5, es, "K5");
}

inline MultiGraph k33() {
  std::vector<lapdual::Edge> es;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) es.push_back({i, j});
  return MultiGraph(6, es, "K3,3");
}

inline MultiGraph petersen() {
  std::vector<lapdual::Edge> es;
  for (std::size_t i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return MultiGraph(10, es, "Petersen");
}

inline IntMatrix bowtie_incidence() {
  return mat({{-1, -1, 0, 0, 0, 0, 0, 0, 0},
              {1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 1, 1, -1, 0, 0, 0, 0, 0},
              {0, 0, 0, 1, -1, -1, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, -1, -1, 0},
              {0, 0, 0, 0, 0, 1, 1, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 1, 1}});
}

inline IntMatrix bowtie_flow() {
  return mat({{-1, 1, -1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, -1, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1, 0, 1, -1}});
}

inline IntMatrix bowtie_superbase_gram() {
  return mat({{6, -3, -1, -2}, {-3, 3, 0, 0}, {-1, 0, 3, -2}, {-2, 0, -2, 4}});
}

inline IntMatrix k3_laplacian() { return mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }

inline IntMatrix theta_second_dual() { return mat({{2, 1, -3}, {1, 2, -3}, {-3, -3, 6}}); }

}  // namespace fixture

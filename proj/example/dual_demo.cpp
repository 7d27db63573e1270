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

// Builds the dual of a small planar graph and prints both Laplacians.
//   dual_demo [graph.json]

#include <fstream>
#include <iostream>

#include "lapdual/lapdual.hpp"

using namespace lapdual;

namespace {

void print(const char* title, const IntMatrix& m) {
  std::cout << title << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "  ") << m(i, j);
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  // Two triangles joined by a bridge, as a default.
  MultiGraph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}, "bowtie");
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot read " << argv[1] << '\n';
      return 1;
    }
    g = graph_from_json(Json::parse(in));
  }

  auto verdict = decide_planarity(g, 1'000'000, 0);
  std::cout << g.name() << ": " << to_string(verdict.status) << '\n';
  if (!verdict.certificate) {
    if (verdict.evidence) std::cout << "minor: " << to_string(verdict.evidence->kind) << '\n';
    return 0;
  }
  const auto& cert = *verdict.certificate;
  print("reduced Laplacian of the dual:", reduced_laplacian(cert.dual_graph, default_reduction(cert.dual_graph)));
  print("reduced dual Laplacian of the input:", reduced_dual_laplacian(g, cert.orientation, cert.forest,
                                                                       default_reduction(g)).reduced);
  print("witness U:", cert.laplacian_witness.matrix());
  auto report = verify_abstract_dual(g, cert.dual_graph, cert.edge_bijection);
  std::cout << "forest complements map to forests: " << (report.passed ? "yes" : "no") << " (" << report.forests1
            << " forests)\n";
  std::cout << to_dot(cert.dual_graph, cert.dual_orientation);
  return 0;
}

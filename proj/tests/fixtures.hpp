#pragma once

#include <string>
#include <utility>
#include <vector>

#include "etg4/constructors.hpp"
#include "etg4/graph.hpp"
#include "etg4/lattice.hpp"

namespace fixtures {

struct Named {
  std::string name;
  etg4::Graph graph;
};

inline etg4::Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return etg4::Graph::from_edge_list(10, e);
}

inline etg4::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return etg4::Graph::from_edge_list(n, e);
}

inline etg4::Graph lattice_quotient(const char* text) {
  return etg4::coset_quotient(etg4::parse_lattice(text)).embedding.graph;
}

// Graphs small enough for the quartic and factorial oracles.
inline std::vector<Named> small_graphs() {
  using namespace etg4;
  return {
      {"k44", complete_bipartite(4, 4)},
      {"k55-m", k55_minus_matching()},
      {"co-heawood", co_heawood()},
      {"q4", hypercube(4)},
      {"cm2:5", cm2(5)},
      {"cm2:6", cm2(6)},
      {"2x:k5", two_times(circulant(5, {1, 2}))},
      {"lattice13", lattice_quotient("3 2; -2 3")},
      {"square:k5", square_product(k5_affine_base().graph, k5_affine_base().group).graph},
      {"petersen", petersen()},
      {"k5", circulant(5, {1, 2})},
      {"c6", circulant(6, {1})},
      {"k33", complete_bipartite(3, 3)},
      {"p4", path(4)},
  };
}

}  // namespace fixtures

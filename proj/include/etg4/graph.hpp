#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace etg4 {

using Vertex = int;

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Ordered pair of adjacent vertices.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

/// A 4-cycle as a vertex sequence c0-c1-c2-c3-c0, stored as the least
/// rotation/reflection: c0 is the minimum vertex and c1 < c3.
using FourCycle = std::array<Vertex, 4>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable.
///
/// Neighbour lists are sorted; edges are numbered in lexicographic order of
/// (u, v) and that numbering is stable, so edge ids can key external arrays.
class Graph {
 public:
  Graph() = default;

  /// Builds the simple graph on n vertices. Repeated pairs (in either order)
  /// collapse; a loop or an endpoint >= n throws MalformedInput.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  /// Edge ids aligned with neighbors(v).
  std::span<const int> incident_edges(Vertex v) const { return inc_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const;
  /// Id of edge {u,v}, or -1.
  int edge_id(Vertex u, Vertex v) const;

  /// Graph with every vertex v renamed to mapping[v]; mapping must be a
  /// permutation of 0..n-1.
  Graph relabeled(std::span<const int> mapping) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> inc_;
};

/// Per-edge 4-cycle counts, indexed by edge id. uniform_k is set when every
/// count equals the same positive value.
struct FrequencyReport {
  std::vector<int> per_edge;
  std::optional<int> uniform_k;
  std::int64_t total_cycles = 0;
};

/// |N(u) ∩ N(v)| for every vertex pair.
class PairCounts {
 public:
  PairCounts(int n, std::vector<int> counts) : n_(n), counts_(std::move(counts)) {}
  int at(Vertex u, Vertex v) const { return counts_.at(static_cast<std::size_t>(u) * n_ + v); }
  int size() const noexcept { return n_; }
  /// Largest count over distinct pairs (0 when n < 2).
  int max_off_diagonal() const;

 private:
  int n_;
  std::vector<int> counts_;
};

struct Bipartition {
  std::vector<Vertex> part0;
  std::vector<Vertex> part1;
};

struct CloneQuotient {
  Graph graph;
  std::vector<int> projection;              // vertex -> class id
  std::vector<std::vector<Vertex>> classes;  // ordered by smallest member
};

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_regular(const Graph& g, int degree);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// All 4-cycles, each listed once in canonical form, sorted.
std::vector<FourCycle> four_cycles(const Graph& g);
FrequencyReport four_cycle_census(const Graph& g);

PairCounts common_neighbor_matrix(const Graph& g);
/// Some pair of distinct vertices has >= 3 common neighbours.
bool has_k32(const Graph& g);
/// Some pair of distinct vertices has >= 4 common neighbours.
bool has_k42(const Graph& g);

std::vector<std::vector<Vertex>> clone_partition(const Graph& g);
CloneQuotient clone_quotient(const Graph& g);

/// Graph on E(g): two edges adjacent iff consecutive on one of the faces.
/// Throws Embedding unless every face is a 4-cycle of g and every edge lies
/// on exactly two faces.
Graph medial_graph(const Graph& g, std::span<const FourCycle> faces);

/// 2-colouring with each component's smallest vertex in part0; nullopt if
/// g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace etg4

#include "etg4/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "etg4/error.hpp"

namespace etg4 {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  require(n >= 0, ErrorKind::MalformedInput, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      fail(ErrorKind::MalformedInput, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                          ") out of range for " + std::to_string(n) + " vertices");
    }
    if (a == b) fail(ErrorKind::MalformedInput, "loop at vertex " + std::to_string(a));
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  g.inc_.assign(n, {});
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto [u, v] = g.edges_[id];
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    g.inc_[v].reserve(nb.size());
  }
  // inc_[v][i] is the id of edge {v, adj_[v][i]}.
  for (int v = 0; v < n; ++v) {
    for (Vertex w : g.adj_[v]) {
      const Edge key{std::min(v, w), std::max(v, w)};
      auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), key);
      g.inc_[v].push_back(static_cast<int>(it - g.edges_.begin()));
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_id(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return inc_[u][static_cast<std::size_t>(it - nb.begin())];
}

Graph Graph::relabeled(std::span<const int> mapping) const {
  require(static_cast<int>(mapping.size()) == n_, ErrorKind::ContractViolation,
          "relabeling has wrong length");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) pairs.emplace_back(mapping[e.u], mapping[e.v]);
  Graph out = from_edge_list(n_, pairs);
  require(out.edge_count() == edge_count(), ErrorKind::ContractViolation,
          "relabeling is not a bijection");
  return out;
}

int PairCounts::max_off_diagonal() const {
  int best = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) best = std::max(best, at(u, v));
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != degree) return false;
  return true;
}

std::optional<int> girth(const Graph& g) {
  // For each edge {u,v}: BFS from u without that edge; the shortest cycle
  // through it has length dist(u,v) + 1. Depth is capped below the best
  // cycle found so far.
  const int n = g.vertex_count();
  int best = 0;
  std::vector<int> dist(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (const auto& e : g.edges()) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[e.u] = 0;
    queue.push_back(e.u);
    int found = 0;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      const Vertex x = queue[head];
      if (best && dist[x] + 2 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (x == e.u && y == e.v) continue;
        if (dist[y] != -1) continue;
        dist[y] = dist[x] + 1;
        if (y == e.v) {
          found = dist[y] + 1;
          break;
        }
        queue.push_back(y);
      }
    }
    if (found && (!best || found < best)) best = found;
    if (best == 3) break;
  }
  if (!best) return std::nullopt;
  return best;
}

std::vector<FourCycle> four_cycles(const Graph& g) {
  // The cycle u-b-c-d with u minimal and b < d is found exactly once: from
  // u, over the neighbour pair (b,d), at their common neighbour c.
  std::vector<FourCycle> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex b = nb[i];
      if (b < u) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex d = nb[j];
        const auto nd = g.neighbors(d);
        for (Vertex c : g.neighbors(b)) {
          if (c <= u || c == d) continue;
          if (std::binary_search(nd.begin(), nd.end(), c)) out.push_back({u, b, c, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FrequencyReport four_cycle_census(const Graph& g) {
  FrequencyReport report;
  report.per_edge.assign(g.edge_count(), 0);
  std::int64_t sum = 0;
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto [u, v] = g.edge(id);
    const auto nv = g.neighbors(v);
    int count = 0;
    for (Vertex a : g.neighbors(u)) {
      if (a == v) continue;
      for (Vertex b : g.neighbors(a)) {
        if (b == u || b == v) continue;
        if (std::binary_search(nv.begin(), nv.end(), b)) ++count;
      }
    }
    report.per_edge[id] = count;
    sum += count;
  }
  report.total_cycles = sum / 4;
  if (!report.per_edge.empty() &&
      std::all_of(report.per_edge.begin(), report.per_edge.end(),
                  [&](int c) { return c == report.per_edge.front(); }) &&
      report.per_edge.front() > 0) {
    report.uniform_k = report.per_edge.front();
  }
  return report;
}

PairCounts common_neighbor_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> counts(static_cast<std::size_t>(n) * n, 0);
  for (Vertex w = 0; w < n; ++w) {
    const auto nb = g.neighbors(w);
    for (Vertex a : nb)
      for (Vertex b : nb) ++counts[static_cast<std::size_t>(a) * n + b];
  }
  return PairCounts(n, std::move(counts));
}

bool has_k32(const Graph& g) { return common_neighbor_matrix(g).max_off_diagonal() >= 3; }
bool has_k42(const Graph& g) { return common_neighbor_matrix(g).max_off_diagonal() >= 4; }

std::vector<std::vector<Vertex>> clone_partition(const Graph& g) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighborhood;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    by_neighborhood[std::vector<Vertex>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<std::vector<Vertex>> classes;
  classes.reserve(by_neighborhood.size());
  for (auto& [key, members] : by_neighborhood) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

CloneQuotient clone_quotient(const Graph& g) {
  CloneQuotient q;
  q.classes = clone_partition(g);
  q.projection.assign(g.vertex_count(), -1);
  for (int c = 0; c < static_cast<int>(q.classes.size()); ++c)
    for (Vertex v : q.classes[c]) q.projection[v] = c;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(q.projection[e.u], q.projection[e.v]);
  // Clones are never adjacent (N(u) = N(v) and no loops), so no pair collapses
  // to a loop.
  q.graph = Graph::from_edge_list(static_cast<int>(q.classes.size()), pairs);
  return q;
}

Graph medial_graph(const Graph& g, std::span<const FourCycle> faces) {
  std::vector<int> coverage(g.edge_count(), 0);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& f : faces) {
    std::array<int, 4> ids{};
    for (int i = 0; i < 4; ++i) {
      ids[i] = g.edge_id(f[i], f[(i + 1) % 4]);
      require(ids[i] >= 0, ErrorKind::Embedding, "face side is not an edge of the graph");
      ++coverage[ids[i]];
    }
    for (int i = 0; i < 4; ++i) pairs.emplace_back(ids[i], ids[(i + 1) % 4]);
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    require(coverage[id] == 2, ErrorKind::Embedding,
            "edge " + std::to_string(id) + " lies on " + std::to_string(coverage[id]) +
                " faces, expected 2");
  }
  return Graph::from_edge_list(g.edge_count(), pairs);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.part0 : parts.part1).push_back(v);
  return parts;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : a.edges()) pairs.emplace_back(e.u, e.v);
  const int shift = a.vertex_count();
  for (const auto& e : b.edges()) pairs.emplace_back(e.u + shift, e.v + shift);
  return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), pairs);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) pairs.emplace_back(index[e.u], index[e.v]);
  return Graph::from_edge_list(static_cast<int>(vertices.size()), pairs);
}

}  // namespace etg4

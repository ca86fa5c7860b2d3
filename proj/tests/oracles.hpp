#pragma once

// Brute-force reference computations. They read only the raw edge list of a
// Graph and share no code with the library, so agreement is independent
// evidence.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "etg4/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(const etg4::Graph& g) {
  const int n = g.vertex_count();
  Matrix a(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Counts bijections preserving adjacency by running through all n!.
inline std::uint64_t automorphism_count(const etg4::Graph& g) {
  const int n = g.vertex_count();
  const Matrix a = adjacency(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& e : g.edges())
      if (!a[p[e.u]][p[e.v]]) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Per-edge 4-cycle counts from every 4-subset and its three cyclic orders.
inline std::vector<std::vector<int>> four_cycles_per_pair(const etg4::Graph& g, std::int64_t* total = nullptr) {
  const int n = g.vertex_count();
  const Matrix a = adjacency(g);
  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  std::int64_t cycles = 0;
  for (int w = 0; w < n; ++w)
    for (int x = w + 1; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          const std::array<std::array<int, 4>, 3> orders{{{w, x, y, z}, {w, x, z, y}, {w, y, x, z}}};
          for (const auto& c : orders) {
            bool cyc = true;
            for (int i = 0; i < 4; ++i) cyc = cyc && a[c[i]][c[(i + 1) % 4]];
            if (!cyc) continue;
            ++cycles;
            for (int i = 0; i < 4; ++i) {
              ++count[c[i]][c[(i + 1) % 4]];
              ++count[c[(i + 1) % 4]][c[i]];
            }
          }
        }
  if (total) *total = cycles;
  return count;
}

// Common 4-cycle count over all edges, if uniform and positive.
inline std::optional<int> uniform_frequency(const etg4::Graph& g) {
  const auto c = four_cycles_per_pair(g);
  std::set<int> seen;
  for (const auto& e : g.edges()) seen.insert(c[e.u][e.v]);
  if (seen.size() != 1 || *seen.begin() == 0) return std::nullopt;
  return *seen.begin();
}

inline std::vector<int> bfs_distances(const Matrix& a, int source, int skip_u = -1, int skip_v = -1) {
  const int n = static_cast<int>(a.size());
  std::vector<int> d(n, -1);
  std::queue<int> q;
  d[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y = 0; y < n; ++y) {
      if (!a[x][y] || d[y] >= 0) continue;
      if ((x == skip_u && y == skip_v) || (x == skip_v && y == skip_u)) continue;
      d[y] = d[x] + 1;
      q.push(y);
    }
  }
  return d;
}

// Shortest cycle through each edge is 1 + the distance between its ends with
// the edge removed.
inline std::optional<int> girth(const etg4::Graph& g) {
  const Matrix a = adjacency(g);
  std::optional<int> best;
  for (const auto& e : g.edges()) {
    const int d = bfs_distances(a, e.u, e.u, e.v)[e.v];
    if (d > 0 && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

inline bool connected(const etg4::Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto d = bfs_distances(adjacency(g), 0);
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

inline int max_common_neighbors(const etg4::Graph& g) {
  const int n = g.vertex_count();
  const Matrix a = adjacency(g);
  int best = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = 0;
      for (int w = 0; w < n; ++w) c += a[u][w] && a[v][w];
      best = std::max(best, c);
    }
  return best;
}

// Vertices grouped by identical neighbourhood rows.
inline std::set<std::vector<int>> clone_classes(const etg4::Graph& g) {
  const int n = g.vertex_count();
  const Matrix a = adjacency(g);
  std::vector<bool> done(n, false);
  std::set<std::vector<int>> out;
  for (int u = 0; u < n; ++u) {
    if (done[u]) continue;
    std::vector<int> cls;
    for (int v = u; v < n; ++v)
      if (a[u] == a[v]) {
        cls.push_back(v);
        done[v] = true;
      }
    out.insert(cls);
  }
  return out;
}

// Number of 4-cycles containing the path u-v-w, for every such path.
inline std::set<int> path_completion_counts(const etg4::Graph& g) {
  const int n = g.vertex_count();
  const Matrix a = adjacency(g);
  std::set<int> counts;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w) {
        if (!a[v][u] || !a[v][w]) continue;
        int c = 0;
        for (int x = 0; x < n; ++x) c += x != v && a[u][x] && a[w][x];
        counts.insert(c);
      }
  return counts;
}

// Closure of a generating set by breadth-first multiplication.
inline std::set<std::vector<int>> group_closure(int degree, const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::queue<std::vector<int>> q;
  q.push(id);
  while (!q.empty()) {
    const auto x = q.front();
    q.pop();
    for (const auto& s : gens) {
      std::vector<int> y(degree);
      for (int i = 0; i < degree; ++i) y[i] = s[x[i]];
      if (seen.insert(y).second) q.push(y);
    }
  }
  return seen;
}

}  // namespace oracle

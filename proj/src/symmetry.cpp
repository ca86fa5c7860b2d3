#include "etg4/symmetry.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>

#include "etg4/error.hpp"

namespace etg4 {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser over the running hash
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_ints(const std::vector<int>& xs) {
  std::uint64_t h = xs.size();
  for (int x : xs) h = mix(h, static_cast<std::uint64_t>(x));
  return h;
}

// Ordered partition of the vertex set. Cells are identified by their start
// position in `elems`, which makes cell ids label-invariant.
struct Partition {
  std::vector<int> elems;
  std::vector<int> cell_of;
  std::vector<int> cell_len;
  int cells = 0;
};

Partition initial_partition(const Graph& g) {
  const int n = g.vertex_count();
  const PairCounts cn = common_neighbor_matrix(g);
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    key[v].push_back(g.degree(v));
    std::vector<int> counts;
    for (int u = 0; u < n; ++u)
      if (u != v && cn.at(u, v) > 0) counts.push_back(cn.at(u, v));
    std::sort(counts.begin(), counts.end());
    key[v].insert(key[v].end(), counts.begin(), counts.end());
  }
  Partition p;
  p.elems.resize(n);
  std::iota(p.elems.begin(), p.elems.end(), 0);
  std::stable_sort(p.elems.begin(), p.elems.end(), [&](int a, int b) { return key[a] < key[b]; });
  p.cell_of.assign(n, 0);
  p.cell_len.assign(n, 0);
  int start = 0;
  for (int pos = 0; pos <= n; ++pos) {
    if (pos == n || (pos > start && key[p.elems[pos]] != key[p.elems[start]])) {
      if (pos > start) {
        p.cell_len[start] = pos - start;
        for (int q = start; q < pos; ++q) p.cell_of[p.elems[q]] = start;
        ++p.cells;
      }
      start = pos;
    }
  }
  return p;
}

// Equitable refinement. Returns a label-invariant hash of the splits made.
std::uint64_t refine(const Graph& g, Partition& p) {
  const int n = g.vertex_count();
  std::uint64_t trace = 0x51ed270b27a1c9e3ULL;
  std::vector<std::vector<int>> sig(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      for (Vertex u : g.neighbors(v)) s.push_back(p.cell_of[u]);
      std::sort(s.begin(), s.end());
    }
    bool split = false;
    for (int start = 0; start < n;) {
      const int len = p.cell_len[start];
      if (len > 1) {
        auto first = p.elems.begin() + start;
        std::sort(first, first + len, [&](int a, int b) {
          return sig[a] != sig[b] ? sig[a] < sig[b] : a < b;
        });
        int sub = start;
        for (int pos = start + 1; pos <= start + len; ++pos) {
          if (pos == start + len || sig[p.elems[pos]] != sig[p.elems[sub]]) {
            if (sub != start || pos != start + len) {
              split = true;
              p.cell_len[sub] = pos - sub;
              for (int q = sub; q < pos; ++q) p.cell_of[p.elems[q]] = sub;
              trace = mix(trace, static_cast<std::uint64_t>(sub) << 32 | static_cast<std::uint32_t>(pos - sub));
              trace = mix(trace, hash_ints(sig[p.elems[sub]]));
              if (sub != start) ++p.cells;
            }
            sub = pos;
          }
        }
      }
      start += len;
    }
    if (!split) break;
  }
  return mix(trace, static_cast<std::uint64_t>(p.cells));
}

void individualize(Partition& p, int v) {
  const int start = p.cell_of[v];
  const int len = p.cell_len[start];
  auto it = std::find(p.elems.begin() + start, p.elems.begin() + start + len, v);
  std::rotate(p.elems.begin() + start, it, it + 1);
  p.cell_len[start] = 1;
  p.cell_len[start + 1] = len - 1;
  for (int q = start + 1; q < start + len; ++q) p.cell_of[p.elems[q]] = start + 1;
  ++p.cells;
}

using EdgeList = std::vector<std::pair<int, int>>;

// Compares a (possibly partial) trace sequence against a reference over their
// common length.
int compare_prefix(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  void run() {
    Partition p = initial_partition(g_);
    std::vector<int> path;
    std::vector<std::uint64_t> traces{refine(g_, p)};
    dfs(p, path, traces);
  }

  std::vector<Permutation> generators;
  std::vector<int> best_lab;

 private:
  struct Leaf {
    std::vector<int> path;
    std::vector<std::uint64_t> traces;
    std::vector<int> lab;
    EdgeList edges;
  };

  int dfs(const Partition& p, std::vector<int>& path, std::vector<std::uint64_t>& traces) {
    if (p.cells == n_) return leaf(p, path, traces);
    const int depth = static_cast<int>(path.size());
    int target = 0;
    while (p.cell_len[target] == 1) target += 1;
    std::vector<int> candidates(p.elems.begin() + target, p.elems.begin() + target + p.cell_len[target]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> processed;
    for (int w : candidates) {
      if (in_processed_orbit(w, processed, path)) continue;
      processed.push_back(w);
      Partition child = p;
      individualize(child, w);
      path.push_back(w);
      traces.push_back(refine(g_, child));
      bool keep = true;
      if (first_) {
        const bool eq_first = traces.size() <= first_->traces.size() &&
                              std::equal(traces.begin(), traces.end(), first_->traces.begin());
        keep = eq_first || compare_prefix(traces, best_->traces) >= 0;
      }
      int back = INT_MAX;
      if (keep) back = dfs(child, path, traces);
      path.pop_back();
      traces.pop_back();
      if (back < depth) return back;
    }
    return INT_MAX;
  }

  int leaf(const Partition& p, const std::vector<int>& path, const std::vector<std::uint64_t>& traces) {
    Leaf current{path, traces, std::vector<int>(n_), {}};
    for (int pos = 0; pos < n_; ++pos) current.lab[p.elems[pos]] = pos;
    current.edges.reserve(g_.edge_count());
    for (const auto& e : g_.edges()) {
      const int a = current.lab[e.u], b = current.lab[e.v];
      current.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(current.edges.begin(), current.edges.end());

    if (!first_) {
      first_ = current;
      best_ = std::move(current);
      return INT_MAX;
    }
    if (current.traces == first_->traces && current.edges == first_->edges) {
      add_generator(p, first_->lab);
      std::size_t common = 0;
      while (common < path.size() && common < first_->path.size() && path[common] == first_->path[common]) ++common;
      return static_cast<int>(common);
    }
    int cmp = current.traces < best_->traces ? -1 : (current.traces > best_->traces ? 1 : 0);
    if (cmp == 0) cmp = current.edges < best_->edges ? -1 : (current.edges > best_->edges ? 1 : 0);
    if (cmp == 0) {
      add_generator(p, best_->lab);
    } else if (cmp > 0) {
      best_ = std::move(current);
    }
    return INT_MAX;
  }

  // gamma = lab_current^{-1} o lab_other
  void add_generator(const Partition& p, const std::vector<int>& other_lab) {
    std::vector<int> images(n_);
    for (int v = 0; v < n_; ++v) images[v] = p.elems[other_lab[v]];
    Permutation gamma(std::move(images));
    if (gamma.is_identity()) return;
    if (std::find(generators.begin(), generators.end(), gamma) != generators.end()) return;
    generators.push_back(std::move(gamma));
  }

  bool in_processed_orbit(int w, const std::vector<int>& processed, const std::vector<int>& path) const {
    if (processed.empty() || generators.empty()) return false;
    std::vector<Permutation> fixing;
    for (const auto& gen : generators) {
      if (std::all_of(path.begin(), path.end(), [&](int x) { return gen(x) == x; })) fixing.push_back(gen);
    }
    if (fixing.empty()) return false;
    // Orbit of w under the pointwise stabiliser of the path.
    std::vector<char> seen(n_, 0);
    std::vector<int> orbit{w};
    seen[w] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& gen : fixing) {
        const int y = gen(orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    return std::any_of(processed.begin(), processed.end(), [&](int x) { return seen[x] != 0; });
  }

  const Graph& g_;
  int n_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;

 public:
  const std::vector<int>& best_labeling() const { return best_->lab; }
  bool empty() const { return !best_; }
};

struct SearchOutput {
  std::vector<Permutation> generators;
  std::vector<int> labeling;
};

SearchOutput run_search(const Graph& g) {
  SearchOutput out;
  if (g.vertex_count() == 0) return out;
  Search search(g);
  search.run();
  out.labeling = search.best_labeling();
  // Drop generators already implied by earlier ones.
  const int n = g.vertex_count();
  for (const auto& gen : search.generators) {
    if (!out.generators.empty() && StabilizerChain(n, out.generators).contains(gen)) continue;
    out.generators.push_back(gen);
  }
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  require(EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) == 1,
          ErrorKind::ContractViolation, "SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::vector<int> induced_on_edges(const Graph& g, const Permutation& p) {
  std::vector<int> images(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    images[id] = g.edge_id(p(e.u), p(e.v));
  }
  return images;
}

std::vector<int> induced_on_arcs(const Graph& g, const Permutation& p) {
  std::vector<int> images(2 * g.edge_count());
  for (int a = 0; a < 2 * g.edge_count(); ++a) {
    const Arc arc = arc_from_id(g, a);
    images[a] = arc_id(g, {p(arc.tail), p(arc.head)});
  }
  return images;
}

}  // namespace

GeneratedGroup automorphism_group(const Graph& g) {
  auto out = run_search(g);
  return GeneratedGroup(g.vertex_count(), std::move(out.generators));
}

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm cf;
  cf.labeling = run_search(g).labeling;
  cf.graph = g.relabeled(cf.labeling);
  std::string text = std::to_string(cf.graph.vertex_count()) + ";";
  for (const auto& e : cf.graph.edges()) text += std::to_string(e.u) + "," + std::to_string(e.v) + ";";
  cf.certificate = sha256_hex(text);
  return cf;
}

std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  const auto cg = canonical_form(g);
  const auto ch = canonical_form(h);
  if (!(cg.graph == ch.graph)) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<int> inverse_h(n);
  for (int v = 0; v < n; ++v) inverse_h[ch.labeling[v]] = v;
  std::vector<int> images(n);
  for (int v = 0; v < n; ++v) images[v] = inverse_h[cg.labeling[v]];
  Permutation phi(std::move(images));
  require(g.relabeled(phi.images()) == h, ErrorKind::ContractViolation, "isomorphism failed to verify");
  return phi;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (const auto& e : g.edges())
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  return true;
}

Arc arc_from_id(const Graph& g, int id) {
  const Edge& e = g.edge(id / 2);
  return id % 2 == 0 ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

int arc_id(const Graph& g, Arc arc) {
  const int e = g.edge_id(arc.tail, arc.head);
  if (e < 0) return -1;
  return 2 * e + (arc.tail < arc.head ? 0 : 1);
}

std::vector<std::vector<int>> orbits(const GeneratedGroup& group, const Graph& g, ActsOn on) {
  require(group.degree() == g.vertex_count(), ErrorKind::ContractViolation,
          "group degree differs from vertex count");
  for (const auto& gen : group.generators())
    require(is_automorphism(g, gen), ErrorKind::ContractViolation, "generator is not an automorphism");
  if (on == ActsOn::Vertices) return point_orbits(g.vertex_count(), group.generators());
  std::vector<Permutation> induced;
  int degree = 0;
  for (const auto& gen : group.generators()) {
    induced.emplace_back(on == ActsOn::Edges ? induced_on_edges(g, gen) : induced_on_arcs(g, gen));
  }
  degree = on == ActsOn::Edges ? g.edge_count() : 2 * g.edge_count();
  return point_orbits(degree, induced);
}

bool is_vertex_transitive(const Graph& g) {
  return orbits(automorphism_group(g), g, ActsOn::Vertices).size() <= 1;
}

bool is_edge_transitive(const Graph& g) {
  return orbits(automorphism_group(g), g, ActsOn::Edges).size() <= 1;
}

bool is_arc_transitive(const Graph& g) {
  return orbits(automorphism_group(g), g, ActsOn::Arcs).size() <= 1;
}

GeneratedGroup vertex_stabilizer(const GeneratedGroup& group, Vertex v) {
  require(v >= 0 && v < group.degree(), ErrorKind::Precondition, "vertex out of range");
  const int base[] = {v};
  StabilizerChain chain(group.degree(), group.generators(), base);
  if (chain.level_count() < 2) return GeneratedGroup::trivial(group.degree());
  return GeneratedGroup(group.degree(), chain.level_generators(1));
}

PairOrbits stabilizer_pair_orbits(const GeneratedGroup& group, const Graph& g, Vertex v) {
  require(g.degree(v) == 4, ErrorKind::Precondition,
          "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", expected 4");
  const GeneratedGroup stab = vertex_stabilizer(group, v);
  PairOrbits out;
  const auto inc = g.incident_edges(v);
  std::copy(inc.begin(), inc.end(), out.incident_edges.begin());
  const auto nb = g.neighbors(v);

  // pairs indexed lexicographically: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  std::array<std::pair<int, int>, 6> pairs{};
  std::map<std::pair<int, int>, int> pair_index;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      pairs[k] = {i, j};
      pair_index[{i, j}] = k++;
    }
  std::vector<Permutation> on_pairs;
  for (const auto& gen : stab.generators()) {
    require(is_automorphism(g, gen), ErrorKind::ContractViolation, "generator is not an automorphism");
    std::array<int, 4> local{};
    for (int i = 0; i < 4; ++i)
      local[i] = static_cast<int>(std::find(nb.begin(), nb.end(), gen(nb[i])) - nb.begin());
    std::vector<int> images(6);
    for (int p = 0; p < 6; ++p) {
      const int a = local[pairs[p].first], b = local[pairs[p].second];
      images[p] = pair_index.at({std::min(a, b), std::max(a, b)});
    }
    on_pairs.emplace_back(std::move(images));
  }
  for (const auto& orbit : point_orbits(6, on_pairs)) {
    std::vector<std::pair<int, int>> as_edges;
    for (int p : orbit) {
      const int a = out.incident_edges[pairs[p].first], b = out.incident_edges[pairs[p].second];
      as_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(as_edges.begin(), as_edges.end());
    out.orbits.push_back(std::move(as_edges));
  }
  std::sort(out.orbits.begin(), out.orbits.end());
  for (int i = 0; i < static_cast<int>(out.orbits.size()); ++i) {
    if (out.orbits[i].size() == 4) {
      require(!out.size4_orbit, ErrorKind::ContractViolation, "two pair orbits of size four");
      out.size4_orbit = i;
    }
  }
  return out;
}

std::string to_string(StabilizerAction action) {
  switch (action) {
    case StabilizerAction::Dihedral8: return "dihedral8";
    case StabilizerAction::Cyclic4: return "cyclic4";
    case StabilizerAction::Klein4: return "klein4";
    case StabilizerAction::Other: return "other";
  }
  return "other";
}

StabilizerAction classify_stabilizer_action(const GeneratedGroup& group, const Graph& g, Vertex v) {
  const PairOrbits po = stabilizer_pair_orbits(group, g, v);
  require(po.size4_orbit.has_value(), ErrorKind::Precondition,
          "no pair orbit of size four at vertex " + std::to_string(v));
  const auto nb = g.neighbors(v);
  std::vector<Permutation> local_gens;
  const GeneratedGroup stab = vertex_stabilizer(group, v);
  for (const auto& gen : stab.generators()) {
    std::vector<int> images(4);
    for (int i = 0; i < 4; ++i)
      images[i] = static_cast<int>(std::find(nb.begin(), nb.end(), gen(nb[i])) - nb.begin());
    local_gens.emplace_back(std::move(images));
  }
  const auto elements = GeneratedGroup(4, local_gens).elements();
  const bool has_four_cycle = std::any_of(elements.begin(), elements.end(), [](const Permutation& p) {
    for (int x = 0; x < 4; ++x)
      if (p(p(x)) != x && p(p(p(p(x)))) == x && p(p(p(x))) != x) return true;
    return false;
  });
  if (elements.size() == 8) return StabilizerAction::Dihedral8;
  if (elements.size() == 4) return has_four_cycle ? StabilizerAction::Cyclic4 : StabilizerAction::Klein4;
  return StabilizerAction::Other;
}

Orientation orient_edges(const Graph& g) {
  const GeneratedGroup aut = automorphism_group(g);
  const auto edge_orbits = orbits(aut, g, ActsOn::Edges);
  require(edge_orbits.size() == 1, ErrorKind::Precondition, "graph is not edge-transitive");
  const auto arc_orbits = orbits(aut, g, ActsOn::Arcs);
  require(arc_orbits.size() == 2, ErrorKind::Precondition, "graph is arc-transitive");

  // Least arc: smallest tail, then smallest head. Arc ids 2e are (u,v) with
  // u < v and edges are sorted, so arc 0 is the least arc.
  const auto& chosen = arc_orbits.front().front() == 0 ? arc_orbits.front() : arc_orbits.back();
  Orientation out;
  out.arcs.resize(g.edge_count());
  std::vector<char> chosen_mask(2 * g.edge_count(), 0);
  for (int a : chosen) {
    chosen_mask[a] = 1;
    out.arcs[a / 2] = arc_from_id(g, a);
  }
  for (int e = 0; e < g.edge_count(); ++e)
    require(chosen_mask[2 * e] + chosen_mask[2 * e + 1] == 1, ErrorKind::ContractViolation,
            "arc orbit does not orient every edge once");
  for (const auto& gen : aut.generators()) {
    for (int a : chosen) {
      const Arc arc = arc_from_id(g, a);
      require(chosen_mask[arc_id(g, {gen(arc.tail), gen(arc.head)})] != 0, ErrorKind::ContractViolation,
              "orientation is not preserved by an automorphism");
    }
  }
  std::vector<int> out_deg(g.vertex_count(), 0), in_deg(g.vertex_count(), 0);
  for (const auto& arc : out.arcs) {
    ++out_deg[arc.tail];
    ++in_deg[arc.head];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_deg[v] == 0 && out_deg[v] > 0) out.sources.push_back(v);
    if (out_deg[v] == 0 && in_deg[v] > 0) out.sinks.push_back(v);
  }
  return out;
}

}  // namespace etg4

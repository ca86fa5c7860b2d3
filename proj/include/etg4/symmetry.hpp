#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etg4/graph.hpp"
#include "etg4/group.hpp"

namespace etg4 {

/// Full automorphism group by individualisation-refinement search.
/// Refinement starts from degree and common-neighbour-count colours; target
/// cells are the first non-singleton cell. Generators are deterministic.
GeneratedGroup automorphism_group(const Graph& g);

struct CanonicalForm {
  std::vector<int> labeling;  // vertex -> canonical position
  Graph graph;                // g relabeled by `labeling`
  std::string certificate;    // hex SHA-256 of the canonical edge list
};

/// Label-invariant: canonical_form(g.relabeled(p)).graph == canonical_form(g).graph
/// for every permutation p.
CanonicalForm canonical_form(const Graph& g);

/// Vertex bijection phi: V(g) -> V(h) with h == g.relabeled(phi), or nullopt.
std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h);

bool is_automorphism(const Graph& g, const Permutation& p);

enum class ActsOn { Vertices, Edges, Arcs };

/// Arc 2e is (u,v) and arc 2e+1 is (v,u) for edge e = {u,v}, u < v.
Arc arc_from_id(const Graph& g, int arc_id);
int arc_id(const Graph& g, Arc arc);

/// Orbits of the group on the chosen objects (ids as above), each sorted and
/// listed by smallest member. Throws ContractViolation if a generator is not
/// an automorphism of g.
std::vector<std::vector<int>> orbits(const GeneratedGroup& group, const Graph& g, ActsOn on);

bool is_vertex_transitive(const Graph& g);
bool is_edge_transitive(const Graph& g);
bool is_arc_transitive(const Graph& g);

/// Point stabilizer G_v from the first level of a stabilizer chain based at v.
GeneratedGroup vertex_stabilizer(const GeneratedGroup& group, Vertex v);

/// Orbits of G_v on the six 2-subsets of the edges at a degree-4 vertex v.
struct PairOrbits {
  std::array<int, 4> incident_edges{};  // edge ids in neighbour order
  /// Each pair is two edge ids (smaller first); orbits listed by smallest pair.
  std::vector<std::vector<std::pair<int, int>>> orbits;
  /// Index into `orbits` of the orbit of size four, if any.
  std::optional<int> size4_orbit;
};

PairOrbits stabilizer_pair_orbits(const GeneratedGroup& group, const Graph& g, Vertex v);

enum class StabilizerAction { Dihedral8, Cyclic4, Klein4, Other };
std::string to_string(StabilizerAction action);

/// Names the permutation group G_v induces on the four edges at v. Requires
/// a pair orbit of size four.
StabilizerAction classify_stabilizer_action(const GeneratedGroup& group, const Graph& g, Vertex v);

/// Aut-invariant orientation of an edge- but not arc-transitive graph.
struct Orientation {
  std::vector<Arc> arcs;  // indexed by edge id
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
};

/// Picks the arc orbit containing the lexicographically least arc.
Orientation orient_edges(const Graph& g);

}  // namespace etg4

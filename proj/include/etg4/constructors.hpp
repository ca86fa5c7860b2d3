#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etg4/graph.hpp"
#include "etg4/group.hpp"
#include "etg4/lattice.hpp"

namespace etg4 {

/// Parts {0..m-1} and {m..m+n-1}.
Graph complete_bipartite(int m, int n);
/// K_{5,5} on parts {0..4}, {5..9} without the matching i -- i+5.
Graph k55_minus_matching();
/// Points 0..6 and lines 7..13 of the Fano plane; line 7+i = {1,2,4}+i mod 7.
/// A point and a line are adjacent when not incident.
Graph co_heawood();
/// Vertices are bitstrings 0..2^d-1.
Graph hypercube(int d);
/// Vertex (i,a), i in {1,2}, a in Z_m, has id (i-1)*m + a.
Graph cm2(int m);
/// Levels -radius..radius of the infinite doubled path; vertex (i,a) has id
/// (i-1)*(2r+1) + (a+r).
Graph cinf2_window(int radius);
/// Circulant on Z_n with the given jumps.
Graph circulant(int n, const std::vector<int>& jumps);

/// Copy (i,v) has id (i-1)*n + v; edge e of y has id 2n + e.
Graph two_times(const Graph& y);

struct SquareProduct {
  Graph graph;  // on the edge ids of the base
  std::optional<int> girth;
};

/// Graph on E(y) whose edges are the size-4 pair orbits of the stabilizers.
/// Throws Parameter unless y is 4-regular and the group is vertex-transitive
/// on y, and Precondition when some stabilizer has no size-4 pair orbit.
SquareProduct square_product(const Graph& y, const GeneratedGroup& group);

struct BaseWithGroup {
  Graph graph;
  GeneratedGroup group;
};

/// K5 as the circulant C5(1,2) with x -> x+1 and x -> 2x.
BaseWithGroup k5_affine_base();
/// Cayley graph of Z5 x S3 on a=(1,(0 1)), b=(2,(0 2)) and their inverses,
/// with left translations and the automorphism (x,s) -> (2x, t s t), t=(1 2),
/// which maps a to b and b to a^-1. Vertex (x,s) has id 6x + rank(s), S3
/// listed lexicographically as permutations of {0,1,2}.
BaseWithGroup z5xs3_base();

enum class FamilyTag { K44, K55minusM, CoHeawood, Q4, Cm2, CInf2, TwoTimes, Square, LatticeQuotient };
std::string to_string(FamilyTag tag);

struct FamilyDescriptor {
  FamilyDescriptor() = default;
  FamilyDescriptor(FamilyTag t) : tag(t) {}

  FamilyTag tag = FamilyTag::K44;
  int m = 0;                                 // Cm2
  std::shared_ptr<const Graph> base;         // TwoTimes, Square
  std::shared_ptr<const GeneratedGroup> group;  // Square
  std::optional<Lattice2D> lattice;          // LatticeQuotient
  std::optional<LatticeRow> row;             // LatticeQuotient, when built from a row
};

struct CatalogEntry {
  std::string name;
  FamilyDescriptor family;
  std::optional<Graph> graph;         // absent for infinite families
  std::optional<FamilyTag> expected;  // classifier entry expected for finite graphs
};

/// Finite members of every family plus descriptors for the infinite ones.
/// Lattice quotients come from a fixed row sweep and are kept only when
/// simple with girth 4 and every edge in exactly two 4-cycles.
std::vector<CatalogEntry> catalog();

/// The row sweep used by the catalog.
std::vector<LatticeRow> lattice_sweep();

/// Graph for a family name: k44, k55-m, co-heawood, q4, cm2:<m>,
/// cinf2-window:<r>, 2x:<file>, square:<file>:<generators-file>,
/// lattice:<row>:<a>:<b>. Throws Parameter on unknown names or bad values.
Graph construct_family(const std::string& name);

}  // namespace etg4

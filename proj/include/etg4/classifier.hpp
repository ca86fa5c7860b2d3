#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "etg4/constructors.hpp"
#include "etg4/graph.hpp"
#include "etg4/group.hpp"
#include "etg4/lattice.hpp"

namespace etg4 {

struct FMembership {
  bool connected = false;
  bool four_regular = false;
  bool girth_four = false;
  bool edge_transitive = false;
  std::optional<int> girth;
  std::optional<int> frequency;  // set iff all four flags hold

  bool member() const { return frequency.has_value(); }
  /// First failing condition, e.g. "girth 5"; empty for members.
  std::string reason() const;
};

FMembership check_F_membership(const Graph& g);

/// An explicit vertex map onto a graph rebuilt from the classification data.
struct Certificate {
  std::string kind;
  Graph reference;
  std::vector<int> mapping;  // input vertex -> reference vertex

  /// input.relabeled(mapping) == reference.
  bool verify(const Graph& input) const;
};

struct Classification {
  FamilyTag entry = FamilyTag::K44;
  int k = 0;
  int m = 0;                                // Cm2
  std::optional<Graph> base;                // TwoTimes, Square
  std::optional<GeneratedGroup> base_group;  // Square
  std::optional<Lattice2D> lattice;         // LatticeQuotient, frame-normalised
  std::set<int> rows;                       // LatticeQuotient
  Certificate certificate;

  /// "Cm2(7)", "LatticeQuotient([(1,5),(0,13)]; rows 3)", ...
  std::string describe() const;
};

/// Decision tree over K_{4,2} / K_{3,2} subgraphs and the frequency. Throws
/// NotMember for graphs outside F and ClassificationViolation when a branch
/// fails to verify. The returned certificate has been verified.
Classification classify(const Graph& g);

struct SquareRecovery {
  Graph base;
  GeneratedGroup group;  // Aut(g) acting on the 4-cycles of g
  Certificate certificate;
};

/// Base graph on the 4-cycles of a frequency-1 graph, two cycles adjacent
/// when they share a vertex. Throws Precondition unless every edge lies in
/// exactly one 4-cycle.
SquareRecovery recover_square_base(const Graph& g);

struct TheoremCheck {
  std::string name;
  std::optional<FamilyTag> expected;
  bool member = false;
  std::string not_member_reason;
  std::optional<int> k;
  std::optional<Classification> got;
  bool passed = false;
  std::string message;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  std::set<int> observed_k;
  bool all_passed = true;
};

/// Classifies every finite entry and compares with its constructing family.
/// Entries without an expected family must either be non-members or
/// classify cleanly.
TheoremReport verify_theorem(std::span<const CatalogEntry> entries);

struct CensusMember {
  Graph graph;  // canonical form
  std::string certificate;
  std::optional<Classification> classification;
  std::string error;  // set when classify threw
};

struct CensusReport {
  int max_n = 0;
  bool partial = false;
  std::vector<std::int64_t> generated;  // leaves visited per vertex count
  std::vector<CensusMember> members;    // by vertex count, then certificate
};

inline constexpr int kCensusMaxN = 13;

/// Connected triangle-free 4-regular graphs up to max_n vertices, generated
/// in breadth-first order and deduplicated by canonical form, filtered to F
/// and classified. Throws Parameter when max_n exceeds kCensusMaxN.
CensusReport census(int max_n, std::optional<std::chrono::milliseconds> time_limit = std::nullopt);

}  // namespace etg4

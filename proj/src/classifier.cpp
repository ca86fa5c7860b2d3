#include "etg4/classifier.hpp"

#include <algorithm>
#include <map>

#include "etg4/error.hpp"
#include "etg4/symmetry.hpp"

namespace etg4 {
namespace {

[[noreturn]] void violation(const std::string& message) { fail(ErrorKind::ClassificationViolation, message); }

std::optional<Certificate> isomorphism_certificate(const Graph& g, Graph reference, std::string kind) {
  const auto phi = are_isomorphic(g, reference);
  if (!phi) return std::nullopt;
  return Certificate{std::move(kind), std::move(reference), phi->images()};
}

bool is_cycle(const Graph& g) { return g.vertex_count() >= 3 && is_regular(g, 2) && is_connected(g); }

// Graphs with a K_{4,2}: K44, a doubled cycle, or 2 x Y.
void classify_with_k42(const Graph& g, Classification& c) {
  if (g.vertex_count() == 8) {
    if (auto cert = isomorphism_certificate(g, complete_bipartite(4, 4), "isomorphism")) {
      c.entry = FamilyTag::K44;
      c.certificate = std::move(*cert);
      return;
    }
  }
  const CloneQuotient cq = clone_quotient(g);
  const Graph& q = cq.graph;
  if (is_cycle(q)) {
    const int m = q.vertex_count();
    if (m < 5) violation("clone quotient is a cycle of length " + std::to_string(m));
    auto cert = isomorphism_certificate(g, cm2(m), "isomorphism");
    if (!cert) violation("clone quotient is C" + std::to_string(m) + " but the graph is not C" +
                         std::to_string(m) + "^(2)");
    c.entry = FamilyTag::Cm2;
    c.m = m;
    c.certificate = std::move(*cert);
    return;
  }

  if (is_vertex_transitive(g)) violation("graph with K_{4,2} is vertex-transitive but not K44 or a doubled cycle");
  const auto sides = bipartition(q);
  if (!sides || !is_connected(q)) violation("clone quotient is not a connected bipartite graph");
  auto all_degree = [&](const std::vector<Vertex>& part, int d) {
    return !part.empty() && std::all_of(part.begin(), part.end(), [&](Vertex v) { return q.degree(v) == d; });
  };
  const std::vector<Vertex>* hubs = nullptr;
  const std::vector<Vertex>* links = nullptr;
  if (all_degree(sides->part0, 4) && all_degree(sides->part1, 2)) {
    hubs = &sides->part0;
    links = &sides->part1;
  } else if (all_degree(sides->part1, 4) && all_degree(sides->part0, 2)) {
    hubs = &sides->part1;
    links = &sides->part0;
  } else {
    violation("clone quotient is not (4,2)-biregular");
  }

  // Y lives on the degree-4 side; two hubs are adjacent when they share a link.
  std::vector<int> index(q.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(hubs->size()); ++i) index[(*hubs)[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  for (Vertex link : *links) {
    const auto nb = q.neighbors(link);
    pairs.emplace_back(index[nb[0]], index[nb[1]]);
  }
  const Graph y = Graph::from_edge_list(static_cast<int>(hubs->size()), pairs);
  if (y.edge_count() != static_cast<int>(links->size()) || !is_regular(y, 4))
    violation("base recovered from the clone quotient is not a simple 4-regular graph");
  if (!is_arc_transitive(y)) violation("base recovered from the clone quotient is not arc-transitive");
  auto cert = isomorphism_certificate(g, two_times(y), "isomorphism");
  if (!cert) violation("graph is not isomorphic to 2 x Y for the recovered base Y");
  c.entry = FamilyTag::TwoTimes;
  c.base = y;
  c.certificate = std::move(*cert);
}

void classify_lattice(const Graph& g, Classification& c) {
  Development dev;
  try {
    dev = develop(faces_from_frequency2(g));
  } catch (const Error& e) {
    violation(std::string("frequency-2 development failed: ") + e.what());
  }
  const FrameNormalization frame = frame_normalization(dev.lattice);
  Certificate cert;
  cert.kind = "lattice-development";
  cert.reference = coset_quotient(frame.lattice).embedding.graph;
  cert.mapping.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    cert.mapping[v] = coset_id(frame.lattice, apply(frame.matrix, dev.coordinates[v]));
  c.entry = FamilyTag::LatticeQuotient;
  c.lattice = frame.lattice;
  c.rows = row_symmetry_check(frame.lattice);
  if (c.rows.empty()) violation("recovered lattice " + frame.lattice.to_string() + " matches no table row");
  c.certificate = std::move(cert);
}

}  // namespace

std::string FMembership::reason() const {
  if (!connected) return "disconnected";
  if (!girth_four) return girth ? "girth " + std::to_string(*girth) : "acyclic";
  if (!four_regular) return "not 4-regular";
  if (!edge_transitive) return "not edge-transitive";
  return {};
}

FMembership check_F_membership(const Graph& g) {
  FMembership out;
  const int n = g.vertex_count();
  out.connected = n > 0 && is_connected(g);
  out.four_regular = n > 0 && is_regular(g, 4);
  out.girth = girth(g);
  out.girth_four = out.girth == 4;
  out.edge_transitive =
      g.edge_count() > 0 && orbits(automorphism_group(g), g, ActsOn::Edges).size() == 1;
  if (out.connected && out.four_regular && out.girth_four && out.edge_transitive) {
    const FrequencyReport census = four_cycle_census(g);
    require(census.uniform_k.has_value(), ErrorKind::ContractViolation,
            "edge-transitive graph with non-uniform 4-cycle counts");
    out.frequency = census.uniform_k;
  }
  return out;
}

bool Certificate::verify(const Graph& input) const {
  if (static_cast<int>(mapping.size()) != input.vertex_count() ||
      reference.vertex_count() != input.vertex_count())
    return false;
  std::vector<char> hit(mapping.size(), 0);
  for (int x : mapping) {
    if (x < 0 || x >= input.vertex_count() || hit[x]) return false;
    hit[x] = 1;
  }
  return input.relabeled(mapping) == reference;
}

std::string Classification::describe() const {
  switch (entry) {
    case FamilyTag::Cm2:
      return "Cm2(" + std::to_string(m) + ")";
    case FamilyTag::TwoTimes:
      return "TwoTimes(base on " + std::to_string(base->vertex_count()) + " vertices)";
    case FamilyTag::Square:
      return "SquareProduct(base on " + std::to_string(base->vertex_count()) + " vertices, group of order " +
             std::to_string(base_group->order()) + ")";
    case FamilyTag::LatticeQuotient: {
      std::string rs;
      for (int r : rows) rs += (rs.empty() ? "" : ",") + std::to_string(r);
      return "LatticeQuotient(" + lattice->to_string() + "; rows " + rs + ")";
    }
    default:
      return to_string(entry);
  }
}

Classification classify(const Graph& g) {
  const FMembership membership = check_F_membership(g);
  if (!membership.member()) fail(ErrorKind::NotMember, "not in F: " + membership.reason());
  Classification c;
  c.k = *membership.frequency;

  if (has_k42(g)) {
    classify_with_k42(g, c);
  } else if (has_k32(g)) {
    auto cert = isomorphism_certificate(g, k55_minus_matching(), "isomorphism");
    if (!cert) violation("graph has K_{3,2} but no K_{4,2} and is not K5,5 - M");
    c.entry = FamilyTag::K55minusM;
    c.certificate = std::move(*cert);
  } else if (c.k >= 3) {
    if (auto cert = isomorphism_certificate(g, hypercube(4), "isomorphism")) {
      c.entry = FamilyTag::Q4;
      c.certificate = std::move(*cert);
    } else if (auto cert2 = isomorphism_certificate(g, co_heawood(), "isomorphism")) {
      c.entry = FamilyTag::CoHeawood;
      c.certificate = std::move(*cert2);
    } else {
      violation("K_{3,2}-free graph with k = " + std::to_string(c.k) + " is neither Q4 nor co-Heawood");
    }
  } else if (c.k == 2) {
    classify_lattice(g, c);
  } else if (c.k == 1) {
    SquareRecovery rec;
    try {
      rec = recover_square_base(g);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ClassificationViolation) throw;
      violation(std::string("square base recovery failed: ") + e.what());
    }
    c.entry = FamilyTag::Square;
    c.base = std::move(rec.base);
    c.base_group = std::move(rec.group);
    c.certificate = std::move(rec.certificate);
  } else {
    violation("frequency " + std::to_string(c.k) + " has no branch");
  }
  if (!c.certificate.verify(g)) violation("certificate for " + c.describe() + " does not reproduce the input");
  return c;
}

SquareRecovery recover_square_base(const Graph& g) {
  const FrequencyReport census = four_cycle_census(g);
  require(census.uniform_k == 1, ErrorKind::Precondition, "square base recovery needs every edge in one 4-cycle");
  const auto cycles = four_cycles(g);
  const int n = g.vertex_count();
  std::vector<std::vector<int>> through(n);
  std::map<std::array<int, 4>, int> cycle_index;
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    for (Vertex v : cycles[i]) through[v].push_back(i);
    std::array<int, 4> key = cycles[i];
    std::sort(key.begin(), key.end());
    cycle_index[key] = i;
  }
  for (int v = 0; v < n; ++v)
    require(through[v].size() == 2, ErrorKind::ContractViolation,
            "vertex " + std::to_string(v) + " lies in " + std::to_string(through[v].size()) + " 4-cycles");

  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(through[v][0], through[v][1]);
  SquareRecovery out;
  out.base = Graph::from_edge_list(static_cast<int>(cycles.size()), pairs);
  if (out.base.edge_count() != n) violation("two vertices join the same pair of 4-cycles");

  std::vector<Permutation> induced;
  const GeneratedGroup aut = automorphism_group(g);
  for (const auto& gen : aut.generators()) {
    std::vector<int> images(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      std::array<int, 4> key{};
      for (int j = 0; j < 4; ++j) key[j] = gen(cycles[i][j]);
      std::sort(key.begin(), key.end());
      images[i] = cycle_index.at(key);
    }
    induced.emplace_back(std::move(images));
  }
  out.group = GeneratedGroup(static_cast<int>(cycles.size()), std::move(induced));

  SquareProduct rebuilt;
  try {
    rebuilt = square_product(out.base, out.group);
  } catch (const Error& e) {
    violation(std::string("square product of the recovered base failed: ") + e.what());
  }
  out.certificate.kind = "square-recovery";
  out.certificate.reference = std::move(rebuilt.graph);
  out.certificate.mapping.resize(n);
  for (int v = 0; v < n; ++v) out.certificate.mapping[v] = out.base.edge_id(pairs[v].first, pairs[v].second);
  if (!out.certificate.verify(g)) violation("square product of the recovered base differs from the input");
  return out;
}

TheoremReport verify_theorem(std::span<const CatalogEntry> entries) {
  static const std::set<int> kTable{1, 2, 3, 5, 6, 9};
  TheoremReport report;
  for (const auto& entry : entries) {
    if (!entry.graph) continue;
    TheoremCheck check;
    check.name = entry.name;
    check.expected = entry.expected;
    const Graph& g = *entry.graph;
    const FMembership membership = check_F_membership(g);
    check.member = membership.member();
    check.k = membership.frequency;
    if (!check.member) {
      check.not_member_reason = membership.reason();
      check.passed = !entry.expected.has_value();
      check.message = check.passed ? "not in F: " + check.not_member_reason
                                   : "expected " + to_string(*entry.expected) + " but not in F: " +
                                         check.not_member_reason;
    } else {
      report.observed_k.insert(*check.k);
      try {
        check.got = classify(g);
        const Classification& got = *check.got;
        std::string mismatch;
        if (!kTable.count(got.k)) mismatch = "k = " + std::to_string(got.k) + " outside the table";
        if (entry.expected && got.entry != *entry.expected)
          mismatch = "expected " + to_string(*entry.expected) + ", got " + got.describe();
        const FamilyDescriptor& f = entry.family;
        if (mismatch.empty() && entry.expected == f.tag) {
          if (f.tag == FamilyTag::Cm2 && got.m != f.m) mismatch = "expected m = " + std::to_string(f.m);
          if (f.tag == FamilyTag::LatticeQuotient && f.lattice && normalize_frame(*f.lattice) != *got.lattice)
            mismatch = "expected lattice " + normalize_frame(*f.lattice).to_string();
          if (f.tag == FamilyTag::LatticeQuotient && f.row && !got.rows.count(f.row->row))
            mismatch = "row " + std::to_string(f.row->row) + " missing from matches";
          if ((f.tag == FamilyTag::TwoTimes || f.tag == FamilyTag::Square) && f.base &&
              !are_isomorphic(*f.base, *got.base))
            mismatch = "recovered base is not isomorphic to the constructing base";
        }
        check.passed = mismatch.empty();
        check.message = check.passed ? got.describe() : mismatch;
      } catch (const Error& e) {
        check.passed = false;
        check.message = std::string(to_string(e.kind())) + ": " + e.what();
      }
    }
    report.all_passed = report.all_passed && check.passed;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace etg4

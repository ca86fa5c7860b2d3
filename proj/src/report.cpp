#include "etg4/report.hpp"

#include <algorithm>
#include <sstream>

#include "etg4/error.hpp"
#include "etg4/symmetry.hpp"
#include "json.hpp"

namespace etg4 {
namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

json membership_json(const FMembership& m) {
  return {{"connected", m.connected},     {"four_regular", m.four_regular},
          {"girth", optional_int(m.girth)}, {"girth_four", m.girth_four},
          {"edge_transitive", m.edge_transitive}, {"member", m.member()},
          {"reason", m.reason()}};
}

json classification_json(const Classification& c) {
  json params = json::object();
  switch (c.entry) {
    case FamilyTag::Cm2:
      params["m"] = c.m;
      break;
    case FamilyTag::TwoTimes:
      params["base"] = {{"n", c.base->vertex_count()}, {"edges", edges_json(*c.base)}};
      break;
    case FamilyTag::Square: {
      params["base"] = {{"n", c.base->vertex_count()}, {"edges", edges_json(*c.base)}};
      json gens = json::array();
      for (const auto& p : c.base_group->generators()) gens.push_back(p.images());
      params["group"] = {{"order", c.base_group->order()}, {"generators", gens}};
      break;
    }
    case FamilyTag::LatticeQuotient: {
      json basis = json::array();
      for (const auto& v : c.lattice->basis()) basis.push_back({v.x, v.y});
      params["lattice"] = c.lattice->to_string();
      params["basis"] = basis;
      params["rows"] = c.rows;
      params["surface"] = to_string(surface_of(*c.lattice));
      break;
    }
    default:
      break;
  }
  return {{"entry", to_string(c.entry)},
          {"description", c.describe()},
          {"parameters", params},
          {"certificate",
           {{"kind", c.certificate.kind},
            {"mapping", c.certificate.mapping},
            {"reference_certificate", canonical_form(c.certificate.reference).certificate},
            {"verified", true}}}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string analyze_report(const Graph& g, ReportFormat format) {
  const int n = g.vertex_count();
  int min_deg = 0, max_deg = 0;
  for (int v = 0; v < n; ++v) {
    min_deg = v ? std::min(min_deg, g.degree(v)) : g.degree(v);
    max_deg = v ? std::max(max_deg, g.degree(v)) : g.degree(v);
  }
  const auto components = connected_components(g);
  const auto gi = girth(g);
  const FrequencyReport freq = four_cycle_census(g);
  const GeneratedGroup aut = automorphism_group(g);
  const auto vorb = orbits(aut, g, ActsOn::Vertices).size();
  const auto eorb = orbits(aut, g, ActsOn::Edges).size();
  const auto aorb = orbits(aut, g, ActsOn::Arcs).size();
  const bool bip = bipartition(g).has_value();
  const int per_edge_min = freq.per_edge.empty() ? 0 : *std::min_element(freq.per_edge.begin(), freq.per_edge.end());
  const int per_edge_max = freq.per_edge.empty() ? 0 : *std::max_element(freq.per_edge.begin(), freq.per_edge.end());

  if (format == ReportFormat::Json) {
    json j = {{"schema_version", kReportSchemaVersion},
              {"n", n},
              {"m", g.edge_count()},
              {"degrees", {{"min", min_deg}, {"max", max_deg}, {"four_regular", n > 0 && is_regular(g, 4)}}},
              {"connected", components.size() == 1},
              {"components", components.size()},
              {"bipartite", bip},
              {"girth", optional_int(gi)},
              {"four_cycles",
               {{"total", freq.total_cycles},
                {"per_edge_min", per_edge_min},
                {"per_edge_max", per_edge_max},
                {"uniform_k", optional_int(freq.uniform_k)}}},
              {"automorphism_group_order", aut.order()},
              {"vertex_orbits", vorb},
              {"edge_orbits", eorb},
              {"arc_orbits", aorb},
              {"vertex_transitive", vorb <= 1},
              {"edge_transitive", eorb <= 1},
              {"arc_transitive", aorb <= 1},
              {"has_k32", has_k32(g)},
              {"has_k42", has_k42(g)}};
    return dump(j);
  }
  std::ostringstream out;
  out << "vertices: " << n << "\n";
  out << "edges: " << g.edge_count() << "\n";
  if (min_deg == max_deg)
    out << "degree: " << min_deg << "\n";
  else
    out << "degrees: " << min_deg << ".." << max_deg << "\n";
  if (!(n > 0 && is_regular(g, 4))) out << "not 4-regular\n";
  out << "connected: " << yes_no(components.size() == 1);
  if (components.size() > 1) out << " (" << components.size() << " components)";
  out << "\n";
  out << "bipartite: " << yes_no(bip) << "\n";
  out << "girth: " << (gi ? std::to_string(*gi) : "none") << "\n";
  out << "4-cycles: " << freq.total_cycles << " (per edge " << per_edge_min;
  if (per_edge_max != per_edge_min) out << ".." << per_edge_max;
  out << ")\n";
  if (freq.uniform_k) out << "k = " << *freq.uniform_k << "\n";
  out << "|Aut| = " << aut.order() << "\n";
  out << "orbits: " << vorb << " on vertices, " << eorb << " on edges, " << aorb << " on arcs\n";
  out << "vertex-transitive: " << yes_no(vorb <= 1) << "\n";
  out << "edge-transitive: " << yes_no(eorb <= 1) << "\n";
  out << "arc-transitive: " << yes_no(aorb <= 1) << "\n";
  return out.str();
}

ClassifyReport classify_report(const Graph& g, ReportFormat format) {
  ClassifyReport report;
  const FMembership membership = check_F_membership(g);
  std::optional<Classification> c;
  std::string error;
  if (!membership.member()) {
    report.outcome = ClassifyOutcome::NotMember;
  } else {
    try {
      c = classify(g);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ClassificationViolation) throw;
      report.outcome = ClassifyOutcome::Violation;
      error = e.what();
    }
  }

  if (format == ReportFormat::Json) {
    json j = {{"schema_version", kReportSchemaVersion},
              {"membership", membership_json(membership)},
              {"k", optional_int(membership.frequency)}};
    switch (report.outcome) {
      case ClassifyOutcome::Classified:
        j["status"] = "classified";
        j["classification"] = classification_json(*c);
        break;
      case ClassifyOutcome::NotMember:
        j["status"] = "not_member";
        j["classification"] = nullptr;
        break;
      case ClassifyOutcome::Violation:
        j["status"] = "classification_violation";
        j["classification"] = nullptr;
        j["error"] = error;
        break;
    }
    report.text = dump(j);
    return report;
  }
  std::ostringstream out;
  out << "connected: " << yes_no(membership.connected) << ", 4-regular: " << yes_no(membership.four_regular)
      << ", girth: " << (membership.girth ? std::to_string(*membership.girth) : "none")
      << ", edge-transitive: " << yes_no(membership.edge_transitive) << "\n";
  switch (report.outcome) {
    case ClassifyOutcome::NotMember:
      out << "not in F: " << membership.reason() << "\n";
      break;
    case ClassifyOutcome::Violation:
      out << "k = " << *membership.frequency << "\n";
      out << "classification violation: " << error << "\n";
      break;
    case ClassifyOutcome::Classified:
      out << "k = " << c->k << "\n";
      out << "entry: " << c->describe() << "\n";
      if (c->lattice) out << "surface: " << to_string(surface_of(*c->lattice)) << "\n";
      out << "certificate: " << c->certificate.kind << " onto a reference graph (verified)\n";
      break;
  }
  report.text = out.str();
  return report;
}

VerifyReport verify_report(ReportFormat format) {
  const auto entries = catalog();
  const TheoremReport theorem = verify_theorem(entries);
  VerifyReport report;
  report.passed = theorem.all_passed;
  if (format == ReportFormat::Json) {
    json rows = json::array();
    for (const auto& check : theorem.checks) {
      rows.push_back({{"name", check.name},
                      {"expected", check.expected ? json(to_string(*check.expected)) : json(nullptr)},
                      {"got", check.got ? json(to_string(check.got->entry)) : json(nullptr)},
                      {"k", optional_int(check.k)},
                      {"member", check.member},
                      {"passed", check.passed},
                      {"message", check.message}});
    }
    report.text = dump({{"schema_version", kReportSchemaVersion},
                        {"passed", theorem.all_passed},
                        {"observed_k", theorem.observed_k},
                        {"entries", rows}});
    return report;
  }
  std::ostringstream out;
  std::size_t width = 4;
  for (const auto& check : theorem.checks) width = std::max(width, check.name.size());
  for (const auto& check : theorem.checks) {
    out << (check.passed ? "ok   " : "FAIL ") << check.name << std::string(width - check.name.size() + 2, ' ')
        << "k=" << (check.k ? std::to_string(*check.k) : "-") << "  " << check.message << "\n";
  }
  out << "observed k:";
  for (int k : theorem.observed_k) out << " " << k;
  out << "\n" << (theorem.all_passed ? "all catalog entries classified as constructed" : "MISMATCH") << "\n";
  report.text = out.str();
  return report;
}

CensusText census_report(int max_n, std::optional<std::chrono::milliseconds> time_limit, ReportFormat format) {
  static const std::set<int> kTable{1, 2, 3, 5, 6, 9};
  const CensusReport r = census(max_n, time_limit);
  CensusText out;
  out.partial = r.partial;
  out.clean = true;
  for (const auto& m : r.members)
    out.clean = out.clean && m.classification && kTable.count(m.classification->k);

  if (format == ReportFormat::Json) {
    json generated = json::object();
    for (int n = 0; n <= max_n; ++n)
      if (r.generated[n]) generated[std::to_string(n)] = r.generated[n];
    json members = json::array();
    std::set<int> ks;
    for (const auto& m : r.members) {
      json row = {{"n", m.graph.vertex_count()}, {"m", m.graph.edge_count()}, {"certificate", m.certificate}};
      if (m.classification) {
        row["k"] = m.classification->k;
        row["entry"] = to_string(m.classification->entry);
        row["description"] = m.classification->describe();
        ks.insert(m.classification->k);
      } else {
        row["error"] = m.error;
      }
      members.push_back(row);
    }
    out.text = dump({{"schema_version", kReportSchemaVersion},
                     {"max_n", max_n},
                     {"partial", r.partial},
                     {"generated", generated},
                     {"members", members},
                     {"k_values", ks}});
    return out;
  }
  std::ostringstream text;
  for (const auto& m : r.members) {
    text << "n=" << m.graph.vertex_count() << "  ";
    if (m.classification)
      text << "k=" << m.classification->k << "  " << m.classification->describe();
    else
      text << "ERROR " << m.error;
    text << "\n";
  }
  text << r.members.size() << " members of F with at most " << max_n << " vertices";
  if (r.partial) text << " (partial: time limit reached)";
  text << "\n";
  out.text = text.str();
  return out;
}

}  // namespace etg4

#include "etg4/etg4.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "etg4/classifier.hpp"
#include "etg4/constructors.hpp"
#include "etg4/edgelist.hpp"
#include "etg4/error.hpp"
#include "etg4/lattice.hpp"
#include "etg4/report.hpp"
#include "etg4/symmetry.hpp"

struct etg4_graph {
  etg4::Graph graph;
};

struct etg4_group {
  etg4::GeneratedGroup group;
};

namespace {

thread_local std::string last_error;

etg4_status status_of(etg4::ErrorKind kind) {
  using etg4::ErrorKind;
  switch (kind) {
    case ErrorKind::MalformedInput: return ETG4_ERR_MALFORMED_INPUT;
    case ErrorKind::Parse: return ETG4_ERR_PARSE;
    case ErrorKind::Parameter: return ETG4_ERR_PARAMETER;
    case ErrorKind::Precondition: return ETG4_ERR_PRECONDITION;
    case ErrorKind::ContractViolation: return ETG4_ERR_CONTRACT;
    case ErrorKind::Embedding: return ETG4_ERR_EMBEDDING;
    case ErrorKind::NonOrientable: return ETG4_ERR_NON_ORIENTABLE;
    case ErrorKind::NotMember: return ETG4_ERR_NOT_MEMBER;
    case ErrorKind::ClassificationViolation: return ETG4_ERR_CLASSIFICATION_VIOLATION;
    case ErrorKind::Io: return ETG4_ERR_IO;
  }
  return ETG4_ERR_INTERNAL;
}

etg4_status failure(etg4_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
etg4_status guarded(F&& body) {
  try {
    return body();
  } catch (const etg4::Error& e) {
    return failure(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return failure(ETG4_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return failure(ETG4_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

etg4_status null_argument(const char* name) {
  return failure(ETG4_ERR_NULL_ARGUMENT, std::string("null argument: ") + name);
}

#define ETG4_REQUIRE_ARG(p) \
  if (!(p)) return null_argument(#p)

etg4::ReportFormat format_of(int json) { return json ? etg4::ReportFormat::Json : etg4::ReportFormat::Text; }

etg4_status new_graph(etg4::Graph g, etg4_graph** out) {
  *out = new etg4_graph{std::move(g)};
  return ETG4_OK;
}

}  // namespace

extern "C" {

const char* etg4_status_name(etg4_status status) {
  switch (status) {
    case ETG4_OK: return "ok";
    case ETG4_ERR_MALFORMED_INPUT: return "malformed_input";
    case ETG4_ERR_PARSE: return "parse";
    case ETG4_ERR_PARAMETER: return "parameter";
    case ETG4_ERR_PRECONDITION: return "precondition";
    case ETG4_ERR_CONTRACT: return "contract_violation";
    case ETG4_ERR_EMBEDDING: return "embedding";
    case ETG4_ERR_NON_ORIENTABLE: return "non_orientable";
    case ETG4_ERR_NOT_MEMBER: return "not_member";
    case ETG4_ERR_CLASSIFICATION_VIOLATION: return "classification_violation";
    case ETG4_ERR_IO: return "io";
    case ETG4_ERR_NULL_ARGUMENT: return "null_argument";
    case ETG4_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* etg4_last_error(void) { return last_error.c_str(); }

void etg4_string_free(char* s) { std::free(s); }

etg4_status etg4_graph_from_edges(int n, const int* pairs, size_t edge_count, etg4_graph** out) {
  ETG4_REQUIRE_ARG(out);
  if (edge_count > 0) ETG4_REQUIRE_ARG(pairs);
  return guarded([&] {
    etg4::require(n >= 0, etg4::ErrorKind::MalformedInput, "negative vertex count");
    std::vector<std::pair<int, int>> list;
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    return new_graph(etg4::Graph::from_edge_list(n, list), out);
  });
}

etg4_status etg4_graph_parse(const char* text, etg4_graph** out) {
  ETG4_REQUIRE_ARG(text);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] { return new_graph(etg4::parse_edge_list(text), out); });
}

etg4_status etg4_graph_read(const char* path, etg4_graph** out) {
  ETG4_REQUIRE_ARG(path);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] { return new_graph(etg4::read_edge_list(path), out); });
}

etg4_status etg4_graph_write(const etg4_graph* g, const char* path, const char* comment) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(path);
  return guarded([&] {
    etg4::write_edge_list(g->graph, path, comment ? comment : "");
    return ETG4_OK;
  });
}

etg4_status etg4_graph_format(const etg4_graph* g, char** out) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] {
    *out = copy_string(etg4::format_edge_list(g->graph));
    return ETG4_OK;
  });
}

etg4_status etg4_graph_construct(const char* family, etg4_graph** out) {
  ETG4_REQUIRE_ARG(family);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] { return new_graph(etg4::construct_family(family), out); });
}

etg4_status etg4_graph_from_lattice(const char* text, etg4_graph** out) {
  ETG4_REQUIRE_ARG(text);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] {
    const etg4::Lattice2D lattice = etg4::parse_lattice(text);
    etg4::require(lattice.rank() == 2, etg4::ErrorKind::Parameter,
                  "lattice " + lattice.to_string() + " has an infinite quotient");
    const auto q = etg4::coset_quotient(lattice);
    etg4::require(q.simple, etg4::ErrorKind::Parameter, "quotient by " + lattice.to_string() + " is not simple");
    return new_graph(q.embedding.graph, out);
  });
}

void etg4_graph_free(etg4_graph* g) { delete g; }

int etg4_graph_vertex_count(const etg4_graph* g) { return g ? g->graph.vertex_count() : -1; }

int etg4_graph_edge_count(const etg4_graph* g) { return g ? g->graph.edge_count() : -1; }

etg4_status etg4_graph_edges(const etg4_graph* g, int* pairs_out) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(pairs_out);
  int i = 0;
  for (const auto& e : g->graph.edges()) {
    pairs_out[i++] = e.u;
    pairs_out[i++] = e.v;
  }
  return ETG4_OK;
}

etg4_status etg4_graph_girth(const etg4_graph* g, int* out) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] {
    *out = etg4::girth(g->graph).value_or(-1);
    return ETG4_OK;
  });
}

etg4_status etg4_graph_frequency(const etg4_graph* g, int* k) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(k);
  return guarded([&] {
    *k = etg4::four_cycle_census(g->graph).uniform_k.value_or(-1);
    return ETG4_OK;
  });
}

etg4_status etg4_graph_certificate(const etg4_graph* g, char** hex) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(hex);
  return guarded([&] {
    *hex = copy_string(etg4::canonical_form(g->graph).certificate);
    return ETG4_OK;
  });
}

etg4_status etg4_graph_isomorphism(const etg4_graph* a, const etg4_graph* b, int* isomorphic, int* mapping_out) {
  ETG4_REQUIRE_ARG(a);
  ETG4_REQUIRE_ARG(b);
  ETG4_REQUIRE_ARG(isomorphic);
  return guarded([&] {
    const auto phi = etg4::are_isomorphic(a->graph, b->graph);
    *isomorphic = phi ? 1 : 0;
    if (phi && mapping_out)
      for (int v = 0; v < phi->degree(); ++v) mapping_out[v] = (*phi)(v);
    return ETG4_OK;
  });
}

etg4_status etg4_two_times(const etg4_graph* base, etg4_graph** out) {
  ETG4_REQUIRE_ARG(base);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] { return new_graph(etg4::two_times(base->graph), out); });
}

etg4_status etg4_square_product(const etg4_graph* base, const etg4_group* group, etg4_graph** out) {
  ETG4_REQUIRE_ARG(base);
  ETG4_REQUIRE_ARG(group);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] { return new_graph(etg4::square_product(base->graph, group->group).graph, out); });
}

etg4_status etg4_analyze(const etg4_graph* g, int json, char** report) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(report);
  return guarded([&] {
    *report = copy_string(etg4::analyze_report(g->graph, format_of(json)));
    return ETG4_OK;
  });
}

etg4_status etg4_classify(const etg4_graph* g, int json, char** report) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(report);
  return guarded([&] {
    const auto r = etg4::classify_report(g->graph, format_of(json));
    *report = copy_string(r.text);
    switch (r.outcome) {
      case etg4::ClassifyOutcome::Classified: return ETG4_OK;
      case etg4::ClassifyOutcome::NotMember: return failure(ETG4_ERR_NOT_MEMBER, "graph is not in F");
      case etg4::ClassifyOutcome::Violation:
        return failure(ETG4_ERR_CLASSIFICATION_VIOLATION, "classification violation");
    }
    return ETG4_ERR_INTERNAL;
  });
}

etg4_status etg4_verify(int json, int* passed, char** report) {
  ETG4_REQUIRE_ARG(passed);
  ETG4_REQUIRE_ARG(report);
  return guarded([&] {
    const auto r = etg4::verify_report(format_of(json));
    *passed = r.passed ? 1 : 0;
    *report = copy_string(r.text);
    return ETG4_OK;
  });
}

etg4_status etg4_census(int max_n, long long time_limit_ms, int json, int* clean, int* partial, char** report) {
  ETG4_REQUIRE_ARG(report);
  return guarded([&] {
    std::optional<std::chrono::milliseconds> limit;
    if (time_limit_ms > 0) limit = std::chrono::milliseconds(time_limit_ms);
    const auto r = etg4::census_report(max_n, limit, format_of(json));
    if (clean) *clean = r.clean ? 1 : 0;
    if (partial) *partial = r.partial ? 1 : 0;
    *report = copy_string(r.text);
    return ETG4_OK;
  });
}

etg4_status etg4_automorphism_group(const etg4_graph* g, etg4_group** out) {
  ETG4_REQUIRE_ARG(g);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new etg4_group{etg4::automorphism_group(g->graph)};
    return ETG4_OK;
  });
}

etg4_status etg4_group_parse(const char* text, int degree, etg4_group** out) {
  ETG4_REQUIRE_ARG(text);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] {
    etg4::require(degree >= 0, etg4::ErrorKind::Parameter, "negative degree");
    *out = new etg4_group{etg4::GeneratedGroup::parse(text, degree)};
    return ETG4_OK;
  });
}

etg4_status etg4_group_format(const etg4_group* group, char** out) {
  ETG4_REQUIRE_ARG(group);
  ETG4_REQUIRE_ARG(out);
  return guarded([&] {
    *out = copy_string(group->group.to_text());
    return ETG4_OK;
  });
}

void etg4_group_free(etg4_group* group) { delete group; }

int etg4_group_degree(const etg4_group* group) { return group ? group->group.degree() : -1; }

etg4_status etg4_group_order(const etg4_group* group, unsigned long long* order) {
  ETG4_REQUIRE_ARG(group);
  ETG4_REQUIRE_ARG(order);
  *order = group->group.order();
  return ETG4_OK;
}

size_t etg4_group_generator_count(const etg4_group* group) { return group ? group->group.generators().size() : 0; }

etg4_status etg4_group_generator(const etg4_group* group, size_t index, int* images_out) {
  ETG4_REQUIRE_ARG(group);
  ETG4_REQUIRE_ARG(images_out);
  if (index >= group->group.generators().size())
    return failure(ETG4_ERR_PARAMETER, "generator index out of range");
  const auto& images = group->group.generators()[index].images();
  std::copy(images.begin(), images.end(), images_out);
  return ETG4_OK;
}

}  // extern "C"

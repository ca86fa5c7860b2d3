// etg4: command-line front end over the C API.
//
//   etg4 construct <family> [-o FILE] | construct --lattice "a b; c d" [-o FILE]
//   etg4 analyze FILE [--json]
//   etg4 classify FILE [--json]
//   etg4 iso FILE FILE
//   etg4 verify [--json]
//   etg4 census [--max-n N] [--time-limit-ms T] [--json]
//
// Exit codes: 0 ok, 1 failure (not isomorphic, verify mismatch, census
// problem), 2 not in F, 3 parse error, 4 classification violation,
// 5 I/O error, 64 usage error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "etg4/etg4.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitNotMember = 2;
constexpr int kExitParse = 3;
constexpr int kExitViolation = 4;
constexpr int kExitIo = 5;
constexpr int kExitUsage = 64;

constexpr int kCensusMaxN = 13;

struct GraphDeleter {
  void operator()(etg4_graph* g) const { etg4_graph_free(g); }
};
using GraphPtr = std::unique_ptr<etg4_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { etg4_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code(etg4_status status) {
  switch (status) {
    case ETG4_OK: return 0;
    case ETG4_ERR_MALFORMED_INPUT:
    case ETG4_ERR_PARSE: return kExitParse;
    case ETG4_ERR_PARAMETER: return kExitUsage;
    case ETG4_ERR_NOT_MEMBER: return kExitNotMember;
    case ETG4_ERR_CLASSIFICATION_VIOLATION: return kExitViolation;
    case ETG4_ERR_IO: return kExitIo;
    default: return kExitFailure;
  }
}

int report_error(etg4_status status) {
  std::cerr << "etg4: " << etg4_status_name(status) << ": " << etg4_last_error() << "\n";
  return exit_code(status);
}

int load(const std::string& path, GraphPtr& out) {
  etg4_graph* g = nullptr;
  const etg4_status s = etg4_graph_read(path.c_str(), &g);
  if (s != ETG4_OK) return report_error(s);
  out.reset(g);
  return 0;
}

void print_summary(const etg4_graph* g, std::ostream& os) {
  int girth = -1, k = -1;
  etg4_graph_girth(g, &girth);
  etg4_graph_frequency(g, &k);
  os << "n = " << etg4_graph_vertex_count(g) << ", m = " << etg4_graph_edge_count(g)
     << ", girth = " << (girth < 0 ? std::string("none") : std::to_string(girth));
  if (k >= 0) os << ", k = " << k;
  os << "\n";
}

int run_construct(const std::string& family, const std::string& lattice, const std::string& out_path) {
  etg4_graph* raw = nullptr;
  etg4_status s;
  if (!lattice.empty())
    s = etg4_graph_from_lattice(lattice.c_str(), &raw);
  else if (!family.empty())
    s = etg4_graph_construct(family.c_str(), &raw);
  else {
    std::cerr << "etg4: construct needs a family name or --lattice\n";
    return kExitUsage;
  }
  if (s != ETG4_OK) return report_error(s);
  GraphPtr g(raw);
  const std::string comment = lattice.empty() ? family : "lattice " + lattice;
  if (out_path.empty()) {
    char* text = nullptr;
    if ((s = etg4_graph_format(g.get(), &text)) != ETG4_OK) return report_error(s);
    OwnedString owned(text);
    std::cout << text;
    print_summary(g.get(), std::cerr);
    return 0;
  }
  if ((s = etg4_graph_write(g.get(), out_path.c_str(), comment.c_str())) != ETG4_OK) return report_error(s);
  print_summary(g.get(), std::cout);
  return 0;
}

int run_report(const std::string& path, bool json, bool classify) {
  GraphPtr g;
  if (int rc = load(path, g)) return rc;
  char* text = nullptr;
  const etg4_status s = classify ? etg4_classify(g.get(), json, &text) : etg4_analyze(g.get(), json, &text);
  if (!text) return report_error(s);
  OwnedString owned(text);
  std::cout << text;
  return exit_code(s);
}

int run_iso(const std::string& a_path, const std::string& b_path) {
  GraphPtr a, b;
  if (int rc = load(a_path, a)) return rc;
  if (int rc = load(b_path, b)) return rc;
  int iso = 0;
  std::vector<int> mapping(std::max(etg4_graph_vertex_count(a.get()), 0));
  const etg4_status s = etg4_graph_isomorphism(a.get(), b.get(), &iso, mapping.data());
  if (s != ETG4_OK) return report_error(s);
  if (!iso) {
    std::cout << "not isomorphic\n";
    return kExitFailure;
  }
  std::cout << "isomorphic\nmapping:";
  for (int v : mapping) std::cout << " " << v;
  std::cout << "\n";
  return 0;
}

int run_verify(bool json) {
  int passed = 0;
  char* text = nullptr;
  const etg4_status s = etg4_verify(json, &passed, &text);
  if (s != ETG4_OK) return report_error(s);
  OwnedString owned(text);
  std::cout << text;
  return passed ? 0 : kExitFailure;
}

int run_census(int max_n, long long time_limit_ms, bool json) {
  int clean = 0, partial = 0;
  char* text = nullptr;
  const etg4_status s = etg4_census(max_n, time_limit_ms, json, &clean, &partial, &text);
  if (s != ETG4_OK) return report_error(s);
  OwnedString owned(text);
  std::cout << text;
  return clean ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected edge-transitive 4-regular graphs of girth 4"};
  app.require_subcommand(1);

  std::string family, lattice, out_path;
  auto* construct = app.add_subcommand("construct", "Build a family member and write its edge list");
  construct->add_option("family", family,
                        "k44 | k55-m | co-heawood | q4 | cm2:<m> | cinf2-window:<r> | 2x:<file> | "
                        "square:<file>:<generators-file> | lattice:<row>:<a>:<b>");
  construct->add_option("--lattice", lattice, "Quotient of the square grid by the lattice \"a b; c d\"");
  construct->add_option("-o,--output", out_path, "Output file (stdout when omitted)");

  std::string in_path;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "Structural and symmetry report");
  analyze->add_option("file", in_path, "Edge-list file")->required();
  analyze->add_flag("--json", json, "JSON output");

  auto* classify = app.add_subcommand("classify", "Locate the graph in the classification table");
  classify->add_option("file", in_path, "Edge-list file")->required();
  classify->add_flag("--json", json, "JSON output");

  std::string other_path;
  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("first", in_path, "Edge-list file")->required();
  iso->add_option("second", other_path, "Edge-list file")->required();

  auto* verify = app.add_subcommand("verify", "Classify every catalog entry and compare");
  verify->add_flag("--json", json, "JSON output");

  int max_n = 10;
  long long time_limit_ms = 0;
  auto* census = app.add_subcommand("census", "Enumerate members of F on few vertices");
  census->add_option("--max-n", max_n, "Largest vertex count")->check(CLI::Range(1, kCensusMaxN));
  census->add_option("--time-limit-ms", time_limit_ms, "Stop early and mark the report partial")
      ->check(CLI::NonNegativeNumber);
  census->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*construct) return run_construct(family, lattice, out_path);
  if (*analyze) return run_report(in_path, json, false);
  if (*classify) return run_report(in_path, json, true);
  if (*iso) return run_iso(in_path, other_path);
  if (*verify) return run_verify(json);
  return run_census(max_n, time_limit_ms, json);
}

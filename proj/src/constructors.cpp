#include "etg4/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

#include "etg4/edgelist.hpp"
#include "etg4/error.hpp"
#include "etg4/symmetry.hpp"

namespace etg4 {

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, ErrorKind::Parameter, "complete_bipartite needs parts of size >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) pairs.emplace_back(i, m + j);
  return Graph::from_edge_list(m + n, pairs);
}

Graph k55_minus_matching() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) pairs.emplace_back(i, 5 + j);
  return Graph::from_edge_list(10, pairs);
}

Graph co_heawood() {
  std::vector<std::pair<int, int>> pairs;
  for (int line = 0; line < 7; ++line) {
    const int on[] = {(1 + line) % 7, (2 + line) % 7, (4 + line) % 7};
    for (int p = 0; p < 7; ++p)
      if (std::find(std::begin(on), std::end(on), p) == std::end(on)) pairs.emplace_back(p, 7 + line);
  }
  return Graph::from_edge_list(14, pairs);
}

Graph hypercube(int d) {
  require(d >= 1 && d <= 20, ErrorKind::Parameter, "hypercube dimension must be in 1..20");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) pairs.emplace_back(v, v | (1 << b));
  return Graph::from_edge_list(n, pairs);
}

Graph cm2(int m) {
  require(m >= 3, ErrorKind::Parameter, "cm2 needs m >= 3, got " + std::to_string(m));
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) pairs.emplace_back(i * m + a, j * m + (a + 1) % m);
  return Graph::from_edge_list(2 * m, pairs);
}

Graph cinf2_window(int radius) {
  require(radius >= 1, ErrorKind::Parameter, "window radius must be >= 1");
  const int width = 2 * radius + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a + 1 < width; ++a)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) pairs.emplace_back(i * width + a, j * width + a + 1);
  return Graph::from_edge_list(2 * width, pairs);
}

Graph circulant(int n, const std::vector<int>& jumps) {
  require(n >= 1, ErrorKind::Parameter, "circulant needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v)
    for (int j : jumps) {
      const int w = ((v + j) % n + n) % n;
      require(w != v, ErrorKind::Parameter, "circulant jump " + std::to_string(j) + " is 0 mod n");
      pairs.emplace_back(v, w);
    }
  return Graph::from_edge_list(n, pairs);
}

Graph two_times(const Graph& y) {
  require(is_regular(y, 4), ErrorKind::Parameter, "two_times needs a 4-regular base");
  const int n = y.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < y.edge_count(); ++e) {
    const Edge& edge = y.edge(e);
    for (int copy = 0; copy < 2; ++copy) {
      pairs.emplace_back(copy * n + edge.u, 2 * n + e);
      pairs.emplace_back(copy * n + edge.v, 2 * n + e);
    }
  }
  return Graph::from_edge_list(2 * n + y.edge_count(), pairs);
}

SquareProduct square_product(const Graph& y, const GeneratedGroup& group) {
  require(is_regular(y, 4), ErrorKind::Parameter, "square_product needs a 4-regular base");
  require(group.degree() == y.vertex_count(), ErrorKind::Parameter, "group degree differs from the base");
  require(orbits(group, y, ActsOn::Vertices).size() == 1, ErrorKind::Parameter,
          "group is not vertex-transitive on the base");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < y.vertex_count(); ++v) {
    const PairOrbits po = stabilizer_pair_orbits(group, y, v);
    if (!po.size4_orbit)
      fail(ErrorKind::Precondition, "stabilizer of base vertex " + std::to_string(v) +
                                        " has no pair orbit of size four");
    const auto& q = po.orbits[*po.size4_orbit];
    std::map<int, int> degree;
    for (const auto& [a, b] : q) {
      ++degree[a];
      ++degree[b];
      pairs.emplace_back(a, b);
    }
    const bool cycle = degree.size() == 4 &&
                       std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
    require(cycle, ErrorKind::ContractViolation,
            "pair orbit at base vertex " + std::to_string(v) + " is not a 4-cycle");
  }
  SquareProduct out;
  out.graph = Graph::from_edge_list(y.edge_count(), pairs);
  out.girth = girth(out.graph);
  return out;
}

BaseWithGroup k5_affine_base() {
  BaseWithGroup out;
  out.graph = circulant(5, {1, 2});
  std::vector<int> shift(5), doubling(5);
  for (int x = 0; x < 5; ++x) {
    shift[x] = (x + 1) % 5;
    doubling[x] = (2 * x) % 5;
  }
  out.group = GeneratedGroup(5, {Permutation(shift), Permutation(doubling)});
  return out;
}

BaseWithGroup z5xs3_base() {
  // S3 as permutations of {0,1,2} in lexicographic order.
  std::vector<std::array<int, 3>> s3;
  std::array<int, 3> p{0, 1, 2};
  do s3.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto rank = [&](const std::array<int, 3>& s) {
    return static_cast<int>(std::find(s3.begin(), s3.end(), s) - s3.begin());
  };
  auto compose = [](const std::array<int, 3>& s, const std::array<int, 3>& t) {
    return std::array<int, 3>{s[t[0]], s[t[1]], s[t[2]]};
  };
  struct Element {
    int x;
    std::array<int, 3> s;
  };
  auto id = [&](const Element& e) { return 6 * e.x + rank(e.s); };
  auto mul = [&](const Element& g, const Element& h) { return Element{(g.x + h.x) % 5, compose(g.s, h.s)}; };
  auto inv = [&](const Element& g) {
    std::array<int, 3> si{};
    for (int i = 0; i < 3; ++i) si[g.s[i]] = i;
    return Element{(5 - g.x) % 5, si};
  };
  std::vector<Element> elements;
  for (int x = 0; x < 5; ++x)
    for (const auto& s : s3) elements.push_back({x, s});

  const Element a{1, {1, 0, 2}};
  const Element b{2, {2, 1, 0}};
  const std::array<int, 3> t{0, 2, 1};
  const Element connection[] = {a, inv(a), b, inv(b)};

  std::vector<std::pair<int, int>> pairs;
  for (const auto& h : elements)
    for (const auto& s : connection) pairs.emplace_back(id(h), id(mul(h, s)));
  BaseWithGroup out;
  out.graph = Graph::from_edge_list(30, pairs);

  std::vector<Permutation> gens;
  for (const auto& g : {a, b}) {
    std::vector<int> images(30);
    for (const auto& h : elements) images[id(h)] = id(mul(g, h));
    gens.emplace_back(std::move(images));
  }
  std::vector<int> phi(30);
  for (const auto& h : elements) phi[id(h)] = id({(2 * h.x) % 5, compose(compose(t, h.s), t)});
  gens.emplace_back(std::move(phi));
  out.group = GeneratedGroup(30, std::move(gens));
  return out;
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::K44: return "K44";
    case FamilyTag::K55minusM: return "K55minusM";
    case FamilyTag::CoHeawood: return "CoHeawood";
    case FamilyTag::Q4: return "Q4";
    case FamilyTag::Cm2: return "Cm2";
    case FamilyTag::CInf2: return "CInf2";
    case FamilyTag::TwoTimes: return "TwoTimes";
    case FamilyTag::Square: return "SquareProduct";
    case FamilyTag::LatticeQuotient: return "LatticeQuotient";
  }
  return "unknown";
}

std::vector<LatticeRow> lattice_sweep() {
  return {{3, 3, 2}, {3, 4, 1}, {3, 4, 3}, {4, 4, 1}, {4, 5, 2}, {5, 2, 3}, {5, 3, 4}};
}

namespace {

std::string row_name(const LatticeRow& r) {
  std::string name = "lattice:" + std::to_string(r.row);
  if (r.row >= 2) name += ":" + std::to_string(r.a);
  if (r.row >= 3) name += ":" + std::to_string(r.b);
  return name;
}

// Simple, girth 4, every edge in exactly two 4-cycles.
bool passes_frequency2_gate(const CosetQuotient& q) {
  return q.simple && q.girth == 4 && four_cycle_census(q.embedding.graph).uniform_k == 2;
}

CatalogEntry finite(std::string name, FamilyDescriptor family, Graph g, FamilyTag expected) {
  return {std::move(name), std::move(family), std::move(g), expected};
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(finite("k44", {FamilyTag::K44}, complete_bipartite(4, 4), FamilyTag::K44));
  out.push_back(finite("k55-m", {FamilyTag::K55minusM}, k55_minus_matching(), FamilyTag::K55minusM));
  out.push_back(finite("co-heawood", {FamilyTag::CoHeawood}, co_heawood(), FamilyTag::CoHeawood));
  out.push_back(finite("q4", {FamilyTag::Q4}, hypercube(4), FamilyTag::Q4));
  for (int m = 5; m <= 8; ++m) {
    FamilyDescriptor f{FamilyTag::Cm2};
    f.m = m;
    out.push_back(finite("cm2:" + std::to_string(m), f, cm2(m), FamilyTag::Cm2));
  }
  const std::pair<const char*, Graph> bases[] = {
      {"k5", circulant(5, {1, 2})}, {"k44", complete_bipartite(4, 4)}, {"q4", hypercube(4)}};
  for (const auto& [name, base] : bases) {
    FamilyDescriptor f{FamilyTag::TwoTimes};
    f.base = std::make_shared<const Graph>(base);
    out.push_back(finite(std::string("2x:") + name, f, two_times(base), FamilyTag::TwoTimes));
  }
  // The square product over K5 has every edge in six 4-cycles and is K5,5 - M.
  for (const auto& [name, base, expected] :
       {std::tuple{"k5", k5_affine_base(), FamilyTag::K55minusM},
        std::tuple{"z5xs3", z5xs3_base(), FamilyTag::Square}}) {
    FamilyDescriptor f{FamilyTag::Square};
    f.base = std::make_shared<const Graph>(base.graph);
    f.group = std::make_shared<const GeneratedGroup>(base.group);
    out.push_back(finite(std::string("square:") + name, f, square_product(base.graph, base.group).graph, expected));
  }
  for (const auto& row : lattice_sweep()) {
    const Lattice2D lattice = family_from_row(row);
    const CosetQuotient q = coset_quotient(lattice);
    if (!passes_frequency2_gate(q)) continue;
    FamilyDescriptor f{FamilyTag::LatticeQuotient};
    f.lattice = lattice;
    f.row = row;
    out.push_back(finite(row_name(row), f, q.embedding.graph, FamilyTag::LatticeQuotient));
  }

  out.push_back({"cinf2", {FamilyTag::CInf2}, std::nullopt, std::nullopt});
  for (const auto& row : {LatticeRow{1, 0, 0}, LatticeRow{2, 3, 0}}) {
    FamilyDescriptor f{FamilyTag::LatticeQuotient};
    f.lattice = family_from_row(row);
    f.row = row;
    out.push_back({row_name(row), f, std::nullopt, std::nullopt});
  }
  return out;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    fail(ErrorKind::Parameter, std::string(what) + ": expected an integer, got \"" + std::string(text) + "\"");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep, std::size_t max_parts) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (parts.size() + 1 < max_parts) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) break;
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

Graph construct_family(const std::string& name) {
  if (name == "k44") return complete_bipartite(4, 4);
  if (name == "k55-m") return k55_minus_matching();
  if (name == "co-heawood") return co_heawood();
  if (name == "q4") return hypercube(4);
  const auto head = split(name, ':', 2);
  if (head.size() == 2) {
    const std::string& kind = head[0];
    const std::string& rest = head[1];
    if (kind == "cm2") return cm2(parse_int(rest, "cm2"));
    if (kind == "cinf2-window") return cinf2_window(parse_int(rest, "cinf2-window"));
    if (kind == "2x") return two_times(read_edge_list(rest));
    if (kind == "square") {
      const auto files = split(rest, ':', 2);
      if (files.size() != 2) fail(ErrorKind::Parameter, "square needs square:<file>:<generators-file>");
      const Graph y = read_edge_list(files[0]);
      const GeneratedGroup group = GeneratedGroup::parse(read_text(files[1]), y.vertex_count());
      return square_product(y, group).graph;
    }
    if (kind == "lattice") {
      const auto fields = split(rest, ':', 3);
      LatticeRow row;
      row.row = parse_int(fields[0], "lattice row");
      if (fields.size() > 1) row.a = parse_int(fields[1], "lattice a");
      if (fields.size() > 2) row.b = parse_int(fields[2], "lattice b");
      const std::size_t wanted = row.row == 1 ? 1 : row.row == 2 ? 2 : 3;
      if (fields.size() != wanted)
        fail(ErrorKind::Parameter, "lattice row " + std::to_string(row.row) + " takes " +
                                       std::to_string(wanted - 1) + " parameter(s)");
      const Lattice2D lattice = family_from_row(row);
      if (lattice.rank() < 2)
        fail(ErrorKind::Parameter, "lattice row " + std::to_string(row.row) + " has an infinite quotient");
      const CosetQuotient q = coset_quotient(lattice);
      if (!q.simple) fail(ErrorKind::Parameter, "quotient by " + lattice.to_string() + " is not simple");
      return q.embedding.graph;
    }
  }
  fail(ErrorKind::Parameter,
       "unknown family \"" + name +
           "\"; expected k44, k55-m, co-heawood, q4, cm2:<m>, cinf2-window:<r>, 2x:<file>, "
           "square:<file>:<generators-file> or lattice:<row>:<a>:<b>");
}

}  // namespace etg4

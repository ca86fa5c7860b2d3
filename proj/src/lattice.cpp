#include "etg4/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "etg4/error.hpp"

namespace etg4 {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

Vec2 negate(Vec2 v) { return {-v.x, -v.y}; }

FourCycle canonical_cycle(std::array<Vertex, 4> c) {
  const int start = static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
  FourCycle out{};
  for (int i = 0; i < 4; ++i) out[i] = c[(start + i) % 4];
  if (out[1] > out[3]) std::swap(out[1], out[3]);
  return out;
}

// The eight symmetries of the square as row-major 2x2 matrices.
constexpr std::array<std::array<std::int64_t, 4>, 8> kSquareSymmetries{{
    {1, 0, 0, 1},
    {0, -1, 1, 0},
    {-1, 0, 0, -1},
    {0, 1, -1, 0},
    {0, 1, 1, 0},
    {1, 0, 0, -1},
    {0, -1, -1, 0},
    {-1, 0, 0, 1},
}};

constexpr std::array<std::int64_t, 4> kSwap{0, 1, 1, 0};
constexpr std::array<std::int64_t, 4> kQuarterTurn{0, -1, 1, 0};

}  // namespace

Lattice2D hnf_normalize(std::span<const Vec2> vectors) {
  std::vector<Vec2> vs;
  for (const auto& v : vectors)
    if (v.x != 0 || v.y != 0) vs.push_back(v);

  // Euclid on the first coordinate until at most one vector has x != 0.
  for (;;) {
    int pivot = -1;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
      if (vs[i].x != 0 && (pivot < 0 || std::llabs(vs[i].x) < std::llabs(vs[pivot].x))) pivot = i;
    if (pivot < 0) break;
    bool changed = false;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
      if (i == pivot || vs[i].x == 0) continue;
      const std::int64_t q = vs[i].x / vs[pivot].x;
      vs[i] = vs[i] - q * vs[pivot];
      changed = true;
    }
    if (!changed) break;
  }
  std::optional<Vec2> pivot;
  std::int64_t d = 0;
  for (const auto& v : vs) {
    if (v.x != 0) {
      pivot = v.x < 0 ? negate(v) : v;
    } else {
      d = std::gcd(d, std::llabs(v.y));
    }
  }
  Lattice2D out;
  if (pivot && d > 0) {
    out.basis_ = {{pivot->x, floor_mod(pivot->y, d)}, {0, d}};
  } else if (pivot) {
    out.basis_ = {*pivot};
  } else if (d > 0) {
    out.basis_ = {{0, d}};
  }
  return out;
}

std::optional<std::int64_t> Lattice2D::index() const {
  if (rank() < 2) return std::nullopt;
  return basis_[0].x * basis_[1].y;
}

bool Lattice2D::contains(Vec2 p) const {
  switch (rank()) {
    case 0:
      return p.x == 0 && p.y == 0;
    case 1: {
      const Vec2 g = basis_[0];
      if (g.x * p.y - g.y * p.x != 0) return false;
      return g.x != 0 ? p.x % g.x == 0 : p.y % g.y == 0;
    }
    default:
      return reduce(p) == Vec2{0, 0};
  }
}

Vec2 Lattice2D::reduce(Vec2 p) const {
  require(rank() == 2, ErrorKind::Precondition, "coset representatives need a rank-2 lattice");
  const std::int64_t k = floor_div(p.x, basis_[0].x);
  p = p - k * basis_[0];
  p.y = floor_mod(p.y, basis_[1].y);
  return p;
}

Lattice2D Lattice2D::transformed(const std::array<std::int64_t, 4>& m) const {
  std::vector<Vec2> images;
  for (const auto& v : basis_) images.push_back(apply(m, v));
  return hnf_normalize(images);
}

std::string Lattice2D::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(basis_[i].x) + "," + std::to_string(basis_[i].y) + ")";
  }
  return out + "]";
}

Lattice2D parse_lattice(std::string_view text) {
  std::vector<Vec2> vectors;
  std::string rest(text);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const std::size_t end = std::min(rest.find(';', start), rest.size());
    std::istringstream part(rest.substr(start, end - start));
    Vec2 v;
    std::string extra;
    if (!(part >> v.x >> v.y) || (part >> extra))
      fail(ErrorKind::Parse, "lattice: expected \"a b; c d\", got \"" + rest + "\"");
    vectors.push_back(v);
    start = end + 1;
  }
  if (vectors.empty() || vectors.size() > 2) fail(ErrorKind::Parse, "lattice: expected one or two vectors");
  return hnf_normalize(vectors);
}

Lattice2D normalize_frame(const Lattice2D& lattice) { return frame_normalization(lattice).lattice; }

FrameNormalization frame_normalization(const Lattice2D& lattice) {
  FrameNormalization best{lattice, kSquareSymmetries[0]};
  for (const auto& m : kSquareSymmetries) {
    Lattice2D image = lattice.transformed(m);
    if (image < best.lattice) best = {std::move(image), m};
  }
  return best;
}

Vec2 apply(const std::array<std::int64_t, 4>& m, Vec2 v) {
  return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y};
}

int coset_id(const Lattice2D& lattice, Vec2 p) {
  const Vec2 r = lattice.reduce(p);
  return static_cast<int>(r.x * lattice.basis()[1].y + r.y);
}

std::string to_string(Surface surface) {
  switch (surface) {
    case Surface::Plane: return "plane";
    case Surface::Cylinder: return "cylinder";
    case Surface::Torus: return "torus";
  }
  return "torus";
}

Surface surface_of(const Lattice2D& lattice) {
  return lattice.rank() == 0 ? Surface::Plane : lattice.rank() == 1 ? Surface::Cylinder : Surface::Torus;
}

Lattice2D family_from_row(const LatticeRow& r) {
  const auto a = r.a, b = r.b;
  switch (r.row) {
    case 1:
      return Lattice2D{};
    case 2: {
      require(a != 0, ErrorKind::Parameter, "row 2 needs a != 0");
      const Vec2 v[] = {{a, -a}};
      return hnf_normalize(v);
    }
    case 3: {
      require(a != 0 || b != 0, ErrorKind::Parameter, "row 3 needs (a,b) != (0,0)");
      const Vec2 v[] = {{a, b}, {-b, a}};
      return hnf_normalize(v);
    }
    case 4: {
      require(a != b, ErrorKind::Parameter, "row 4 needs a != b");
      const Vec2 v[] = {{a, b}, {b, a}};
      const Lattice2D l = hnf_normalize(v);
      require(l.rank() == 2, ErrorKind::Parameter, "row 4 needs a != -b for a finite quotient");
      return l;
    }
    case 5: {
      require(a != 0 && b != 0, ErrorKind::Parameter, "row 5 needs a, b != 0");
      const Vec2 v[] = {{a, a}, {b, -b}};
      return hnf_normalize(v);
    }
    default:
      fail(ErrorKind::Parameter, "row must be 1..5, got " + std::to_string(r.row));
  }
}

std::set<int> row_symmetry_check(const Lattice2D& lattice) {
  std::set<int> rows;
  if (lattice.rank() == 0) {
    rows.insert(1);
    return rows;
  }
  if (lattice.rank() == 1) {
    const Vec2 g = lattice.basis()[0];
    if (g.x == -g.y) rows.insert(2);
    return rows;
  }
  const std::int64_t n = *lattice.index();
  if (lattice.transformed(kQuarterTurn) == lattice) rows.insert(3);
  if (lattice.transformed(kSwap) != lattice) return rows;

  for (std::int64_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    for (const std::int64_t diff : {p, -p}) {
      for (const std::int64_t sum : {n / p, -n / p}) {
        if ((diff + sum) % 2 != 0) continue;
        const Vec2 v{(sum + diff) / 2, (sum - diff) / 2};
        if (lattice.contains(v)) rows.insert(4);
      }
    }
  }

  std::int64_t diag = 0, anti = 0;
  for (std::int64_t t = 1; t <= n && (!diag || !anti); ++t) {
    if (!diag && lattice.contains({t, t})) diag = t;
    if (!anti && lattice.contains({t, -t})) anti = t;
  }
  if (diag && anti && 2 * diag * anti == n) rows.insert(5);
  return rows;
}

CosetQuotient coset_quotient(const Lattice2D& lattice) {
  require(lattice.rank() == 2, ErrorKind::Precondition,
          "quotient by a rank-" + std::to_string(lattice.rank()) +
              " lattice is infinite; use plane_window or cylinder_window");
  const std::int64_t a = lattice.basis()[0].x;
  const std::int64_t d = lattice.basis()[1].y;
  const std::int64_t count = a * d;
  require(count <= 1'000'000, ErrorKind::Parameter, "lattice index too large");
  const int n = static_cast<int>(count);
  auto id_of = [&](Vec2 p) {
    const Vec2 r = lattice.reduce(p);
    return static_cast<int>(r.x * d + r.y);
  };

  CosetQuotient out;
  out.lattice = lattice;
  std::vector<Vec2> coords(n);
  for (std::int64_t x = 0; x < a; ++x)
    for (std::int64_t y = 0; y < d; ++y) coords[x * d + y] = {x, y};

  std::vector<std::array<Vertex, 4>> rotation(n);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < 4; ++s) rotation[v][s] = id_of(coords[v] + kUnitSteps[s]);
    std::array<Vertex, 4> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] == v || sorted[1] == v || sorted[2] == v || sorted[3] == v ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      out.simple = false;
    for (int s = 0; s < 2; ++s)
      if (rotation[v][s] != v) pairs.emplace_back(v, rotation[v][s]);
  }
  out.embedding.graph = Graph::from_edge_list(n, pairs);
  out.girth = girth(out.embedding.graph);
  if (out.simple) {
    out.embedding.rotation = rotation;
    for (int v = 0; v < n; ++v) {
      const Vec2 p = coords[v];
      out.embedding.faces.push_back(
          canonical_cycle({v, id_of(p + Vec2{1, 0}), id_of(p + Vec2{1, 1}), id_of(p + Vec2{0, 1})}));
    }
    std::sort(out.embedding.faces.begin(), out.embedding.faces.end());
  }
  out.embedding.coordinates = coords;
  const Graph& g = out.embedding.graph;
  for (int v = 0; v < n; ++v) {
    const int h = g.edge_id(v, id_of(coords[v] + Vec2{0, 1}));
    const int w = g.edge_id(v, id_of(coords[v] + Vec2{1, 0}));
    if (h >= 0) out.horizontal_edges.push_back(h);
    if (w >= 0) out.vertical_edges.push_back(w);
  }
  for (auto* list : {&out.horizontal_edges, &out.vertical_edges}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return out;
}

Graph plane_window(int width, int height) {
  require(width >= 1 && height >= 1, ErrorKind::Parameter, "window sides must be positive");
  std::vector<std::pair<int, int>> pairs;
  auto id = [&](int x, int y) { return x * height + y; };
  for (int x = 0; x < width; ++x)
    for (int y = 0; y < height; ++y) {
      if (x + 1 < width) pairs.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < height) pairs.emplace_back(id(x, y), id(x, y + 1));
    }
  return Graph::from_edge_list(width * height, pairs);
}

Graph cylinder_window(const Lattice2D& lattice, int levels) {
  require(lattice.rank() == 1, ErrorKind::Precondition, "cylinder window needs a rank-1 lattice");
  require(levels >= 0, ErrorKind::Parameter, "levels must be non-negative");
  const Vec2 g = lattice.basis()[0];
  const std::int64_t norm = g.x * g.x + g.y * g.y;
  const std::int64_t step = std::gcd(std::llabs(g.x), std::llabs(g.y));
  // Representative: projection onto g in [0, |g|^2); level: (g.y*x - g.x*y) / step.
  auto rep = [&](Vec2 p) {
    const std::int64_t k = floor_div(p.x * g.x + p.y * g.y, norm);
    return p - k * g;
  };
  auto level = [&](Vec2 p) { return (g.y * p.x - g.x * p.y) / step; };
  const std::int64_t bound =
      static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(norm)))) + levels * step + 1;
  std::map<Vec2, int> ids;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const Vec2 p{x, y};
      if (std::llabs(level(p)) <= levels) ids.emplace(rep(p), 0);
    }
  int next = 0;
  for (auto& [p, id] : ids) id = next++;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [p, id] : ids) {
    for (int s = 0; s < 2; ++s) {
      auto it = ids.find(rep(p + kUnitSteps[s]));
      if (it != ids.end() && it->second != id) pairs.emplace_back(id, it->second);
    }
  }
  return Graph::from_edge_list(next, pairs);
}

GeneratedGroup translation_group(const QuadEmbedding& embedding, const Lattice2D& lattice) {
  require(embedding.coordinates.has_value(), ErrorKind::Precondition, "embedding has no coordinates");
  const auto& coords = *embedding.coordinates;
  const int n = embedding.graph.vertex_count();
  std::map<Vec2, int> id_of;
  for (int v = 0; v < n; ++v) id_of[lattice.reduce(coords[v])] = v;
  std::vector<Permutation> gens;
  for (const Vec2 step : {Vec2{1, 0}, Vec2{0, 1}}) {
    std::vector<int> images(n);
    for (int v = 0; v < n; ++v) images[v] = id_of.at(lattice.reduce(coords[v] + step));
    gens.emplace_back(std::move(images));
  }
  return GeneratedGroup(n, std::move(gens));
}

QuadEmbedding faces_from_frequency2(const Graph& g) {
  require(g.vertex_count() > 0 && is_connected(g), ErrorKind::Precondition, "graph is not connected");
  require(is_regular(g, 4), ErrorKind::Precondition, "graph is not 4-regular");
  require(girth(g) == 4, ErrorKind::Precondition, "graph does not have girth 4");
  const auto census = four_cycle_census(g);
  require(census.uniform_k == 2, ErrorKind::Precondition, "not every edge lies in exactly two 4-cycles");
  require(!has_k32(g), ErrorKind::Precondition, "graph contains K_{3,2}");

  QuadEmbedding out;
  out.graph = g;
  out.faces = four_cycles(g);
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> angles(n);
  for (const auto& c : out.faces)
    for (int i = 0; i < 4; ++i) angles[c[i]].emplace_back(c[(i + 3) % 4], c[(i + 1) % 4]);

  out.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    std::map<int, std::vector<int>> link;
    for (const auto& [x, y] : angles[v]) {
      link[x].push_back(y);
      link[y].push_back(x);
    }
    bool ok = angles[v].size() == 4 && link.size() == 4;
    for (const auto& [x, ys] : link) ok = ok && ys.size() == 2 && ys[0] != ys[1];
    if (!ok) fail(ErrorKind::Embedding, "faces at vertex " + std::to_string(v) + " do not form a 4-cycle");
    std::array<Vertex, 4> rot{};
    rot[0] = nb[0];
    rot[1] = std::min(link[nb[0]][0], link[nb[0]][1]);
    for (int i = 2; i < 4; ++i) {
      const auto& ys = link[rot[i - 1]];
      rot[i] = ys[0] == rot[i - 2] ? ys[1] : ys[0];
    }
    const auto& last = link[rot[3]];
    if (last[0] != rot[0] && last[1] != rot[0])
      fail(ErrorKind::Embedding, "faces at vertex " + std::to_string(v) + " do not form a 4-cycle");
    out.rotation[v] = rot;
  }
  return out;
}

Development develop(const QuadEmbedding& embedding) {
  const Graph& g = embedding.graph;
  const int n = g.vertex_count();
  require(n > 0 && is_connected(g), ErrorKind::Precondition, "graph is not connected");
  require(static_cast<int>(embedding.rotation.size()) == n, ErrorKind::Precondition, "embedding lacks rotations");

  // (apex, smaller arm, larger arm) -> vertex opposite the apex.
  std::map<std::array<int, 3>, int> opposite;
  for (const auto& c : embedding.faces)
    for (int i = 0; i < 4; ++i) {
      const int a = c[(i + 3) % 4], b = c[(i + 1) % 4];
      opposite[{c[i], std::min(a, b), std::max(a, b)}] = c[(i + 2) % 4];
    }
  auto across = [&](int apex, int a, int b) {
    auto it = opposite.find({apex, std::min(a, b), std::max(a, b)});
    if (it == opposite.end())
      fail(ErrorKind::Embedding, "no face at vertex " + std::to_string(apex) + " between " +
                                     std::to_string(a) + " and " + std::to_string(b));
    return it->second;
  };

  using Frame = std::array<Vertex, 4>;
  auto step_frame = [&](const Frame& fv, int v, int dir) {
    const int w = fv[dir];
    Frame fw{};
    fw[(dir + 2) % 4] = v;
    fw[(dir + 1) % 4] = across(v, w, fv[(dir + 1) % 4]);
    fw[(dir + 3) % 4] = across(v, w, fv[(dir + 3) % 4]);
    int remaining = -1;
    for (Vertex x : g.neighbors(w))
      if (x != fw[(dir + 1) % 4] && x != fw[(dir + 2) % 4] && x != fw[(dir + 3) % 4]) {
        if (remaining >= 0) fail(ErrorKind::Embedding, "frame at vertex " + std::to_string(w) + " is degenerate");
        remaining = x;
      }
    if (remaining < 0) fail(ErrorKind::Embedding, "frame at vertex " + std::to_string(w) + " is degenerate");
    fw[dir] = remaining;
    return fw;
  };
  auto is_reflection = [](const Frame& a, const Frame& b) {
    for (int s = 0; s < 4; ++s) {
      bool all = true;
      for (int i = 0; i < 4 && all; ++i) all = a[i] == b[((s - i) % 4 + 4) % 4];
      if (all) return true;
    }
    return false;
  };

  std::vector<std::optional<Frame>> frames(n);
  std::vector<Vec2> coords(n);
  std::vector<Vec2> periods;
  frames[0] = embedding.rotation[0];
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int dir = 0; dir < 4; ++dir) {
      const Frame fw = step_frame(*frames[v], v, dir);
      const int w = (*frames[v])[dir];
      const Vec2 lifted = coords[v] + kUnitSteps[dir];
      if (!frames[w]) {
        frames[w] = fw;
        coords[w] = lifted;
        queue.push_back(w);
        continue;
      }
      if (*frames[w] != fw) {
        if (is_reflection(*frames[w], fw))
          fail(ErrorKind::NonOrientable, "development reverses orientation at vertex " + std::to_string(w));
        fail(ErrorKind::Embedding, "inconsistent development at vertex " + std::to_string(w));
      }
      if (lifted != coords[w]) periods.push_back(lifted - coords[w]);
    }
  }

  Development out;
  out.lattice = hnf_normalize(periods);
  out.coordinates = coords;
  if (out.lattice.rank() != 2 || *out.lattice.index() != n)
    fail(ErrorKind::Embedding, "recovered lattice " + out.lattice.to_string() + " does not have index " +
                                   std::to_string(n));
  const CosetQuotient q = coset_quotient(out.lattice);
  const std::int64_t d = out.lattice.basis()[1].y;
  out.to_quotient.resize(n);
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    const Vec2 r = out.lattice.reduce(coords[v]);
    const int id = static_cast<int>(r.x * d + r.y);
    if (hit[id]) fail(ErrorKind::Embedding, "two vertices develop onto the same coset");
    hit[id] = 1;
    out.to_quotient[v] = id;
  }
  if (!(g.relabeled(out.to_quotient) == q.embedding.graph))
    fail(ErrorKind::Embedding, "graph differs from the quotient by the recovered lattice");
  return out;
}

}  // namespace etg4

#include <functional>

#include "doctest.h"
#include "etg4/constructors.hpp"
#include "etg4/error.hpp"
#include "etg4/lattice.hpp"
#include "etg4/symmetry.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace etg4;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Io;
}

const std::array<std::array<std::int64_t, 4>, 8> kSquareSymmetries{{
    {1, 0, 0, 1}, {0, -1, 1, 0}, {-1, 0, 0, -1}, {0, 1, -1, 0},
    {1, 0, 0, -1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, -1, 0},
}};

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("hermite normal form") {
  const std::vector<Vec2> checker{{2, 0}, {0, 2}, {1, 1}};
  const Lattice2D l = hnf_normalize(checker);
  CHECK(l.rank() == 2);
  CHECK(l.index() == 2);
  // Coset count by enumeration over a fundamental box.
  std::set<Vec2> reps;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) reps.insert(l.reduce({x, y}));
  CHECK(reps.size() == 2);

  const Lattice2D trivial = hnf_normalize(std::vector<Vec2>{});
  CHECK(trivial.rank() == 0);
  CHECK(trivial.contains({0, 0}));
  CHECK_FALSE(trivial.contains({1, 0}));

  CHECK(hnf_normalize(std::vector<Vec2>{{3, -3}}) == hnf_normalize(std::vector<Vec2>{{-3, 3}}));
  CHECK(hnf_normalize(std::vector<Vec2>{{3, -3}}).rank() == 1);
  CHECK_FALSE(hnf_normalize(std::vector<Vec2>{{3, -3}}).index().has_value());
}

TEST_CASE("parse and print") {
  const Lattice2D l = parse_lattice("3 2; -2 3");
  CHECK(l.to_string() == "[(1,5),(0,13)]");
  CHECK(parse_lattice("1 2").rank() == 1);
  CHECK(l.contains({3, 2}));
  CHECK(l.contains({-2, 3}));
  CHECK_FALSE(l.contains({2, 3}));
  for (const char* bad : {"", "1 2 3", "1 2; 3", "a b; c d", "1 2; 3 4; 5"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse_lattice(bad); }) == ErrorKind::Parse);
  }
}

TEST_CASE("surfaces") {
  CHECK(surface_of(hnf_normalize(std::vector<Vec2>{})) == Surface::Plane);
  CHECK(surface_of(hnf_normalize(std::vector<Vec2>{{2, 1}})) == Surface::Cylinder);
  CHECK(surface_of(parse_lattice("3 2; -2 3")) == Surface::Torus);
  CHECK(to_string(Surface::Torus) == "torus");
}

TEST_CASE("table rows") {
  CHECK(family_from_row({3, 3, 2}).index() == 13);
  CHECK(family_from_row({4, 3, 1}).index() == 8);
  CHECK(family_from_row({5, 2, 3}).index() == 12);
  CHECK(family_from_row({1, 0, 0}).rank() == 0);
  CHECK(family_from_row({2, 3, 0}).rank() == 1);
  CHECK(kind_of([] { family_from_row({6, 1, 1}); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { family_from_row({4, 2, -2}); }) == ErrorKind::Parameter);

  CHECK(row_symmetry_check(parse_lattice("3 2; -2 3")) == std::set<int>{3});
  CHECK(row_symmetry_check(parse_lattice("2 2; 3 -3")).count(5));
  const auto both = row_symmetry_check(parse_lattice("1 1; -1 1"));
  CHECK(both.count(3));
  CHECK(both.count(5));
}

TEST_CASE("frame normalization") {
  const Lattice2D l = parse_lattice("3 2; -2 3");
  const FrameNormalization f = frame_normalization(l);
  CHECK(f.lattice == l.transformed(f.matrix));
  for (const auto& m : kSquareSymmetries) {
    CHECK(normalize_frame(l.transformed(m)) == f.lattice);
    CHECK(f.lattice <= hnf_normalize(std::vector<Vec2>{apply(m, l.basis()[0]), apply(m, l.basis()[1])}));
  }
}

TEST_CASE("coset quotients") {
  const CosetQuotient q = coset_quotient(parse_lattice("3 2; -2 3"));
  const Graph& g = q.embedding.graph;
  CHECK(g.vertex_count() == 13);
  CHECK(g.edge_count() == 26);
  CHECK(is_regular(g, 4));
  CHECK(q.simple);
  CHECK(q.girth == 4);
  CHECK(oracle::uniform_frequency(g) == 2);
  CHECK(q.embedding.faces.size() == 13);
  // Torus: V - E + F = 0.
  CHECK(g.vertex_count() - g.edge_count() + static_cast<int>(q.embedding.faces.size()) == 0);
  CHECK(q.horizontal_edges.size() + q.vertical_edges.size() == 26);

  const CosetQuotient k5 = coset_quotient(parse_lattice("2 1; -1 2"));
  CHECK(k5.embedding.graph.vertex_count() == 5);
  CHECK(k5.girth == 3);

  CHECK_FALSE(coset_quotient(parse_lattice("1 0; 0 1")).simple);
  CHECK(kind_of([] { coset_quotient(hnf_normalize(std::vector<Vec2>{{3, 0}})); }) == ErrorKind::Precondition);
}

TEST_CASE("translation group acts regularly") {
  const CosetQuotient q = coset_quotient(parse_lattice("3 2; -2 3"));
  const GeneratedGroup t = translation_group(q.embedding, q.lattice);
  CHECK(t.order() == 13);
  for (const auto& p : t.generators()) CHECK(is_automorphism(q.embedding.graph, p));
  CHECK(orbits(t, q.embedding.graph, ActsOn::Vertices).size() == 1);
}

TEST_CASE("windows") {
  const Graph plane = plane_window(4, 3);
  CHECK(plane.vertex_count() == 12);
  CHECK(plane.edge_count() == 3 * 3 + 4 * 2);
  const Graph cyl = cylinder_window(hnf_normalize(std::vector<Vec2>{{5, 0}}), 3);
  CHECK(cyl.vertex_count() == 5 * 7);
  CHECK(oracle::girth(cyl) == 4);
}

TEST_CASE("faces from frequency two") {
  const CosetQuotient q = coset_quotient(parse_lattice("3 2; -2 3"));
  const QuadEmbedding e = faces_from_frequency2(q.embedding.graph);
  CHECK(std::set<FourCycle>(e.faces.begin(), e.faces.end()) ==
        std::set<FourCycle>(q.embedding.faces.begin(), q.embedding.faces.end()));
  CHECK(e.rotation.size() == 13);

  CHECK(kind_of([] { faces_from_frequency2(complete_bipartite(4, 4)); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { faces_from_frequency2(cm2(5)); }) == ErrorKind::Precondition);
  const Graph g13 = q.embedding.graph;
  CHECK(kind_of([&] { faces_from_frequency2(disjoint_union(g13, g13)); }) == ErrorKind::Precondition);
}

TEST_CASE("development recovers the lattice") {
  for (const auto& row : lattice_sweep()) {
    const Lattice2D l = family_from_row(row);
    CAPTURE(l.to_string());
    const CosetQuotient q = coset_quotient(l);
    if (!q.simple || q.girth != 4 || oracle::uniform_frequency(q.embedding.graph) != 2) continue;
    const Development d = develop(faces_from_frequency2(q.embedding.graph));
    CHECK(normalize_frame(d.lattice) == normalize_frame(l));
    CHECK(d.lattice.index() == q.embedding.graph.vertex_count());
    // Lifts of adjacent vertices differ by a unit step modulo the lattice.
    for (const auto& e : q.embedding.graph.edges()) {
      const Vec2 diff = d.coordinates[e.u] - d.coordinates[e.v];
      CHECK(std::any_of(kUnitSteps.begin(), kUnitSteps.end(), [&](Vec2 s) { return d.lattice.contains(diff - s); }));
    }
  }
}

TEST_CASE("coset ids") {
  const Lattice2D l = parse_lattice("3 2; -2 3");
  std::set<int> ids;
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) {
      const int id = coset_id(l, {x, y});
      CHECK(id == coset_id(l, Vec2{x, y} + Vec2{3, 2}));
      ids.insert(id);
    }
  CHECK(ids.size() == 13);
  CHECK(*ids.begin() == 0);
  CHECK(*ids.rbegin() == 12);
}

}  // TEST_SUITE

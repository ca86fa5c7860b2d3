#include "doctest.h"
#include "etg4/error.hpp"
#include "etg4/group.hpp"
#include "oracles.hpp"

using namespace etg4;

TEST_SUITE("group") {

TEST_CASE("composition applies the right factor first") {
  const Permutation a({1, 2, 0});
  const Permutation b({1, 0, 2});
  const Permutation ab = a * b;
  for (int x = 0; x < 3; ++x) CHECK(ab(x) == a(b(x)));
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("orders match the closure oracle") {
  const std::vector<std::pair<int, std::vector<std::vector<int>>>> cases{
      {4, {{1, 0, 2, 3}, {1, 2, 3, 0}}},           // S4
      {5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}},     // D5
      {5, {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}},     // AGL(1,5)
      {6, {{1, 0, 3, 2, 5, 4}, {2, 3, 0, 1, 4, 5}}},
      {7, {{1, 2, 0, 3, 4, 5, 6}, {0, 1, 2, 4, 5, 6, 3}}},
      {8, {{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}}},  // S8
  };
  for (const auto& [degree, images] : cases) {
    std::vector<Permutation> gens;
    for (const auto& im : images) gens.emplace_back(im);
    const GeneratedGroup g(degree, gens);
    const auto closure = oracle::group_closure(degree, images);
    CHECK(g.order() == closure.size());
    if (g.order() <= 5040) {
      const auto elements = g.elements();
      CHECK(elements.size() == closure.size());
      for (const auto& p : elements) CHECK(closure.count(p.images()));
    }
  }
}

TEST_CASE("membership") {
  const GeneratedGroup d5(5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 4, 3, 2, 1})});
  CHECK(d5.contains(Permutation({4, 3, 2, 1, 0})));
  CHECK_FALSE(d5.contains(Permutation({1, 0, 2, 3, 4})));
  const StabilizerChain chain(5, d5.generators());
  CHECK(chain.order() == 10);
  CHECK(chain.contains(Permutation({2, 3, 4, 0, 1})));
}

TEST_CASE("trivial group") {
  const GeneratedGroup t = GeneratedGroup::trivial(6);
  CHECK(t.order() == 1);
  CHECK(t.elements().size() == 1);
}

TEST_CASE("text round trip") {
  const GeneratedGroup g(5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 2, 4, 1, 3})});
  const GeneratedGroup back = GeneratedGroup::parse(g.to_text(), 5);
  CHECK(back.order() == 20);
  CHECK(back.generators() == g.generators());
  CHECK(GeneratedGroup::parse("# comment\n\n1 0 2\n", 3).order() == 2);
  for (const char* bad : {"1 2\n", "0 0 1\n", "0 1 x\n", "0 1 3\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GeneratedGroup::parse(bad, 3), Error);
  }
}

TEST_CASE("point orbits") {
  const std::vector<Permutation> gens{Permutation({1, 0, 2, 4, 3, 5})};
  const auto orbits = point_orbits(6, gens);
  CHECK(orbits.size() == 4);
}

}  // TEST_SUITE

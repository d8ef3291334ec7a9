#include <random>

#include "doctest.h"
#include "mwlinks/chord_diagram.hpp"
#include "mwlinks/error.hpp"
#include "oracles/chord_oracles.hpp"

using namespace mwlinks;

namespace {

ChordDiagram one_circle(int n, std::vector<std::pair<int, int>> chords) {
  std::vector<PointId> pts;
  for (int i = 1; i <= n; ++i) pts.push_back(std::to_string(i));
  std::vector<Chord> ch;
  for (auto [a, b] : chords) ch.push_back({std::to_string(a), std::to_string(b)});
  return ChordDiagram::validate({pts}, ch);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Schema;
}

}  // namespace

TEST_CASE("validate accepts and rejects the basic shapes") {
  const auto empty = ChordDiagram::validate({{}}, {});
  CHECK(empty.l() == 1);
  CHECK(empty.delta() == 0);
  CHECK(kind_of([] { one_circle(4, {{1, 2}, {1, 3}}); }) ==
        ErrorKind::DuplicateEndpoint);
  CHECK(kind_of([] { ChordDiagram::validate({{"a"}}, {{"a", "b"}}); }) ==
        ErrorKind::UnknownPoint);
  CHECK(kind_of([] { ChordDiagram::validate({}, {}); }) ==
        ErrorKind::EmptyDiagram);
  const auto two = ChordDiagram::validate({{"a"}, {"b"}}, {{"a", "b"}});
  CHECK(two.l() == 2);
  CHECK(two.delta() == 1);
}

TEST_CASE("planarity examples") {
  CHECK_FALSE(is_planar(one_circle(4, {{1, 3}, {2, 4}})));
  CHECK(is_planar(one_circle(4, {{1, 4}, {2, 3}})));
  CHECK_FALSE(is_planar(ChordDiagram::validate({{"a"}, {"b"}}, {{"a", "b"}})));
}

TEST_CASE("is_planar agrees with the definitional oracle on random diagrams") {
  std::mt19937_64 rng(11);
  int planar_seen = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto cd = oracle::random_diagram(rng, 3, 12);
    const bool p = is_planar(cd);
    CHECK(p == oracle::planar(cd));
    planar_seen += p;
  }
  CHECK(planar_seen > 100);
}

TEST_CASE("planar loop examples") {
  CHECK(planar_loops(ChordDiagram::validate({{}}, {})).size() == 1);
  CHECK(planar_loops(one_circle(4, {{1, 4}, {2, 3}})).size() == 3);
  const auto two = ChordDiagram::validate({{"a", "b"}, {"c", "d"}},
                                          {{"a", "b"}, {"c", "d"}});
  CHECK(planar_loops(two).size() == 4);
  CHECK(kind_of([] { planar_loops(one_circle(4, {{1, 3}, {2, 4}})); }) ==
        ErrorKind::NotPlanar);
}

TEST_CASE("loops partition the arcs and every chord borders two loops") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto cd = oracle::random_planar(rng, 3, 4);
    const auto loops = planar_loops(cd);
    CHECK(loops.size() == cd.l() + cd.delta());
    std::vector<int> arc_hits(cd.arcs().size(), 0);
    std::vector<int> chord_hits(cd.delta(), 0);
    for (const auto& lp : loops.loops()) {
      for (auto a : lp.arcs) ++arc_hits[a];
      for (auto c : lp.chords) ++chord_hits[c];
      CHECK(loops.loop_of_key(cd, lp.key) == lp.id);
    }
    for (int h : arc_hits) CHECK(h == 1);
    for (int h : chord_hits) CHECK(h == 2);
  }
}

TEST_CASE("loop count is l + delta on every enumerated diagram") {
  for (std::size_t l = 1; l <= 3; ++l) {
    for (std::size_t d = 0; d <= 6; ++d) {
      for (const auto& cd : enumerate_planar_diagrams(l, d)) {
        CHECK(is_planar(cd));
        CHECK(planar_loops(cd).size() == l + d);
      }
    }
  }
}

TEST_CASE("canonical form examples") {
  const auto a = one_circle(4, {{1, 3}, {2, 4}});
  const auto rotated = ChordDiagram::validate({{"2", "3", "4", "1"}},
                                              {{"1", "3"}, {"2", "4"}});
  CHECK(canonical_form(a) == canonical_form(rotated));

  // Nested and sequential chords on four points are rotations of each other:
  // the orbit oracle finds the rotation, so the codes agree.
  const auto nested = one_circle(4, {{1, 4}, {2, 3}});
  const auto sequential = one_circle(4, {{1, 2}, {3, 4}});
  REQUIRE(oracle::isomorphic(nested, sequential));
  CHECK(canonical_form(nested) == canonical_form(sequential));

  // Smallest chiral one-circle diagrams have four chords.
  const auto chiral = one_circle(8, {{1, 2}, {3, 6}, {4, 8}, {5, 7}});
  REQUIRE_FALSE(oracle::isomorphic(chiral, oracle::reflect(chiral)));
  CHECK(canonical_form(chiral) != canonical_form(oracle::reflect(chiral)));

  CHECK(are_isomorphic(a, a));
  CHECK_FALSE(are_isomorphic(nested, one_circle(4, {{1, 2}})));
  CHECK_FALSE(are_isomorphic(a, nested));
}

TEST_CASE("free points do not enter the code") {
  const auto bare = one_circle(4, {{1, 3}, {2, 4}});
  const auto marked = ChordDiagram::validate(
      {{"1", "x", "2", "3", "y", "4"}}, {{"1", "3"}, {"2", "4"}});
  CHECK(canonical_form(bare) == canonical_form(marked));
}

TEST_CASE("canonical form is constant on relabeling orbits") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const auto cd = oracle::random_diagram(rng, 3, 10);
    const auto code = canonical_form(cd);
    for (int k = 0; k < 100; ++k) {
      CHECK(canonical_form(oracle::random_relabel(cd, rng)) == code);
    }
  }
}

TEST_CASE("code equality matches the orbit oracle") {
  std::mt19937_64 rng(19);
  int iso = 0;
  for (int i = 0; i < 4000; ++i) {
    const auto a = oracle::random_diagram(rng, 2, 6);
    const auto b = oracle::random_diagram(rng, 2, 6);
    const bool same = oracle::isomorphic(a, b);
    CHECK(same == are_isomorphic(a, b));
    iso += same;
  }
  CHECK(iso > 50);
}

TEST_CASE("isomorphism is an equivalence relation") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    const auto a = oracle::random_diagram(rng, 2, 4);
    const auto b = rng() % 2 ? oracle::random_relabel(a, rng)
                             : oracle::random_diagram(rng, 2, 4);
    const auto c = rng() % 2 ? oracle::random_relabel(b, rng)
                             : oracle::random_diagram(rng, 2, 4);
    CHECK(are_isomorphic(a, a));
    CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
    if (are_isomorphic(a, b) && are_isomorphic(b, c)) {
      CHECK(are_isomorphic(a, c));
    }
  }
}

TEST_CASE("enumerate_planar examples") {
  CHECK(enumerate_planar(1, 0).size() == 1);
  // Oracle: non-crossing matchings of four points form a single rotation
  // orbit.
  CHECK(oracle::noncrossing_up_to_rotation(2) == 1);
  CHECK(enumerate_planar(1, 2).size() == 1);
  CHECK(enumerate_planar(2, 1).size() == 1);
}

TEST_CASE("one-circle enumeration matches rotation orbits of matchings") {
  for (std::size_t d = 0; d <= 6; ++d) {
    CHECK(enumerate_planar(1, d).size() == oracle::noncrossing_up_to_rotation(d));
  }
}

TEST_CASE("enumeration gives pairwise non-isomorphic representatives") {
  for (std::size_t l = 1; l <= 3; ++l) {
    for (std::size_t d = 0; d <= 3; ++d) {
      const auto all = enumerate_planar_diagrams(l, d);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          CHECK_FALSE(oracle::isomorphic(all[i], all[j]));
        }
      }
    }
  }
}

TEST_CASE("every random planar diagram is found by the enumerator") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto cd = oracle::random_planar(rng, 3, 2);
    const auto all = enumerate_planar(cd.l(), cd.delta());
    CHECK(std::find(all.begin(), all.end(), canonical_form(cd)) != all.end());
  }
}

TEST_CASE("decode inverts canonical_form on planar codes") {
  for (const auto& code : enumerate_planar(2, 4)) {
    CHECK(canonical_form(decode(code)) == code);
  }
}

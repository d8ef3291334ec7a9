#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mwlinks/error.hpp"
#include "mwlinks/moves.hpp"
#include "oracles/chord_oracles.hpp"

using namespace mwlinks;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Schema;
}

// The triple with every mark turned into a tagged free point.
oracle::Skeleton marked_skeleton(const HopfTriple& t) {
  auto circles = t.base.circles();
  std::map<std::string, int> tags;
  for (std::size_t i = 0; i < t.marks.size(); ++i) {
    const std::string name = "mark" + std::to_string(i);
    auto& c = circles[t.marks[i].circle];
    auto at = t.marks[i].after
                  ? std::find(c.begin(), c.end(), *t.marks[i].after) + 1
                  : c.begin();
    c.insert(at, name);
    tags[name] = 1;
  }
  return oracle::skeleton(ChordDiagram::validate(circles, t.base.chords()), tags);
}

oracle::Skeleton refinement_skeleton(const Refinement& r) {
  std::vector<int> colors(r.inserted.begin(), r.inserted.end());
  return oracle::skeleton(r.diagram.base, {}, colors);
}

HopfTriple random_triple(const ChordDiagram& cd, std::mt19937_64& rng) {
  const auto loops = planar_loops(cd);
  std::vector<Slot> marks;
  for (const auto& lp : loops.loops()) {
    // Any slot of any arc of the loop, free points included.
    std::vector<Slot> options;
    for (std::size_t a : lp.arcs) {
      options.push_back(cd.slot_of_arc(a));
      const auto& arc = cd.arcs()[a];
      const auto& circle = cd.circles()[arc.circle];
      if (arc.start) {
        for (std::size_t i = (*arc.start + 1) % circle.size(); i != *arc.end;
             i = (i + 1) % circle.size()) {
          options.push_back({arc.circle, circle[i]});
        }
      } else {
        for (const auto& p : circle) options.push_back({arc.circle, p});
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    marks.push_back(options[pick(rng)]);
  }
  std::shuffle(marks.begin(), marks.end(), rng);
  return HopfTriple::validate(cd, marks);
}

// Test-side search: every triple code reachable from `start`.
std::set<Code> reachable(const HopfTriple& start) {
  std::set<Code> seen{triple_code(start)};
  std::deque<HopfTriple> queue{start};
  while (!queue.empty()) {
    const HopfTriple t = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < t.base.delta(); ++c) {
      for (int dir : {1, -1}) {
        HopfTriple n = chord_move(t, {c, dir});
        if (seen.insert(triple_code(n)).second) queue.push_back(std::move(n));
      }
    }
  }
  return seen;
}

const ChordDiagram kOneChord =
    ChordDiagram::validate({{"a", "u", "b", "v"}}, {{"a", "b"}});

}  // namespace

TEST_CASE("HopfTriple validation") {
  CHECK_NOTHROW(HopfTriple::validate(kOneChord, {{0, "u"}, {0, "v"}}));
  CHECK(kind_of([] { HopfTriple::validate(kOneChord, {{0, "u"}}); }) ==
        ErrorKind::MissingLoop);
  CHECK(kind_of([] { HopfTriple::validate(kOneChord, {{0, "u"}, {0, "a"}}); }) ==
        ErrorKind::InvalidTriple);
  CHECK(kind_of([] {
          HopfTriple::validate(kOneChord, {{0, "u"}, {0, "nowhere"}});
        }) == ErrorKind::UnknownPoint);
  const auto crossing = ChordDiagram::validate({{"1", "2", "3", "4"}},
                                               {{"1", "3"}, {"2", "4"}});
  CHECK(kind_of([&] { HopfTriple::validate(crossing, {}); }) ==
        ErrorKind::NonPlanarBase);
}

TEST_CASE("chord_move examples") {
  const auto t = HopfTriple::validate(kOneChord, {{0, "u"}, {0, "v"}});
  const auto plus = chord_move(t, {0, 1});
  const std::set<std::optional<PointId>> after{plus.marks[0].after,
                                               plus.marks[1].after};
  CHECK(after == std::set<std::optional<PointId>>{"a", "b"});

  const auto back = chord_move(plus, {0, -1});
  // Marks now sit just before the chord's endpoints, one per loop.
  const std::set<std::optional<PointId>> before{back.marks[0].after,
                                                back.marks[1].after};
  CHECK(before == std::set<std::optional<PointId>>{"v", "u"});
  CHECK(oracle::isomorphic(marked_skeleton(back), marked_skeleton(t)));

  CHECK(kind_of([&] { chord_move(t, {1, 1}); }) == ErrorKind::NotAChord);
}

TEST_CASE("chord_move keeps one mark per loop and only touches two loops") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto cd = oracle::random_planar(rng, 3, 4);
    if (cd.delta() == 0) continue;
    const auto t = random_triple(cd, rng);
    std::uniform_int_distribution<std::size_t> pick(0, cd.delta() - 1);
    const ChordMove mv{pick(rng), rng() % 2 ? 1 : -1};
    const auto moved = chord_move(t, mv);
    CHECK_NOTHROW(HopfTriple::validate(moved.base, moved.marks));
    std::size_t changed = 0;
    for (std::size_t k = 0; k < t.marks.size(); ++k) {
      changed += cd.arc_of(t.marks[k]) != cd.arc_of(moved.marks[k]);
    }
    CHECK(changed <= 2);
  }
}

TEST_CASE("triple codes agree with the marked isomorphism oracle") {
  std::mt19937_64 rng(5);
  int equal = 0;
  for (int i = 0; i < 1500; ++i) {
    const auto cd = oracle::random_planar(rng, 2, 3);
    const auto a = random_triple(cd, rng);
    const auto b = random_triple(cd, rng);
    const bool same = triple_code(a) == triple_code(b);
    equal += same;
    CHECK(same == oracle::isomorphic(marked_skeleton(a), marked_skeleton(b)));
  }
  CHECK(equal > 100);
}

TEST_CASE("enumerate_triples lists each oracle class once") {
  for (std::size_t l = 1; l <= 2; ++l) {
    for (std::size_t delta = 0; delta <= 3; ++delta) {
      for (const auto& cd : enumerate_planar_diagrams(l, delta)) {
        const auto triples = enumerate_triples(cd);
        for (std::size_t i = 0; i < triples.size(); ++i) {
          for (std::size_t j = i + 1; j < triples.size(); ++j) {
            CHECK_FALSE(oracle::isomorphic(marked_skeleton(triples[i]),
                                           marked_skeleton(triples[j])));
          }
        }
        std::mt19937_64 rng(delta * 7 + l);
        for (int k = 0; k < 20; ++k) {
          const auto t = random_triple(cd, rng);
          int hits = 0;
          for (const auto& u : triples) {
            hits += oracle::isomorphic(marked_skeleton(t), marked_skeleton(u));
          }
          CHECK(hits == 1);
        }
      }
    }
  }
}

TEST_CASE("chord_move_path examples") {
  const auto t = HopfTriple::validate(kOneChord, {{0, "u"}, {0, "v"}});
  CHECK(chord_move_path(t, t).empty());
  const auto triples = enumerate_triples(kOneChord);
  for (const auto& a : triples) {
    for (const auto& b : triples) CHECK(chord_move_path(a, b).size() <= 1);
  }
  const auto other = ChordDiagram::validate({{"a", "b"}, {}}, {{"a", "b"}});
  CHECK(kind_of([&] {
          chord_move_path(t, HopfTriple::validate(
                                 other, {{0, "a"}, {0, "b"}, {1, std::nullopt}}));
        }) == ErrorKind::BaseMismatch);
}

TEST_CASE("chord move paths replay to the target") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto cd = oracle::random_planar(rng, 2, 3);
    const auto a = random_triple(cd, rng);
    const auto b = random_triple(oracle::random_relabel(cd, rng), rng);
    HopfTriple t = a;
    for (const auto& mv : chord_move_path(a, b)) t = chord_move(t, mv);
    CHECK(oracle::isomorphic(marked_skeleton(t), marked_skeleton(b)));
  }
}

// Triple classes counted by brute force over every choice of marked arc.
std::size_t oracle_triple_classes(const ChordDiagram& cd) {
  const auto loops = planar_loops(cd);
  std::vector<oracle::Skeleton> reps;
  std::vector<std::size_t> pick(loops.size(), 0);
  for (;;) {
    std::vector<Slot> marks;
    for (std::size_t i = 0; i < loops.size(); ++i) {
      marks.push_back(cd.slot_of_arc(loops.loops()[i].arcs[pick[i]]));
    }
    const auto sk = marked_skeleton(HopfTriple::validate(cd, marks));
    if (std::none_of(reps.begin(), reps.end(), [&](const oracle::Skeleton& r) {
          return oracle::isomorphic(r, sk);
        })) {
      reps.push_back(sk);
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == loops.loops()[i].arcs.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return reps.size();
}

TEST_CASE("chains of leaf chords: every pair of triples is connected") {
  // Two chords side by side: rotation swaps them, leaving one class.
  const auto two = ChordDiagram::validate({{"1", "2", "3", "4"}},
                                          {{"1", "2"}, {"3", "4"}});
  CHECK(enumerate_triples(two).size() == oracle_triple_classes(two));
  CHECK(enumerate_triples(two).size() == 1);
  // A leaf beside a chord that encloses another leaf.
  const auto three = ChordDiagram::validate({{"1", "2", "3", "4", "5", "6"}},
                                            {{"1", "2"}, {"3", "6"}, {"4", "5"}});
  const auto triples = enumerate_triples(three);
  CHECK(triples.size() == oracle_triple_classes(three));
  std::size_t depth = 0;
  for (const auto& a : triples) {
    for (const auto& b : triples) {
      depth = std::max(depth, chord_move_path(a, b).size());
    }
  }
  MESSAGE("triples: " << triples.size() << ", max path length: " << depth);
  CHECK(triples.size() > 1);
  CHECK(depth >= 1);
}

TEST_CASE("enumerate_triples matches the brute-force class count") {
  for (std::size_t l = 1; l <= 3; ++l) {
    for (std::size_t delta = 0; l + delta <= 5; ++delta) {
      for (const auto& cd : enumerate_planar_diagrams(l, delta)) {
        CHECK(enumerate_triples(cd).size() == oracle_triple_classes(cd));
      }
    }
  }
}

TEST_CASE("chord moves connect all triples when l + delta <= 7") {
  std::size_t diagrams = 0;
  for (std::size_t l = 1; l <= 7; ++l) {
    for (std::size_t delta = 0; l + delta <= 7; ++delta) {
      for (const auto& cd : enumerate_planar_diagrams(l, delta)) {
        ++diagrams;
        const auto triples = enumerate_triples(cd);
        for (const auto& t : triples) {
          CHECK(reachable(t).size() == triples.size());
        }
      }
    }
  }
  MESSAGE("diagrams checked: " << diagrams);
}

TEST_CASE("chord_slide examples") {
  const auto circle = ChordDiagram::validate({{}}, {});
  const Slot s{0, std::nullopt};
  const auto y = chord_slide(circle, {"#0", s, s, s, SlideVariant::Y});
  const auto z = chord_slide(circle, {"#0", s, s, s, SlideVariant::Z});
  CHECK(y.delta() == 2);
  CHECK(z.delta() == 2);
  CHECK(is_nodal_hopf(y));
  CHECK(is_nodal_hopf(z));
  // Side-by-side and nested pairs of chords agree up to rotation.
  CHECK(oracle::isomorphic(y.base, z.base));
  CHECK(canonical_form(y.base) == canonical_form(z.base));
  // The first added chord is [x,y] in Y and [x,z'] in Z.
  const auto drop_first = [](const ChordDiagram& cd) {
    auto chords = cd.chords();
    chords.erase(chords.begin());
    return ChordDiagram::validate(cd.circles(), chords);
  };
  CHECK(oracle::isomorphic(drop_first(y.base), drop_first(z.base)));
  CHECK(drop_first(y.base).delta() == 1);

  // Two loops: the anchors must share one.
  const auto split = ChordDiagram::validate({{"a", "u", "b", "v"}}, {{"a", "b"}});
  CHECK(kind_of([&] {
          chord_slide(split, {"a", {0, "a"}, {0, "u"}, {0, "b"}, SlideVariant::Y});
        }) == ErrorKind::AnchorsNotOnOneLoop);
  const auto free3 = ChordDiagram::validate({{"p", "q", "r"}}, {});
  CHECK(kind_of([&] {
          chord_slide(free3, {"p", {0, "p"}, {0, "r"}, {0, "q"}, SlideVariant::Y});
        }) == ErrorKind::AnchorsNotCyclic);
  CHECK_NOTHROW(
      chord_slide(free3, {"p", {0, "q"}, {0, "r"}, {0, "p"}, SlideVariant::Z}));
}

TEST_CASE("chord_slide outputs are nodal Hopf with a common coarsening") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 400; ++i) {
    const auto cd = oracle::random_planar(rng, 2, 3, 3);
    const auto loops = planar_loops(cd);
    std::uniform_int_distribution<std::size_t> pick_loop(0, loops.size() - 1);
    const auto& lp = loops.loops()[pick_loop(rng)];
    const auto t = random_triple(cd, rng);
    // Anchor candidates: the loop's own mark and arc starts.
    std::vector<Slot> slots{t.marks[lp.id]};
    for (std::size_t a : lp.arcs) slots.push_back(cd.slot_of_arc(a));
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    SlideSpec spec{lp.key, slots[pick(rng)], slots[pick(rng)], slots[pick(rng)],
                   SlideVariant::Y};
    DegreeChordDiagram y = attach_degrees(cd, std::vector<int>(loops.size(), 1));
    try {
      y = chord_slide(cd, spec);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AnchorsNotCyclic);
      continue;
    }
    spec.variant = SlideVariant::Z;
    DegreeChordDiagram z = chord_slide(cd, spec);
    for (const DegreeChordDiagram* out : {&y, &z}) {
      CHECK(oracle::planar(out->base));
      CHECK(is_nodal_hopf(*out));
      CHECK(out->delta() == cd.delta() + 2);
      CHECK(out->loops.size() == loops.size() + 2);
    }
    auto yc = y.base.chords();
    yc.erase(yc.end() - 2);
    auto zc = z.base.chords();
    zc.erase(zc.end() - 2);
    CHECK(oracle::isomorphic(ChordDiagram::validate(y.base.circles(), yc),
                             ChordDiagram::validate(z.base.circles(), zc)));
  }
}

TEST_CASE("slide_path examples") {
  const auto empty = ChordDiagram::validate({{}}, {});
  const auto r3 = refine_to_hopf(attach_degrees(empty, std::vector<int>{3}));
  REQUIRE(r3.size() == 1);
  CHECK(slide_path(r3[0], r3[0]).empty());

  const auto r4 = refine_to_hopf(attach_degrees(empty, std::vector<int>{4}));
  REQUIRE(r4.size() == 2);
  const auto path = slide_path(r4[0], r4[1]);
  CHECK(path.size() >= 1);

  CHECK(kind_of([&] { slide_path(r3[0], r4[0]); }) ==
        ErrorKind::NotRefinementsOfSameDiagram);
}

TEST_CASE("slide paths replay step by step") {
  for (int d = 4; d <= 8; ++d) {
    for (const auto& dcd : enumerate_degree_diagrams(d, 0, 1)) {
      const auto refs = refine_to_hopf(dcd);
      for (std::size_t j = 1; j < refs.size(); ++j) {
        const auto path = slide_path(refs[0], refs[j]);
        Refinement cur = refs[0];
        for (const auto& step : path) {
          // The step's base is the current refinement minus two chords.
          CHECK(step.base.delta() + 2 == cur.diagram.base.delta());
          const auto out = chord_slide(step.base, step.spec);
          CHECK(oracle::isomorphic(
              refinement_skeleton({out, step.result.inserted}),
              refinement_skeleton(step.result)));
          CHECK(decorated_code(coarsen(step.result)) == decorated_code(dcd));
          cur = step.result;
        }
        CHECK(oracle::isomorphic(refinement_skeleton(cur),
                                 refinement_skeleton(refs[j])));
      }
    }
  }
}

TEST_CASE("slides connect all refinements when d <= 8") {
  std::size_t pairs = 0;
  std::size_t longest = 0;
  for (int d = 3; d <= 8; ++d) {
    for (int g = 0; g <= d - 3; ++g) {
      for (int delta = 0; delta <= d - 3 - g; ++delta) {
        for (const auto& dcd : enumerate_degree_diagrams(d, g, delta)) {
          const auto refs = refine_to_hopf(dcd);
          for (const auto& a : refs) {
            for (const auto& b : refs) {
              longest = std::max(longest, slide_path(a, b).size());
              ++pairs;
            }
          }
        }
      }
    }
  }
  MESSAGE("refinement pairs: " << pairs << ", longest slide path: " << longest);
}

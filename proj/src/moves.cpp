// Copyright 2026 The mwlinks Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mwlinks/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include "mwlinks/error.hpp"

namespace mwlinks {

namespace {

void require_planar(const ChordDiagram& cd) {
  if (!is_planar(cd)) throw Error(ErrorKind::NonPlanarBase, "diagram is not planar");
}

// Breadth-first search over states identified by their codes. Returns the
// chain of states from the start to the first state whose code is `target`.
template <typename State, typename Edge, typename CodeFn, typename Expand>
std::vector<Edge> bfs(const State& start, const Code& target, CodeFn code_of,
                      Expand expand) {
  struct Node {
    State state;
    std::size_t parent;
    std::optional<Edge> edge;
  };
  const std::size_t cap = max_search_states();
  std::vector<Node> nodes;
  std::map<Code, std::size_t> seen;
  nodes.push_back({start, 0, std::nullopt});
  seen.emplace(code_of(start), 0);
  std::optional<std::size_t> hit;
  if (seen.begin()->first == target) hit = 0;
  for (std::size_t head = 0; !hit && head < nodes.size(); ++head) {
    for (auto& [edge, next] : expand(nodes[head].state)) {
      Code c = code_of(next);
      if (seen.count(c)) continue;
      if (nodes.size() >= cap) {
        throw Error(ErrorKind::StateCapExceeded,
                    "search exceeded " + std::to_string(cap) + " states");
      }
      seen.emplace(c, nodes.size());
      nodes.push_back({std::move(next), head, std::move(edge)});
      if (c == target) {
        hit = nodes.size() - 1;
        break;
      }
    }
  }
  if (!hit) throw std::logic_error("target state is unreachable");
  std::vector<Edge> path;
  for (std::size_t i = *hit; i != 0; i = nodes[i].parent) {
    path.push_back(*nodes[i].edge);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Slots of a loop in traversal order.
std::vector<Slot> loop_slots(const ChordDiagram& cd, const PlanarLoop& lp) {
  std::vector<Slot> out;
  const auto& circle = cd.circles()[lp.circle];
  for (std::size_t a : lp.arcs) {
    const Arc& arc = cd.arcs()[a];
    if (!arc.start) {
      if (circle.empty()) out.push_back({arc.circle, std::nullopt});
      for (const auto& p : circle) out.push_back({arc.circle, p});
      continue;
    }
    const std::size_t n = circle.size();
    std::size_t i = *arc.start;
    do {
      out.push_back({arc.circle, circle[i]});
      i = (i + 1) % n;
    } while (i != *arc.end);
  }
  return out;
}

std::string fresh_name(const ChordDiagram& cd, int& counter) {
  for (;;) {
    std::string s = "s" + std::to_string(++counter);
    if (!cd.has_point(s)) return s;
  }
}

// Both slide variants of the same anchors, with their new chord endpoints.
struct SlideBuild {
  ChordDiagram diagram;
  // x, y, y' (or z'), z, in the order they enter the chords.
  Chord first;
  Chord second;
};

SlideBuild build_slide(const ChordDiagram& base, const SlideSpec& spec) {
  require_planar(base);
  const auto loops = planar_loops(base);
  const std::size_t target = loops.loop_of_key(base, spec.loop);
  for (const Slot* s : {&spec.x, &spec.y, &spec.z}) {
    if (loops.loop_of_arc(base.arc_of(*s)) != target) {
      throw Error(ErrorKind::AnchorsNotOnOneLoop,
                  "anchors do not all lie on loop '" + spec.loop + "'");
    }
  }
  const auto seq = loop_slots(base, loops.loops()[target]);
  const auto index_of = [&](const Slot& s) {
    return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), s) -
                                    seq.begin());
  };
  const std::size_t m = seq.size();
  const std::size_t ix = index_of(spec.x);
  const std::size_t oy = (index_of(spec.y) + m - ix) % m;
  const std::size_t oz = (index_of(spec.z) + m - ix) % m;
  if (oy > oz && oz != 0) {
    throw Error(ErrorKind::AnchorsNotCyclic,
                "anchors are not in the cyclic order of the loop");
  }
  enum Role { X, Y, Z };
  // Roles in the order they are inserted into each shared slot.
  std::vector<std::pair<const Slot*, std::vector<Role>>> groups;
  if (oy == 0 && oz == 0) {
    groups = {{&spec.x, {X, Y, Z}}};
  } else if (oy == 0) {
    groups = {{&spec.x, {X, Y}}, {&spec.z, {Z}}};
  } else if (oz == 0) {
    groups = {{&spec.x, {Z, X}}, {&spec.y, {Y}}};
  } else if (oy == oz) {
    groups = {{&spec.x, {X}}, {&spec.y, {Y, Z}}};
  } else {
    groups = {{&spec.x, {X}}, {&spec.y, {Y}}, {&spec.z, {Z}}};
  }

  int counter = 0;
  const std::string nx = fresh_name(base, counter);
  const std::string ny = fresh_name(base, counter);
  const std::string nz = fresh_name(base, counter);
  const std::string extra = fresh_name(base, counter);
  const bool is_y = spec.variant == SlideVariant::Y;

  auto circles = base.circles();
  for (const auto& [slot, roles] : groups) {
    std::vector<std::string> names;
    for (Role r : roles) {
      names.push_back(r == X ? nx : r == Y ? ny : nz);
      if ((r == Y && is_y) || (r == Z && !is_y)) names.push_back(extra);
    }
    auto& c = circles[slot->circle];
    auto at = slot->after ? std::find(c.begin(), c.end(), *slot->after) + 1
                          : c.begin();
    c.insert(at, names.begin(), names.end());
  }
  SlideBuild out{base, {}, {}};
  if (is_y) {
    out.first = {nx, ny};
    out.second = {extra, nz};
  } else {
    out.first = {nx, extra};
    out.second = {ny, nz};
  }
  auto chords = base.chords();
  chords.push_back(out.first);
  chords.push_back(out.second);
  out.diagram = ChordDiagram::validate(std::move(circles), std::move(chords));
  return out;
}

// Drops the chord at `index`, keeping its endpoints as free points.
ChordDiagram without_chord(const ChordDiagram& cd, std::size_t index) {
  auto chords = cd.chords();
  chords.erase(chords.begin() + static_cast<std::ptrdiff_t>(index));
  return ChordDiagram::validate(cd.circles(), std::move(chords));
}

}  // namespace

HopfTriple HopfTriple::validate(const ChordDiagram& base,
                                std::vector<Slot> marks) {
  require_planar(base);
  const auto loops = planar_loops(base);
  std::vector<std::optional<Slot>> placed(loops.size());
  for (auto& s : marks) {
    const std::size_t lp = loops.loop_of_arc(base.arc_of(s));
    if (placed[lp]) {
      throw Error(ErrorKind::InvalidTriple,
                  "two marks on loop '" + loops.loops()[lp].key + "'");
    }
    placed[lp] = std::move(s);
  }
  HopfTriple t{base, {}};
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (!placed[i]) {
      throw Error(ErrorKind::MissingLoop,
                  "no mark on loop '" + loops.loops()[i].key + "'");
    }
    t.marks.push_back(*placed[i]);
  }
  return t;
}

HopfTriple chord_move(const HopfTriple& t, const ChordMove& move) {
  const ChordDiagram& cd = t.base;
  if (move.chord >= cd.delta()) {
    throw Error(ErrorKind::NotAChord,
                "no chord with index " + std::to_string(move.chord));
  }
  const auto loops = planar_loops(cd);
  HopfTriple out = t;
  for (const PointId& p : {cd.chords()[move.chord].a, cd.chords()[move.chord].b}) {
    const auto loc = cd.locate(p);
    const std::size_t n = cd.circles()[loc.circle].size();
    Slot s;
    std::size_t arc;
    if (move.direction > 0) {
      s = {loc.circle, p};
      arc = cd.arc_after(loc.circle, loc.index);
    } else {
      s = {loc.circle, cd.point(loc.circle, (loc.index + n - 1) % n)};
      arc = cd.arc_before(loc.circle, loc.index);
    }
    out.marks[loops.loop_of_arc(arc)] = s;
  }
  return out;
}

Code triple_code(const HopfTriple& t) {
  CodeLabels labels;
  labels.arc.assign(t.base.arcs().size(), 0);
  for (const auto& s : t.marks) labels.arc[t.base.arc_of(s)] = 1;
  return canonical_form(t.base, labels);
}

std::vector<ChordMove> chord_move_path(const HopfTriple& a, const HopfTriple& b) {
  if (canonical_form(a.base) != canonical_form(b.base)) {
    throw Error(ErrorKind::BaseMismatch, "triples have non-isomorphic bases");
  }
  return bfs<HopfTriple, ChordMove>(
      a, triple_code(b), triple_code, [](const HopfTriple& t) {
        std::vector<std::pair<ChordMove, HopfTriple>> out;
        for (std::size_t c = 0; c < t.base.delta(); ++c) {
          for (int dir : {1, -1}) {
            ChordMove mv{c, dir};
            out.emplace_back(mv, chord_move(t, mv));
          }
        }
        return out;
      });
}

std::vector<HopfTriple> enumerate_triples(const ChordDiagram& base) {
  require_planar(base);
  const auto loops = planar_loops(base);
  std::vector<HopfTriple> out;
  std::map<Code, bool> seen;
  std::vector<std::size_t> pick(loops.size(), 0);
  for (;;) {
    HopfTriple t{base, {}};
    for (std::size_t i = 0; i < loops.size(); ++i) {
      t.marks.push_back(base.slot_of_arc(loops.loops()[i].arcs[pick[i]]));
    }
    if (seen.emplace(triple_code(t), true).second) out.push_back(std::move(t));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == loops.loops()[i].arcs.size()) {
      pick[i++] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

DegreeChordDiagram chord_slide(const ChordDiagram& base, const SlideSpec& spec) {
  SlideSpec y = spec;
  y.variant = SlideVariant::Y;
  SlideSpec z = spec;
  z.variant = SlideVariant::Z;
  const SlideBuild by = build_slide(base, y);
  const SlideBuild bz = build_slide(base, z);
  // Removing [x,y] from Y and [x,z'] from Z must leave the same diagram.
  const std::size_t k = base.delta();
  if (canonical_form(without_chord(by.diagram, k)) !=
      canonical_form(without_chord(bz.diagram, k))) {
    throw std::logic_error("slide variants have different coarsenings");
  }
  const ChordDiagram& cd = spec.variant == SlideVariant::Y ? by.diagram : bz.diagram;
  return attach_degrees(cd, std::vector<int>(cd.l() + cd.delta(), 1));
}

std::vector<SlideStep> slide_path(const Refinement& r1, const Refinement& r2) {
  if (decorated_code(coarsen(r1)) != decorated_code(coarsen(r2))) {
    throw Error(ErrorKind::NotRefinementsOfSameDiagram,
                "refinements coarsen to different diagrams");
  }
  const auto expand = [](const Refinement& r) {
    std::vector<std::pair<SlideStep, Refinement>> out;
    const ChordDiagram& cd = r.diagram.base;
    const Code here = refinement_code(r);
    for (std::size_t i = 0; i < cd.delta(); ++i) {
      for (std::size_t j = 0; j < cd.delta(); ++j) {
        if (i == j || !r.inserted[i]) continue;
        std::vector<Chord> kept;
        std::vector<bool> mask;
        for (std::size_t k = 0; k < cd.delta(); ++k) {
          if (k == i || k == j) continue;
          kept.push_back(cd.chords()[k]);
          mask.push_back(r.inserted[k]);
        }
        mask.push_back(true);
        mask.push_back(r.inserted[j]);
        const Chord& c1 = cd.chords()[i];
        const Chord& c2 = cd.chords()[j];
        const auto removed = [&](const PointId& p) {
          return p == c1.a || p == c1.b || p == c2.a || p == c2.b;
        };
        std::vector<std::vector<PointId>> circles;
        for (const auto& c : cd.circles()) {
          circles.emplace_back();
          for (const auto& p : c) {
            if (!removed(p)) circles.back().push_back(p);
          }
        }
        const ChordDiagram base = ChordDiagram::validate(circles, kept);
        const auto slot_in_base = [&](const PointId& p) {
          const auto loc = cd.locate(p);
          const auto& c = cd.circles()[loc.circle];
          for (std::size_t s = 1; s <= c.size(); ++s) {
            const auto& q = c[(loc.index + c.size() - s) % c.size()];
            if (!removed(q)) return Slot{loc.circle, q};
          }
          return Slot{loc.circle, std::nullopt};
        };
        const auto next_to = [&](const PointId& p, const PointId& q) {
          const auto lp = cd.locate(p);
          const auto lq = cd.locate(q);
          const std::size_t n = cd.circles()[lp.circle].size();
          return lp.circle == lq.circle && (lp.index + 1) % n == lq.index;
        };
        const auto loops = planar_loops(base);
        for (int o1 = 0; o1 < 2; ++o1) {
          const PointId& e = o1 ? c1.a : c1.b;
          const PointId& other = o1 ? c1.b : c1.a;
          for (int o2 = 0; o2 < 2; ++o2) {
            const PointId& f = o2 ? c2.a : c2.b;
            const PointId& f2 = o2 ? c2.b : c2.a;
            SlideSpec spec;
            if (next_to(e, f)) {
              spec = {"", slot_in_base(other), slot_in_base(e),
                      slot_in_base(f2), SlideVariant::Y};
            } else if (next_to(f, e)) {
              spec = {"", slot_in_base(other), slot_in_base(f2),
                      slot_in_base(f), SlideVariant::Z};
            } else {
              continue;
            }
            const std::size_t lp = loops.loop_of_arc(base.arc_of(spec.x));
            spec.loop = loops.loops()[lp].key;
            try {
              if (refinement_code({chord_slide(base, spec), mask}) != here) continue;
            } catch (const Error&) {
              continue;
            }
            spec.variant = spec.variant == SlideVariant::Y ? SlideVariant::Z
                                                           : SlideVariant::Y;
            Refinement next{chord_slide(base, spec), mask};
            out.emplace_back(SlideStep{base, spec, next}, next);
          }
        }
      }
    }
    return out;
  };
  return bfs<Refinement, SlideStep>(r1, refinement_code(r2), refinement_code,
                                     expand);
}

std::size_t max_search_states() {
  if (const char* env = std::getenv("MWLINKS_MAX_STATES")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1000000;
}

}  // namespace mwlinks

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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mwlinks/chord_diagram.hpp"
#include "mwlinks/degree_diagram.hpp"

namespace mwlinks {

/// Planar diagram with one marked position on each planar loop. A mark is
/// a slot, so it never sits on a chord endpoint.
struct HopfTriple {
  ChordDiagram base;
  /// Indexed by loop id.
  std::vector<Slot> marks;

  /// Marks may come in any order. Throws NonPlanarBase, MissingLoop,
  /// InvalidTriple, UnknownPoint.
  static HopfTriple validate(const ChordDiagram& base, std::vector<Slot> marks);
};

struct ChordMove {
  std::size_t chord = 0;
  /// +1 moves the marks along the orientation, -1 against it.
  int direction = 1;
  bool operator==(const ChordMove&) const = default;
};

/// Replaces the marks of the two loops beside the chord by positions next to
/// its endpoints. Throws NotAChord.
HopfTriple chord_move(const HopfTriple& t, const ChordMove& move);

/// Code of the marked diagram, invariant under isomorphism.
Code triple_code(const HopfTriple& t);

/// Shortest list of chord moves turning `a` into a triple isomorphic to `b`.
/// Throws BaseMismatch, StateCapExceeded.
std::vector<ChordMove> chord_move_path(const HopfTriple& a, const HopfTriple& b);

/// Every triple on `base` up to isomorphism.
std::vector<HopfTriple> enumerate_triples(const ChordDiagram& base);

enum class SlideVariant { Y, Z };

/// Three positions x, y, z on one loop, in its cyclic order. When all three
/// share a slot they are placed in the listed order.
struct SlideSpec {
  /// Loop key as accepted by LoopDecomposition::loop_of_key.
  std::string loop;
  Slot x;
  Slot y;
  Slot z;
  SlideVariant variant = SlideVariant::Y;
};

/// Adds two chords inside the loop: [x,y] and [y',z] for Y, [x,z'] and [y,z]
/// for Z, where y' and z' follow y and z. The new chords come last, and
/// every loop of the result has degree one. Throws NonPlanarBase,
/// AnchorsNotOnOneLoop, AnchorsNotCyclic.
DegreeChordDiagram chord_slide(const ChordDiagram& base, const SlideSpec& spec);

/// One slide: remove an inserted chord and the chord it slides along,
/// leaving `base`, then apply `spec` to `base`.
struct SlideStep {
  ChordDiagram base;
  SlideSpec spec;
  Refinement result;
};

/// Shortest list of slides turning r1 into a refinement isomorphic to r2.
/// Throws NotRefinementsOfSameDiagram, StateCapExceeded.
std::vector<SlideStep> slide_path(const Refinement& r1, const Refinement& r2);

/// BFS state budget: MWLINKS_MAX_STATES, or one million.
std::size_t max_search_states();

}  // namespace mwlinks

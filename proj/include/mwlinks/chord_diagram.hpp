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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mwlinks {

using PointId = std::string;
using Code = std::vector<int>;

struct Chord {
  PointId a;
  PointId b;
  bool operator==(const Chord&) const = default;
};

struct PointLocation {
  std::size_t circle = 0;
  std::size_t index = 0;
};

/// A position on a circle strictly between marked points: the slot right
/// after `after`, or anywhere on a circle that carries no points.
struct Slot {
  std::size_t circle = 0;
  std::optional<PointId> after;
  bool operator==(const Slot&) const = default;
};

/// Maximal piece of a circle between consecutive chord endpoints. A circle
/// without chord endpoints is a single arc with no start.
struct Arc {
  std::size_t circle = 0;
  /// Index in the circle of the endpoint the arc leaves from.
  std::optional<std::size_t> start;
  /// Index in the circle of the endpoint the arc runs into.
  std::optional<std::size_t> end;
};

/// Oriented circles with marked points, joined by chords between distinct
/// points. Immutable once validated.
class ChordDiagram {
 public:
  static ChordDiagram validate(std::vector<std::vector<PointId>> circles,
                               std::vector<Chord> chords);

  std::size_t l() const { return circles_.size(); }
  std::size_t delta() const { return chords_.size(); }
  const std::vector<std::vector<PointId>>& circles() const { return circles_; }
  const std::vector<Chord>& chords() const { return chords_; }

  bool has_point(const PointId& p) const { return where_.count(p) != 0; }
  /// Throws UnknownPoint.
  PointLocation locate(const PointId& p) const;
  std::optional<std::size_t> chord_at(const PointId& p) const;
  const PointId& point(std::size_t circle, std::size_t index) const {
    return circles_[circle][index];
  }

  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Arc id of the arc leaving from the endpoint at `index`, or containing
  /// the free point there.
  std::size_t arc_after(std::size_t circle, std::size_t index) const;
  /// Arc id of the arc running into the endpoint at `index`.
  std::size_t arc_before(std::size_t circle, std::size_t index) const;
  /// Throws UnknownPoint, or InvalidTriple for a slot on the wrong circle.
  std::size_t arc_of(const Slot& s) const;
  /// Arc following the chord jump at the end of `arc`; the face permutation.
  std::size_t next_arc(std::size_t arc) const;
  /// Slot naming the start of an arc.
  Slot slot_of_arc(std::size_t arc) const;

  bool operator==(const ChordDiagram& o) const {
    return circles_ == o.circles_ && chords_ == o.chords_;
  }

 private:
  ChordDiagram() = default;
  void index();

  std::vector<std::vector<PointId>> circles_;
  std::vector<Chord> chords_;
  std::unordered_map<PointId, PointLocation> where_;
  std::unordered_map<PointId, std::size_t> chord_of_;
  std::vector<Arc> arcs_;
  // Per circle: first arc id, endpoint positions, and per point the arc after.
  std::vector<std::size_t> first_arc_;
  std::vector<std::vector<std::size_t>> endpoints_;
  std::vector<std::vector<std::size_t>> arc_after_;
};

bool is_planar(const ChordDiagram& cd);

struct PlanarLoop {
  std::size_t id = 0;
  std::size_t circle = 0;
  /// Arc ids in traversal order.
  std::vector<std::size_t> arcs;
  /// chords[i] is traversed right after arcs[i]; empty for a chordless circle.
  std::vector<std::size_t> chords;
  /// Point whose following slot lies on the loop, or "#<circle>" for a circle
  /// without points.
  std::string key;
};

class LoopDecomposition {
 public:
  const std::vector<PlanarLoop>& loops() const { return loops_; }
  std::size_t size() const { return loops_.size(); }
  std::size_t loop_of_arc(std::size_t arc) const { return loop_of_arc_[arc]; }
  /// Resolves a point id or "#<circle>" key. Throws UnknownPoint.
  std::size_t loop_of_key(const ChordDiagram& cd, const std::string& key) const;

 private:
  friend LoopDecomposition planar_loops(const ChordDiagram& cd);
  std::vector<PlanarLoop> loops_;
  std::vector<std::size_t> loop_of_arc_;
};

/// Face decomposition of a planar diagram. Throws NotPlanar.
LoopDecomposition planar_loops(const ChordDiagram& cd);

/// Extra integer labels taking part in canonical codes: one per chord and
/// one per arc. Empty vectors mean the channel is absent.
struct CodeLabels {
  std::vector<int> chord;
  std::vector<int> arc;
};

/// Code invariant under relabeling points, rotating circles and permuting
/// circles, but not under reversing orientation. Free points are ignored.
Code canonical_form(const ChordDiagram& cd, const CodeLabels& labels = {});
bool are_isomorphic(const ChordDiagram& a, const ChordDiagram& b);

/// Rebuilds a diagram from a label-free code of a diagram whose chords stay
/// on their circles. Points are named p0, p1, ...
ChordDiagram decode(const Code& code);

std::vector<ChordDiagram> enumerate_planar_diagrams(std::size_t l,
                                                    std::size_t delta);
std::vector<Code> enumerate_planar(std::size_t l, std::size_t delta);

}  // namespace mwlinks

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

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mwlinks/chord_diagram.hpp"

namespace mwlinks {

/// Planar chord diagram with a positive degree on every planar loop.
struct DegreeChordDiagram {
  ChordDiagram base;
  LoopDecomposition loops;
  /// Indexed by loop id.
  std::vector<int> degrees;

  /// Sum of loop degrees plus two.
  int d() const;
  /// Number of circles minus one.
  int g() const { return static_cast<int>(base.l()) - 1; }
  int delta() const { return static_cast<int>(base.delta()); }
};

/// Degrees keyed by loop key (a point whose following slot lies on the loop,
/// or "#<circle>"). Throws NonPlanarBase, MissingLoop, ZeroDegreeLoop.
DegreeChordDiagram attach_degrees(const ChordDiagram& cd,
                                  const std::map<std::string, int>& degrees);
/// Degrees indexed by loop id.
DegreeChordDiagram attach_degrees(const ChordDiagram& cd,
                                  const std::vector<int>& degrees);

bool is_nodal_hopf(const DegreeChordDiagram& dcd);

/// Code of the degree-decorated diagram.
Code decorated_code(const DegreeChordDiagram& dcd);

/// A nodal Hopf diagram obtained by adding chords inside loops, with the
/// added chords flagged.
struct Refinement {
  DegreeChordDiagram diagram;
  std::vector<bool> inserted;
};

/// All ways, up to isomorphism, of splitting each loop of degree a into a
/// loops of degree one with a - 1 non-crossing chords.
std::vector<Refinement> refine_to_hopf(const DegreeChordDiagram& dcd);
/// Removes the inserted chords; each coarse loop gets the number of refined
/// loops it contains.
DegreeChordDiagram coarsen(const Refinement& r);
/// Code of a refinement with inserted chords told apart from original ones.
Code refinement_code(const Refinement& r);

struct RigidIsotopyClass {
  Code code;
  int chirality = 1;
  auto operator<=>(const RigidIsotopyClass&) const = default;
};

/// Throws Schema unless chirality is +1 or -1.
RigidIsotopyClass classify(const DegreeChordDiagram& dcd, int chirality);

/// One representative per isomorphism class of degree-chord diagrams with
/// g + 1 circles, delta chords and degrees summing to d - 2.
std::vector<DegreeChordDiagram> enumerate_degree_diagrams(int d, int g,
                                                          int delta);
/// Both chiralities of every enumerated diagram. Throws InfeasibleParameters.
std::vector<RigidIsotopyClass> enumerate_classes(int d, int g, int delta);

/// A real point of a divisor sitting at a marked point of the base ("#<c>"
/// for a circle without points).
struct DivisorPoint {
  std::string at;
  int multiplicity = 1;
};

struct MarkedDivisor {
  ChordDiagram base;
  std::vector<DivisorPoint> real_points;
  int conjugate_pairs = 0;

  int total_degree() const;
};

/// Degree l + delta + 2 with odd degree on every planar loop. Support on a
/// chord endpoint is never a Hopf divisor. Throws NonPlanarBase.
bool hopf_divisor_valid(const MarkedDivisor& md);
/// At least g + delta distinct planar loops meet the real support.
/// Throws NonPlanarBase, SupportOnChordEndpoint.
bool non_special_certificate(const MarkedDivisor& md);

}  // namespace mwlinks

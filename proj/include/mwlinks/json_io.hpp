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

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mwlinks/chord_diagram.hpp"
#include "mwlinks/curve.hpp"
#include "mwlinks/degree_diagram.hpp"
#include "mwlinks/link_diagram.hpp"
#include "mwlinks/moves.hpp"
#include "mwlinks/pl_topology.hpp"
#include "mwlinks/poly.hpp"
#include "mwlinks/real_root.hpp"

namespace mwlinks {

using Json = nlohmann::ordered_json;

// Every reader throws Error(Schema) on malformed input. An optional
// "schema" member must name the expected schema when present.

/// chord-diagram.v1
Json to_json(const ChordDiagram& cd);
ChordDiagram chord_diagram_from_json(const Json& j);

Json code_to_json(const Code& code);
Code code_from_json(const Json& j);

/// degree-chord.v1: chord-diagram.v1 plus "degrees" keyed by loop key and
/// an optional "chirality".
Json to_json(const DegreeChordDiagram& dcd, std::optional<int> chirality = {});
std::pair<DegreeChordDiagram, std::optional<int>> degree_diagram_from_json(
    const Json& j);

Json to_json(const RigidIsotopyClass& c);
RigidIsotopyClass class_from_json(const Json& j);

/// link-diagram.v1
Json to_json(const LinkDiagram& ld);
LinkDiagram link_diagram_from_json(const Json& j);
Json to_json(const InvariantReport& r);

/// curve.v1
Json to_json(const RationalSpaceCurve& c);
RationalSpaceCurve curve_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Slot& s);
Slot slot_from_json(const Json& j);
Json to_json(const HopfTriple& t);
HopfTriple triple_from_json(const ChordDiagram& base, const Json& marks);
Json to_json(const ChordMove& m);
Json to_json(const Refinement& r);
Json to_json(const SlideStep& s);

// Reports. Isolating intervals are refined below `eps` before printing;
// this never feeds back into decisions.
Json to_json(const RealAlgebraic& x, const Rational& eps);
Json to_json(const NodeRecord& n, const Rational& eps);
Json to_json(const WritheReport& r, const Rational& eps);
Json to_json(const MwCertificate& c, const Rational& eps);
Json to_json(const ExtractedDiagram& e, const Rational& eps);

Json to_json(const WgaModel& m, const std::vector<std::vector<int>>& matrix);

/// Reporting width 2^-64.
Rational default_isolation_eps();

}  // namespace mwlinks

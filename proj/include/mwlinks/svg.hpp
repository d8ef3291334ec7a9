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

#include <string>

#include "mwlinks/chord_diagram.hpp"
#include "mwlinks/degree_diagram.hpp"

namespace mwlinks {

/// Circles in a row, marked points evenly spaced counterclockwise, chords
/// as curves bent toward the circle center (straight lines between
/// circles).
std::string render_svg(const ChordDiagram& cd);
/// Same picture with each planar loop labeled by its degree.
std::string render_svg(const DegreeChordDiagram& dcd);

}  // namespace mwlinks

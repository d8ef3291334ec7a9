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

#include "mwlinks/error.hpp"

namespace mwlinks {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::DuplicateEndpoint: return "DuplicateEndpoint";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidLinkDiagram: return "InvalidLinkDiagram";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::NonPlanarBase: return "NonPlanarBase";
    case ErrorKind::ZeroDegreeLoop: return "ZeroDegreeLoop";
    case ErrorKind::MissingLoop: return "MissingLoop";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::SupportOnChordEndpoint: return "SupportOnChordEndpoint";
    case ErrorKind::NotAChord: return "NotAChord";
    case ErrorKind::MarkCollision: return "MarkCollision";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::AnchorsNotOnOneLoop: return "AnchorsNotOnOneLoop";
    case ErrorKind::AnchorsNotCyclic: return "AnchorsNotCyclic";
    case ErrorKind::NotRefinementsOfSameDiagram:
      return "NotRefinementsOfSameDiagram";
    case ErrorKind::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorKind::ComponentCountMismatch: return "ComponentCountMismatch";
    case ErrorKind::BasePoint: return "BasePoint";
    case ErrorKind::PlanarImage: return "PlanarImage";
    case ErrorKind::PointOnCurve: return "PointOnCurve";
    case ErrorKind::NonGenericProjection: return "NonGenericProjection";
    case ErrorKind::TangentialBranch: return "TangentialBranch";
    case ErrorKind::WorseThanNode: return "WorseThanNode";
    case ErrorKind::NonRealSpatialNode: return "NonRealSpatialNode";
    case ErrorKind::NonPlanarDiagram: return "NonPlanarDiagram";
    case ErrorKind::DegreeSumMismatch: return "DegreeSumMismatch";
    case ErrorKind::NodeOnSection: return "NodeOnSection";
    case ErrorKind::LoopsIntersect: return "LoopsIntersect";
    case ErrorKind::DegenerateLoop: return "DegenerateLoop";
    case ErrorKind::LinkingDataMismatch: return "LinkingDataMismatch";
    case ErrorKind::StateCapExceeded: return "StateCapExceeded";
    case ErrorKind::NoGenericProjectionFound:
      return "NoGenericProjectionFound";
    case ErrorKind::RefinementLimit: return "RefinementLimit";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema:
    case ErrorKind::DuplicateEndpoint:
    case ErrorKind::UnknownPoint:
    case ErrorKind::EmptyDiagram:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::InvalidLinkDiagram:
    case ErrorKind::InvalidPartition:
    case ErrorKind::InvalidTriple:
      return 1;
    case ErrorKind::StateCapExceeded:
    case ErrorKind::NoGenericProjectionFound:
    case ErrorKind::RefinementLimit:
      return 3;
    default:
      return 2;
  }
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace mwlinks

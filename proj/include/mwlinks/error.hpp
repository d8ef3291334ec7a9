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

#include <stdexcept>
#include <string>

namespace mwlinks {

enum class ErrorKind {
  // Malformed input (CLI exit code 1).
  Schema,
  DuplicateEndpoint,
  UnknownPoint,
  EmptyDiagram,
  DegreeMismatch,
  InvalidLinkDiagram,
  InvalidPartition,
  InvalidTriple,
  // Violated mathematical preconditions (CLI exit code 2).
  NotPlanar,
  NonPlanarBase,
  ZeroDegreeLoop,
  MissingLoop,
  InfeasibleParameters,
  SupportOnChordEndpoint,
  NotAChord,
  MarkCollision,
  BaseMismatch,
  AnchorsNotOnOneLoop,
  AnchorsNotCyclic,
  NotRefinementsOfSameDiagram,
  ComponentOutOfRange,
  ComponentCountMismatch,
  BasePoint,
  PlanarImage,
  PointOnCurve,
  NonGenericProjection,
  TangentialBranch,
  WorseThanNode,
  NonRealSpatialNode,
  NonPlanarDiagram,
  DegreeSumMismatch,
  NodeOnSection,
  LoopsIntersect,
  DegenerateLoop,
  LinkingDataMismatch,
  // Exhausted resource budgets (CLI exit code 3).
  StateCapExceeded,
  NoGenericProjectionFound,
  RefinementLimit,
};

const char* to_string(ErrorKind kind);

/// CLI exit status associated with an error kind: 1, 2 or 3.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mwlinks

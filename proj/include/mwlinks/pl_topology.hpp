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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mwlinks/poly.hpp"

namespace mwlinks {

using Point3 = std::array<Rational, 3>;

/// Closed polygon; the last vertex joins the first.
struct PLLoop {
  std::vector<Point3> vertices;

  /// Throws DegenerateLoop for fewer than three vertices or a zero-length
  /// edge.
  static PLLoop validate(std::vector<Point3> vertices);
  PLLoop reversed() const;
};

/// Linking number from the signed crossings of the projection along `dir`.
/// Empty when the projection is not generic for this pair. Throws
/// LoopsIntersect when the loops meet.
std::optional<int> gauss_linking_along(const PLLoop& a, const PLLoop& b,
                                       const Point3& dir);
/// Retries fixed pseudo-random directions until one is generic.
int gauss_linking(const PLLoop& a, const PLLoop& b);

/// Throws DegenerateLoop when two non-adjacent edges meet.
void check_simple(const PLLoop& loop);

/// Hopf cores and components of the model link for a partition
/// a_0 >= ... >= a_g >= 1, lifted to the double cover.
struct WgaModel {
  std::vector<int> alpha;
  std::vector<PLLoop> hopf_cores;
  std::vector<PLLoop> components;
};

/// Throws InvalidPartition.
WgaModel build_wga_model(const std::vector<int>& alpha);

/// M[j][i] = gauss_linking(components[j], hopf_cores[i]), doubled
/// convention.
std::vector<std::vector<int>> linking_matrix(const WgaModel& m);

/// Throws LinkingDataMismatch unless M[j][j] = 2(a_j + 2) and
/// M[j][i] = 2 a_j for i != j.
void check_linking_data(const WgaModel& m, const std::vector<std::vector<int>>& matrix);

/// Wavefront OBJ polylines, one object per loop.
std::string to_obj(const WgaModel& m);

}  // namespace mwlinks

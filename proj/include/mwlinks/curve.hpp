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
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mwlinks/bivariate.hpp"
#include "mwlinks/degree_diagram.hpp"
#include "mwlinks/poly.hpp"
#include "mwlinks/real_root.hpp"

namespace mwlinks {

/// Four binary forms of degree d, stored dehomogenized in t = t/s:
/// coords[i] = sum_k c_ik t^k, with parameter infinity at s = 0.
struct RationalSpaceCurve {
  int degree = 0;
  std::array<Poly, 4> coords;

  /// Coefficient vector at parameter infinity (the t^d coefficients).
  std::array<Rational, 4> at_infinity() const;
};

/// Throws DegreeMismatch, BasePoint, PlanarImage.
RationalSpaceCurve parse_curve(int degree,
                               const std::vector<std::vector<Rational>>& coeffs);

/// Same curve in the parameter t' with t = shift - 1/t'. Preserves the
/// cyclic order of the parameter circle and sends t = infinity to t' = 0.
RationalSpaceCurve reparametrize(const RationalSpaceCurve& c, const Rational& shift);

using ProjectivePoint = std::array<Rational, 4>;

/// Plane curve x_i = l_i(c) for three linear forms vanishing at p, plus the
/// remaining coordinate form z_k completing them to a basis.
struct PlaneProjection {
  ProjectivePoint center;
  std::size_t k = 0;
  std::array<Poly, 3> x;
  Poly depth;
  int degree = 0;
};

/// Throws PointOnCurve, Schema for p = 0.
PlaneProjection project(const RationalSpaceCurve& c, const ProjectivePoint& p);

enum class NodeKind { RealCrossing, Solitary, ComplexPair, SpatialNode };
const char* to_string(NodeKind kind);

/// A pair of parameters {sigma, tau} with equal images, given by a root w of
/// `minimal` through sigma + tau = u_of(w), sigma tau = v_of(w).
struct NodeRecord {
  NodeKind kind = NodeKind::RealCrossing;
  Poly minimal;
  Poly u_of;
  Poly v_of;
  /// The root w; absent for complex pairs.
  std::optional<RealAlgebraic> root;
  /// Both parameters when they are real, in increasing order.
  std::vector<RealAlgebraic> params;
  /// Floating-point parameters, for reporting.
  std::array<std::complex<double>, 2> approx{};
  /// Enclosure of homogeneous image coordinates; empty for complex pairs.
  std::vector<RInterval> image;
  /// Set for real crossings.
  std::optional<int> sign;
  /// Parameters live in the chart t = shift - 1/t' when set.
  std::optional<Rational> chart;
};

struct NodeCensus {
  std::vector<NodeRecord> nodes;
  int real_crossings = 0;
  int solitary = 0;
  int complex_pairs = 0;
  int spatial = 0;
  /// real_crossings + solitary + 2 complex_pairs + spatial.
  int total() const { return real_crossings + solitary + 2 * complex_pairs + spatial; }
};

/// All nodes of a generic projection; their total is N_d. Throws
/// NonGenericProjection.
NodeCensus double_points(const RationalSpaceCurve& c, const PlaneProjection& pc,
                         Rng& rng);

/// Sign of det[c(sigma), c'(sigma), c(tau), c'(tau)]. Throws
/// TangentialBranch, Schema for a node that is not a real crossing.
int crossing_sign(const RationalSpaceCurve& c, const NodeRecord& node);

struct WritheReport {
  ProjectivePoint center;
  NodeCensus census;
  /// Sum of crossing signs; empty when solitary nodes are present.
  std::optional<int> w;
  int n_d = 0;
};

/// Throws NonGenericProjection, PointOnCurve.
WritheReport encomplexed_writhe(const RationalSpaceCurve& c,
                                const ProjectivePoint& p, Rng& rng);

/// Random center with small integer coordinates.
ProjectivePoint random_center(Rng& rng, int bound = 20);

struct MwCertificate {
  bool verdict = false;
  /// "", "solitary", "complex_pair", "spatial_node" or "mixed_signs".
  std::string witness;
  WritheReport report;
  /// Projections skipped as non-generic.
  int skipped = 0;
  /// Generic projections examined.
  int generic = 0;
};

/// Verdict true once a generic projection among `trials` random centers
/// shows N_d real crossings of one sign. A node of the space curve or a
/// solitary-free projection with |w| < N_d (complex pairs or mixed signs)
/// ends the search with verdict false. Otherwise the verdict is false with the witness and report of
/// the first generic projection. Throws NoGenericProjectionFound.
MwCertificate certify_mw(const RationalSpaceCurve& c, int trials, Rng& rng);

/// Parameter pairs with equal images in space, in the chart reported by the
/// records. Throws WorseThanNode.
std::vector<NodeRecord> spatial_nodes(const RationalSpaceCurve& c, Rng& rng);

/// Gaussian rational re + im i.
struct ComplexRational {
  Rational re;
  Rational im;
};

struct ExtractedDiagram {
  DegreeChordDiagram diagram;
  std::vector<NodeRecord> nodes;
  /// Coefficients of the real plane through c(q) and c(conj q) that was used.
  std::array<Rational, 4> plane;
};

/// Chords from the spatial nodes on the parameter circle, loop degrees from
/// counting real intersections with a random real plane through c(q) and
/// c(conj q). Throws NonRealSpatialNode, NonPlanarDiagram, DegreeSumMismatch,
/// NodeOnSection, Schema for real q.
ExtractedDiagram extract_degree_chord_diagram(const RationalSpaceCurve& c,
                                              const ComplexRational& q, Rng& rng);

}  // namespace mwlinks

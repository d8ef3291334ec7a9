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
#include <vector>

#include "mwlinks/poly.hpp"

namespace mwlinks {

/// (d-1)(d-2)/2.
int max_nodes(int degree);

/// One pass of a component through a crossing.
struct CrossingVisit {
  std::string crossing;
  int sign = 1;
  bool over = true;
};

struct Crossing {
  std::string id;
  std::size_t component_a = 0;
  std::size_t component_b = 0;
  int sign = 1;
  bool same_branch = false;
  /// A node of the space curve: counted against N_d - g, never summed.
  bool node = false;
};

/// Plane diagram of a link: Gauss-style visit sequences per oriented
/// component, solitary nodes with known or unknown signs, degree and genus.
class LinkDiagram {
 public:
  /// Throws InvalidLinkDiagram, Schema.
  static LinkDiagram validate(std::vector<std::vector<CrossingVisit>> components,
                              std::vector<std::optional<int>> solitary,
                              int degree, int genus,
                              const std::vector<std::string>& nodes = {});

  /// Parses tokens such as "X1+o" (crossing X1, sign +, over). Throws Schema.
  static CrossingVisit parse_visit(const std::string& token);
  static std::string format_visit(const CrossingVisit& v);

  std::size_t component_count() const { return components_.size(); }
  const std::vector<std::vector<CrossingVisit>>& components() const {
    return components_;
  }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<std::optional<int>>& solitary() const { return solitary_; }
  int degree() const { return degree_; }
  int genus() const { return genus_; }
  std::size_t node_count() const;

 private:
  LinkDiagram() = default;

  std::vector<std::vector<CrossingVisit>> components_;
  std::vector<Crossing> crossings_;
  std::vector<std::optional<int>> solitary_;
  int degree_ = 0;
  int genus_ = 0;
};

/// Signs of same-component crossings plus solitary signs; empty when a
/// solitary sign is unknown.
std::optional<int> writhe_w(const LinkDiagram& ld);
/// Sum of signs of the crossings between components i and j (twice the
/// linking number). Throws ComponentOutOfRange.
int doubled_linking(const LinkDiagram& ld, std::size_t i, std::size_t j);
Rational linking_number(const LinkDiagram& ld, std::size_t i, std::size_t j);
/// w plus the signs of crossings between different components, checked
/// against w + 2 sum lk.
std::optional<int> w_lambda(const LinkDiagram& ld);

bool is_mw(const LinkDiagram& ld);
/// Throws ComponentCountMismatch unless there are genus + 1 components.
bool is_mw_lambda(const LinkDiagram& ld);

struct InvariantReport {
  std::optional<int> w;
  std::optional<int> w_lambda;
  std::vector<std::vector<Rational>> lk;
  bool mw = false;
  bool mw_lambda = false;
};

InvariantReport invariants(const LinkDiagram& ld);

}  // namespace mwlinks

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

#include "mwlinks/link_diagram.hpp"

#include <map>
#include <regex>
#include <set>
#include <stdexcept>

#include "mwlinks/error.hpp"

namespace mwlinks {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorKind::InvalidLinkDiagram, why);
}

bool all_one_sign(const LinkDiagram& ld) {
  std::set<int> signs;
  for (const auto& c : ld.crossings()) {
    if (!c.node) signs.insert(c.sign);
  }
  for (const auto& s : ld.solitary()) {
    if (!s) return false;
    signs.insert(*s);
  }
  return signs.size() <= 1;
}

}  // namespace

int max_nodes(int degree) { return (degree - 1) * (degree - 2) / 2; }

CrossingVisit LinkDiagram::parse_visit(const std::string& token) {
  static const std::regex re("([A-Za-z0-9_]+)([+-])([ou])");
  std::smatch m;
  if (!std::regex_match(token, m, re)) {
    throw Error(ErrorKind::Schema, "bad crossing token '" + token + "'");
  }
  return {m[1].str(), m[2].str() == "+" ? 1 : -1, m[3].str() == "o"};
}

std::string LinkDiagram::format_visit(const CrossingVisit& v) {
  return v.crossing + (v.sign > 0 ? "+" : "-") + (v.over ? "o" : "u");
}

LinkDiagram LinkDiagram::validate(
    std::vector<std::vector<CrossingVisit>> components,
    std::vector<std::optional<int>> solitary, int degree, int genus,
    const std::vector<std::string>& nodes) {
  if (degree < 1) invalid("degree must be positive");
  if (genus < 0) invalid("genus must be nonnegative");
  for (const auto& s : solitary) {
    if (s && *s != 1 && *s != -1) invalid("solitary sign must be +1, -1 or unknown");
  }
  struct Seen {
    std::vector<std::pair<std::size_t, CrossingVisit>> visits;
  };
  std::map<std::string, Seen> seen;
  std::vector<std::string> order;
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (const auto& v : components[c]) {
      if (v.sign != 1 && v.sign != -1) invalid("crossing sign must be +1 or -1");
      auto& s = seen[v.crossing];
      if (s.visits.empty()) order.push_back(v.crossing);
      s.visits.push_back({c, v});
    }
  }
  const std::set<std::string> node_set(nodes.begin(), nodes.end());
  for (const auto& n : node_set) {
    if (!seen.count(n)) invalid("node '" + n + "' is not a crossing");
  }
  LinkDiagram ld;
  for (const auto& id : order) {
    const auto& vs = seen[id].visits;
    if (vs.size() != 2) {
      invalid("crossing '" + id + "' is visited " + std::to_string(vs.size()) +
              " times");
    }
    if (vs[0].second.sign != vs[1].second.sign) {
      invalid("crossing '" + id + "' has two different signs");
    }
    if (vs[0].second.over == vs[1].second.over) {
      invalid("crossing '" + id + "' needs one over and one under visit");
    }
    ld.crossings_.push_back({id, vs[0].first, vs[1].first, vs[0].second.sign,
                             vs[0].first == vs[1].first,
                             node_set.count(id) != 0});
  }
  ld.components_ = std::move(components);
  ld.solitary_ = std::move(solitary);
  ld.degree_ = degree;
  ld.genus_ = genus;
  const int bound = max_nodes(degree) - genus;
  if (static_cast<int>(ld.node_count()) > bound) {
    invalid(std::to_string(ld.node_count()) + " nodes exceed N_d - g = " +
            std::to_string(bound));
  }
  return ld;
}

std::size_t LinkDiagram::node_count() const {
  return crossings_.size() + solitary_.size();
}

std::optional<int> writhe_w(const LinkDiagram& ld) {
  int w = 0;
  for (const auto& c : ld.crossings()) {
    if (c.same_branch && !c.node) w += c.sign;
  }
  for (const auto& s : ld.solitary()) {
    if (!s) return std::nullopt;
    w += *s;
  }
  return w;
}

int doubled_linking(const LinkDiagram& ld, std::size_t i, std::size_t j) {
  const std::size_t n = ld.component_count();
  if (i >= n || j >= n || i == j) {
    throw Error(ErrorKind::ComponentOutOfRange,
                "components " + std::to_string(i) + ", " + std::to_string(j) +
                    " of " + std::to_string(n));
  }
  int sum = 0;
  for (const auto& c : ld.crossings()) {
    if (c.node) continue;
    if ((c.component_a == i && c.component_b == j) ||
        (c.component_a == j && c.component_b == i)) {
      sum += c.sign;
    }
  }
  return sum;
}

Rational linking_number(const LinkDiagram& ld, std::size_t i, std::size_t j) {
  Rational lk(doubled_linking(ld, i, j), 2);
  lk.canonicalize();
  return lk;
}

std::optional<int> w_lambda(const LinkDiagram& ld) {
  const auto w = writhe_w(ld);
  if (!w) return std::nullopt;
  int crossing_sum = *w;
  for (const auto& c : ld.crossings()) {
    if (!c.same_branch && !c.node) crossing_sum += c.sign;
  }
  Rational lk_sum = 0;
  for (std::size_t i = 0; i < ld.component_count(); ++i) {
    for (std::size_t j = i + 1; j < ld.component_count(); ++j) {
      lk_sum += linking_number(ld, i, j);
    }
  }
  if (Rational(*w) + 2 * lk_sum != crossing_sum) {
    throw std::logic_error("w_lambda routes disagree");
  }
  return crossing_sum;
}

bool is_mw(const LinkDiagram& ld) {
  if (ld.genus() != 0 || ld.component_count() != 1 || !ld.solitary().empty()) {
    return false;
  }
  for (const auto& c : ld.crossings()) {
    if (c.node) return false;
  }
  const auto w = writhe_w(ld);
  return all_one_sign(ld) && w && std::abs(*w) == max_nodes(ld.degree());
}

bool is_mw_lambda(const LinkDiagram& ld) {
  if (ld.component_count() != static_cast<std::size_t>(ld.genus()) + 1) {
    throw Error(ErrorKind::ComponentCountMismatch,
                std::to_string(ld.component_count()) + " components for genus " +
                    std::to_string(ld.genus()));
  }
  if (!ld.solitary().empty()) return false;
  std::size_t spatial = 0;
  for (const auto& c : ld.crossings()) spatial += c.node;
  const auto wl = w_lambda(ld);
  const int target = max_nodes(ld.degree()) - ld.genus() - static_cast<int>(spatial);
  return all_one_sign(ld) && wl && std::abs(*wl) == target;
}

InvariantReport invariants(const LinkDiagram& ld) {
  InvariantReport r;
  r.w = writhe_w(ld);
  r.w_lambda = w_lambda(ld);
  const std::size_t n = ld.component_count();
  r.lk.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) r.lk[i][j] = linking_number(ld, i, j);
    }
  }
  r.mw = is_mw(ld);
  r.mw_lambda = n == static_cast<std::size_t>(ld.genus()) + 1 && is_mw_lambda(ld);
  return r;
}

}  // namespace mwlinks

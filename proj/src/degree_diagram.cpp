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

#include "mwlinks/degree_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "mwlinks/error.hpp"

namespace mwlinks {

int DegreeChordDiagram::d() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0) + 2;
}

namespace {

LoopDecomposition loops_of_base(const ChordDiagram& cd) {
  if (!is_planar(cd)) {
    throw Error(ErrorKind::NonPlanarBase, "base chord diagram is not planar");
  }
  return planar_loops(cd);
}

}  // namespace

DegreeChordDiagram attach_degrees(const ChordDiagram& cd,
                                  const std::vector<int>& degrees) {
  LoopDecomposition loops = loops_of_base(cd);
  if (degrees.size() != loops.size()) {
    throw Error(ErrorKind::MissingLoop,
                "expected " + std::to_string(loops.size()) + " loop degrees");
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] <= 0) {
      throw Error(ErrorKind::ZeroDegreeLoop,
                  "loop '" + loops.loops()[i].key + "' has degree " +
                      std::to_string(degrees[i]));
    }
  }
  return DegreeChordDiagram{cd, std::move(loops), degrees};
}

DegreeChordDiagram attach_degrees(const ChordDiagram& cd,
                                  const std::map<std::string, int>& degrees) {
  const LoopDecomposition loops = loops_of_base(cd);
  std::vector<int> by_id(loops.size(), 0);
  std::vector<bool> given(loops.size(), false);
  for (const auto& [key, deg] : degrees) {
    const std::size_t id = loops.loop_of_key(cd, key);
    if (given[id] && by_id[id] != deg) {
      throw Error(ErrorKind::Schema,
                  "conflicting degrees for loop '" + loops.loops()[id].key + "'");
    }
    given[id] = true;
    by_id[id] = deg;
  }
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (!given[i]) {
      throw Error(ErrorKind::MissingLoop,
                  "no degree for loop '" + loops.loops()[i].key + "'");
    }
  }
  return attach_degrees(cd, by_id);
}

bool is_nodal_hopf(const DegreeChordDiagram& dcd) {
  return std::all_of(dcd.degrees.begin(), dcd.degrees.end(),
                     [](int a) { return a == 1; });
}

Code decorated_code(const DegreeChordDiagram& dcd) {
  CodeLabels labels;
  for (std::size_t a = 0; a < dcd.base.arcs().size(); ++a) {
    labels.arc.push_back(dcd.degrees[dcd.loops.loop_of_arc(a)]);
  }
  return canonical_form(dcd.base, labels);
}

Code refinement_code(const Refinement& r) {
  CodeLabels labels;
  for (bool b : r.inserted) labels.chord.push_back(b ? 1 : 0);
  return canonical_form(r.diagram.base, labels);
}

namespace {

// Non-crossing perfect matchings of n points in a row.
const std::vector<std::vector<int>>& matchings(std::size_t n) {
  static std::vector<std::vector<std::vector<int>>> memo;
  while (memo.size() <= n) {
    const std::size_t m = memo.size();
    std::vector<std::vector<int>> out;
    if (m == 0) out.push_back({});
    for (std::size_t j = 1; j < m; j += 2) {
      for (const auto& in : memo[j - 1]) {
        for (const auto& ou : memo[m - j - 1]) {
          std::vector<int> p(m);
          p[0] = static_cast<int>(j);
          p[j] = 0;
          for (std::size_t i = 0; i < in.size(); ++i) p[i + 1] = in[i] + 1;
          for (std::size_t i = 0; i < ou.size(); ++i) {
            p[i + j + 1] = ou[i] + static_cast<int>(j + 1);
          }
          out.push_back(std::move(p));
        }
      }
    }
    memo.push_back(std::move(out));
  }
  return memo[n];
}

// Compositions of n into k non-negative parts.
void compositions(int n, int k, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= n; ++i) {
    cur.push_back(i);
    compositions(n - i, k, cur, out);
    cur.pop_back();
  }
}

// Choice of chord insertions inside one loop.
struct LoopPlan {
  std::vector<int> per_arc;  // new points on each arc of the loop
  const std::vector<int>* matching;
};

}  // namespace

std::vector<Refinement> refine_to_hopf(const DegreeChordDiagram& dcd) {
  const ChordDiagram& cd = dcd.base;
  const auto& loops = dcd.loops.loops();
  std::unordered_set<std::string> used;
  for (const auto& c : cd.circles()) used.insert(c.begin(), c.end());
  std::size_t fresh = 0;
  auto fresh_id = [&] {
    std::string id;
    do {
      id = "x" + std::to_string(++fresh);
    } while (used.count(id));
    used.insert(id);
    return id;
  };

  // Options per loop.
  std::vector<std::vector<LoopPlan>> options(loops.size());
  for (const auto& lp : loops) {
    const int m = dcd.degrees[lp.id] - 1;
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(2 * m, static_cast<int>(lp.arcs.size()), cur, comps);
    for (const auto& comp : comps) {
      for (const auto& mt : matchings(2 * static_cast<std::size_t>(m))) {
        options[lp.id].push_back(LoopPlan{comp, &mt});
      }
    }
  }

  std::vector<Refinement> out;
  std::set<Code> seen;
  std::vector<std::size_t> pick(loops.size(), 0);
  while (true) {
    // Insert points: per arc, a list of new ids placed right after the arc's
    // start (or at the front of a chordless circle).
    std::vector<std::vector<PointId>> after_start(cd.arcs().size());
    std::vector<Chord> chords = cd.chords();
    std::vector<bool> inserted(chords.size(), false);
    fresh = 0;
    used.clear();
    for (const auto& c : cd.circles()) used.insert(c.begin(), c.end());
    for (const auto& lp : loops) {
      const LoopPlan& plan = options[lp.id][pick[lp.id]];
      std::vector<PointId> along;
      for (std::size_t i = 0; i < lp.arcs.size(); ++i) {
        for (int k = 0; k < plan.per_arc[i]; ++k) {
          PointId id = fresh_id();
          after_start[lp.arcs[i]].push_back(id);
          along.push_back(id);
        }
      }
      const auto& mt = *plan.matching;
      for (std::size_t i = 0; i < mt.size(); ++i) {
        if (static_cast<std::size_t>(mt[i]) > i) {
          chords.push_back({along[i], along[mt[i]]});
          inserted.push_back(true);
        }
      }
    }
    std::vector<std::vector<PointId>> circles(cd.l());
    for (std::size_t c = 0; c < cd.l(); ++c) {
      const auto& pts = cd.circles()[c];
      // Chordless circle: its single arc has no start.
      for (std::size_t a = 0; a < cd.arcs().size(); ++a) {
        if (cd.arcs()[a].circle == c && !cd.arcs()[a].start) {
          circles[c] = after_start[a];
        }
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        circles[c].push_back(pts[i]);
        if (cd.chord_at(pts[i])) {
          const auto& extra = after_start[cd.arc_after(c, i)];
          circles[c].insert(circles[c].end(), extra.begin(), extra.end());
        }
      }
    }
    ChordDiagram refined = ChordDiagram::validate(circles, chords);
    const std::vector<int> ones(refined.l() + refined.delta(), 1);
    Refinement r{attach_degrees(refined, ones), inserted};
    if (seen.insert(refinement_code(r)).second) out.push_back(std::move(r));

    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

DegreeChordDiagram coarsen(const Refinement& r) {
  const ChordDiagram& fine = r.diagram.base;
  std::vector<Chord> kept;
  for (std::size_t k = 0; k < fine.delta(); ++k) {
    if (!r.inserted[k]) kept.push_back(fine.chords()[k]);
  }
  const ChordDiagram coarse = ChordDiagram::validate(fine.circles(), kept);
  const LoopDecomposition loops = loops_of_base(coarse);
  std::vector<int> deg(loops.size(), 0);
  for (const auto& lp : r.diagram.loops.loops()) {
    const Slot s = fine.slot_of_arc(lp.arcs.front());
    deg[loops.loop_of_arc(coarse.arc_of(s))] += r.diagram.degrees[lp.id];
  }
  return attach_degrees(coarse, deg);
}

RigidIsotopyClass classify(const DegreeChordDiagram& dcd, int chirality) {
  if (chirality != 1 && chirality != -1) {
    throw Error(ErrorKind::Schema, "chirality must be +1 or -1");
  }
  return RigidIsotopyClass{decorated_code(dcd), chirality};
}

std::vector<DegreeChordDiagram> enumerate_degree_diagrams(int d, int g,
                                                          int delta) {
  if (d < 3 || g < 0 || delta < 0 || d - 2 < (g + 1) + delta) {
    throw Error(ErrorKind::InfeasibleParameters,
                "need d >= 3, g >= 0, delta >= 0 and d - 2 >= g + 1 + delta");
  }
  const std::size_t l = static_cast<std::size_t>(g) + 1;
  const std::size_t loops = l + static_cast<std::size_t>(delta);
  std::vector<DegreeChordDiagram> out;
  std::set<Code> seen;
  for (const auto& cd : enumerate_planar_diagrams(l, delta)) {
    // Positive compositions of d - 2 into one part per loop.
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(d - 2 - static_cast<int>(loops), static_cast<int>(loops), cur,
                 comps);
    for (auto& c : comps) {
      for (int& x : c) ++x;
      DegreeChordDiagram dcd = attach_degrees(cd, c);
      if (seen.insert(decorated_code(dcd)).second) {
        out.push_back(std::move(dcd));
      }
    }
  }
  return out;
}

std::vector<RigidIsotopyClass> enumerate_classes(int d, int g, int delta) {
  std::vector<RigidIsotopyClass> out;
  for (const auto& dcd : enumerate_degree_diagrams(d, g, delta)) {
    out.push_back(classify(dcd, 1));
    out.push_back(classify(dcd, -1));
  }
  return out;
}

int MarkedDivisor::total_degree() const {
  int t = 2 * conjugate_pairs;
  for (const auto& p : real_points) t += p.multiplicity;
  return t;
}

namespace {

// Loop of every real point, or nullopt for a point on a chord endpoint.
std::vector<std::optional<std::size_t>> support_loops(
    const MarkedDivisor& md, const LoopDecomposition& loops) {
  std::vector<std::optional<std::size_t>> out;
  for (const auto& p : md.real_points) {
    if (p.multiplicity < 0) {
      throw Error(ErrorKind::Schema, "negative divisor multiplicity");
    }
    if (!p.at.empty() && p.at[0] != '#' && md.base.chord_at(p.at)) {
      out.push_back(std::nullopt);
    } else {
      out.push_back(loops.loop_of_key(md.base, p.at));
    }
  }
  return out;
}

}  // namespace

bool hopf_divisor_valid(const MarkedDivisor& md) {
  const LoopDecomposition loops = loops_of_base(md.base);
  const auto where = support_loops(md, loops);
  const int target = static_cast<int>(md.base.l() + md.base.delta()) + 2;
  if (md.conjugate_pairs < 0 || md.total_degree() != target) return false;
  std::vector<int> per_loop(loops.size(), 0);
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (md.real_points[i].multiplicity == 0) continue;
    if (!where[i]) return false;
    per_loop[*where[i]] += md.real_points[i].multiplicity;
  }
  return std::all_of(per_loop.begin(), per_loop.end(),
                     [](int k) { return k % 2 == 1; });
}

bool non_special_certificate(const MarkedDivisor& md) {
  const LoopDecomposition loops = loops_of_base(md.base);
  const auto where = support_loops(md, loops);
  std::set<std::size_t> met;
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (md.real_points[i].multiplicity == 0) continue;
    if (!where[i]) {
      throw Error(ErrorKind::SupportOnChordEndpoint,
                  "divisor point at chord endpoint '" + md.real_points[i].at +
                      "'");
    }
    met.insert(*where[i]);
  }
  const std::size_t need = md.base.l() - 1 + md.base.delta();
  return met.size() >= need;
}

}  // namespace mwlinks

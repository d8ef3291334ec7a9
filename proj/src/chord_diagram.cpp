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

#include "mwlinks/chord_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mwlinks/error.hpp"

namespace mwlinks {

ChordDiagram ChordDiagram::validate(std::vector<std::vector<PointId>> circles,
                                    std::vector<Chord> chords) {
  if (circles.empty()) {
    throw Error(ErrorKind::EmptyDiagram, "a chord diagram needs a circle");
  }
  ChordDiagram cd;
  cd.circles_ = std::move(circles);
  cd.chords_ = std::move(chords);
  for (std::size_t c = 0; c < cd.circles_.size(); ++c) {
    for (std::size_t i = 0; i < cd.circles_[c].size(); ++i) {
      const PointId& p = cd.circles_[c][i];
      if (!cd.where_.emplace(p, PointLocation{c, i}).second) {
        throw Error(ErrorKind::Schema, "point '" + p + "' listed twice");
      }
    }
  }
  for (std::size_t k = 0; k < cd.chords_.size(); ++k) {
    const Chord& ch = cd.chords_[k];
    for (const PointId* p : {&ch.a, &ch.b}) {
      if (!cd.has_point(*p)) {
        throw Error(ErrorKind::UnknownPoint,
                    "chord endpoint '" + *p + "' lies on no circle");
      }
    }
    if (ch.a == ch.b) {
      throw Error(ErrorKind::DuplicateEndpoint,
                  "chord joins '" + ch.a + "' to itself");
    }
    for (const PointId* p : {&ch.a, &ch.b}) {
      if (!cd.chord_of_.emplace(*p, k).second) {
        throw Error(ErrorKind::DuplicateEndpoint,
                    "point '" + *p + "' carries two chord ends");
      }
    }
  }
  cd.index();
  return cd;
}

void ChordDiagram::index() {
  const std::size_t n = circles_.size();
  first_arc_.assign(n, 0);
  endpoints_.assign(n, {});
  arc_after_.assign(n, {});
  arcs_.clear();
  for (std::size_t c = 0; c < n; ++c) {
    const auto& pts = circles_[c];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (chord_of_.count(pts[i])) endpoints_[c].push_back(i);
    }
    first_arc_[c] = arcs_.size();
    const auto& ends = endpoints_[c];
    const std::size_t e = ends.size();
    if (e == 0) {
      arcs_.push_back(Arc{c, std::nullopt, std::nullopt});
      arc_after_[c].assign(pts.size(), first_arc_[c]);
      continue;
    }
    for (std::size_t k = 0; k < e; ++k) {
      arcs_.push_back(Arc{c, ends[k], ends[(k + 1) % e]});
    }
    arc_after_[c].resize(pts.size());
    std::size_t k = e - 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (k + 1 < e && ends[k + 1] == i) {
        ++k;
      } else if (k == e - 1 && ends[0] == i) {
        k = 0;
      }
      arc_after_[c][i] = first_arc_[c] + k;
    }
  }
}

PointLocation ChordDiagram::locate(const PointId& p) const {
  auto it = where_.find(p);
  if (it == where_.end()) {
    throw Error(ErrorKind::UnknownPoint, "no point named '" + p + "'");
  }
  return it->second;
}

std::optional<std::size_t> ChordDiagram::chord_at(const PointId& p) const {
  auto it = chord_of_.find(p);
  if (it == chord_of_.end()) return std::nullopt;
  return it->second;
}

std::size_t ChordDiagram::arc_after(std::size_t circle,
                                    std::size_t index) const {
  return arc_after_[circle][index];
}

std::size_t ChordDiagram::arc_before(std::size_t circle,
                                     std::size_t index) const {
  const std::size_t a = arc_after_[circle][index];
  if (!chord_of_.count(circles_[circle][index])) return a;
  const std::size_t e = endpoints_[circle].size();
  const std::size_t k = a - first_arc_[circle];
  return first_arc_[circle] + (k + e - 1) % e;
}

std::size_t ChordDiagram::arc_of(const Slot& s) const {
  if (s.circle >= circles_.size()) {
    throw Error(ErrorKind::InvalidTriple, "slot on a missing circle");
  }
  if (!s.after) {
    if (!endpoints_[s.circle].empty()) {
      throw Error(ErrorKind::InvalidTriple,
                  "slot on a circle with chords must name a point");
    }
    return first_arc_[s.circle];
  }
  const PointLocation loc = locate(*s.after);
  if (loc.circle != s.circle) {
    throw Error(ErrorKind::InvalidTriple,
                "point '" + *s.after + "' is not on the slot's circle");
  }
  return arc_after_[loc.circle][loc.index];
}

std::size_t ChordDiagram::next_arc(std::size_t arc) const {
  const Arc& a = arcs_[arc];
  if (!a.end) return arc;
  const PointId& p = circles_[a.circle][*a.end];
  const Chord& ch = chords_[chord_of_.at(p)];
  const PointLocation q = where_.at(ch.a == p ? ch.b : ch.a);
  return arc_after_[q.circle][q.index];
}

Slot ChordDiagram::slot_of_arc(std::size_t arc) const {
  const Arc& a = arcs_[arc];
  if (a.start) return Slot{a.circle, circles_[a.circle][*a.start]};
  if (!circles_[a.circle].empty()) {
    return Slot{a.circle, circles_[a.circle].front()};
  }
  return Slot{a.circle, std::nullopt};
}

bool is_planar(const ChordDiagram& cd) {
  for (const Chord& ch : cd.chords()) {
    if (cd.locate(ch.a).circle != cd.locate(ch.b).circle) return false;
  }
  for (const auto& pts : cd.circles()) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto k = cd.chord_at(pts[i]);
      if (!k) continue;
      const Chord& ch = cd.chords()[*k];
      const std::size_t j = cd.locate(ch.a == pts[i] ? ch.b : ch.a).index;
      if (j > i) {
        open.push_back(*k);
      } else {
        if (open.empty() || open.back() != *k) return false;
        open.pop_back();
      }
    }
  }
  return true;
}

LoopDecomposition planar_loops(const ChordDiagram& cd) {
  if (!is_planar(cd)) {
    throw Error(ErrorKind::NotPlanar, "chords cross or join two circles");
  }
  LoopDecomposition out;
  const std::size_t n = cd.arcs().size();
  out.loop_of_arc_.assign(n, n);
  for (std::size_t start = 0; start < n; ++start) {
    if (out.loop_of_arc_[start] != n) continue;
    PlanarLoop loop;
    loop.id = out.loops_.size();
    loop.circle = cd.arcs()[start].circle;
    std::size_t a = start;
    do {
      out.loop_of_arc_[a] = loop.id;
      loop.arcs.push_back(a);
      const Arc& arc = cd.arcs()[a];
      if (arc.end) {
        loop.chords.push_back(*cd.chord_at(cd.point(arc.circle, *arc.end)));
      }
      a = cd.next_arc(a);
    } while (a != start);
    const Slot s = cd.slot_of_arc(start);
    loop.key = s.after ? *s.after : "#" + std::to_string(s.circle);
    out.loops_.push_back(std::move(loop));
  }
  return out;
}

std::size_t LoopDecomposition::loop_of_key(const ChordDiagram& cd,
                                           const std::string& key) const {
  if (!key.empty() && key[0] == '#') {
    std::size_t c = 0;
    try {
      c = std::stoul(key.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownPoint, "bad circle key '" + key + "'");
    }
    if (c >= cd.l()) {
      throw Error(ErrorKind::UnknownPoint, "bad circle key '" + key + "'");
    }
    if (!cd.circles()[c].empty()) {
      return loop_of_arc_[cd.arc_of(Slot{c, cd.circles()[c].front()})];
    }
    return loop_of_arc_[cd.arc_of(Slot{c, std::nullopt})];
  }
  const PointLocation loc = cd.locate(key);
  return loop_of_arc_[cd.arc_after(loc.circle, loc.index)];
}

namespace {

using Entry = std::vector<int>;

// Endpoint positions (circle, k) with partner lookups, ignoring free points.
struct EndpointView {
  std::vector<std::vector<std::size_t>> ends;  // circle -> point indices
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> partner;
  std::vector<std::vector<std::size_t>> chord;
  std::vector<std::vector<std::size_t>> arc;  // arc leaving endpoint k
  std::vector<std::size_t> empty_arc;         // arc of a chordless circle
};

EndpointView view(const ChordDiagram& cd) {
  EndpointView v;
  const std::size_t l = cd.l();
  v.ends.resize(l);
  v.partner.resize(l);
  v.chord.resize(l);
  v.arc.resize(l);
  v.empty_arc.assign(l, 0);
  std::map<PointId, std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t c = 0; c < l; ++c) {
    const auto& pts = cd.circles()[c];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!cd.chord_at(pts[i])) continue;
      pos[pts[i]] = {c, v.ends[c].size()};
      v.ends[c].push_back(i);
    }
  }
  for (std::size_t c = 0; c < l; ++c) {
    for (std::size_t i : v.ends[c]) {
      const PointId& p = cd.circles()[c][i];
      const std::size_t k = *cd.chord_at(p);
      const Chord& ch = cd.chords()[k];
      v.partner[c].push_back(pos.at(ch.a == p ? ch.b : ch.a));
      v.chord[c].push_back(k);
      v.arc[c].push_back(cd.arc_after(c, i));
    }
    if (v.ends[c].empty()) {
      const auto& pts = cd.circles()[c];
      v.empty_arc[c] = cd.arc_of(
          Slot{c, pts.empty() ? std::nullopt : std::optional<PointId>(pts[0])});
    }
  }
  return v;
}

std::vector<int> min_rotation(const std::vector<Entry>& word) {
  const std::size_t e = word.size();
  std::vector<int> best;
  for (std::size_t r = 0; r < e; ++r) {
    std::vector<int> flat;
    for (std::size_t k = 0; k < e; ++k) {
      const Entry& x = word[(r + k) % e];
      flat.insert(flat.end(), x.begin(), x.end());
    }
    if (r == 0 || flat < best) best = std::move(flat);
  }
  return best;
}

}  // namespace

Code canonical_form(const ChordDiagram& cd, const CodeLabels& labels) {
  const EndpointView v = view(cd);
  const std::size_t l = cd.l();
  const bool chord_labels = !labels.chord.empty();
  const bool arc_labels = !labels.arc.empty();
  auto empty_circle = [&](std::size_t c) {
    std::vector<int> out{0};
    if (arc_labels) out.push_back(labels.arc[v.empty_arc[c]]);
    return out;
  };

  bool intra = true;
  for (std::size_t c = 0; c < l; ++c) {
    for (const auto& pr : v.partner[c]) intra = intra && pr.first == c;
  }

  if (intra) {
    std::vector<std::vector<int>> words;
    for (std::size_t c = 0; c < l; ++c) {
      const std::size_t e = v.ends[c].size();
      if (e == 0) {
        words.push_back(empty_circle(c));
        continue;
      }
      std::vector<Entry> word(e);
      for (std::size_t k = 0; k < e; ++k) {
        word[k].push_back(
            static_cast<int>((v.partner[c][k].second + e - k) % e));
        if (chord_labels) word[k].push_back(labels.chord[v.chord[c][k]]);
        if (arc_labels) word[k].push_back(labels.arc[v.arc[c][k]]);
      }
      std::vector<int> w{static_cast<int>(e)};
      const std::vector<int> rot = min_rotation(word);
      w.insert(w.end(), rot.begin(), rot.end());
      words.push_back(std::move(w));
    }
    std::sort(words.begin(), words.end());
    Code code{0, static_cast<int>(l)};
    for (const auto& w : words) code.insert(code.end(), w.begin(), w.end());
    return code;
  }

  // Chords between circles couple the rotations, so search all circle orders
  // and rotations with chords named by first visit.
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  Code best;
  bool have = false;
  do {
    std::vector<std::size_t> rot(l, 0);
    while (true) {
      Code code{1, static_cast<int>(l)};
      std::map<std::size_t, int> seen;
      for (std::size_t c : perm) {
        const std::size_t e = v.ends[c].size();
        if (e == 0) {
          const auto w = empty_circle(c);
          code.insert(code.end(), w.begin(), w.end());
          continue;
        }
        code.push_back(static_cast<int>(e));
        for (std::size_t j = 0; j < e; ++j) {
          const std::size_t k = (rot[c] + j) % e;
          const std::size_t ch = v.chord[c][k];
          auto it = seen.emplace(ch, static_cast<int>(seen.size())).first;
          code.push_back(it->second);
          if (chord_labels) code.push_back(labels.chord[ch]);
          if (arc_labels) code.push_back(labels.arc[v.arc[c][k]]);
        }
      }
      if (!have || code < best) {
        best = std::move(code);
        have = true;
      }
      std::size_t i = 0;
      for (; i < l; ++i) {
        const std::size_t e = std::max<std::size_t>(v.ends[perm[i]].size(), 1);
        if (++rot[perm[i]] < e) break;
        rot[perm[i]] = 0;
      }
      if (i == l) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool are_isomorphic(const ChordDiagram& a, const ChordDiagram& b) {
  return canonical_form(a) == canonical_form(b);
}

ChordDiagram decode(const Code& code) {
  auto bad = [] {
    return Error(ErrorKind::Schema, "not a code of a planar-type diagram");
  };
  if (code.size() < 2 || code[0] != 0 || code[1] < 1) throw bad();
  std::vector<std::vector<PointId>> circles;
  std::vector<Chord> chords;
  std::size_t pos = 2;
  int next = 0;
  for (int c = 0; c < code[1]; ++c) {
    if (pos >= code.size()) throw bad();
    const int e = code[pos++];
    if (e < 0 || pos + static_cast<std::size_t>(e) > code.size()) throw bad();
    std::vector<PointId> pts;
    for (int k = 0; k < e; ++k) pts.push_back("p" + std::to_string(next++));
    for (int k = 0; k < e; ++k) {
      const int off = code[pos + static_cast<std::size_t>(k)];
      if (off <= 0 || off >= e) throw bad();
      const int j = (k + off) % e;
      if (code[pos + static_cast<std::size_t>(j)] != (k - j + e) % e) {
        throw bad();
      }
      if (k < j) chords.push_back({pts[k], pts[j]});
    }
    pos += static_cast<std::size_t>(e);
    circles.push_back(std::move(pts));
  }
  if (pos != code.size()) throw bad();
  return ChordDiagram::validate(std::move(circles), std::move(chords));
}

namespace {

// All non-crossing perfect matchings of n points on a line, as partner arrays.
std::vector<std::vector<int>> noncrossing(std::size_t n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (std::size_t j = 1; j < n; j += 2) {
    const auto inner = noncrossing(j - 1);
    const auto outer = noncrossing(n - j - 1);
    for (const auto& in : inner) {
      for (const auto& ou : outer) {
        std::vector<int> p(n);
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
  return out;
}

// Rotation-minimal offset words of non-crossing matchings on 2k points.
std::vector<std::vector<int>> circle_classes(std::size_t k) {
  if (k == 0) return {{0}};
  const auto all = noncrossing(2 * k);
  std::set<std::vector<int>> words;
  const std::size_t e = 2 * k;
  for (const auto& p : all) {
    std::vector<Entry> word(e);
    for (std::size_t i = 0; i < e; ++i) {
      word[i] = {static_cast<int>((static_cast<std::size_t>(p[i]) + e - i) % e)};
    }
    std::vector<int> w{static_cast<int>(e)};
    const auto rot = min_rotation(word);
    w.insert(w.end(), rot.begin(), rot.end());
    words.insert(w);
  }
  return {words.begin(), words.end()};
}

}  // namespace

std::vector<ChordDiagram> enumerate_planar_diagrams(std::size_t l,
                                                    std::size_t delta) {
  if (l == 0) throw Error(ErrorKind::EmptyDiagram, "l must be positive");
  std::vector<std::pair<std::size_t, std::vector<int>>> classes;
  for (std::size_t k = 0; k <= delta; ++k) {
    for (auto& w : circle_classes(k)) classes.emplace_back(k, std::move(w));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<ChordDiagram> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    if (pick.size() == l) {
      if (left != 0) return;
      Code code{0, static_cast<int>(l)};
      for (std::size_t i : pick) {
        code.insert(code.end(), classes[i].second.begin(),
                    classes[i].second.end());
      }
      out.push_back(decode(code));
      return;
    }
    for (std::size_t i = from; i < classes.size(); ++i) {
      if (classes[i].first > left) continue;
      pick.push_back(i);
      self(self, i, left - classes[i].first);
      pick.pop_back();
    }
  };
  rec(rec, 0, delta);
  return out;
}

std::vector<Code> enumerate_planar(std::size_t l, std::size_t delta) {
  std::vector<Code> out;
  for (const auto& cd : enumerate_planar_diagrams(l, delta)) {
    out.push_back(canonical_form(cd));
  }
  return out;
}

}  // namespace mwlinks

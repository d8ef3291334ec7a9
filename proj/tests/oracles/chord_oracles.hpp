// Brute-force reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mwlinks/chord_diagram.hpp"

namespace oracle {

using mwlinks::ChordDiagram;

// Definition: every chord stays on one circle and no two chords on a circle
// interleave.
inline bool planar(const ChordDiagram& cd) {
  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> ch;
  for (const auto& c : cd.chords()) {
    auto a = cd.locate(c.a);
    auto b = cd.locate(c.b);
    if (a.circle != b.circle) return false;
    ch.push_back({a.circle, std::minmax(a.index, b.index)});
  }
  for (std::size_t i = 0; i < ch.size(); ++i) {
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      if (ch[i].first != ch[j].first) continue;
      auto [a, b] = ch[i].second;
      auto [c, d] = ch[j].second;
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

using Pos = std::pair<std::size_t, std::size_t>;

// Skeleton keeping chord endpoints and tagged free points: per circle their
// count, each chord as a position pair with a color, and each tagged
// position with its tag.
struct Skeleton {
  std::vector<std::size_t> sizes;
  std::set<std::tuple<Pos, Pos, int>> chords;
  std::set<std::pair<Pos, int>> tags;
};

inline Skeleton skeleton(const ChordDiagram& cd,
                         const std::map<std::string, int>& point_tags = {},
                         const std::vector<int>& chord_colors = {}) {
  Skeleton s;
  std::map<std::string, Pos> pos;
  for (std::size_t c = 0; c < cd.l(); ++c) {
    std::size_t k = 0;
    for (const auto& p : cd.circles()[c]) {
      if (cd.chord_at(p) || point_tags.count(p)) pos[p] = {c, k++};
    }
    s.sizes.push_back(k);
  }
  for (std::size_t i = 0; i < cd.delta(); ++i) {
    const auto& ch = cd.chords()[i];
    auto a = pos[ch.a];
    auto b = pos[ch.b];
    s.chords.insert({std::min(a, b), std::max(a, b),
                     chord_colors.empty() ? 0 : chord_colors[i]});
  }
  for (const auto& [p, t] : point_tags) s.tags.insert({pos.at(p), t});
  return s;
}

// Searches every circle bijection and rotation for one carrying the
// skeleton of a onto that of b.
inline bool isomorphic(const Skeleton& sa, const Skeleton& sb) {
  if (sa.sizes.size() != sb.sizes.size() ||
      sa.chords.size() != sb.chords.size() || sa.tags.size() != sb.tags.size()) {
    return false;
  }
  const std::size_t l = sa.sizes.size();
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t c = 0; c < l; ++c) ok = ok && sa.sizes[c] == sb.sizes[perm[c]];
    if (!ok) continue;
    std::vector<std::size_t> rot(l, 0);
    while (true) {
      auto map = [&](Pos p) {
        const std::size_t n = sa.sizes[p.first];
        return Pos(perm[p.first], (p.second + rot[p.first]) % n);
      };
      std::set<std::tuple<Pos, Pos, int>> img;
      for (const auto& [x, y, color] : sa.chords) {
        auto mx = map(x);
        auto my = map(y);
        img.insert({std::min(mx, my), std::max(mx, my), color});
      }
      std::set<std::pair<Pos, int>> timg;
      for (const auto& [x, t] : sa.tags) timg.insert({map(x), t});
      if (img == sb.chords && timg == sb.tags) return true;
      std::size_t i = 0;
      for (; i < l; ++i) {
        if (++rot[i] < std::max<std::size_t>(sa.sizes[i], 1)) break;
        rot[i] = 0;
      }
      if (i == l) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool isomorphic(const ChordDiagram& a, const ChordDiagram& b) {
  return isomorphic(skeleton(a), skeleton(b));
}

// Non-crossing perfect matchings of 2n cyclic points, counted up to rotation
// by collecting explicit orbits.
inline std::size_t noncrossing_up_to_rotation(std::size_t n) {
  const std::size_t m = 2 * n;
  std::set<std::vector<int>> all;
  std::vector<int> partner(m, -1);
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < m && partner[i] >= 0) ++i;
    if (i == m) {
      all.insert(partner);
      return;
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (partner[j] >= 0) continue;
      bool crosses = false;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (partner[k] >= 0 && (partner[k] < static_cast<int>(i) ||
                                partner[k] > static_cast<int>(j))) {
          crosses = true;
        }
      }
      if (crosses) continue;
      partner[i] = static_cast<int>(j);
      partner[j] = static_cast<int>(i);
      self(self);
      partner[i] = partner[j] = -1;
    }
  };
  rec(rec);
  std::set<std::vector<int>> seen;
  std::size_t orbits = 0;
  for (const auto& p : all) {
    if (seen.count(p)) continue;
    ++orbits;
    for (std::size_t r = 0; r < std::max<std::size_t>(m, 1); ++r) {
      std::vector<int> q(m);
      for (std::size_t i = 0; i < m; ++i) {
        q[(i + r) % m] = static_cast<int>((static_cast<std::size_t>(p[i]) + r) % m);
      }
      seen.insert(q);
    }
  }
  return orbits;
}

// Partitions of n into exactly k positive parts.
inline std::size_t partitions(int n, int k) {
  std::size_t count = 0;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (static_cast<int>(parts.size()) == k) {
      if (left == 0) ++count;
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return count;
}

// Random diagram: up to `max_circles` circles, some free points, a random
// partial matching of points as chords.
inline ChordDiagram random_diagram(std::mt19937_64& rng, std::size_t max_circles,
                                   std::size_t max_points) {
  std::uniform_int_distribution<std::size_t> lc(1, max_circles);
  const std::size_t l = lc(rng);
  std::uniform_int_distribution<std::size_t> np(0, max_points);
  const std::size_t n = np(rng);
  std::vector<std::vector<std::string>> circles(l);
  std::uniform_int_distribution<std::size_t> which(0, l - 1);
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = "q" + std::to_string(i);
    circles[which(rng)].push_back(id);
    pts.push_back(id);
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  std::uniform_int_distribution<std::size_t> nc(0, pts.size() / 2);
  const std::size_t k = nc(rng);
  std::vector<mwlinks::Chord> chords;
  for (std::size_t i = 0; i < k; ++i) chords.push_back({pts[2 * i], pts[2 * i + 1]});
  return ChordDiagram::validate(circles, chords);
}

// Random planar diagram: chords drawn only between points of one circle
// following a random non-crossing matching.
inline ChordDiagram random_planar(std::mt19937_64& rng, std::size_t max_circles,
                                  std::size_t max_chords_per_circle,
                                  std::size_t max_free = 2) {
  std::uniform_int_distribution<std::size_t> lc(1, max_circles);
  const std::size_t l = lc(rng);
  std::vector<std::vector<std::string>> circles(l);
  std::vector<mwlinks::Chord> chords;
  int next = 0;
  for (std::size_t c = 0; c < l; ++c) {
    std::uniform_int_distribution<std::size_t> kc(0, max_chords_per_circle);
    const std::size_t k = kc(rng);
    // Random non-crossing matching from a random balanced bracket word.
    std::vector<int> word(2 * k);
    for (std::size_t i = 0; i < k; ++i) word[i] = 1;
    for (std::size_t i = k; i < 2 * k; ++i) word[i] = -1;
    do {
      std::shuffle(word.begin(), word.end(), rng);
      int depth = 0;
      bool ok = true;
      for (int x : word) ok = ok && (depth += x) >= 0;
      if (ok) break;
    } while (true);
    std::vector<std::string> ids;
    std::vector<std::size_t> stack;
    std::uniform_int_distribution<std::size_t> fc(0, max_free);
    for (std::size_t i = 0; i < word.size(); ++i) {
      ids.push_back("r" + std::to_string(next++));
      if (word[i] == 1) {
        stack.push_back(i);
      } else {
        chords.push_back({ids[stack.back()], ids[i]});
        stack.pop_back();
      }
    }
    const std::size_t f = fc(rng);
    for (std::size_t i = 0; i < f; ++i) ids.push_back("f" + std::to_string(next++));
    std::uniform_int_distribution<std::size_t> rot(0, ids.size() ? ids.size() - 1 : 0);
    if (!ids.empty()) std::rotate(ids.begin(), ids.begin() + rot(rng), ids.end());
    circles[c] = ids;
  }
  return ChordDiagram::validate(circles, chords);
}

// Same diagram after a random circle permutation, per-circle rotation and
// point relabeling.
// Where random_relabel sent each point name and each circle index.
struct Relabeling {
  std::map<std::string, std::string> name;
  std::vector<std::size_t> circle;

  std::string key(const std::string& k) const {
    if (!k.empty() && k[0] == '#') return "#" + std::to_string(circle[std::stoul(k.substr(1))]);
    return name.at(k);
  }
};

inline ChordDiagram random_relabel(const ChordDiagram& cd, std::mt19937_64& rng,
                                   Relabeling* out = nullptr) {
  std::vector<std::vector<std::string>> circles = cd.circles();
  std::map<std::string, std::string> name;
  std::vector<std::string> fresh;
  for (auto& c : circles) {
    for (auto& p : c) fresh.push_back(p);
  }
  std::vector<std::string> target = fresh;
  for (auto& t : target) t = "z" + t;
  std::shuffle(target.begin(), target.end(), rng);
  for (std::size_t i = 0; i < fresh.size(); ++i) name[fresh[i]] = target[i];
  for (auto& c : circles) {
    for (auto& p : c) p = name[p];
    if (!c.empty()) {
      std::uniform_int_distribution<std::size_t> r(0, c.size() - 1);
      std::rotate(c.begin(), c.begin() + r(rng), c.end());
    }
  }
  std::vector<std::size_t> order(circles.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<std::string>> placed(circles.size());
  std::vector<std::size_t> where(circles.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    placed[i] = circles[order[i]];
    where[order[i]] = i;
  }
  std::vector<mwlinks::Chord> chords;
  for (const auto& ch : cd.chords()) {
    if (rng() % 2) chords.push_back({name[ch.a], name[ch.b]});
    else chords.push_back({name[ch.b], name[ch.a]});
  }
  std::shuffle(chords.begin(), chords.end(), rng);
  if (out) *out = {name, where};
  return ChordDiagram::validate(placed, chords);
}

inline ChordDiagram reflect(const ChordDiagram& cd) {
  auto circles = cd.circles();
  for (auto& c : circles) std::reverse(c.begin(), c.end());
  return ChordDiagram::validate(circles, cd.chords());
}

}  // namespace oracle

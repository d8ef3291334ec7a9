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

#include "mwlinks/pl_topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mwlinks/error.hpp"

namespace mwlinks {

namespace {

Point3 operator-(const Point3& a, const Point3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Point3 operator-(const Point3& a) { return {-a[0], -a[1], -a[2]}; }

Rational dot(const Point3& a, const Point3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Point3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Rational det3(const Point3& a, const Point3& b, const Point3& c) {
  return dot(a, cross(b, c));
}

struct Segment {
  Point3 a;
  Point3 b;
  std::array<double, 6> box;  // lo x, y, z then hi x, y, z
};

std::vector<Segment> segments(const PLLoop& loop) {
  std::vector<Segment> out;
  const auto& v = loop.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point3& a = v[i];
    const Point3& b = v[(i + 1) % v.size()];
    Segment s{a, b, {}};
    for (int k = 0; k < 3; ++k) {
      const double x = a[k].get_d();
      const double y = b[k].get_d();
      s.box[k] = std::min(x, y) - 1e-9 * (1 + std::abs(x));
      s.box[k + 3] = std::max(x, y) + 1e-9 * (1 + std::abs(y));
    }
    out.push_back(s);
  }
  return out;
}

// Calls f(i, j) for every pair of segments whose bounding boxes overlap.
template <typename F>
void for_close_pairs(const std::vector<Segment>& a, const std::vector<Segment>& b, F f) {
  std::vector<std::size_t> order(b.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return b[x].box[0] < b[y].box[0]; });
  std::vector<double> starts;
  for (std::size_t i : order) starts.push_back(b[i].box[0]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto end = std::upper_bound(starts.begin(), starts.end(), a[i].box[3]);
    for (auto it = starts.begin(); it != end; ++it) {
      const std::size_t j = order[it - starts.begin()];
      bool overlap = true;
      for (std::size_t k = 0; k < 3 && overlap; ++k) {
        overlap = b[j].box[k] <= a[i].box[k + 3] && a[i].box[k] <= b[j].box[k + 3];
      }
      if (overlap) f(i, j);
    }
  }
}

// Exact closed-segment intersection in space.
bool segments_meet(const Point3& a0, const Point3& a1, const Point3& b0, const Point3& b1) {
  const Point3 da = a1 - a0;
  const Point3 db = b1 - b0;
  const Point3 w = b0 - a0;
  if (det3(da, db, w) != 0) return false;
  const Point3 n = cross(da, db);
  if (!is_zero(n)) {
    const Rational nn = dot(n, n);
    const Rational s = dot(cross(w, db), n) / nn;
    const Rational t = dot(cross(w, da), n) / nn;
    return s >= 0 && s <= 1 && t >= 0 && t <= 1;
  }
  if (!is_zero(cross(w, da))) return false;
  const Rational len = dot(da, da);
  Rational t0 = dot(w, da) / len;
  Rational t1 = dot(b1 - a0, da) / len;
  if (t0 > t1) std::swap(t0, t1);
  return t1 >= 0 && t0 <= 1;
}

std::array<double, 3> as_double(const Point3& p) {
  return {p[0].get_d(), p[1].get_d(), p[2].get_d()};
}

}  // namespace

PLLoop PLLoop::validate(std::vector<Point3> vertices) {
  if (vertices.size() < 3) {
    throw Error(ErrorKind::DegenerateLoop, "a loop needs at least three vertices");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[(i + 1) % vertices.size()]) {
      throw Error(ErrorKind::DegenerateLoop, "zero-length edge at vertex " + std::to_string(i));
    }
  }
  return PLLoop{std::move(vertices)};
}

PLLoop PLLoop::reversed() const {
  PLLoop out = *this;
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

std::optional<int> gauss_linking_along(const PLLoop& a, const PLLoop& b, const Point3& dir) {
  if (is_zero(dir)) throw Error(ErrorKind::Schema, "projection direction is zero");
  const auto sa = segments(a);
  const auto sb = segments(b);
  // Shadows along dir can overlap only if the boxes overlap on the two axes
  // other than the dominant one of dir, so prune on those.
  const auto d = as_double(dir);
  std::size_t dominant = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (std::abs(d[k]) > std::abs(d[dominant])) dominant = k;
  }
  int total = 0;
  bool generic = true;
  for (std::size_t i = 0; i < sa.size() && generic; ++i) {
    const Segment& x = sa[i];
    for (std::size_t j = 0; j < sb.size() && generic; ++j) {
      const Segment& y = sb[j];
      bool overlap = true;
      for (std::size_t k = 0; k < 3; ++k) {
        if (k == dominant) continue;
        // Widen by the travel along dir across the other boxes' depth range.
        const double reach = std::abs(d[k] / d[dominant]) *
                             (std::max(x.box[dominant + 3], y.box[dominant + 3]) -
                              std::min(x.box[dominant], y.box[dominant]));
        overlap = overlap && y.box[k] <= x.box[k + 3] + reach &&
                  x.box[k] <= y.box[k + 3] + reach;
      }
      if (!overlap) continue;
      const Point3 da = x.b - x.a;
      const Point3 db = y.b - y.a;
      const Point3 w = y.a - x.a;
      // x.a + s da + lambda dir = y.a + t db.
      const Point3 mdb = -db;
      const Rational det = det3(da, mdb, dir);
      if (det == 0) {
        if (segments_meet(x.a, x.b, y.a, y.b)) {
          throw Error(ErrorKind::LoopsIntersect, "loops meet");
        }
        // Parallel shadows: degenerate only when they lie on one line.
        if (det3(da, dir, w) == 0 && det3(db, dir, w) == 0) generic = false;
        continue;
      }
      const Rational s = det3(w, mdb, dir) / det;
      const Rational t = det3(da, w, dir) / det;
      if (s < 0 || s > 1 || t < 0 || t > 1) continue;
      const Rational lambda = det3(da, mdb, w) / det;
      if (lambda == 0) throw Error(ErrorKind::LoopsIntersect, "loops meet");
      if (s == 0 || s == 1 || t == 0 || t == 1) {
        generic = false;
        continue;
      }
      total += sign(det) * sign(lambda);
    }
  }
  if (!generic) return std::nullopt;
  if (total % 2 != 0) throw std::logic_error("odd crossing sum between closed loops");
  return total / 2;
}

int gauss_linking(const PLLoop& a, const PLLoop& b) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> pick(-97, 97);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Point3 dir{pick(rng), pick(rng), 101 + attempt};
    if (const auto lk = gauss_linking_along(a, b, dir)) return *lk;
  }
  throw std::runtime_error("no generic projection direction found");
}

void check_simple(const PLLoop& loop) {
  const auto s = segments(loop);
  const std::size_t n = s.size();
  for_close_pairs(s, s, [&](std::size_t i, std::size_t j) {
    if (j <= i) return;
    const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
    if (adjacent) {
      // Sharing a vertex is expected; folding back onto the edge is not.
      const Point3 da = s[i].b - s[i].a;
      const Point3 db = s[j].b - s[j].a;
      if (is_zero(cross(da, db)) && dot(da, db) < 0) {
        throw Error(ErrorKind::DegenerateLoop, "loop folds back at an edge");
      }
      return;
    }
    if (segments_meet(s[i].a, s[i].b, s[j].a, s[j].b)) {
      throw Error(ErrorKind::DegenerateLoop,
                  "edges " + std::to_string(i) + " and " + std::to_string(j) + " meet");
    }
  });
}

namespace {

void check_disjoint(const PLLoop& a, const PLLoop& b) {
  const auto sa = segments(a);
  const auto sb = segments(b);
  for_close_pairs(sa, sb, [&](std::size_t i, std::size_t j) {
    if (segments_meet(sa[i].a, sa[i].b, sb[j].a, sb[j].b)) {
      throw Error(ErrorKind::LoopsIntersect, "model loops meet");
    }
  });
}

Rational snap(double x) {
  constexpr double kGrid = 65536.0;
  Rational r(static_cast<long>(std::llround(x * kGrid)), static_cast<long>(kGrid));
  r.canonicalize();
  return r;
}

using V3 = std::array<double, 3>;

V3 add(const V3& a, const V3& b, double k = 1) {
  return {a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2]};
}

V3 cross_d(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

V3 unit(const V3& a) {
  const double n = std::hypot(a[0], a[1], a[2]);
  return {a[0] / n, a[1] / n, a[2] / n};
}

// (1, -1) curve on the torus of tube radius r about the circle of radius
// big_r in the xy-plane. Two of them on nested tori link +1.
struct CoreCurve {
  double big_r;
  double r;

  V3 at(double phi) const {
    const double rad = big_r + r * std::cos(phi);
    return {rad * std::cos(phi), rad * std::sin(phi), -r * std::sin(phi)};
  }
  V3 tangent(double phi) const {
    const double rad = big_r + r * std::cos(phi);
    const double drad = -r * std::sin(phi);
    return unit({drad * std::cos(phi) - rad * std::sin(phi),
                 drad * std::sin(phi) + rad * std::cos(phi), -r * std::cos(phi)});
  }
  V3 normal(double phi) const {
    return {std::cos(phi) * std::cos(phi), std::cos(phi) * std::sin(phi), -std::sin(phi)};
  }
};

PLLoop sample(const std::vector<V3>& pts) {
  std::vector<Point3> v;
  for (const auto& p : pts) v.push_back({snap(p[0]), snap(p[1]), snap(p[2])});
  return PLLoop::validate(std::move(v));
}

constexpr double kTau = 2 * std::numbers::pi;

}  // namespace

WgaModel build_wga_model(const std::vector<int>& alpha) {
  if (alpha.empty()) throw Error(ErrorKind::InvalidPartition, "partition is empty");
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 1) throw Error(ErrorKind::InvalidPartition, "parts must be positive");
    if (j > 0 && alpha[j] > alpha[j - 1]) {
      throw Error(ErrorKind::InvalidPartition, "parts must be non-increasing");
    }
  }
  WgaModel m;
  m.alpha = alpha;
  const std::size_t n = alpha.size();
  const double big_r = 10 + 1.2 * static_cast<double>(n);
  std::vector<CoreCurve> cores;
  for (std::size_t i = 0; i < n; ++i) cores.push_back({big_r, 1 + 1.2 * static_cast<double>(i)});
  for (const auto& core : cores) {
    std::vector<V3> pts;
    const int steps = 96;
    for (int k = 0; k < steps; ++k) pts.push_back(core.at(kTau * k / steps));
    m.hopf_cores.push_back(sample(pts));
  }
  // K_j winds p = 2 a_j times along its core and q = 4 times around it; the
  // slow circular wobble keeps the strands apart when gcd(p, q) > 1.
  for (std::size_t j = 0; j < n; ++j) {
    const int p = 2 * alpha[j];
    const int q = 4;
    const auto& core = cores[j];
    std::vector<V3> pts;
    const int steps = 64 * p + 16 * q;
    for (int k = 0; k < steps; ++k) {
      const double phi = kTau * p * k / steps;
      const double psi = q * phi / p + 0.3 * std::sin(phi / p);
      const double rho = 0.3 + 0.1 * std::cos(phi / p);
      const V3 t = core.tangent(phi);
      const V3 nrm = core.normal(phi);
      const V3 bin = cross_d(t, nrm);
      V3 x = add(core.at(phi), nrm, rho * std::cos(psi));
      x = add(x, bin, rho * std::sin(psi));
      pts.push_back(x);
    }
    m.components.push_back(sample(pts));
  }
  std::vector<const PLLoop*> all;
  for (const auto& l : m.hopf_cores) all.push_back(&l);
  for (const auto& l : m.components) all.push_back(&l);
  for (std::size_t i = 0; i < all.size(); ++i) {
    check_simple(*all[i]);
    for (std::size_t j = i + 1; j < all.size(); ++j) check_disjoint(*all[i], *all[j]);
  }
  return m;
}

std::vector<std::vector<int>> linking_matrix(const WgaModel& m) {
  std::vector<std::vector<int>> out(m.components.size(),
                                    std::vector<int>(m.hopf_cores.size()));
  for (std::size_t j = 0; j < m.components.size(); ++j) {
    for (std::size_t i = 0; i < m.hopf_cores.size(); ++i) {
      out[j][i] = gauss_linking(m.components[j], m.hopf_cores[i]);
    }
  }
  return out;
}

void check_linking_data(const WgaModel& m, const std::vector<std::vector<int>>& matrix) {
  for (std::size_t j = 0; j < m.alpha.size(); ++j) {
    for (std::size_t i = 0; i < m.alpha.size(); ++i) {
      const int want = i == j ? 2 * (m.alpha[j] + 2) : 2 * m.alpha[j];
      if (matrix.at(j).at(i) != want) {
        throw Error(ErrorKind::LinkingDataMismatch,
                    "M[" + std::to_string(j) + "][" + std::to_string(i) + "] = " +
                        std::to_string(matrix[j][i]) + ", expected " +
                        std::to_string(want));
      }
    }
  }
}

std::string to_obj(const WgaModel& m) {
  std::ostringstream out;
  std::size_t base = 1;
  auto emit = [&](const PLLoop& loop, const std::string& name) {
    out << "o " << name << "\n";
    for (const auto& v : loop.vertices) {
      out << "v " << v[0].get_d() << " " << v[1].get_d() << " " << v[2].get_d() << "\n";
    }
    out << "l";
    for (std::size_t k = 0; k < loop.vertices.size(); ++k) out << " " << base + k;
    out << " " << base << "\n";
    base += loop.vertices.size();
  };
  for (std::size_t i = 0; i < m.hopf_cores.size(); ++i) emit(m.hopf_cores[i], "H" + std::to_string(i));
  for (std::size_t j = 0; j < m.components.size(); ++j) emit(m.components[j], "K" + std::to_string(j));
  return out.str();
}

}  // namespace mwlinks

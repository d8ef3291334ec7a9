// Floating-point Gauss linking integral for polygons, used only by tests.
#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "mwlinks/link_diagram.hpp"
#include "mwlinks/pl_topology.hpp"

namespace oracle {

using D3 = std::array<double, 3>;

inline D3 sub(const D3& a, const D3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline D3 crs(const D3& a, const D3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dt(const D3& a, const D3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline D3 nrm(const D3& a) {
  const double n = std::sqrt(dt(a, a));
  return {a[0] / n, a[1] / n, a[2] / n};
}

// Signed solid angle term of the Gauss integral for segments (a0, a1) and
// (b0, b1), as a fraction of 4 pi.
inline double segment_pair_gauss(const D3& a0, const D3& a1, const D3& b0, const D3& b1) {
  const D3 r13 = sub(b0, a0);
  const D3 r14 = sub(b1, a0);
  const D3 r23 = sub(b0, a1);
  const D3 r24 = sub(b1, a1);
  const D3 n1 = nrm(crs(r13, r14));
  const D3 n2 = nrm(crs(r14, r24));
  const D3 n3 = nrm(crs(r24, r23));
  const D3 n4 = nrm(crs(r23, r13));
  auto clamp = [](double x) { return std::max(-1.0, std::min(1.0, x)); };
  const double omega = std::asin(clamp(dt(n1, n2))) + std::asin(clamp(dt(n2, n3))) +
                       std::asin(clamp(dt(n3, n4))) + std::asin(clamp(dt(n4, n1)));
  const double s = dt(crs(sub(b1, b0), sub(a1, a0)), r13);
  return (s > 0 ? omega : -omega) / (4 * std::numbers::pi);
}

inline double gauss_integral(const mwlinks::PLLoop& a, const mwlinks::PLLoop& b) {
  auto at = [](const mwlinks::Point3& p) { return D3{p[0].get_d(), p[1].get_d(), p[2].get_d()}; };
  double total = 0;
  const auto& va = a.vertices;
  const auto& vb = b.vertices;
  for (std::size_t i = 0; i < va.size(); ++i) {
    for (std::size_t j = 0; j < vb.size(); ++j) {
      total += segment_pair_gauss(at(va[i]), at(va[(i + 1) % va.size()]), at(vb[j]),
                                  at(vb[(j + 1) % vb.size()]));
    }
  }
  return total;
}

// Gauss code of the projection of the loops to the xy-plane, read in
// floating point. Crossing signs follow the right-hand rule seen from +z.
inline mwlinks::LinkDiagram diagram_from_projection(const std::vector<mwlinks::PLLoop>& loops,
                                                    int degree) {
  struct Seg {
    std::size_t loop;
    std::size_t index;
    D3 a;
    D3 b;
  };
  std::vector<Seg> segs;
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto& v = loops[l].vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& p = v[i];
      const auto& q = v[(i + 1) % v.size()];
      segs.push_back({l, i, {p[0].get_d(), p[1].get_d(), p[2].get_d()},
                      {q[0].get_d(), q[1].get_d(), q[2].get_d()}});
    }
  }
  // (loop, segment, position along it, crossing id, sign, over)
  std::vector<std::tuple<std::size_t, std::size_t, double, int, int, bool>> visits;
  int next = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& x = segs[i];
      const auto& y = segs[j];
      const D3 dx = sub(x.b, x.a);
      const D3 dy = sub(y.b, y.a);
      const double den = dx[0] * dy[1] - dx[1] * dy[0];
      if (den == 0) continue;
      const D3 w = sub(y.a, x.a);
      const double s = (w[0] * dy[1] - w[1] * dy[0]) / den;
      const double t = (w[0] * dx[1] - w[1] * dx[0]) / den;
      // Shared endpoints of consecutive edges are not crossings.
      if (s <= 1e-12 || s >= 1 - 1e-12 || t <= 1e-12 || t >= 1 - 1e-12) continue;
      const double zx = x.a[2] + s * dx[2];
      const double zy = y.a[2] + t * dy[2];
      const bool x_over = zx > zy;
      const D3& to = x_over ? dx : dy;
      const D3& tu = x_over ? dy : dx;
      const int sign = to[0] * tu[1] - to[1] * tu[0] > 0 ? 1 : -1;
      visits.emplace_back(x.loop, x.index, s, next, sign, x_over);
      visits.emplace_back(y.loop, y.index, t, next, sign, !x_over);
      ++next;
    }
  }
  std::sort(visits.begin(), visits.end());
  std::vector<std::vector<mwlinks::CrossingVisit>> components(loops.size());
  for (const auto& [loop, index, pos, id, sign, over] : visits) {
    components[loop].push_back({"X" + std::to_string(id), sign, over});
  }
  return mwlinks::LinkDiagram::validate(components, {}, degree,
                                        static_cast<int>(loops.size()) - 1);
}

}  // namespace oracle

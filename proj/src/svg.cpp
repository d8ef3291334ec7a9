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

#include "mwlinks/svg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace mwlinks {

namespace {

constexpr double kRadius = 80.0;
constexpr double kPitch = 220.0;
constexpr double kMargin = 40.0;

struct Xy {
  double x;
  double y;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

class Layout {
 public:
  explicit Layout(const ChordDiagram& cd) : cd_(cd) {}

  Xy center(std::size_t circle) const {
    return {kMargin + kRadius + kPitch * static_cast<double>(circle), kMargin + kRadius};
  }

  double angle(std::size_t circle, double index) const {
    const double n = static_cast<double>(cd_.circles()[circle].size());
    return 2 * std::numbers::pi * index / n;
  }

  // SVG y grows downward, so counterclockwise means decreasing y.
  Xy at(std::size_t circle, double theta, double r) const {
    const Xy c = center(circle);
    return {c.x + r * std::cos(theta), c.y - r * std::sin(theta)};
  }

  Xy point(const PointId& p, double r = kRadius) const {
    const auto loc = cd_.locate(p);
    return at(loc.circle, angle(loc.circle, static_cast<double>(loc.index)), r);
  }

  // A spot just inside the middle of an arc, or the circle center for a
  // circle without chord endpoints.
  Xy arc_label(const Arc& arc) const {
    if (!arc.start || !arc.end) return center(arc.circle);
    const double n = static_cast<double>(cd_.circles()[arc.circle].size());
    double s = static_cast<double>(*arc.start);
    double e = static_cast<double>(*arc.end);
    if (e <= s) e += n;
    return at(arc.circle, angle(arc.circle, (s + e) / 2), 0.85 * kRadius);
  }

 private:
  const ChordDiagram& cd_;
};

void emit(std::ostringstream& os, const ChordDiagram& cd, const Layout& lay) {
  os << std::fixed;
  os.precision(2);
  for (std::size_t c = 0; c < cd.l(); ++c) {
    const Xy o = lay.center(c);
    os << "<circle class=\"circle\" cx=\"" << o.x << "\" cy=\"" << o.y << "\" r=\"" << kRadius
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    const Xy tip = lay.at(c, 0.0, kRadius);
    os << "<path d=\"M " << tip.x - 5 << ' ' << tip.y + 6 << " L " << tip.x << ' ' << tip.y
       << " L " << tip.x + 5 << ' ' << tip.y + 6 << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (const auto& ch : cd.chords()) {
    const Xy a = lay.point(ch.a);
    const Xy b = lay.point(ch.b);
    const auto la = cd.locate(ch.a);
    const auto lb = cd.locate(ch.b);
    os << "<path class=\"chord\" d=\"M " << a.x << ' ' << a.y;
    if (la.circle == lb.circle) {
      const Xy o = lay.center(la.circle);
      const Xy m{(a.x + b.x) / 2, (a.y + b.y) / 2};
      os << " Q " << (m.x + o.x) / 2 << ' ' << (m.y + o.y) / 2 << ' ' << b.x << ' ' << b.y;
    } else {
      os << " L " << b.x << ' ' << b.y;
    }
    os << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  }
  for (const auto& circle : cd.circles()) {
    for (const auto& p : circle) {
      const Xy q = lay.point(p);
      const Xy t = lay.point(p, 1.15 * kRadius);
      os << "<circle class=\"point\" cx=\"" << q.x << "\" cy=\"" << q.y
         << "\" r=\"3\" fill=\"black\"/>\n";
      os << "<text x=\"" << t.x << "\" y=\"" << t.y
         << "\" font-size=\"10\" text-anchor=\"middle\">" << escape(p) << "</text>\n";
    }
  }
}

std::string wrap(const ChordDiagram& cd, const std::string& body) {
  std::ostringstream os;
  const double width = 2 * kMargin + 2 * kRadius + kPitch * static_cast<double>(cd.l() - 1);
  const double height = 2 * kMargin + 2 * kRadius;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << body << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const ChordDiagram& cd) {
  std::ostringstream os;
  emit(os, cd, Layout(cd));
  return wrap(cd, os.str());
}

std::string render_svg(const DegreeChordDiagram& dcd) {
  const Layout lay(dcd.base);
  std::ostringstream os;
  emit(os, dcd.base, lay);
  for (const auto& loop : dcd.loops.loops()) {
    const Xy p = lay.arc_label(dcd.base.arcs()[loop.arcs.front()]);
    os << "<text class=\"degree\" x=\"" << p.x << "\" y=\"" << p.y
       << "\" font-size=\"14\" fill=\"#2c3e50\" text-anchor=\"middle\">"
       << dcd.degrees[loop.id] << "</text>\n";
  }
  return wrap(dcd.base, os.str());
}

}  // namespace mwlinks

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

#include "mwlinks/json_io.hpp"

#include <map>
#include <string>

#include "mwlinks/error.hpp"

namespace mwlinks {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::Schema, what);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing member '") + key + "'");
  return *it;
}

void expect_schema(const Json& j, const char* name) {
  if (!j.is_object()) schema_error(std::string("expected a ") + name + " object");
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != name)) {
    schema_error(std::string("expected schema ") + name);
  }
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  return j;
}

int chirality_from(const Json& j) {
  const int c = as_int(j, "chirality");
  if (c != 1 && c != -1) schema_error("chirality must be 1 or -1");
  return c;
}

Json interval_json(const Rational& lo, const Rational& hi) {
  return Json{{"lo", to_string(lo)}, {"hi", to_string(hi)}};
}

Json poly_json(const Poly& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(to_string(p.coeff(k)));
  return out;
}

}  // namespace

Rational default_isolation_eps() {
  Rational eps = 1;
  eps /= Rational(mpz_class(1) << 64);
  return eps;
}

Json to_json(const ChordDiagram& cd) {
  Json circles = Json::array();
  for (const auto& c : cd.circles()) circles.push_back(c);
  Json chords = Json::array();
  for (const auto& ch : cd.chords()) chords.push_back({ch.a, ch.b});
  return Json{{"circles", circles}, {"chords", chords}};
}

ChordDiagram chord_diagram_from_json(const Json& j) {
  if (!j.is_object()) schema_error("expected a chord-diagram.v1 object");
  std::vector<std::vector<PointId>> circles;
  for (const auto& c : as_array(member(j, "circles"), "circles")) {
    std::vector<PointId> pts;
    for (const auto& p : as_array(c, "circle")) pts.push_back(as_string(p, "point id"));
    circles.push_back(std::move(pts));
  }
  std::vector<Chord> chords;
  for (const auto& ch : as_array(member(j, "chords"), "chords")) {
    if (!ch.is_array() || ch.size() != 2) schema_error("chord must be a pair");
    chords.push_back({as_string(ch[0], "point id"), as_string(ch[1], "point id")});
  }
  return ChordDiagram::validate(std::move(circles), std::move(chords));
}

Json code_to_json(const Code& code) { return Json(code); }

Code code_from_json(const Json& j) {
  Code code;
  for (const auto& x : as_array(j, "code")) code.push_back(as_int(x, "code entry"));
  return code;
}

Json to_json(const DegreeChordDiagram& dcd, std::optional<int> chirality) {
  Json out = to_json(dcd.base);
  Json degrees = Json::object();
  for (const auto& loop : dcd.loops.loops()) degrees[loop.key] = dcd.degrees[loop.id];
  out["degrees"] = degrees;
  if (chirality) out["chirality"] = *chirality;
  return out;
}

std::pair<DegreeChordDiagram, std::optional<int>> degree_diagram_from_json(
    const Json& j) {
  expect_schema(j, "degree-chord.v1");
  ChordDiagram cd = chord_diagram_from_json(j);
  const Json& dj = member(j, "degrees");
  if (!dj.is_object()) schema_error("degrees must be an object");
  std::map<std::string, int> degrees;
  for (const auto& [key, v] : dj.items()) degrees[key] = as_int(v, "degree");
  std::optional<int> chirality;
  if (j.contains("chirality")) chirality = chirality_from(j["chirality"]);
  return {attach_degrees(cd, degrees), chirality};
}

Json to_json(const RigidIsotopyClass& c) {
  return Json{{"code", code_to_json(c.code)}, {"chirality", c.chirality}};
}

RigidIsotopyClass class_from_json(const Json& j) {
  return {code_from_json(member(j, "code")), chirality_from(member(j, "chirality"))};
}

Json to_json(const LinkDiagram& ld) {
  Json components = Json::array();
  for (const auto& comp : ld.components()) {
    Json tokens = Json::array();
    for (const auto& v : comp) tokens.push_back(LinkDiagram::format_visit(v));
    components.push_back(tokens);
  }
  Json solitary = Json::array();
  for (const auto& s : ld.solitary()) solitary.push_back(s ? Json(*s) : Json());
  Json out{{"components", components},
           {"solitary", solitary},
           {"degree", ld.degree()},
           {"genus", ld.genus()}};
  Json nodes = Json::array();
  for (const auto& x : ld.crossings()) {
    if (x.node) nodes.push_back(x.id);
  }
  if (!nodes.empty()) out["nodes"] = nodes;
  return out;
}

LinkDiagram link_diagram_from_json(const Json& j) {
  expect_schema(j, "link-diagram.v1");
  std::vector<std::vector<CrossingVisit>> components;
  for (const auto& comp : as_array(member(j, "components"), "components")) {
    std::vector<CrossingVisit> visits;
    for (const auto& t : as_array(comp, "component")) {
      visits.push_back(LinkDiagram::parse_visit(as_string(t, "crossing token")));
    }
    components.push_back(std::move(visits));
  }
  std::vector<std::optional<int>> solitary;
  if (j.contains("solitary")) {
    for (const auto& s : as_array(j["solitary"], "solitary")) {
      if (s.is_null()) solitary.push_back(std::nullopt);
      else solitary.push_back(as_int(s, "solitary sign"));
    }
  }
  std::vector<std::string> nodes;
  if (j.contains("nodes")) {
    for (const auto& n : as_array(j["nodes"], "nodes")) nodes.push_back(as_string(n, "node id"));
  }
  return LinkDiagram::validate(std::move(components), std::move(solitary),
                               as_int(member(j, "degree"), "degree"),
                               as_int(member(j, "genus"), "genus"), nodes);
}

Json to_json(const InvariantReport& r) {
  Json lk = Json::array();
  for (const auto& row : r.lk) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(to_string(x));
    lk.push_back(jr);
  }
  return Json{{"w", r.w ? Json(*r.w) : Json()},
              {"w_lambda", r.w_lambda ? Json(*r.w_lambda) : Json()},
              {"lk", lk},
              {"mw", r.mw},
              {"mw_lambda", r.mw_lambda}};
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(as_string(j, "rational"));
}

Json to_json(const RationalSpaceCurve& c) {
  Json coords = Json::array();
  for (const auto& p : c.coords) {
    Json row = Json::array();
    for (int k = 0; k <= c.degree; ++k) row.push_back(to_string(p.coeff(k)));
    coords.push_back(row);
  }
  return Json{{"degree", c.degree}, {"coords", coords}};
}

RationalSpaceCurve curve_from_json(const Json& j) {
  expect_schema(j, "curve.v1");
  const int degree = as_int(member(j, "degree"), "degree");
  std::vector<std::vector<Rational>> coeffs;
  for (const auto& row : as_array(member(j, "coords"), "coords")) {
    std::vector<Rational> r;
    for (const auto& x : as_array(row, "coordinate")) r.push_back(rational_from_json(x));
    coeffs.push_back(std::move(r));
  }
  return parse_curve(degree, coeffs);
}

Json to_json(const Slot& s) {
  return Json{{"circle", s.circle}, {"after", s.after ? Json(*s.after) : Json()}};
}

Slot slot_from_json(const Json& j) {
  Slot s;
  const int c = as_int(member(j, "circle"), "circle");
  if (c < 0) schema_error("circle must be non-negative");
  s.circle = static_cast<std::size_t>(c);
  if (j.contains("after") && !j["after"].is_null()) s.after = as_string(j["after"], "after");
  return s;
}

Json to_json(const HopfTriple& t) {
  Json marks = Json::array();
  for (const auto& m : t.marks) marks.push_back(to_json(m));
  return Json{{"base", to_json(t.base)}, {"marks", marks}};
}

HopfTriple triple_from_json(const ChordDiagram& base, const Json& marks) {
  std::vector<Slot> slots;
  for (const auto& m : as_array(marks, "marks")) slots.push_back(slot_from_json(m));
  return HopfTriple::validate(base, std::move(slots));
}

Json to_json(const ChordMove& m) {
  return Json{{"chord", m.chord}, {"direction", m.direction}};
}

Json to_json(const Refinement& r) {
  Json out = to_json(r.diagram);
  out["inserted"] = r.inserted;
  return out;
}

Json to_json(const SlideStep& s) {
  return Json{{"base", to_json(s.base)},
              {"loop", s.spec.loop},
              {"x", to_json(s.spec.x)},
              {"y", to_json(s.spec.y)},
              {"z", to_json(s.spec.z)},
              {"variant", s.spec.variant == SlideVariant::Y ? "Y" : "Z"},
              {"result", to_json(s.result)}};
}

Json to_json(const RealAlgebraic& x, const Rational& eps) {
  x.refine_below(eps);
  Json out = interval_json(x.lo(), x.hi());
  out["approx"] = x.approx();
  return out;
}

Json to_json(const NodeRecord& n, const Rational& eps) {
  Json out{{"kind", to_string(n.kind)},
           {"minimal", poly_json(n.minimal)},
           {"u_of", poly_json(n.u_of)},
           {"v_of", poly_json(n.v_of)}};
  out["root"] = n.root ? to_json(*n.root, eps) : Json();
  Json params = Json::array();
  for (const auto& p : n.params) params.push_back(to_json(p, eps));
  out["params"] = params;
  Json approx = Json::array();
  for (const auto& z : n.approx) approx.push_back({z.real(), z.imag()});
  out["approx"] = approx;
  Json image = Json::array();
  for (const auto& box : n.image) image.push_back(interval_json(box.lo, box.hi));
  out["image"] = image;
  out["sign"] = n.sign ? Json(*n.sign) : Json();
  out["chart"] = n.chart ? Json(to_string(*n.chart)) : Json();
  return out;
}

Json to_json(const WritheReport& r, const Rational& eps) {
  Json center = Json::array();
  for (const auto& x : r.center) center.push_back(to_string(x));
  Json nodes = Json::array();
  for (const auto& n : r.census.nodes) nodes.push_back(to_json(n, eps));
  return Json{{"center", center},
              {"w", r.w ? Json(*r.w) : Json()},
              {"n_d", r.n_d},
              {"census",
               {{"real_crossings", r.census.real_crossings},
                {"solitary", r.census.solitary},
                {"complex_pairs", r.census.complex_pairs},
                {"spatial", r.census.spatial},
                {"total", r.census.total()}}},
              {"nodes", nodes}};
}

Json to_json(const MwCertificate& c, const Rational& eps) {
  return Json{{"verdict", c.verdict},
              {"witness", c.witness},
              {"skipped", c.skipped},
              {"generic", c.generic},
              {"report", to_json(c.report, eps)}};
}

Json to_json(const ExtractedDiagram& e, const Rational& eps) {
  Json out = to_json(e.diagram);
  out["d"] = e.diagram.d();
  Json plane = Json::array();
  for (const auto& x : e.plane) plane.push_back(to_string(x));
  out["plane"] = plane;
  Json nodes = Json::array();
  for (const auto& n : e.nodes) nodes.push_back(to_json(n, eps));
  out["nodes"] = nodes;
  return out;
}

Json to_json(const WgaModel& m, const std::vector<std::vector<int>>& matrix) {
  return Json{{"alpha", m.alpha},
              {"d", [&] {
                 int d = 2;
                 for (int a : m.alpha) d += a;
                 return d;
               }()},
              {"linking_matrix", matrix}};
}

}  // namespace mwlinks

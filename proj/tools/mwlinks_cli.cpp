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

// mwlinks command-line front end. JSON goes to stdout or --output; errors go
// to stderr with exit 1 (schema), 2 (math precondition) or 3 (resource cap).

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mwlinks/error.hpp"
#include "mwlinks/json_io.hpp"
#include "mwlinks/svg.hpp"

namespace {

using namespace mwlinks;

constexpr std::uint64_t kDefaultSeed = 20260101;

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  std::string eps_text;
  std::uint64_t seed = kDefaultSeed;
  int l = 1;
  int d = 3;
  int g = 0;
  int delta = 0;
  int trials = 64;
  int from = 0;
  int to = -1;
  std::string center;
  std::string q = "0,1";
  std::string alpha;
  std::string obj;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Schema, "cannot write '" + path + "'");
  out << text;
}

void emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.output.empty()) std::cout << text;
  else write_text(o.output, text);
}

// Accepts "p/q", an integer, or "2^-k".
Rational parse_eps(const std::string& s) {
  if (s.empty()) return default_isolation_eps();
  Rational eps;
  if (s.rfind("2^-", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(s.substr(3));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Schema, "bad --isolation-eps '" + s + "'");
    }
    if (k < 0 || k > 4096) throw Error(ErrorKind::Schema, "bad --isolation-eps '" + s + "'");
    eps = 1;
    eps /= Rational(mpz_class(1) << k);
  } else {
    eps = parse_rational(s);
  }
  if (eps <= 0) throw Error(ErrorKind::Schema, "--isolation-eps must be positive");
  return eps;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void diagram_check(const Options& o) {
  const ChordDiagram cd = chord_diagram_from_json(read_json(o.input));
  const LoopDecomposition loops = planar_loops(cd);
  if (!o.svg.empty()) write_text(o.svg, render_svg(cd));
  emit(o, Json{{"planar", true},
               {"l", cd.l()},
               {"delta", cd.delta()},
               {"loops", loops.size()}});
}

void diagram_canon(const Options& o) {
  const ChordDiagram cd = chord_diagram_from_json(read_json(o.input));
  if (!o.svg.empty()) write_text(o.svg, render_svg(cd));
  emit(o, Json{{"code", code_to_json(canonical_form(cd))}, {"planar", is_planar(cd)}});
}

void diagram_loops(const Options& o) {
  const ChordDiagram cd = chord_diagram_from_json(read_json(o.input));
  const LoopDecomposition loops = planar_loops(cd);
  Json out = Json::array();
  for (const auto& loop : loops.loops()) {
    std::vector<std::string> chords;
    for (std::size_t c : loop.chords) {
      chords.push_back(cd.chords()[c].a + "-" + cd.chords()[c].b);
    }
    out.push_back(Json{{"id", loop.id},
                       {"circle", loop.circle},
                       {"key", loop.key},
                       {"arcs", loop.arcs.size()},
                       {"chords", chords}});
  }
  if (!o.svg.empty()) write_text(o.svg, render_svg(cd));
  emit(o, Json{{"count", loops.size()}, {"loops", out}});
}

void diagram_enumerate(const Options& o) {
  if (o.l < 1 || o.delta < 0) throw Error(ErrorKind::Schema, "need --l >= 1, --delta >= 0");
  const auto diagrams = enumerate_planar_diagrams(static_cast<std::size_t>(o.l),
                                                  static_cast<std::size_t>(o.delta));
  Json list = Json::array();
  for (const auto& cd : diagrams) {
    list.push_back(Json{{"code", code_to_json(canonical_form(cd))}, {"diagram", to_json(cd)}});
  }
  emit(o, Json{{"l", o.l}, {"delta", o.delta}, {"count", diagrams.size()}, {"diagrams", list}});
}

void classify_link(const Options& o) {
  const auto [dcd, chirality] = degree_diagram_from_json(read_json(o.input));
  if (!chirality) throw Error(ErrorKind::Schema, "classify link needs \"chirality\"");
  if (!o.svg.empty()) write_text(o.svg, render_svg(dcd));
  Json out = to_json(classify(dcd, *chirality));
  out["d"] = dcd.d();
  out["g"] = dcd.g();
  out["delta"] = dcd.delta();
  out["nodal_hopf"] = is_nodal_hopf(dcd);
  emit(o, out);
}

void classify_enumerate(const Options& o) {
  const auto classes = enumerate_classes(o.d, o.g, o.delta);
  Json list = Json::array();
  for (const auto& c : classes) list.push_back(to_json(c));
  emit(o, Json{{"d", o.d}, {"g", o.g}, {"delta", o.delta}, {"count", classes.size()},
               {"classes", list}});
}

void moves_path(const Options& o) {
  const Json j = read_json(o.input);
  const ChordDiagram base = chord_diagram_from_json(j.contains("base") ? j["base"] : Json());
  const HopfTriple a = triple_from_json(base, j.contains("from") ? j["from"] : Json());
  const HopfTriple b = triple_from_json(base, j.contains("to") ? j["to"] : Json());
  const auto path = chord_move_path(a, b);
  Json moves = Json::array();
  HopfTriple t = a;
  for (const auto& m : path) {
    t = chord_move(t, m);
    Json step = to_json(m);
    step["marks"] = to_json(t)["marks"];
    moves.push_back(step);
  }
  emit(o, Json{{"length", path.size()}, {"moves", moves}});
}

void moves_slide_path(const Options& o) {
  const auto [dcd, chirality] = degree_diagram_from_json(read_json(o.input));
  const auto refinements = refine_to_hopf(dcd);
  const int n = static_cast<int>(refinements.size());
  const int to = o.to < 0 ? n - 1 : o.to;
  if (o.from < 0 || o.from >= n || to >= n) {
    throw Error(ErrorKind::Schema, "refinement index out of range (have " +
                                       std::to_string(n) + ")");
  }
  const auto path = slide_path(refinements[static_cast<std::size_t>(o.from)],
                               refinements[static_cast<std::size_t>(to)]);
  Json steps = Json::array();
  for (const auto& s : path) steps.push_back(to_json(s));
  emit(o, Json{{"refinements", n}, {"from", o.from}, {"to", to},
               {"length", path.size()}, {"steps", steps}});
}

void writhe_compute(const Options& o) {
  const LinkDiagram ld = link_diagram_from_json(read_json(o.input));
  emit(o, to_json(invariants(ld)));
}

ProjectivePoint parse_center(const std::string& s) {
  const auto parts = split(s);
  if (parts.size() != 4) throw Error(ErrorKind::Schema, "--center needs four coordinates");
  ProjectivePoint p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = parse_rational(parts[i]);
  return p;
}

void curve_analyze(const Options& o) {
  const RationalSpaceCurve c = curve_from_json(read_json(o.input));
  const Rational eps = parse_eps(o.eps_text);
  Rng rng(o.seed);
  Json out;
  if (!o.center.empty()) {
    out["projection"] = to_json(encomplexed_writhe(c, parse_center(o.center), rng), eps);
  } else {
    int skipped = 0;
    for (;; ++skipped) {
      if (skipped >= o.trials) {
        throw Error(ErrorKind::NoGenericProjectionFound,
                    std::to_string(o.trials) + " centers tried");
      }
      try {
        out["projection"] = to_json(encomplexed_writhe(c, random_center(rng), rng), eps);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonGenericProjection &&
            e.kind() != ErrorKind::PointOnCurve && e.kind() != ErrorKind::TangentialBranch) {
          throw;
        }
      }
    }
    out["skipped"] = skipped;
  }
  Json spatial = Json::array();
  for (const auto& n : spatial_nodes(c, rng)) spatial.push_back(to_json(n, eps));
  out["spatial_nodes"] = spatial;
  out["curve"] = to_json(c);
  emit(o, out);
}

void curve_certify(const Options& o) {
  const RationalSpaceCurve c = curve_from_json(read_json(o.input));
  Rng rng(o.seed);
  emit(o, to_json(certify_mw(c, o.trials, rng), parse_eps(o.eps_text)));
}

void curve_chords(const Options& o) {
  const RationalSpaceCurve c = curve_from_json(read_json(o.input));
  const auto parts = split(o.q);
  if (parts.size() != 2) throw Error(ErrorKind::Schema, "--q needs re,im");
  Rng rng(o.seed);
  const ExtractedDiagram e =
      extract_degree_chord_diagram(c, {parse_rational(parts[0]), parse_rational(parts[1])}, rng);
  if (!o.svg.empty()) write_text(o.svg, render_svg(e.diagram));
  emit(o, to_json(e, parse_eps(o.eps_text)));
}

void model_wga(const Options& o) {
  std::vector<int> alpha;
  for (const auto& part : split(o.alpha)) {
    try {
      alpha.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Schema, "bad --alpha entry '" + part + "'");
    }
  }
  const WgaModel m = build_wga_model(alpha);
  const auto matrix = linking_matrix(m);
  check_linking_data(m, matrix);
  if (!o.obj.empty()) write_text(o.obj, to_obj(m));
  emit(o, to_json(m, matrix));
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Invariants and rigid-isotopy classes of real algebraic links"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", o.output, "Write JSON here instead of stdout");
  app.add_option("--svg", o.svg, "Render the chord diagram as SVG to this path");
  app.add_option("--seed", o.seed, "Seed for projection and plane draws")
      ->capture_default_str();
  app.add_option("--isolation-eps", o.eps_text,
                 "Width of reported isolating intervals (p/q or 2^-k, default 2^-64)");

  std::function<void(const Options&)> action;
  auto leaf = [&](CLI::App* parent, const char* name, const char* help,
                  void (*fn)(const Options&), bool takes_file) {
    CLI::App* sub = parent->add_subcommand(name, help);
    if (takes_file) sub->add_option("input", o.input, "Input JSON file")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* diagram = app.add_subcommand("diagram", "Chord diagrams");
  diagram->require_subcommand(1);
  leaf(diagram, "check", "Validate and check planarity", diagram_check, true);
  leaf(diagram, "canon", "Canonical code", diagram_canon, true);
  leaf(diagram, "loops", "Planar loops", diagram_loops, true);
  auto* denum = leaf(diagram, "enumerate", "Planar diagrams up to isomorphism",
                     diagram_enumerate, false);
  denum->add_option("--l", o.l, "Circle count")->required();
  denum->add_option("--delta", o.delta, "Chord count")->required();

  CLI::App* cls = app.add_subcommand("classify", "Rigid isotopy classes");
  cls->require_subcommand(1);
  leaf(cls, "link", "Class of a degree-chord diagram with chirality", classify_link, true);
  auto* cenum = leaf(cls, "enumerate", "All classes for (d, g, delta)", classify_enumerate, false);
  cenum->add_option("--d", o.d, "Degree")->required();
  cenum->add_option("--g", o.g, "Genus")->required();
  cenum->add_option("--delta", o.delta, "Node count")->required();

  CLI::App* moves = app.add_subcommand("moves", "Chord moves and slides");
  moves->require_subcommand(1);
  leaf(moves, "path", "Chord moves between two Hopf triples", moves_path, true);
  auto* slide = leaf(moves, "slide-path", "Slides between two nodal Hopf refinements",
                     moves_slide_path, true);
  slide->add_option("--from", o.from, "Index of the first refinement")->capture_default_str();
  slide->add_option("--to", o.to, "Index of the second refinement (default last)");

  CLI::App* writhe = app.add_subcommand("writhe", "Link diagram invariants");
  writhe->require_subcommand(1);
  leaf(writhe, "compute", "w, w_lambda, linking numbers, MW flags", writhe_compute, true);

  CLI::App* curve = app.add_subcommand("curve", "Rational space curves");
  curve->require_subcommand(1);
  auto* analyze = leaf(curve, "analyze", "Node census and writhe of one projection",
                       curve_analyze, true);
  analyze->add_option("--center", o.center, "Projection center a,b,c,d");
  analyze->add_option("--trials", o.trials, "Random centers to try")->capture_default_str();
  auto* cert = leaf(curve, "certify-mw", "Decide |w| = N_d", curve_certify, true);
  cert->add_option("--trials", o.trials, "Random centers to try")->capture_default_str();
  auto* chords = leaf(curve, "chords", "Degree-chord diagram from the spatial nodes",
                      curve_chords, true);
  chords->add_option("--q", o.q, "Non-real parameter re,im")->capture_default_str();

  CLI::App* model = app.add_subcommand("model", "Piecewise-linear models");
  model->require_subcommand(1);
  auto* wga = leaf(model, "wga", "Model link for a partition and its linking matrix",
                   model_wga, false);
  wga->add_option("--alpha", o.alpha, "Partition a_0,...,a_g")->required();
  wga->add_option("--obj", o.obj, "Write the polylines as OBJ to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    action(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

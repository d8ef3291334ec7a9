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

#include "mwlinks/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mwlinks/error.hpp"

namespace mwlinks {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Row echelon form in place; returns the pivot columns.
std::vector<std::size_t> echelon(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix nullspace(Matrix m, std::size_t cols) {
  const auto pivots = echelon(m);
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free] / m[r][pivots[r]];
    }
    basis.push_back(v);
  }
  return basis;
}

int node_bound(int d) { return (d - 1) * (d - 2) / 2; }

// Roots w of R with u = U(w), v = V(w) solving the pair system of `forms`.
struct PairData {
  Poly R;
  Poly U;
  Poly V;
};

std::optional<PairData> solve_pairs(const std::vector<Poly>& forms, Rng& rng) {
  std::vector<BiPoly> system;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      system.push_back(divided_difference(forms[i], forms[j]));
    }
  }
  const auto sol = solve_bivariate(system, rng);
  if (!sol) return std::nullopt;
  return PairData{sol->minimal, sol->u_of, sol->v_of};
}

Poly pair_discriminant(const PairData& pd) {
  return (pd.U * pd.U - Poly::constant(4) * pd.V) % pd.R;
}

// Res_w(R(w), X^2 - U(w) X + V(w)): every parameter of every pair.
Poly all_parameters(const PairData& pd) {
  BiPoly a;
  for (int j = 0; j <= pd.R.degree(); ++j) a.add(0, j, pd.R.coeff(j));
  BiPoly b;
  b.add(2, 0, 1);
  for (int j = 0; j <= pd.U.degree(); ++j) b.add(1, j, -pd.U.coeff(j));
  for (int j = 0; j <= pd.V.degree(); ++j) b.add(0, j, pd.V.coeff(j));
  return resultant_y(a, b);
}

Poly symmetric_at(const BiPoly& p, const PairData& pd) {
  return to_symmetric_coordinates(p).substitute(pd.U, pd.V, pd.R);
}

// Assigns the real roots of `params` to the real roots w with positive
// discriminant, refining until every parameter fits exactly one w.
std::vector<std::vector<RealAlgebraic>> pair_parameters(
    const PairData& pd, const std::vector<const RealAlgebraic*>& ws,
    std::vector<RealAlgebraic> params) {
  std::vector<std::vector<RealAlgebraic>> out(ws.size());
  if (ws.empty()) return out;
  if (params.size() != 2 * ws.size()) {
    throw std::logic_error("real parameters do not match real pairs");
  }
  Rational width(1, 1 << 10);
  for (int round = 0; round < 200; ++round) {
    std::vector<RInterval> us;
    std::vector<RInterval> vs;
    for (const RealAlgebraic* w : ws) {
      us.push_back(w->enclose(pd.U, width));
      vs.push_back(w->enclose(pd.V, width));
    }
    std::vector<std::vector<std::size_t>> fits(params.size());
    bool unique = true;
    for (std::size_t i = 0; i < params.size(); ++i) {
      params[i].refine_below(width);
      const RInterval s = params[i].interval();
      for (std::size_t j = 0; j < ws.size(); ++j) {
        const RInterval h = s * s - us[j] * s + vs[j];
        if (h.contains_zero()) fits[i].push_back(j);
      }
      unique = unique && fits[i].size() == 1;
    }
    if (unique) {
      for (std::size_t i = 0; i < params.size(); ++i) {
        out[fits[i][0]].push_back(params[i]);
      }
      for (const auto& o : out) {
        if (o.size() != 2) throw std::logic_error("parameter pairing failed");
      }
      return out;
    }
    width /= 4;
  }
  throw Error(ErrorKind::RefinementLimit, "parameter pairing did not settle");
}

const Rational kReportWidth(mpz_class(1), mpz_class(1) << 64);

// x_i(X) reduced modulo X^2 - U X + V as a_i + b_i X, coefficients mod R.
std::pair<std::vector<Poly>, std::vector<Poly>> reduce_mod_pair(
    const std::vector<Poly>& xs, const PairData& pd) {
  int n = 0;
  for (const auto& x : xs) n = std::max(n, x.degree());
  // X^k = alpha_k + beta_k X.
  std::vector<Poly> alpha{Poly::constant(1)};
  std::vector<Poly> beta{Poly()};
  for (int k = 1; k <= n; ++k) {
    alpha.push_back((-(pd.V * beta.back())) % pd.R);
    beta.push_back((alpha[k - 1] + pd.U * beta.back()) % pd.R);
  }
  std::vector<Poly> a;
  std::vector<Poly> b;
  for (const auto& x : xs) {
    Poly ai;
    Poly bi;
    for (int k = 0; k <= x.degree(); ++k) {
      ai += alpha[k] * x.coeff(k);
      bi += beta[k] * x.coeff(k);
    }
    a.push_back(ai % pd.R);
    b.push_back(bi % pd.R);
  }
  return {a, b};
}

std::vector<RInterval> image_of(const std::vector<Poly>& xs, const PairData& pd,
                                const RealAlgebraic& w) {
  const auto [a, b] = reduce_mod_pair(xs, pd);
  bool b_zero = true;
  for (const auto& bi : b) b_zero = b_zero && w.sign_of(bi) == 0;
  std::vector<RInterval> out;
  for (const auto& q : b_zero ? a : b) out.push_back(w.enclose(q, kReportWidth));
  return out;
}

std::array<std::complex<double>, 2> approx_params(const PairData& pd,
                                                  const RealAlgebraic& w) {
  const double u = w.enclose(pd.U, kReportWidth).lo.get_d();
  const double v = w.enclose(pd.V, kReportWidth).lo.get_d();
  const std::complex<double> root = std::sqrt(std::complex<double>(u * u - 4 * v));
  return {(u - root) / 2.0, (u + root) / 2.0};
}

NodeRecord make_record(NodeKind kind, const PairData& pd,
                       std::optional<RealAlgebraic> root) {
  NodeRecord r;
  r.kind = kind;
  r.minimal = pd.R;
  r.u_of = pd.U;
  r.v_of = pd.V;
  r.root = std::move(root);
  if (r.root) r.approx = approx_params(pd, *r.root);
  return r;
}

// 2x2 minors f_i g_j - f_j g_i of two columns of polynomials.
Poly minor2(const std::array<Poly, 4>& f, const std::array<Poly, 4>& g,
            std::size_t i, std::size_t j) {
  return f[i] * g[j] - f[j] * g[i];
}

int permutation_sign(std::array<std::size_t, 4> p) {
  int s = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

std::array<Poly, 4> derivatives(const RationalSpaceCurve& c) {
  std::array<Poly, 4> d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = c.coords[i].derivative();
  return d;
}

// det[c(s), c'(s), c(t), c'(t)] by Laplace expansion along the first two
// columns.
BiPoly tangent_determinant(const RationalSpaceCurve& c) {
  const auto dc = derivatives(c);
  BiPoly out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::array<std::size_t, 4> perm{i, j, 0, 0};
      std::size_t n = 2;
      for (std::size_t k = 0; k < 4; ++k) {
        if (k != i && k != j) perm[n++] = k;
      }
      const Poly m = minor2(c.coords, dc, i, j);
      const Poly r = minor2(c.coords, dc, perm[2], perm[3]);
      out += outer(m, r) * Rational(permutation_sign(perm));
    }
  }
  return out;
}

BiPoly transpose(const BiPoly& p) {
  BiPoly out;
  for (int i = 0; i <= p.deg_x(); ++i) {
    for (int j = 0; j <= p.deg_y(); ++j) {
      const Rational v = p.coeff(i, j);
      if (v != 0) out.add(j, i, v);
    }
  }
  return out;
}

// Products m(s,t) m(t,s) of the 3x3 minors of [c(s), c'(s), c'(t)]; all
// vanish at a node exactly when its two branches are tangent.
std::vector<BiPoly> tangency_products(const RationalSpaceCurve& c) {
  const auto dc = derivatives(c);
  std::vector<BiPoly> out;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r != skip) rows.push_back(r);
    }
    BiPoly m;
    for (std::size_t a = 0; a < 3; ++a) {
      const std::size_t p = rows[(a + 1) % 3];
      const std::size_t q = rows[(a + 2) % 3];
      // Cyclic cofactor of entry (rows[a], third column).
      m += outer(minor2(c.coords, dc, p, q), dc[rows[a]]);
    }
    out.push_back(m * transpose(m));
  }
  return out;
}

Poly gcd_all(Poly g, const std::vector<Poly>& others) {
  for (const auto& o : others) g = gcd(g, o);
  return g;
}

std::pair<Rational, Rational> eval_complex(const Poly& p, const ComplexRational& z) {
  Rational re = 0;
  Rational im = 0;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational nre = re * z.re - im * z.im + p.coeff(k);
    const Rational nim = re * z.im + im * z.re;
    re = nre;
    im = nim;
  }
  return {re, im};
}

std::vector<NodeRecord> spatial_nodes_in_chart(const RationalSpaceCurve& c,
                                               Rng& rng) {
  const std::vector<Poly> forms(c.coords.begin(), c.coords.end());
  const auto pd = solve_pairs(forms, rng);
  if (!pd) {
    throw Error(ErrorKind::WorseThanNode, "pairs of equal images are not finite");
  }
  if (pd->R.degree() <= 0) return {};
  if (gcd(pd->R, pair_discriminant(*pd)).degree() > 0) {
    throw Error(ErrorKind::WorseThanNode, "cusp");
  }
  const Poly params = all_parameters(*pd);
  if (!is_squarefree(params)) {
    throw Error(ErrorKind::WorseThanNode, "three or more coincident parameters");
  }
  std::vector<Poly> tangency;
  for (const auto& t : tangency_products(c)) tangency.push_back(symmetric_at(t, *pd));
  if (gcd_all(pd->R, tangency).degree() > 0) {
    throw Error(ErrorKind::WorseThanNode, "tangential self-contact");
  }
  const Poly disc = pair_discriminant(*pd);
  const auto ws = real_roots(pd->R);
  std::vector<const RealAlgebraic*> real_pairs;
  std::vector<NodeRecord> out;
  for (const auto& w : ws) {
    out.push_back(make_record(NodeKind::SpatialNode, *pd, w));
    if (w.sign_of(disc) > 0) real_pairs.push_back(&w);
  }
  const auto paired = pair_parameters(*pd, real_pairs, real_roots(params));
  for (std::size_t i = 0, k = 0; i < ws.size(); ++i) {
    if (k < real_pairs.size() && real_pairs[k] == &ws[i]) {
      out[i].params = paired[k++];
      out[i].image = image_of(forms, *pd, ws[i]);
    }
  }
  const int nonreal = pd->R.degree() - static_cast<int>(ws.size());
  for (int i = 0; i < nonreal / 2; ++i) {
    out.push_back(make_record(NodeKind::SpatialNode, *pd, std::nullopt));
  }
  return out;
}

// Nonzero when some parameter other than the given one maps to the point v.
Poly fiber_over(const RationalSpaceCurve& c, const std::array<Rational, 4>& v) {
  Poly g;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      g = gcd(g, c.coords[i] * v[j] - c.coords[j] * v[i]);
    }
  }
  return g;
}

// True when the images of parameter infinity and the next coefficient vector
// are dependent, i.e. the curve is not immersed at infinity.
template <std::size_t N>
bool cusp_at_infinity(const std::array<Poly, N>& forms, int degree) {
  Matrix m(2, std::vector<Rational>(N));
  for (std::size_t i = 0; i < N; ++i) {
    m[0][i] = forms[i].coeff(degree);
    m[1][i] = forms[i].coeff(degree - 1);
  }
  return echelon(m).size() < 2;
}

// Empty when parameter infinity is a smooth point off every node; otherwise
// a small integer r such that t = r - 1/t' moves infinity to a regular
// parameter, leaving the singularity at the finite parameter r.
std::optional<Rational> regular_chart(const RationalSpaceCurve& c) {
  const Poly partners_of_infinity = fiber_over(c, c.at_infinity());
  if (partners_of_infinity.degree() <= 0 && !cusp_at_infinity(c.coords, c.degree)) {
    return std::nullopt;
  }
  for (int r = 0;; r = r > 0 ? -r : 1 - r) {
    std::array<Rational, 4> v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = c.coords[i](Rational(r));
    if (fiber_over(c, v).degree() == 1 && partners_of_infinity(Rational(r)) != 0) {
      return Rational(r);
    }
  }
}

}  // namespace

std::array<Rational, 4> RationalSpaceCurve::at_infinity() const {
  std::array<Rational, 4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = coords[i].coeff(degree);
  return v;
}

RationalSpaceCurve parse_curve(int degree,
                               const std::vector<std::vector<Rational>>& coeffs) {
  if (degree < 1 || coeffs.size() != 4) {
    throw Error(ErrorKind::DegreeMismatch, "need four coordinate forms of degree >= 1");
  }
  RationalSpaceCurve c;
  c.degree = degree;
  Matrix rows;
  for (std::size_t i = 0; i < 4; ++i) {
    if (coeffs[i].size() != static_cast<std::size_t>(degree) + 1) {
      throw Error(ErrorKind::DegreeMismatch,
                  "coordinate " + std::to_string(i) + " has " +
                      std::to_string(coeffs[i].size()) + " coefficients, expected " +
                      std::to_string(degree + 1));
    }
    c.coords[i] = Poly(coeffs[i]);
    rows.push_back(coeffs[i]);
  }
  const auto inf = c.at_infinity();
  if (std::all_of(inf.begin(), inf.end(), [](const Rational& x) { return x == 0; })) {
    throw Error(ErrorKind::BasePoint, "all forms vanish at parameter infinity");
  }
  Poly g;
  for (const auto& z : c.coords) g = gcd(g, z);
  if (g.degree() > 0) {
    throw Error(ErrorKind::BasePoint, "forms share the factor " + to_string(g));
  }
  if (echelon(rows).size() < 4) {
    throw Error(ErrorKind::PlanarImage, "coordinate forms are linearly dependent");
  }
  return c;
}

RationalSpaceCurve reparametrize(const RationalSpaceCurve& c, const Rational& shift) {
  RationalSpaceCurve out;
  out.degree = c.degree;
  const Poly lin({-1, shift});
  const Poly t({0, 1});
  for (std::size_t i = 0; i < 4; ++i) {
    Poly z;
    for (int k = 0; k <= c.degree; ++k) {
      z += pow(lin, k) * pow(t, c.degree - k) * c.coords[i].coeff(k);
    }
    out.coords[i] = z;
  }
  return out;
}

PlaneProjection project(const RationalSpaceCurve& c, const ProjectivePoint& p) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (abs(p[i]) > abs(p[k])) k = i;
  }
  if (p[k] == 0) throw Error(ErrorKind::Schema, "projection center is zero");
  PlaneProjection pc;
  pc.center = p;
  pc.k = k;
  pc.degree = c.degree;
  pc.depth = c.coords[k];
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == k) continue;
    pc.x[n++] = c.coords[i] * p[k] - c.coords[k] * p[i];
  }
  Poly g;
  bool at_inf = true;
  for (const auto& x : pc.x) {
    g = gcd(g, x);
    at_inf = at_inf && x.coeff(c.degree) == 0;
  }
  if (g.degree() > 0 || at_inf) {
    throw Error(ErrorKind::PointOnCurve, "projection center lies on the curve");
  }
  return pc;
}

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::RealCrossing: return "real_crossing";
    case NodeKind::Solitary: return "solitary";
    case NodeKind::ComplexPair: return "complex_pair";
    case NodeKind::SpatialNode: return "spatial_node";
  }
  return "unknown";
}

int crossing_sign(const RationalSpaceCurve& c, const NodeRecord& node) {
  if (node.kind != NodeKind::RealCrossing || !node.root) {
    throw Error(ErrorKind::Schema, "crossing signs need a real crossing");
  }
  const PairData pd{node.minimal, node.u_of, node.v_of};
  const RationalSpaceCurve cc = node.chart ? reparametrize(c, *node.chart) : c;
  const int s = node.root->sign_of(symmetric_at(tangent_determinant(cc), pd));
  if (s == 0) {
    throw Error(ErrorKind::TangentialBranch, "branch tangents are coplanar");
  }
  return s;
}

NodeCensus double_points(const RationalSpaceCurve& c, const PlaneProjection& pc,
                         Rng& rng) {
  const std::vector<Poly> xs(pc.x.begin(), pc.x.end());
  const auto pd = solve_pairs(xs, rng);
  const auto nongeneric = [](const std::string& why) {
    return Error(ErrorKind::NonGenericProjection, why);
  };
  if (!pd) throw nongeneric("pairs of equal images are not finite");
  const int n_d = node_bound(pc.degree);
  const int found = std::max(pd->R.degree(), 0);
  if (found != n_d) {
    throw nongeneric(std::to_string(found) + " distinct finite pairs, expected " +
                     std::to_string(n_d));
  }
  if (cusp_at_infinity(pc.x, pc.degree)) throw nongeneric("cusp at parameter infinity");
  NodeCensus census;
  if (n_d == 0) return census;
  const Poly disc = pair_discriminant(*pd);
  if (gcd(pd->R, disc).degree() > 0) throw nongeneric("cusp in the projection");
  const Poly params = all_parameters(*pd);
  if (!is_squarefree(params)) throw nongeneric("triple point in the projection");

  std::vector<Poly> depth_minors;
  for (const auto& x : xs) {
    depth_minors.push_back(
        divided_difference(x, pc.depth).substitute(pd->U, pd->V, pd->R));
  }
  const Poly spatial = gcd_all(pd->R, depth_minors);
  const Poly plane_only = spatial.degree() > 0 ? pd->R / spatial : pd->R;

  const auto ws = real_roots(pd->R);
  std::vector<const RealAlgebraic*> real_pairs;
  std::vector<NodeKind> kinds;
  for (const auto& w : ws) {
    const int ds = w.sign_of(disc);
    if (spatial.degree() > 0 && w.sign_of(spatial) == 0) {
      kinds.push_back(NodeKind::SpatialNode);
    } else {
      kinds.push_back(ds > 0 ? NodeKind::RealCrossing : NodeKind::Solitary);
    }
    if (ds > 0) real_pairs.push_back(&w);
  }
  const auto paired = pair_parameters(*pd, real_pairs, real_roots(params));
  for (std::size_t i = 0, k = 0; i < ws.size(); ++i) {
    NodeRecord r = make_record(kinds[i], *pd, ws[i]);
    if (k < real_pairs.size() && real_pairs[k] == &ws[i]) r.params = paired[k++];
    r.image = image_of(xs, *pd, ws[i]);
    switch (r.kind) {
      case NodeKind::RealCrossing:
        r.sign = crossing_sign(c, r);
        ++census.real_crossings;
        break;
      case NodeKind::Solitary: ++census.solitary; break;
      default: ++census.spatial; break;
    }
    census.nodes.push_back(std::move(r));
  }
  const int spatial_real = census.spatial;
  const int spatial_nonreal = std::max(spatial.degree(), 0) - spatial_real;
  census.spatial += spatial_nonreal;
  for (int i = 0; i < spatial_nonreal / 2; ++i) {
    census.nodes.push_back(make_record(NodeKind::SpatialNode, *pd, std::nullopt));
  }
  const int real_plane = census.real_crossings + census.solitary;
  census.complex_pairs = (plane_only.degree() - real_plane) / 2;
  for (int i = 0; i < census.complex_pairs; ++i) {
    census.nodes.push_back(make_record(NodeKind::ComplexPair, *pd, std::nullopt));
  }
  if (census.total() != n_d) throw std::logic_error("node census does not sum to N_d");
  return census;
}

WritheReport encomplexed_writhe(const RationalSpaceCurve& c,
                                const ProjectivePoint& p, Rng& rng) {
  WritheReport rep;
  rep.center = p;
  rep.n_d = node_bound(c.degree);
  const auto chart = regular_chart(c);
  const RationalSpaceCurve cc = chart ? reparametrize(c, *chart) : c;
  rep.census = double_points(cc, project(cc, p), rng);
  for (auto& n : rep.census.nodes) n.chart = chart;
  if (rep.census.solitary == 0) {
    int w = 0;
    for (const auto& n : rep.census.nodes) {
      if (n.sign) w += *n.sign;
    }
    rep.w = w;
  }
  return rep;
}

ProjectivePoint random_center(Rng& rng, int bound) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  ProjectivePoint p;
  do {
    for (auto& x : p) x = pick(rng);
  } while (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; }));
  return p;
}

MwCertificate certify_mw(const RationalSpaceCurve& c, int trials, Rng& rng) {
  MwCertificate cert;
  std::optional<MwCertificate> inconclusive;
  for (int i = 0; i < trials; ++i) {
    const ProjectivePoint p = random_center(rng);
    try {
      cert.report = encomplexed_writhe(c, p, rng);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonGenericProjection ||
          e.kind() == ErrorKind::PointOnCurve ||
          e.kind() == ErrorKind::TangentialBranch) {
        ++cert.skipped;
        continue;
      }
      throw;
    }
    ++cert.generic;
    const NodeCensus& n = cert.report.census;
    // Nodes of the space curve and a known writhe settle the question;
    // plane solitary nodes only hide w.
    cert.witness.clear();
    for (const auto& node : n.nodes) {
      if (node.kind != NodeKind::SpatialNode || !node.params.empty()) continue;
      // Conjugate parameters with a real image: a solitary point of the
      // curve itself.
      if (node.root) cert.witness = "solitary";
      else if (cert.witness.empty()) cert.witness = "complex_pair";
    }
    if (cert.witness.empty() && n.spatial > 0) cert.witness = "spatial_node";
    if (cert.witness.empty() && cert.report.w) {
      if (n.complex_pairs > 0) cert.witness = "complex_pair";
      else if (std::abs(*cert.report.w) != cert.report.n_d) cert.witness = "mixed_signs";
    }
    if (!cert.witness.empty()) return cert;
    if (cert.report.w) {
      cert.verdict = true;
      return cert;
    }
    if (!inconclusive) {
      inconclusive = cert;
      inconclusive->witness = "solitary";
    }
  }
  if (!inconclusive) {
    throw Error(ErrorKind::NoGenericProjectionFound,
                "no generic projection in " + std::to_string(trials) + " trials");
  }
  inconclusive->skipped = cert.skipped;
  inconclusive->generic = cert.generic;
  return *inconclusive;
}

std::vector<NodeRecord> spatial_nodes(const RationalSpaceCurve& c, Rng& rng) {
  const auto chart = regular_chart(c);
  if (!chart) return spatial_nodes_in_chart(c, rng);
  auto nodes = spatial_nodes_in_chart(reparametrize(c, *chart), rng);
  for (auto& n : nodes) n.chart = chart;
  return nodes;
}

ExtractedDiagram extract_degree_chord_diagram(const RationalSpaceCurve& c,
                                              const ComplexRational& q, Rng& rng) {
  if (q.im == 0) throw Error(ErrorKind::Schema, "seed parameter must be non-real");
  auto nodes = spatial_nodes(c, rng);
  std::optional<Rational> chart;
  std::vector<RealAlgebraic> params;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& n : nodes) {
    if (n.params.size() != 2) {
      throw Error(ErrorKind::NonRealSpatialNode, "a node has non-real parameters");
    }
    chart = n.chart;
    pairs.emplace_back(params.size(), params.size() + 1);
    params.push_back(n.params[0]);
    params.push_back(n.params[1]);
  }
  const RationalSpaceCurve cc = chart ? reparametrize(c, *chart) : c;
  ComplexRational qq = q;
  if (chart) {
    // q' = 1 / (r - q).
    const Rational a = *chart - q.re;
    const Rational n2 = a * a + q.im * q.im;
    qq = {a / n2, q.im / n2};
  }

  std::vector<std::size_t> order(params.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare(params[a], params[b]) < 0;
  });
  std::vector<std::size_t> rank(params.size());
  std::vector<PointId> names;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    names.push_back("n" + std::to_string(i));
  }
  std::vector<Chord> chords;
  for (const auto& [a, b] : pairs) chords.push_back({names[rank[a]], names[rank[b]]});
  const ChordDiagram cd = ChordDiagram::validate({names}, chords);
  if (!is_planar(cd)) {
    throw Error(ErrorKind::NonPlanarDiagram, "node chords interleave");
  }
  const auto loops = planar_loops(cd);
  const auto loop_after = [&](std::size_t count_below) {
    if (names.empty()) return std::size_t{0};
    const std::size_t prev = (count_below + names.size() - 1) % names.size();
    return loops.loop_of_arc(cd.arc_after(0, prev));
  };

  Matrix conditions(2, std::vector<Rational>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [re, im] = eval_complex(cc.coords[i], qq);
    conditions[0][i] = re;
    conditions[1][i] = im;
  }
  const Matrix planes = nullspace(conditions, 4);
  if (planes.size() < 2) throw std::logic_error("conjugate images coincide");
  const Poly quadratic({qq.re * qq.re + qq.im * qq.im, -2 * qq.re, 1});
  const int expected = c.degree - 2;
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Rational alpha(coef(rng));
    const Rational beta(coef(rng));
    std::array<Rational, 4> h;
    Poly f;
    for (std::size_t i = 0; i < 4; ++i) {
      h[i] = alpha * planes[0][i] + beta * planes[1][i];
      f += cc.coords[i] * h[i];
    }
    if (f.is_zero()) continue;
    const auto [g, rem] = divmod(f, quadratic);
    if (!rem.is_zero()) throw std::logic_error("plane misses the conjugate pair");
    const int at_infinity = expected - g.degree();
    if (!is_squarefree(g) || at_infinity > 1) continue;
    const auto roots = real_roots(g);
    if (static_cast<int>(roots.size()) + at_infinity != expected) {
      throw Error(ErrorKind::DegreeSumMismatch,
                  "plane meets the real curve in " +
                      std::to_string(roots.size() + at_infinity) +
                      " points, expected " + std::to_string(expected));
    }
    std::vector<int> degrees(loops.size(), 0);
    bool on_node = false;
    for (const auto& rho : roots) {
      std::size_t below = 0;
      for (const auto& p : params) {
        const int s = compare(p, rho);
        on_node = on_node || s == 0;
        below += s < 0;
      }
      ++degrees[loop_after(below)];
    }
    if (on_node) continue;
    if (at_infinity) ++degrees[loop_after(names.size())];
    ExtractedDiagram out{attach_degrees(cd, degrees), nodes, h};
    return out;
  }
  throw Error(ErrorKind::NodeOnSection, "every drawn plane was degenerate");
}

}  // namespace mwlinks

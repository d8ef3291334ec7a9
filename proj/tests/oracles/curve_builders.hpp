// Constructed test curves: the twisted cubic, curves with prescribed
// spatial nodes, and random integer curves.
#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mwlinks/curve.hpp"
#include "mwlinks/error.hpp"

namespace oracle {

using mwlinks::Poly;
using mwlinks::Rational;
using mwlinks::RationalSpaceCurve;
using mwlinks::parse_curve;
using CurveCoeffs = std::vector<std::vector<Rational>>;

inline RationalSpaceCurve twisted_cubic() {
  return parse_curve(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

// Basis of {P : deg P <= d, sum_k P_k row_k = 0} for the given condition rows.
inline std::vector<std::vector<Rational>> kernel(std::vector<std::vector<Rational>> rows,
                                                 std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Rational> v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f] / rows[i][pivots[i]];
    out.push_back(v);
  }
  return out;
}

// E(t) = (t - 1/2)(t - 5/2)(t - 5)(t^2 + 1).
inline Poly hopf_divisor() {
  return Poly({Rational(-1, 2), 1}) * Poly({Rational(-5, 2), 1}) * Poly({-5, 1}) *
         Poly({1, 0, 1});
}

// Degree-5 forms P with P(a) E(b) = P(b) E(a) for every chord (a, b): the
// curve they span sends a and b to one point.
inline std::vector<std::vector<Rational>> chord_forms(
    const std::vector<std::pair<int, int>>& chords) {
  const Poly e = hopf_divisor();
  std::vector<std::vector<Rational>> rows;
  for (const auto& [a, b] : chords) {
    std::vector<Rational> row;
    Rational pa = 1;
    Rational pb = 1;
    for (int k = 0; k <= 5; ++k) {
      row.push_back(pa * e(b) - pb * e(a));
      pa *= a;
      pb *= b;
    }
    rows.push_back(row);
  }
  return kernel(rows, 6);
}

inline RationalSpaceCurve two_nodal_quintic() {
  const auto basis = chord_forms({{0, 1}, {2, 3}});
  if (basis.size() != 4) throw std::logic_error("unexpected kernel dimension");
  return parse_curve(5, basis);
}

// The two-nodal curve with its fourth form pushed by 1/100 of a form that
// keeps only the node at {0, 1}.
inline RationalSpaceCurve one_nodal_quintic() {
  auto basis = chord_forms({{0, 1}, {2, 3}});
  const auto wider = chord_forms({{0, 1}});
  if (wider.size() != 5) throw std::logic_error("unexpected kernel dimension");
  for (std::size_t k = 0; k < 6; ++k) basis[3][k] += Rational(1, 100) * wider[4][k];
  return parse_curve(5, basis);
}

// Degree-4 forms P with P(i) E(-i) real, E(t) = t^4 + t + 2: the conjugate
// parameters i and -i share a real image point.
inline RationalSpaceCurve conjugate_node_quartic() {
  // E(-i) = 3 - i; Im(i^k (3 - i)) by k mod 4.
  const Rational im[4] = {-1, 3, 1, -3};
  std::vector<Rational> row;
  for (int k = 0; k <= 4; ++k) row.push_back(im[k % 4]);
  const auto basis = kernel({row}, 5);
  if (basis.size() != 4) throw std::logic_error("unexpected kernel dimension");
  return parse_curve(4, basis);
}

inline RationalSpaceCurve random_curve(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> c(-4, 4);
  while (true) {
    CurveCoeffs co(4, std::vector<Rational>(d + 1));
    for (auto& z : co) {
      for (auto& x : z) x = c(rng);
    }
    try {
      return parse_curve(d, co);
    } catch (const mwlinks::Error&) {
    }
  }
}


}  // namespace oracle

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

#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mwlinks/poly.hpp"

namespace mwlinks {

using Rng = std::mt19937_64;

/// Dense polynomial in x and y; coeff(i, j) multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;

  Rational coeff(std::size_t i, std::size_t j) const;
  void add(std::size_t i, std::size_t j, const Rational& v);

  int deg_x() const;
  int deg_y() const;
  int total_degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_symmetric() const;

  /// Polynomial in y with x fixed.
  Poly at_x(const Rational& x) const;
  /// Polynomial in x with y fixed.
  Poly at_y(const Rational& y) const;
  Rational operator()(const Rational& x, const Rational& y) const;
  /// p(X(z), Y(z)) reduced modulo m.
  Poly substitute(const Poly& X, const Poly& Y, const Poly& m) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rational& s) const;

  /// Coefficient table c[i][j].
  const std::vector<std::vector<Rational>>& table() const { return c_; }

 private:
  void trim();
  std::vector<std::vector<Rational>> c_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);

/// P(x, y) -> P(x - k y, y).
BiPoly shear(const BiPoly& p, const Rational& k);
/// Outer product f(x) g(y).
BiPoly outer(const Poly& f, const Poly& g);

/// Rewrites a symmetric P(s, t) in u = s + t, v = s t (x = u, y = v).
BiPoly to_symmetric_coordinates(const BiPoly& p);
/// (f(s) g(t) - f(t) g(s)) / (s - t) in u = s + t, v = s t.
BiPoly divided_difference(const Poly& f, const Poly& g);

/// Res_y(a, b) as a polynomial in x, by evaluation and interpolation.
Poly resultant_y(const BiPoly& a, const BiPoly& b);
/// Coefficients (s0, s1) of the first subresultant s1(x) y + s0(x).
std::pair<Poly, Poly> first_subresultant_y(const BiPoly& a, const BiPoly& b);

/// Finite common zeros (u, v) of a polynomial system, parametrized by the
/// roots w of `minimal`: u = u_of(w), v = v_of(w). Distinct roots give
/// distinct solutions.
struct BivariateSolution {
  Poly minimal;
  Poly u_of;
  Poly v_of;
};

/// Empty when the common zero set is not finite or no separating shear was
/// found. A constant `minimal` means no common zeros.
std::optional<BivariateSolution> solve_bivariate(
    const std::vector<BiPoly>& system, Rng& rng);

}  // namespace mwlinks

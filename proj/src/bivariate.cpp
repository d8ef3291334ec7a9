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

#include "mwlinks/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwlinks {

Rational BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return 0;
  return c_[i][j];
}

void BiPoly::add(std::size_t i, std::size_t j, const Rational& v) {
  if (v == 0) return;
  if (i >= c_.size()) c_.resize(i + 1);
  if (j >= c_[i].size()) c_[i].resize(j + 1, 0);
  c_[i][j] += v;
  trim();
}

void BiPoly::trim() {
  for (auto& row : c_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

int BiPoly::deg_x() const { return static_cast<int>(c_.size()) - 1; }

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].empty()) {
      d = std::max(d, static_cast<int>(i + c_[i].size()) - 1);
    }
  }
  return d;
}

bool BiPoly::is_symmetric() const {
  const int n = std::max(deg_x(), deg_y());
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (coeff(i, j) != coeff(j, i)) return false;
    }
  }
  return true;
}

Poly BiPoly::at_x(const Rational& x) const {
  std::vector<Rational> out(std::max(deg_y() + 1, 0), 0);
  Rational xp = 1;
  for (const auto& row : c_) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j] * xp;
    xp *= x;
  }
  return Poly(std::move(out));
}

Poly BiPoly::at_y(const Rational& y) const {
  std::vector<Rational> out;
  for (const auto& row : c_) out.push_back(Poly(row)(y));
  return Poly(std::move(out));
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  return at_x(x)(y);
}

Poly BiPoly::substitute(const Poly& X, const Poly& Y, const Poly& m) const {
  // Horner in x over Horner-in-y rows.
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = mul_mod(acc, X, m) + compose(Poly(*it), Y, m);
    acc = acc % m;
  }
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_[i].size(); ++j) add(i, j, o.c_[i][j]);
  }
  return *this;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < c_[i].size(); ++j) {
      if (c_[i][j] == 0) continue;
      for (std::size_t a = 0; a < o.c_.size(); ++a) {
        for (std::size_t b = 0; b < o.c_[a].size(); ++b) {
          out.add(i + a, j + b, c_[i][j] * o.c_[a][b]);
        }
      }
    }
  }
  return out;
}

BiPoly BiPoly::operator*(const Rational& s) const {
  BiPoly out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < c_[i].size(); ++j) out.add(i, j, c_[i][j] * s);
  }
  return out;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a += b * Rational(-1); }

BiPoly shear(const BiPoly& p, const Rational& k) {
  BiPoly out;
  const auto& t = p.table();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t[a].size(); ++b) {
      if (t[a][b] == 0) continue;
      // (x - k y)^a = sum_i C(a, i) x^i (-k y)^(a - i)
      mpz_class binom = 1;
      for (std::size_t i = 0; i <= a; ++i) {
        Rational term = t[a][b] * Rational(binom);
        for (std::size_t e = 0; e < a - i; ++e) term *= -k;
        out.add(i, b + a - i, term);
        binom = binom * static_cast<unsigned long>(a - i) /
                static_cast<unsigned long>(i + 1);
      }
    }
  }
  return out;
}

BiPoly outer(const Poly& f, const Poly& g) {
  BiPoly out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      out.add(i, j, f.coeffs()[i] * g.coeffs()[j]);
    }
  }
  return out;
}

namespace {

BiPoly u_var() {
  BiPoly u;
  u.add(1, 0, 1);
  return u;
}

BiPoly v_pow(std::size_t b) {
  BiPoly v;
  v.add(0, b, 1);
  return v;
}

// Sequence s_k = u s_{k-1} - v s_{k-2} with the given starting terms.
std::vector<BiPoly> recurrence(BiPoly s0, BiPoly s1, std::size_t n) {
  std::vector<BiPoly> s{std::move(s0), std::move(s1)};
  while (s.size() < n) {
    const std::size_t k = s.size();
    s.push_back(u_var() * s[k - 1] - v_pow(1) * s[k - 2]);
  }
  return s;
}

}  // namespace

BiPoly to_symmetric_coordinates(const BiPoly& p) {
  if (!p.is_symmetric()) {
    throw std::invalid_argument("polynomial is not symmetric");
  }
  const int n = std::max(p.deg_x(), 0);
  BiPoly two;
  two.add(0, 0, 2);
  const auto power = recurrence(two, u_var(), static_cast<std::size_t>(n) + 2);
  BiPoly out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= a; ++b) {
      const Rational c = p.coeff(a, b);
      if (c == 0) continue;
      if (a == b) {
        out += v_pow(b) * c;
      } else {
        out += v_pow(b) * power[a - b] * c;
      }
    }
  }
  return out;
}

BiPoly divided_difference(const Poly& f, const Poly& g) {
  const std::size_t n =
      std::max(f.coeffs().size(), g.coeffs().size()) + 1;
  BiPoly one;
  one.add(0, 0, 1);
  const auto h = recurrence(one, u_var(), n);
  BiPoly out;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const Rational m = f.coeff(a) * g.coeff(b) - f.coeff(b) * g.coeff(a);
      if (m == 0) continue;
      out += v_pow(b) * h[a - b - 1] * m;
    }
  }
  return out;
}

namespace {

// Rows of y^shift * p for shifts from high to low, columns y^(width-1)..y^0.
void push_rows(std::vector<std::vector<Rational>>& m, const Poly& p, int deg,
               int shifts, int width) {
  for (int s = shifts - 1; s >= 0; --s) {
    std::vector<Rational> row(width, 0);
    for (int i = 0; i <= deg; ++i) {
      const int col = width - 1 - (i + s);
      row[col] = p.coeff(i);
    }
    m.push_back(std::move(row));
  }
}

template <typename F>
Poly interpolate_det(int bound, F&& value_at) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int i = 0; i <= bound; ++i) {
    xs.emplace_back(i);
    ys.push_back(value_at(Rational(i)));
  }
  return interpolate(xs, ys);
}

}  // namespace

Poly resultant_y(const BiPoly& a, const BiPoly& b) {
  const int m = a.deg_y();
  const int n = b.deg_y();
  if (m < 0 || n < 0) return Poly();
  if (m == 0 && n == 0) return Poly::constant(1);
  const int bound = n * std::max(a.deg_x(), 0) + m * std::max(b.deg_x(), 0);
  return interpolate_det(bound, [&](const Rational& x) {
    std::vector<std::vector<Rational>> mat;
    push_rows(mat, a.at_x(x), m, n, m + n);
    push_rows(mat, b.at_x(x), n, m, m + n);
    return determinant(std::move(mat));
  });
}

std::pair<Poly, Poly> first_subresultant_y(const BiPoly& a, const BiPoly& b) {
  const int m = a.deg_y();
  const int n = b.deg_y();
  if (m < 1 || n < 1) throw std::invalid_argument("subresultant degrees");
  auto linear = [](const BiPoly& p) {
    std::vector<Rational> c0;
    std::vector<Rational> c1;
    for (const auto& row : p.table()) {
      c0.push_back(row.size() > 0 ? row[0] : Rational(0));
      c1.push_back(row.size() > 1 ? row[1] : Rational(0));
    }
    return std::make_pair(Poly(c0), Poly(c1));
  };
  if (n == 1) return linear(b);
  if (m == 1) return linear(a);
  const int bound =
      (n - 1) * std::max(a.deg_x(), 0) + (m - 1) * std::max(b.deg_x(), 0);
  const int width = m + n - 1;
  auto coefficient = [&](int power) {
    return interpolate_det(bound, [&](const Rational& x) {
      std::vector<std::vector<Rational>> rows;
      push_rows(rows, a.at_x(x), m, n - 1, width);
      push_rows(rows, b.at_x(x), n, m - 1, width);
      // Keep the leading width-2 columns and the column of y^power.
      for (auto& r : rows) {
        const Rational last = r[width - 1 - power];
        r.resize(width - 2);
        r.push_back(last);
      }
      return determinant(std::move(rows));
    });
  };
  return {coefficient(0), coefficient(1)};
}

std::optional<BivariateSolution> solve_bivariate(
    const std::vector<BiPoly>& system, Rng& rng) {
  std::vector<BiPoly> eqs;
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    if (p.total_degree() == 0) {
      return BivariateSolution{Poly::constant(1), Poly(), Poly()};
    }
    eqs.push_back(p);
  }
  if (eqs.size() < 2) return std::nullopt;
  const Poly w({0, 1});
  for (int attempt = 0; attempt < 16; ++attempt) {
    const long span = 4L << (attempt / 2);
    std::uniform_int_distribution<long> pick(-span, span);
    long kk = 0;
    while (kk == 0) kk = pick(rng);
    const Rational k(kk);
    std::vector<BiPoly> sheared;
    for (const auto& p : eqs) sheared.push_back(shear(p, k));
    std::uniform_int_distribution<long> coef(1, 16 + 8 * attempt);
    auto combo = [&] {
      BiPoly h;
      for (const auto& p : sheared) h += p * Rational(coef(rng));
      return h;
    };
    const BiPoly h1 = combo();
    const BiPoly h2 = combo();
    const BiPoly h3 = combo();
    auto monic_in_y = [](const BiPoly& h) {
      return h.total_degree() >= 1 && h.deg_y() == h.total_degree() &&
             h.coeff(0, h.deg_y()) != 0;
    };
    if (!monic_in_y(h1) || !monic_in_y(h2) || !monic_in_y(h3)) continue;
    Poly r = resultant_y(h1, h2);
    if (r.is_zero()) continue;
    if (eqs.size() > 2) {
      const Poly r13 = resultant_y(h1, h3);
      if (r13.is_zero()) continue;
      r = gcd(r, r13);
    }
    r = squarefree_part(r);
    if (r.degree() <= 0) {
      return BivariateSolution{Poly::constant(1), Poly(), Poly()};
    }
    const auto [s0, s1] = first_subresultant_y(h1, h2);
    const auto inv = inverse_mod(s1 % r, r);
    if (!inv) continue;
    Poly v = mul_mod(-s0 % r, *inv, r);
    Poly u = (w - v * k) % r;
    for (const auto& p : eqs) {
      const Poly g = gcd(r, p.substitute(u, v, r));
      if (g.degree() < r.degree()) {
        r = g;
        if (r.degree() <= 0) {
          return BivariateSolution{Poly::constant(1), Poly(), Poly()};
        }
        u = u % r;
        v = v % r;
      }
    }
    return BivariateSolution{r, u, v};
  }
  return std::nullopt;
}

}  // namespace mwlinks

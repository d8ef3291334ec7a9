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

#include "mwlinks/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "mwlinks/error.hpp"

namespace mwlinks {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out = *this;
  const Rational lc = leading();
  for (auto& c : out.c_) c /= lc;
  return out;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& c : c_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : c_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Poly out = *this;
  const Rational s = Rational(den) / Rational(num);
  for (auto& c : out.c_) c *= s;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Rational& s) { return a *= s; }
Poly operator*(const Rational& s, Poly a) { return a *= s; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(r.size() - b.coeffs().size() + 1, 0);
  const std::size_t db = b.coeffs().size() - 1;
  const Rational& lb = b.leading();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Rational f = r[i] / lb;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive();
  Poly y = b.primitive();
  while (!y.is_zero()) {
    Poly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const Poly& p) {
  return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0;
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m;
  Poly r1 = a % m;
  Poly s0;
  Poly s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (s0 * (Rational(1) / r0.leading())) % m;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) {
  return (a * b) % m;
}

Poly compose(const Poly& p, const Poly& q, const Poly& m) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * q + Poly::constant(*it);
    if (!m.is_zero()) acc = acc % m;
  }
  return acc;
}

Poly interpolate(const std::vector<Rational>& xs,
                 const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    }
  }
  Poly out;
  for (std::size_t i = n; i-- > 0;) {
    out = out * Poly({-xs[i], 1}) + Poly::constant(dd[i]);
  }
  return out;
}

Poly pow(const Poly& p, unsigned e) {
  Poly out = Poly::constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::Schema, "not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

int sign(const Rational& q) { return sgn(q); }

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace mwlinks

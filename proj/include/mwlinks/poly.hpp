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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mwlinks {

using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients lowest degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs)
      : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  Poly derivative() const;
  Poly monic() const;
  /// Positive scalar multiple with coprime integer coefficients.
  Poly primitive() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& s);
Poly operator*(const Rational& s, Poly a);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Quotient, discarding any remainder.
Poly operator/(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);
/// Inverse of a modulo m, if a and m are coprime.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);
/// p(q(x)), reduced modulo m when m is nonzero.
Poly compose(const Poly& p, const Poly& q, const Poly& m = Poly());
Poly interpolate(const std::vector<Rational>& xs,
                 const std::vector<Rational>& ys);
Poly pow(const Poly& p, unsigned e);

std::string to_string(const Poly& p, const std::string& var = "t");
std::string to_string(const Rational& q);
/// Parses "p/q" or an integer. Throws Schema.
Rational parse_rational(const std::string& s);

int sign(const Rational& q);

/// Determinant by Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace mwlinks

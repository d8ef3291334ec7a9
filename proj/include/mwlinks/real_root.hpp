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

#include <memory>
#include <vector>

#include "mwlinks/poly.hpp"

namespace mwlinks {

/// Closed interval with rational endpoints.
struct RInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational width() const { return hi - lo; }
};

RInterval operator+(const RInterval& a, const RInterval& b);
RInterval operator-(const RInterval& a, const RInterval& b);
RInterval operator*(const RInterval& a, const RInterval& b);
RInterval eval(const Poly& p, const RInterval& x);

/// Sturm sequence of a square-free polynomial.
class Sturm {
 public:
  explicit Sturm(const Poly& p);
  int variations(const Rational& x) const;
  /// Number of distinct roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  /// Number of distinct real roots.
  int count_all() const;

 private:
  std::vector<Poly> seq_;
};

/// Real algebraic number: a root of a square-free polynomial together with an
/// isolating interval (lo, hi]. lo == hi marks an exact rational value.
class RealAlgebraic {
 public:
  RealAlgebraic(Poly p, std::shared_ptr<const Sturm> sturm, Rational lo,
                Rational hi);
  static RealAlgebraic rational(const Rational& x);

  const Poly& poly() const { return p_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }

  /// Halves the isolating interval.
  void refine() const;
  void refine_below(const Rational& width) const;
  /// Exact sign of q at this number.
  int sign_of(const Poly& q) const;
  /// Interval containing q at this number after refining to `width`.
  RInterval enclose(const Poly& q, const Rational& width) const;
  RInterval interval() const { return {lo_, hi_}; }
  double approx() const;

 private:
  Poly p_;
  std::shared_ptr<const Sturm> sturm_;
  mutable Rational lo_;
  mutable Rational hi_;
};

/// Real roots of the square-free part of p in increasing order.
std::vector<RealAlgebraic> real_roots(const Poly& p);
/// Upper bound on the absolute value of every complex root.
Rational root_bound(const Poly& p);
/// Exact comparison; -1, 0 or 1.
int compare(const RealAlgebraic& a, const RealAlgebraic& b);

}  // namespace mwlinks

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

#include "mwlinks/real_root.hpp"

#include <algorithm>

#include "mwlinks/error.hpp"

namespace mwlinks {

RInterval operator+(const RInterval& a, const RInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RInterval operator-(const RInterval& a, const RInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RInterval operator*(const RInterval& a, const RInterval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RInterval eval(const Poly& p, const RInterval& x) {
  RInterval acc{0, 0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x + RInterval{*it, *it};
  }
  return acc;
}

Sturm::Sturm(const Poly& p) {
  seq_.push_back(p.primitive());
  if (p.degree() <= 0) return;
  seq_.push_back(p.derivative().primitive());
  while (seq_.back().degree() > 0) {
    Poly r = -(seq_[seq_.size() - 2] % seq_.back());
    if (r.is_zero()) break;
    seq_.push_back(r.primitive());
  }
}

int Sturm::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const Poly& q : seq_) {
    const int s = sign(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int Sturm::count(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

int Sturm::count_all() const {
  int at_neg = 0;
  int at_pos = 0;
  int last_neg = 0;
  int last_pos = 0;
  for (const Poly& q : seq_) {
    if (q.is_zero()) continue;
    const int sp = sign(q.leading());
    const int sn = q.degree() % 2 == 0 ? sp : -sp;
    if (last_pos != 0 && sp != last_pos) ++at_pos;
    if (last_neg != 0 && sn != last_neg) ++at_neg;
    last_pos = sp;
    last_neg = sn;
  }
  return at_neg - at_pos;
}

RealAlgebraic::RealAlgebraic(Poly p, std::shared_ptr<const Sturm> sturm,
                             Rational lo, Rational hi)
    : p_(std::move(p)), sturm_(std::move(sturm)), lo_(lo), hi_(hi) {}

RealAlgebraic RealAlgebraic::rational(const Rational& x) {
  Poly p({-x, 1});
  return RealAlgebraic(p, std::make_shared<Sturm>(p), x, x);
}

void RealAlgebraic::refine() const {
  if (is_exact()) return;
  const Rational mid = (lo_ + hi_) / 2;
  if (p_(mid) == 0) {
    lo_ = hi_ = mid;
  } else if (sturm_->count(lo_, mid) == 1) {
    hi_ = mid;
  } else {
    lo_ = mid;
  }
}

void RealAlgebraic::refine_below(const Rational& width) const {
  while (!is_exact() && hi_ - lo_ > width) refine();
}

int RealAlgebraic::sign_of(const Poly& q) const {
  const Poly r = q % p_;
  if (r.is_zero()) return 0;
  if (is_exact()) return sign(r(lo_));
  const Poly g = gcd(r, p_);
  if (g.degree() > 0 && Sturm(g).count(lo_, hi_) > 0) return 0;
  const Sturm sr(squarefree_part(r));
  for (int i = 0; i < 100000; ++i) {
    if (is_exact()) return sign(r(lo_));
    if (sr.count(lo_, hi_) == 0) return sign(r(hi_));
    refine();
  }
  throw Error(ErrorKind::RefinementLimit, "sign determination did not settle");
}

RInterval RealAlgebraic::enclose(const Poly& q, const Rational& width) const {
  refine_below(width);
  return eval(q, RInterval{lo_, hi_});
}

double RealAlgebraic::approx() const {
  const Rational mid = (lo_ + hi_) / 2;
  return mid.get_d();
}

Rational root_bound(const Poly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    const Rational a = abs(p.coeffs()[i] / p.leading());
    if (a > m) m = a;
  }
  // Round up to a power of two so bisection points stay short.
  Rational b = 1;
  while (b < m + 1) b *= 2;
  return b;
}

namespace {

// Simplest rational in the closed interval [lo, hi], lo <= hi.
Rational simplest_between(Rational lo, Rational hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // Both in (fl, fl + 1): recurse on reciprocals of the fractional parts.
  const Rational a = lo - fl;
  const Rational b = hi - fl;
  const Rational inner = simplest_between(1 / b, 1 / a);
  return Rational(fl) + 1 / inner;
}

// Rational roots of an integer polynomial have denominators dividing the
// leading coefficient; once the interval is shorter than 1 / lc^2 at most one
// such rational fits, and it is the simplest rational there.
void settle_rational(const Poly& q, const Sturm& sturm, Rational& lo,
                     Rational& hi) {
  if (q(hi) == 0) {
    lo = hi;
    return;
  }
  const mpz_class lc = abs(q.leading().get_num());
  if (mpz_sizeinbase(lc.get_mpz_t(), 2) > 40) return;
  const Rational target = Rational(1) / Rational(lc * lc * 4);
  while (hi - lo > target) {
    const Rational mid = (lo + hi) / 2;
    if (q(mid) == 0) {
      lo = hi = mid;
      return;
    }
    if (sturm.count(lo, mid) == 1) hi = mid;
    else lo = mid;
  }
  const Rational s = simplest_between(lo, hi);
  if (s > lo && s <= hi && s.get_den() <= lc && q(s) == 0) lo = hi = s;
}

}  // namespace

std::vector<RealAlgebraic> real_roots(const Poly& p) {
  std::vector<RealAlgebraic> out;
  if (p.degree() <= 0) return out;
  const Poly q = squarefree_part(p).primitive();
  auto sturm = std::make_shared<const Sturm>(q);
  const Rational b = root_bound(q);
  struct Job {
    Rational lo, hi;
    int n;
  };
  std::vector<Job> stack{{-b, b, sturm->count(-b, b)}};
  std::vector<std::pair<Rational, Rational>> found;
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.n == 0) continue;
    if (j.n == 1) {
      found.emplace_back(j.lo, j.hi);
      continue;
    }
    const Rational mid = (j.lo + j.hi) / 2;
    const int left = sturm->count(j.lo, mid);
    stack.push_back({mid, j.hi, j.n - left});
    stack.push_back({j.lo, mid, left});
  }
  std::sort(found.begin(), found.end());
  for (auto& [lo, hi] : found) {
    settle_rational(q, *sturm, lo, hi);
    out.emplace_back(q, sturm, lo, hi);
  }
  return out;
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  const Rational lo = std::max(a.lo(), b.lo());
  const Rational hi = std::min(a.hi(), b.hi());
  bool overlap = a.is_exact() || b.is_exact() ? lo <= hi : lo < hi;
  if (overlap) {
    if (a.is_exact() && b.is_exact()) return 0;
    if (a.is_exact()) {
      if (b.poly()(a.lo()) == 0 && a.lo() > b.lo() && a.lo() <= b.hi()) {
        return 0;
      }
    } else if (b.is_exact()) {
      if (a.poly()(b.lo()) == 0 && b.lo() > a.lo() && b.lo() <= a.hi()) {
        return 0;
      }
    } else {
      const Poly g = gcd(a.poly(), b.poly());
      if (g.degree() > 0 && Sturm(g).count(lo, hi) > 0) return 0;
    }
  }
  for (int i = 0; i < 100000; ++i) {
    if (a.hi() < b.lo() || (a.hi() == b.lo() && !b.is_exact())) return -1;
    if (b.hi() < a.lo() || (b.hi() == a.lo() && !a.is_exact())) return 1;
    a.refine();
    b.refine();
  }
  throw Error(ErrorKind::RefinementLimit, "comparison did not settle");
}

}  // namespace mwlinks

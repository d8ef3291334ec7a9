#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mwlinks/error.hpp"
#include "mwlinks/pl_topology.hpp"
#include "oracles/pl_oracles.hpp"

using namespace mwlinks;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Schema;
}

Rational grid(double x) {
  Rational r(static_cast<long>(std::llround(x * 4096)), 4096L);
  r.canonicalize();
  return r;
}

// Regular n-gon approximating the unit circle through `center` in the plane
// spanned by the unit axes e1, e2.
PLLoop circle(std::array<double, 3> center, int e1, int e2, int n = 24, double radius = 1) {
  std::vector<Point3> v;
  for (int k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * k / n;
    std::array<double, 3> p = center;
    p[e1] += radius * std::cos(a);
    p[e2] += radius * std::sin(a);
    v.push_back({grid(p[0]), grid(p[1]), grid(p[2])});
  }
  return PLLoop::validate(v);
}

// Curve winding once along the circle of radius 3 in the xy-plane and q
// times around it at distance 1.
PLLoop torus_curve(int q, int n = 256) {
  std::vector<Point3> v;
  for (int k = 0; k < n; ++k) {
    const double phi = 2 * std::numbers::pi * k / n;
    const double r = 3 + std::cos(q * phi);
    v.push_back({grid(r * std::cos(phi)), grid(r * std::sin(phi)), grid(std::sin(q * phi))});
  }
  return PLLoop::validate(v);
}

}  // namespace

TEST_CASE("loops validate their edges") {
  CHECK(kind_of([] { PLLoop::validate({{0, 0, 0}, {1, 0, 0}}); }) == ErrorKind::DegenerateLoop);
  CHECK(kind_of([] { PLLoop::validate({{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}); }) ==
        ErrorKind::DegenerateLoop);
  const auto bow = PLLoop::validate({{0, 0, 0}, {2, 2, 0}, {2, 0, 0}, {0, 2, 0}});
  CHECK(kind_of([&] { check_simple(bow); }) == ErrorKind::DegenerateLoop);
  CHECK_NOTHROW(check_simple(circle({0, 0, 0}, 0, 1)));
}

TEST_CASE("gauss_linking examples") {
  const auto a = circle({0, 0, 0}, 0, 1);
  const auto b = circle({1, 0, 0}, 0, 2);
  const int lk = gauss_linking(a, b);
  CHECK(std::abs(lk) == 1);
  CHECK(lk == static_cast<int>(std::lround(oracle::gauss_integral(a, b))));

  const auto far = circle({10, 0, 0}, 0, 2);
  CHECK(gauss_linking(a, far) == 0);

  // A q-fold meridian winding punctures the disk of the core q times.
  const auto core = circle({0, 0, 0}, 0, 1, 64, 3);
  for (int q : {1, 2, 3, 5}) {
    const auto t = torus_curve(q);
    const int l = gauss_linking(t, core);
    CHECK(std::abs(l) == q);
    CHECK(l == static_cast<int>(std::lround(oracle::gauss_integral(t, core))));
  }

  const auto hit = circle({1, 0, 0}, 0, 1);
  CHECK(kind_of([&] { gauss_linking(a, hit); }) == ErrorKind::LoopsIntersect);
}

TEST_CASE("gauss_linking is symmetric, direction-free and odd under reversal") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(-50, 50);
  const auto core = circle({0, 0, 0}, 0, 1, 64, 3);
  const auto t = torus_curve(3);
  const int lk = gauss_linking(t, core);
  CHECK(gauss_linking(core, t) == lk);
  CHECK(gauss_linking(t.reversed(), core) == -lk);
  CHECK(gauss_linking(core.reversed(), t.reversed()) == lk);
  int generic = 0;
  for (int k = 0; k < 5; ++k) {
    const Point3 dir{pick(rng), pick(rng), pick(rng)};
    if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0) continue;
    const auto l = gauss_linking_along(t, core, dir);
    if (!l) continue;
    ++generic;
    CHECK(*l == lk);
  }
  CHECK(generic >= 4);
}

TEST_CASE("build_wga_model rejects non-partitions") {
  CHECK(kind_of([] { build_wga_model({}); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([] { build_wga_model({0}); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([] { build_wga_model({1, 0}); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([] { build_wga_model({1, 2}); }) == ErrorKind::InvalidPartition);
}

TEST_CASE("model linking matrices") {
  const auto one = build_wga_model({1});
  CHECK(one.hopf_cores.size() == 1);
  CHECK(one.components.size() == 1);
  CHECK(linking_matrix(one) == std::vector<std::vector<int>>{{6}});

  const auto pair = build_wga_model({1, 1});
  CHECK(linking_matrix(pair) == std::vector<std::vector<int>>{{6, 2}, {2, 6}});

  const auto m = build_wga_model({2, 1});
  const auto lm = linking_matrix(m);
  CHECK(lm == std::vector<std::vector<int>>{{8, 4}, {2, 6}});
  CHECK_NOTHROW(check_linking_data(m, lm));
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(lm[j][i] ==
            static_cast<int>(std::lround(oracle::gauss_integral(m.components[j], m.hopf_cores[i]))));
    }
  }
  // Hopf cores link each other once.
  CHECK(gauss_linking(m.hopf_cores[0], m.hopf_cores[1]) == 1);

  auto tampered = m;
  tampered.components[0] = tampered.components[0].reversed();
  const auto tm = linking_matrix(tampered);
  CHECK(tm[0][0] == -8);
  CHECK(kind_of([&] { check_linking_data(tampered, tm); }) == ErrorKind::LinkingDataMismatch);

  CHECK(to_obj(one).find("o K0") != std::string::npos);
}

TEST_CASE("model linking data holds for every partition with d <= 8") {
  int count = 0;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      const auto m = build_wga_model(parts);
      CHECK_NOTHROW(check_linking_data(m, linking_matrix(m)));
      ++count;
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  for (int n = 1; n <= 6; ++n) rec(rec, n, n);
  // Partitions of 1..6.
  CHECK(count == 1 + 2 + 3 + 5 + 7 + 11);
}

TEST_CASE("projected model diagram carries the Gauss linking number") {
  const auto m = build_wga_model({1});
  const std::vector<PLLoop> loops{m.components[0], m.hopf_cores[0]};
  const auto ld = oracle::diagram_from_projection(loops, 60);
  const int lk = gauss_linking(loops[0], loops[1]);
  CHECK(lk == 6);
  CHECK(doubled_linking(ld, 0, 1) == 2 * lk);
  const auto w = writhe_w(ld);
  const auto wl = w_lambda(ld);
  REQUIRE(w.has_value());
  REQUIRE(wl.has_value());
  CHECK(*wl - *w == 2 * lk);
}

// Sine circle map: stepping, rotation numbers, mode locking, tongue
// boundaries, the devil's staircase, and the mediant width ordering.
// Longer sweeps are tagged [heavy].

#include "harmonia/circle_map.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace harmonia;

TEST_CASE("circle map step") {
  // K = 0: rigid rotation, increment is exactly Omega.
  auto [t1, inc1] = circle_map_step(0.37, CircleMapParams(0.2, 0.0));
  CHECK(inc1 == 0.2);
  CHECK(t1 == Catch::Approx(0.57).epsilon(1e-15));

  // sin 0 = 0: the origin is a fixed point when Omega = 0.
  auto [t2, inc2] = circle_map_step(0.0, CircleMapParams(0.0, 0.5));
  CHECK(t2 == 0.0);
  CHECK(inc2 == 0.0);

  // Direct substitution at theta = 1/4, Omega = 1/2, K = 1.
  auto [t3, inc3] = circle_map_step(0.25, CircleMapParams(0.5, 1.0));
  CHECK(inc3 == Catch::Approx(0.5 + 1 / (2 * std::numbers::pi)).epsilon(1e-15));
  CHECK(t3 == Catch::Approx(0.75 + 1 / (2 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CircleMapParams(0.5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(CircleMapParams(0.5, 1.5), std::invalid_argument);
  CHECK_NOTHROW(CircleMapParams(0.5, 1.5, 0.0, true));
  CHECK(CircleMapParams(1.25, 0.5).omega == Catch::Approx(0.25).epsilon(1e-15));
  CHECK(CircleMapParams(1.0, 0.5).omega == 1.0);  // staircases close at 1
}

TEST_CASE("rotation number basics") {
  const RotationResult rigid = rotation_number(CircleMapParams(1.0 / 3, 0.0));
  REQUIRE(rigid.locked.has_value());
  CHECK(*rigid.locked == Ratio(1, 3));
  CHECK(rigid.rho == Catch::Approx(1.0 / 3).epsilon(1e-12));

  const RotationResult half = rotation_number(CircleMapParams(0.5, 0.9));
  REQUIRE(half.locked.has_value());
  CHECK(*half.locked == Ratio(1, 2));
  CHECK(half.rho == 0.5);

  const double phi_frac = (1 + std::sqrt(5.0)) / 2 - 1;
  const RotationResult golden = rotation_number(CircleMapParams(phi_frac, 0.9));
  CHECK_FALSE(golden.locked.has_value());
}

TEST_CASE("rotation number is independent of the initial phase") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const double base =
      rotation_number(CircleMapParams(0.61803398875, 0.7, 0.0)).rho;
  for (int i = 0; i < 10; ++i) {
    const double rho =
        rotation_number(CircleMapParams(0.61803398875, 0.7, dist(rng))).rho;
    CHECK(std::abs(rho - base) < 1e-6);
  }
}

TEST_CASE("odd symmetry rho(Omega) + rho(1 - Omega) = 1") {
  for (double om : {0.1, 0.23, 0.34, 0.41, 0.47}) {
    const double a = rotation_number(CircleMapParams(om, 0.8)).rho;
    const double b = rotation_number(CircleMapParams(1.0 - om, 0.8)).rho;
    CHECK(std::abs(a + b - 1.0) < 1e-6);
  }
}

TEST_CASE("tongue intervals", "[heavy]") {
  // Frozen boundaries for the 1/2 tongue at K = 0.9 (bisection at 1e-7).
  const TongueRegion half = tongue_interval(Ratio(1, 2), 0.9);
  CHECK(half.omega_lo == Catch::Approx(0.4696653).margin(1e-5));
  CHECK(half.omega_hi == Catch::Approx(0.5303347).margin(1e-5));
  CHECK(half.width == Catch::Approx(0.0606694).margin(2e-5));

  // The 0/1 tongue starts at the domain edge; analytic width K / 2 pi.
  const TongueRegion zero = tongue_interval(Ratio(0, 1), 0.5);
  CHECK(zero.omega_lo == 0.0);
  CHECK(zero.omega_hi ==
        Catch::Approx(0.5 / (2 * std::numbers::pi)).margin(1e-5));

  // Near K = 0 widths collapse towards zero.
  const TongueRegion thin = tongue_interval(Ratio(1, 2), 1e-4);
  CHECK(thin.width < 5e-4);

  CHECK_THROWS_AS(tongue_interval(Ratio(1, 2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(tongue_interval(Ratio(3, 2), 0.5), std::invalid_argument);
}

TEST_CASE("tongues grow with K and the widest contain their roots", "[heavy]") {
  // Nesting in K holds for the low-order tongues 0/1 and 1/2. (It fails
  // for q >= 3 tongues, whose centers drift by O(K^2) while their widths
  // are only O(K^q), so e.g. the 1/3 tongue at K = 0.3 and K = 0.6 are
  // disjoint intervals; only width monotonicity survives there.)
  for (auto ratio : {Ratio(0, 1), Ratio(1, 2)}) {
    const TongueRegion a = tongue_interval(ratio, 0.3);
    const TongueRegion b = tongue_interval(ratio, 0.6);
    const TongueRegion c = tongue_interval(ratio, 0.9);
    CHECK(b.omega_lo <= a.omega_lo);
    CHECK(a.omega_hi <= b.omega_hi);
    CHECK(c.omega_lo <= b.omega_lo);
    CHECK(b.omega_hi <= c.omega_hi);
    // These low-order tongues do contain their root at every K.
    const double root = ratio.to_double();
    for (const TongueRegion* t : {&a, &b, &c}) {
      CHECK(t->omega_lo <= root + 1e-7);
      CHECK(root - 1e-7 <= t->omega_hi);
    }
  }
  // Width monotonicity in K for 1/3.
  const double w1 = tongue_interval(Ratio(1, 3), 0.3).width;
  const double w2 = tongue_interval(Ratio(1, 3), 0.6).width;
  const double w3 = tongue_interval(Ratio(1, 3), 0.9).width;
  CHECK(w1 < w2);
  CHECK(w2 < w3);
}

TEST_CASE("devils staircase at K = 0 is the identity") {
  const auto grid = uniform_grid(0.0, 1.0, 101);
  const auto st = devils_staircase(0.0, grid);
  for (std::size_t i = 0; i < st.size(); ++i) {
    CHECK(st[i].rho == Catch::Approx(st[i].omega).margin(1e-9));
    if (i)
      CHECK(st[i].rho >= st[i - 1].rho - 1e-9);
  }
}

TEST_CASE("devils staircase plateaus are self-consistent", "[heavy]") {
  const auto grid = uniform_grid(0.3, 0.7, 401);
  const auto st = devils_staircase(0.8, grid, {}, 4);
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (i)
      CHECK(st[i].rho >= st[i - 1].rho - 1e-9);
    if (st[i].locked)
      CHECK(std::abs(st[i].rho - st[i].locked->to_double()) < 1e-7);
  }
  // All grid points inside the frozen 1/2 plateau lock to 1/2.
  for (const StaircasePoint& p : st)
    if (p.omega > 0.48 && p.omega < 0.52) {
      REQUIRE(p.locked.has_value());
      CHECK(*p.locked == Ratio(1, 2));
    }
}

TEST_CASE("staircase results are worker-count invariant", "[heavy]") {
  const auto grid = uniform_grid(0.0, 1.0, 101);
  const auto a = devils_staircase(0.7, grid, {}, 1);
  const auto b = devils_staircase(0.7, grid, {}, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rho == b[i].rho);  // bit-identical
    CHECK(a[i].locked == b[i].locked);
  }
}

TEST_CASE("mediant width ordering between 1/3 and 1/2", "[heavy]") {
  // Small instance of the ordering check; the acceptance gate runs the
  // full q <= 12 version at all three parent pairs.
  const auto report =
      mediant_width_check(Ratio(1, 3), Ratio(1, 2), 0.8, 8, {}, 1e-6, 8);
  CHECK(report.mediant == Ratio(2, 5));
  CHECK(report.mediant_is_widest);
  CHECK_THROWS_AS(mediant_width_check(Ratio(1, 3), Ratio(2, 3), 0.8),
                  std::invalid_argument);
}

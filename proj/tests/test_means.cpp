// Pythagorean means, the proportion identity, and Kepler orbit/triangle
// geometry.

#include "harmonia/continued_fraction.hpp"
#include "harmonia/means.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace harmonia;

TEST_CASE("mean examples") {
  CHECK(arithmetic_mean(Ratio(1), Ratio(2)) == Ratio(3, 2));
  CHECK(harmonic_mean(Ratio(1), Ratio(2)) == Ratio(4, 3));
  CHECK(arithmetic_mean(Ratio(1), Ratio(2)) / harmonic_mean(Ratio(1), Ratio(2)) ==
        Ratio(9, 8));
  CHECK(geometric_mean(1.0, 2.0) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(arithmetic_mean(Ratio(-1), Ratio(2)), std::domain_error);
  CHECK_THROWS_AS(geometric_mean(0.0, 1.0), std::domain_error);
}

TEST_CASE("exact geometric mean when the product is a perfect square") {
  const GeometricMean g = geometric_mean(Ratio(1, 2), Ratio(2, 1));
  REQUIRE(g.exact.has_value());
  CHECK(*g.exact == Ratio(1, 1));
  const GeometricMean h = geometric_mean(Ratio(4, 9), Ratio(9, 4));
  REQUIRE(h.exact.has_value());
  CHECK(*h.exact == Ratio(1, 1));
  const GeometricMean i = geometric_mean(Ratio(1), Ratio(2));
  CHECK_FALSE(i.exact.has_value());
  CHECK(i.value == Catch::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("AM-GM-HM chain over random pairs") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(1e-3, 1e3);
  for (int i = 0; i < 10000; ++i) {
    const double a = dist(rng), b = dist(rng);
    const MeanTriple m = mean_triple(a, b);
    CHECK(m.harmonic <= m.geometric * (1 + 1e-12));
    CHECK(m.geometric <= m.arithmetic * (1 + 1e-12));
    CHECK(std::abs(m.geometric * m.geometric - m.arithmetic * m.harmonic) <=
          1e-12 * m.geometric * m.geometric);
    if (a != b) {
      CHECK(m.harmonic < m.arithmetic);
    }
  }
  const MeanTriple eq = mean_triple(1.7, 1.7);
  CHECK(eq.harmonic == eq.arithmetic);
  CHECK(eq.geometric == eq.arithmetic);
}

TEST_CASE("Archytas identity exact on rationals") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(1, 50);
  for (int i = 0; i < 200; ++i) {
    const Ratio a(num(rng), num(rng)), b(num(rng), num(rng));
    // GM(a,b)^2 = a b and GM(AM,HM)^2 = AM*HM must agree exactly.
    CHECK(arithmetic_mean(a, b) * harmonic_mean(a, b) == a * b);
    CHECK(proportion_identity_check(a, b));
  }
}

TEST_CASE("proportion identity on reals") {
  CHECK(proportion_identity_check(1.0, 2.0));
  CHECK(proportion_identity_check(4.0 / 3.0, 2.0));
  const double phi = GoldenConstant::value_d();
  CHECK(proportion_identity_check(1 / phi, phi * phi));
}

TEST_CASE("golden four-term property") {
  const double phi = GoldenConstant::value_d();
  CHECK(std::abs(arithmetic_mean(1 / phi, phi * phi) - phi) < 1e-12);
  CHECK(std::abs(harmonic_mean(1 / phi, phi * phi) - 1.0) < 1e-12);
}

TEST_CASE("kepler_orbit_means") {
  const OrbitGeometry circ = kepler_orbit_means(1.0, 1.0);
  CHECK(circ.semimajor == 1.0);
  CHECK(circ.semiminor == 1.0);
  CHECK(circ.semilatus == 1.0);
  CHECK(circ.eccentricity == 0.0);

  const OrbitGeometry g = kepler_orbit_means(1.0, 3.0);
  CHECK(g.semimajor == 2.0);
  CHECK(g.semiminor == Catch::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(g.semilatus == Catch::Approx(1.5).epsilon(1e-15));
  CHECK(g.semilatus ==
        Catch::Approx(g.semiminor * g.semiminor / g.semimajor).epsilon(1e-12));
  CHECK(g.eccentricity == Catch::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(kepler_orbit_means(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(kepler_orbit_means(2.0, 1.0), std::domain_error);
}

TEST_CASE("kepler third law verifier") {
  CHECK(kepler_third_law_check(1.0, 1.0, 4.0, 8.0));
  CHECK_FALSE(kepler_third_law_check(1.0, 1.0, 4.0, 7.0));
}

TEST_CASE("is_kepler_mean_triangle") {
  const double phi = GoldenConstant::value_d();
  const double phi3 = phi * phi * phi;
  CHECK_FALSE(is_kepler_mean_triangle(1.0, 1.0));
  CHECK(is_kepler_mean_triangle(1.0, phi3));
  CHECK_FALSE(is_kepler_mean_triangle(1.0, 2.0));
  CHECK_THROWS_AS(is_kepler_mean_triangle(-1.0, 2.0), std::domain_error);

  // Equivalence with AM/HM == phi over random pairs, including
  // near-threshold perturbations of (1, phi^3).
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  std::uniform_real_distribution<double> eps(-1e-7, 1e-7);
  for (int i = 0; i < 10000; ++i) {
    const double a = dist(rng);
    const double b = (i % 4 == 0) ? a * phi3 * (1 + eps(rng)) : dist(rng);
    if (a == b)
      continue;
    const MeanTriple m = mean_triple(a, b);
    // With x = AM/HM, the triangle residual (AM^2-GM^2-HM^2)/AM^2 equals
    // 1 - 1/x - 1/x^2, whose derivative at phi is (phi+2)/phi^3 ~ 0.854;
    // the 1e-9 residual threshold therefore corresponds to |x - phi| of
    // about 1.17e-9. Demand agreement outside that rounding shell.
    const double gap = std::abs(m.arithmetic / m.harmonic - phi);
    const bool via_triangle = is_kepler_mean_triangle(a, b);
    if (gap > 3e-9)
      CHECK_FALSE(via_triangle);
    if (gap < 5e-10)
      CHECK(via_triangle);
  }
}

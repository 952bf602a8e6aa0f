#pragma once

// The three Pythagorean means, the proportion identity linking them, and the
// Keplerian orbit/triangle geometry they describe. Arithmetic and harmonic
// means of rationals stay exact; the geometric mean drops to a real unless
// the product is a perfect rational square.

#include "harmonia/continued_fraction.hpp"
#include "harmonia/rational.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace harmonia {

namespace detail {
inline void require_positive(const Ratio& a, const Ratio& b, const char* who) {
  if (!a.is_positive() || !b.is_positive())
    throw std::domain_error(std::string(who) + ": inputs must be positive");
}
inline void require_positive(double a, double b, const char* who) {
  if (!(a > 0) || !(b > 0))
    throw std::domain_error(std::string(who) + ": inputs must be positive");
}
}  // namespace detail

inline Ratio arithmetic_mean(const Ratio& a, const Ratio& b) {
  detail::require_positive(a, b, "arithmetic_mean");
  return (a + b) / Ratio(2);
}

inline Ratio harmonic_mean(const Ratio& a, const Ratio& b) {
  detail::require_positive(a, b, "harmonic_mean");
  return Ratio(2) * a * b / (a + b);
}

inline double arithmetic_mean(double a, double b) {
  detail::require_positive(a, b, "arithmetic_mean");
  return (a + b) / 2;
}

inline double harmonic_mean(double a, double b) {
  detail::require_positive(a, b, "harmonic_mean");
  return 2 * a * b / (a + b);
}

inline double geometric_mean(double a, double b) {
  detail::require_positive(a, b, "geometric_mean");
  return std::sqrt(a * b);
}

// Exact when a*b is a perfect rational square, else a real fallback.
struct GeometricMean {
  std::optional<Ratio> exact;
  double value;
};

inline GeometricMean geometric_mean(const Ratio& a, const Ratio& b) {
  detail::require_positive(a, b, "geometric_mean");
  const Ratio prod = a * b;
  const BigInt sn = sqrt(prod.num());
  const BigInt sd = sqrt(prod.den());
  if (sn * sn == prod.num() && sd * sd == prod.den()) {
    Ratio root(sn, sd);
    return {root, root.to_double()};
  }
  return {std::nullopt, std::sqrt(prod.to_double())};
}

// harmonic <= geometric <= arithmetic, equality iff a == b;
// geometric^2 == arithmetic * harmonic (Archytas).
struct MeanTriple {
  double arithmetic;
  double geometric;
  double harmonic;
};

inline MeanTriple mean_triple(double a, double b) {
  return {arithmetic_mean(a, b), geometric_mean(a, b), harmonic_mean(a, b)};
}

// a / AM(a,b) == HM(a,b) / b. An identity; exposed as a verifier.
inline bool proportion_identity_check(double a, double b, double tol = 1e-12) {
  detail::require_positive(a, b, "proportion_identity_check");
  const double lhs = a / arithmetic_mean(a, b);
  const double rhs = harmonic_mean(a, b) / b;
  return std::abs(lhs - rhs) <= tol * std::max(std::abs(lhs), std::abs(rhs));
}

inline bool proportion_identity_check(const Ratio& a, const Ratio& b) {
  detail::require_positive(a, b, "proportion_identity_check");
  return a / arithmetic_mean(a, b) == harmonic_mean(a, b) / b;
}

// Keplerian ellipse from perihelion and aphelion: the semimajor axis is the
// arithmetic mean, the semiminor axis the geometric mean, and the semilatus
// rectum the harmonic mean of r_min and r_max.
struct OrbitGeometry {
  double r_min;
  double r_max;
  double semimajor;       // a
  double semiminor;       // b
  double semilatus;       // l = b^2 / a
  double eccentricity;    // (r_max - r_min) / (r_max + r_min)
};

inline OrbitGeometry kepler_orbit_means(double r_min, double r_max) {
  if (!(r_min > 0))
    throw std::domain_error("kepler_orbit_means: r_min must be positive");
  if (r_min > r_max)
    throw std::domain_error("kepler_orbit_means: requires r_min <= r_max");
  OrbitGeometry g;
  g.r_min = r_min;
  g.r_max = r_max;
  g.semimajor = arithmetic_mean(r_min, r_max);
  g.semiminor = geometric_mean(r_min, r_max);
  g.semilatus = harmonic_mean(r_min, r_max);
  g.eccentricity = (r_max - r_min) / (r_max + r_min);
  return g;
}

// Kepler's third law as a verifier: (a1/a2)^3 == (T1/T2)^2.
inline bool kepler_third_law_check(double a1, double T1, double a2, double T2,
                                   double tol = 1e-9) {
  detail::require_positive(a1, a2, "kepler_third_law_check");
  detail::require_positive(T1, T2, "kepler_third_law_check");
  const double lhs = std::pow(a1 / a2, 3);
  const double rhs = std::pow(T1 / T2, 2);
  return std::abs(lhs - rhs) <= tol * std::max(lhs, rhs);
}

// True iff AM, GM, HM of (a, b) are the sides of a right triangle, i.e.
// AM^2 == GM^2 + HM^2, equivalently AM/HM == phi (a Kepler triangle).
// Degenerate a == b (all means equal) is rejected: three equal lengths
// cannot form a right triangle.
inline bool is_kepler_mean_triangle(double a, double b, double rel_tol = 1e-9) {
  detail::require_positive(a, b, "is_kepler_mean_triangle");
  if (a == b)
    return false;
  const MeanTriple m = mean_triple(a, b);
  const double lhs = m.arithmetic * m.arithmetic;
  const double rhs = m.geometric * m.geometric + m.harmonic * m.harmonic;
  return std::abs(lhs - rhs) <= rel_tol * lhs;
}

}  // namespace harmonia

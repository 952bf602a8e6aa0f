#pragma once

// Three-frequency resonance identification: integer triples (p, q, r) with
// p f1 + q f2 = r f3, r > 0, gcd(|p|,|q|,|r|) = 1. The response frequency
// f3 is kept on its own side of the relation so the stored r is positive;
// residual = |p f1 + q f2 - r f3|.

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace harmonia {

struct ResonanceTriple {
  long long p, q, r;  // r > 0, gcd 1
  double f1, f2, f3;
  double residual;    // |p f1 + q f2 - r f3|

  long long order() const { return std::llabs(p) + std::llabs(q) + r; }
};

// Lowest-order triple with |p f1 + q f2 - r f3| < tol * f1 and
// |p|, |q|, r <= max_order. Ties broken by smaller r, then smaller |q|,
// then by q and p to make the order strict.
inline std::optional<ResonanceTriple> identify_resonance(double f1, double f2,
                                                         double f3,
                                                         long long max_order,
                                                         double tol) {
  if (!(f1 > 0))
    throw std::domain_error("identify_resonance: f1 must be positive");
  if (max_order < 1)
    throw std::invalid_argument("identify_resonance: max_order must be >= 1");

  std::optional<ResonanceTriple> best;
  auto better = [](const ResonanceTriple& a, const ResonanceTriple& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.r != b.r) return a.r < b.r;
    if (std::llabs(a.q) != std::llabs(b.q)) return std::llabs(a.q) < std::llabs(b.q);
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  };

  for (long long r = 1; r <= max_order; ++r) {
    for (long long q = -max_order; q <= max_order; ++q) {
      // Best integer p for this (q, r); neighbours are at least f1 away.
      const double p_real = (r * f3 - q * f2) / f1;
      const long long p = static_cast<long long>(std::llround(p_real));
      if (std::llabs(p) > max_order)
        continue;
      const double residual = std::abs(p * f1 + q * f2 - r * f3);
      if (residual >= tol * f1)
        continue;
      const long long g = std::gcd(std::gcd(std::llabs(p), std::llabs(q)), r);
      if (g != 1)
        continue;
      ResonanceTriple cand{p, q, r, f1, f2, f3, residual};
      if (!best || better(cand, *best))
        best = cand;
    }
  }
  return best;
}

}  // namespace harmonia

#pragma once

// Continued fractions and their convergents, plus the golden ratio as an
// exact constant. Expansions of irrationals are computed at Real100
// precision (~332 bits), far beyond the 64 extra bits needed for the
// truncation depths in use here (depth <= 100 is safe).

#include "harmonia/rational.hpp"

#include <stdexcept>
#include <vector>

namespace harmonia {

struct ContinuedFraction {
  // a0; a1, a2, ...  All coefficients after a0 are >= 1; a0 >= 0 for the
  // positive inputs in scope.
  std::vector<BigInt> coefficients;

  std::size_t depth() const { return coefficients.size(); }
};

// Exact Euclidean expansion of a positive rational; terminates exactly and
// is truncated at `depth` coefficients at most.
inline ContinuedFraction continued_fraction_of(const Ratio& x, std::size_t depth) {
  if (!x.is_positive())
    throw std::domain_error("continued_fraction_of: input must be positive");
  if (depth == 0)
    throw std::invalid_argument("continued_fraction_of: depth must be >= 1");
  ContinuedFraction cf;
  BigInt p = x.num(), q = x.den();
  while (q != 0 && cf.coefficients.size() < depth) {
    BigInt a = p / q;  // floor: p, q > 0 throughout
    cf.coefficients.push_back(a);
    BigInt r = p - a * q;
    p = q;
    q = r;
  }
  return cf;
}

// Floor/reciprocal expansion of a positive real, truncated at `depth`.
inline ContinuedFraction continued_fraction_of(const Real100& x, std::size_t depth) {
  if (x <= 0)
    throw std::domain_error("continued_fraction_of: input must be positive");
  if (depth == 0)
    throw std::invalid_argument("continued_fraction_of: depth must be >= 1");
  ContinuedFraction cf;
  Real100 v = x;
  for (std::size_t i = 0; i < depth; ++i) {
    Real100 fl = floor(v);
    cf.coefficients.push_back(fl.convert_to<BigInt>());
    Real100 frac = v - fl;
    if (frac == 0)
      break;
    v = 1 / frac;
  }
  return cf;
}

// Standard p_k = a_k p_{k-1} + p_{k-2} recurrence; exact.
inline std::vector<Ratio> convergents(const ContinuedFraction& cf) {
  std::vector<Ratio> out;
  out.reserve(cf.coefficients.size());
  BigInt p_prev = 0, q_prev = 1;
  BigInt p = 1, q = 0;
  for (const BigInt& a : cf.coefficients) {
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.emplace_back(p, q);
  }
  return out;
}

// phi = (1 + sqrt(5)) / 2, the golden section.
struct GoldenConstant {
  static Real100 value() {
    return (1 + sqrt(Real100(5))) / 2;
  }

  static double value_d() {
    return value().convert_to<double>();
  }

  // [1; 1, 1, 1, ...] truncated at `depth`.
  static ContinuedFraction expansion(std::size_t depth) {
    ContinuedFraction cf;
    cf.coefficients.assign(depth, BigInt(1));
    return cf;
  }

  // Fibonacci-quotient convergents 1/1, 2/1, 3/2, 5/3, 8/5, ...
  static std::vector<Ratio> fibonacci_convergents(std::size_t count) {
    return convergents(expansion(count));
  }
};

}  // namespace harmonia

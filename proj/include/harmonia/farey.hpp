#pragma once

// Farey sequences, adjacency, and mediants.

#include "harmonia/rational.hpp"

#include <stdexcept>
#include <vector>

namespace harmonia {

// |ps - qr| == 1 is necessary and sufficient for adjacency in some Farey
// sequence; both inputs are canonical by construction.
inline bool are_farey_adjacent(const Ratio& a, const Ratio& b) {
  BigInt d = a.num() * b.den() - a.den() * b.num();
  return d == 1 || d == -1;
}

// (p+r)/(q+s): the unique smallest-denominator rational strictly between
// two Farey-adjacent fractions.
inline Ratio mediant(const Ratio& a, const Ratio& b) {
  if (a >= b)
    throw std::invalid_argument("mediant: requires a < b");
  return Ratio(a.num() + b.num(), a.den() + b.den());
}

// All canonical rationals in [0, 1] with denominator <= n, increasing.
// Uses the next-term recurrence on adjacent pairs.
inline std::vector<Ratio> farey_sequence(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("farey_sequence: n must be >= 1");
  std::vector<Ratio> seq;
  BigInt a = 0, b = 1, c = 1, d = n;
  seq.emplace_back(a, b);
  while (c <= BigInt(n)) {
    BigInt k = (BigInt(n) + b) / d;
    BigInt a2 = k * c - a;
    BigInt b2 = k * d - b;
    a = c;
    b = d;
    c = a2;
    d = b2;
    seq.emplace_back(a, b);
  }
  return seq;
}

// Rationals strictly inside (lo, hi) with denominator <= q_max, increasing.
inline std::vector<Ratio> rationals_between(const Ratio& lo, const Ratio& hi,
                                            unsigned q_max) {
  if (lo >= hi)
    throw std::invalid_argument("rationals_between: requires lo < hi");
  std::vector<Ratio> out;
  for (const Ratio& r : farey_sequence(q_max)) {
    if (r > lo && r < hi)
      out.push_back(r);
  }
  return out;
}

}  // namespace harmonia

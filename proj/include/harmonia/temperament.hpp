#pragma once

// The sigma(N) temperament-quality metric: for each just interval with
// cents c, the error against the nearest N-equal-tempered step is
// e = c - (1200/N) * round(c N / 1200), and sigma is the sum of squared
// errors. Errors live on the cents (log-frequency) lattice, where "nearest
// equitempered interval" is well defined.

#include "harmonia/scale.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

struct IntervalError {
  std::string name;
  double just_cents;
  double tempered_cents;  // nearest multiple of 1200/n
  double error;           // just - tempered, |error| <= 600/n
};

struct TemperamentReport {
  unsigned n;
  double sigma;  // sum of squared per-interval errors, cents^2
  std::vector<IntervalError> per_interval;
};

inline TemperamentReport sigma(unsigned n, const std::vector<JustInterval>& intervals) {
  if (n == 0)
    throw std::invalid_argument("sigma: n must be >= 1");
  if (intervals.empty())
    throw std::invalid_argument("sigma: interval set must be non-empty");
  TemperamentReport report;
  report.n = n;
  report.sigma = 0.0;
  const double step = 1200.0 / n;
  for (const JustInterval& j : intervals) {
    const double c = cents_of(j.ratio);
    const double tempered = step * std::round(c * n / 1200.0);
    const double e = c - tempered;
    report.per_interval.push_back({j.name, c, tempered, e});
    report.sigma += e * e;
  }
  return report;
}

struct SweepResult {
  std::vector<TemperamentReport> reports;  // n = n_min .. n_max
  std::vector<unsigned> local_minima;      // interior strict minima only
};

// Strict interior minima: sigma(N) < sigma(N-1) and sigma(N) < sigma(N+1).
// Ties (within 1e-12) are not minima.
inline SweepResult sigma_sweep(unsigned n_min, unsigned n_max,
                               const std::vector<JustInterval>& intervals) {
  if (n_min == 0 || n_min >= n_max)
    throw std::invalid_argument("sigma_sweep: requires 1 <= n_min < n_max");
  if (n_max > 200)
    throw std::invalid_argument("sigma_sweep: n_max must be <= 200");
  SweepResult result;
  for (unsigned n = n_min; n <= n_max; ++n)
    result.reports.push_back(sigma(n, intervals));
  for (std::size_t i = 1; i + 1 < result.reports.size(); ++i) {
    const double prev = result.reports[i - 1].sigma;
    const double here = result.reports[i].sigma;
    const double next = result.reports[i + 1].sigma;
    if (here < prev - 1e-12 && here < next - 1e-12)
      result.local_minima.push_back(result.reports[i].n);
  }
  return result;
}

}  // namespace harmonia

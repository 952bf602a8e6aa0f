#pragma once

// The sine circle map theta' = theta + Omega + (K/2pi) sin(2pi theta):
// rotation numbers, mode-locking detection, Arnol'd tongue boundaries, the
// devil's staircase, and the Farey-mediant tongue-width ordering.
//
// Rotation numbers are measured on the lift over the full trajectory span,
// which is monotone in Omega by construction (the lift is increasing in
// both theta and Omega for K <= 1). Locking is detected by testing the
// continued-fraction convergents of the measured value for a genuine
// periodic orbit at the end of the trajectory, which pins locked plateaus
// to their rational far more tightly than the raw O(1/n) estimate.

#include "harmonia/farey.hpp"
#include "harmonia/parallel.hpp"
#include "harmonia/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace harmonia {

struct CircleMapParams {
  double omega;     // bare frequency ratio, reduced mod 1 (1.0 is kept as
                    // 1.0 so that staircases over [0, 1] close at rho = 1)
  double coupling;  // K >= 0
  double theta0 = 0.0;
  bool allow_supercritical = false;  // K > 1: no lock guarantees

  CircleMapParams(double omega_in, double coupling_in, double theta0_in = 0.0,
                  bool allow_supercritical_in = false)
      : omega(omega_in == 1.0 ? 1.0 : omega_in - std::floor(omega_in)),
        coupling(coupling_in),
        theta0(theta0_in - std::floor(theta0_in)),
        allow_supercritical(allow_supercritical_in) {
    if (coupling < 0)
      throw std::invalid_argument("CircleMapParams: K must be >= 0");
    if (coupling > 1 && !allow_supercritical)
      throw std::invalid_argument(
          "CircleMapParams: K > 1 requires allow_supercritical");
  }
};

// One step; returns {theta' mod 1, lift increment}.
inline std::pair<double, double> circle_map_step(double theta,
                                                 const CircleMapParams& p) {
  const double increment =
      p.omega + p.coupling / (2 * std::numbers::pi) *
                    std::sin(2 * std::numbers::pi * theta);
  double next = theta + increment;
  return {next - std::floor(next), increment};
}

struct RotationOptions {
  long n_transient = 1000;
  long n_iter = 100000;
  double tol = 1e-7;     // |rho - p/q| required for a lock
  unsigned q_max = 50;
};

struct RotationResult {
  double rho;                  // p/q when locked, else the raw estimate
  double rho_raw;              // full-span lift displacement / steps
  std::optional<Ratio> locked;
  long iterations;
  double residual;             // |measured cycle mean - p/q| when locked,
                               // distance to nearest candidate otherwise
};

namespace detail {

// Continued-fraction convergents of x with denominator <= q_max, ascending.
// Any p/q with |x - p/q| < 1/(2 q^2) appears among them.
inline std::vector<std::pair<long long, long long>> convergent_candidates(
    double x, unsigned q_max) {
  std::vector<std::pair<long long, long long>> out;
  long long p_prev = 0, q_prev = 1, p = 1, q = 0;
  double v = x;
  for (int i = 0; i < 64; ++i) {
    const double fl = std::floor(v);
    if (fl > 1e15)
      break;
    const long long a = static_cast<long long>(fl);
    const long long p_next = a * p + p_prev;
    const long long q_next = a * q + q_prev;
    if (q_next > static_cast<long long>(q_max))
      break;
    p_prev = p; q_prev = q; p = p_next; q = q_next;
    out.emplace_back(p, q);
    const double frac = v - fl;
    if (frac < 1e-15)
      break;
    v = 1.0 / frac;
  }
  return out;
}

}  // namespace detail

inline RotationResult rotation_number(const CircleMapParams& p,
                                      const RotationOptions& opts = {}) {
  const long n_total = opts.n_transient + opts.n_iter;
  double theta = p.theta0;
  double lift = 0.0;
  for (long i = 0; i < n_total; ++i) {
    auto [next, inc] = circle_map_step(theta, p);
    theta = next;
    lift += inc;
  }

  RotationResult result;
  result.iterations = n_total;
  result.rho_raw = lift / static_cast<double>(n_total);
  result.rho = result.rho_raw;
  result.residual = std::numeric_limits<double>::infinity();

  // Smallest-denominator convergent backed by an actual periodic orbit wins.
  auto candidates = detail::convergent_candidates(result.rho_raw, opts.q_max);
  for (auto [pp, qq] : candidates) {
    const double target = static_cast<double>(pp) / qq;
    result.residual = std::min(result.residual,
                               std::abs(result.rho_raw - target));
    const double cycle_tol = std::max(0.5 * opts.tol * qq, 1e-12);
    double probe_theta = theta;
    double mean_cycle = 0.0;
    bool periodic = true;
    constexpr int kCycles = 3;
    for (int c = 0; c < kCycles && periodic; ++c) {
      double cycle_lift = 0.0;
      for (long long s = 0; s < qq; ++s) {
        auto [next, inc] = circle_map_step(probe_theta, p);
        probe_theta = next;
        cycle_lift += inc;
      }
      periodic = std::abs(cycle_lift - pp) < cycle_tol;
      mean_cycle += cycle_lift;
    }
    if (periodic) {
      const double measured = mean_cycle / (kCycles * qq);
      if (std::abs(measured - target) < opts.tol) {
        result.locked = Ratio(pp, qq);
        result.rho = target;
        result.residual = std::abs(measured - target);
        break;
      }
    }
  }
  return result;
}

struct TongueRegion {
  Ratio ratio;
  double coupling;
  double omega_lo;
  double omega_hi;
  double width;  // 0 when the tongue is narrower than the resolution
};

namespace detail {

inline bool locked_at(double omega, double coupling, const Ratio& target,
                      const RotationOptions& opts) {
  if (omega < 0.0 || omega > 1.0)
    return false;
  RotationResult r = rotation_number(CircleMapParams(omega, coupling), opts);
  return r.locked && *r.locked == target;
}

// lo is locked, hi is not; refine the boundary between them.
inline double bisect_edge(double lo, double hi, double coupling,
                          const Ratio& target, const RotationOptions& opts,
                          double resolution) {
  while (std::abs(hi - lo) > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (locked_at(mid, coupling, target, opts))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace detail

namespace detail {

// A point inside the p/q plateau, or nothing if the plateau is narrower
// than the resolution. Bisects the monotone rotation-number estimate
// against the level p/q; the estimator shares theta0 and the step count
// across Omega, so it is monotone by construction and the bracket homes in
// on the true plateau even when the tongue has drifted away from its root
// (for q >= 3 the tongue center drifts by O(K^2) while the width is only
// O(K^q), so the root is generally not inside).
inline std::optional<double> find_tongue_seed(const Ratio& ratio,
                                              double coupling,
                                              const RotationOptions& opts,
                                              double resolution) {
  const double target = ratio.to_double();
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 64 && hi - lo > 0.25 * resolution; ++i) {
    const double mid = 0.5 * (lo + hi);
    RotationResult r = rotation_number(CircleMapParams(mid, coupling), opts);
    if (r.locked && *r.locked == ratio)
      return mid;
    if (r.rho_raw < target)
      lo = mid;
    else
      hi = mid;
  }
  // Domain-edge tongues never produce a crossing strictly inside (0, 1).
  for (double edge : {target, 0.0, 1.0})
    if (locked_at(edge, coupling, ratio, opts))
      return edge;
  return std::nullopt;
}

}  // namespace detail

// [omega_lo, omega_hi] of the p/q tongue at coupling K, found by bisection
// on Omega against the rotation-number lock, clamped to [0, 1].
inline TongueRegion tongue_interval(const Ratio& ratio, double coupling,
                                    const RotationOptions& opts = {},
                                    double resolution = 1e-7) {
  if (ratio < Ratio(0) || ratio > Ratio(1))
    throw std::invalid_argument("tongue_interval: ratio must be in [0, 1]");
  if (!(coupling > 0.0) || coupling > 1.0)
    throw std::invalid_argument("tongue_interval: K must be in (0, 1]");

  const std::optional<double> seed =
      detail::find_tongue_seed(ratio, coupling, opts, resolution);
  if (!seed) {
    const double root = ratio.to_double();
    return {ratio, coupling, root, root, 0.0};
  }

  auto expand_edge = [&](int direction) {
    double inside = *seed;
    double probe = inside;
    bool found_outside = false;
    for (double step = resolution; !found_outside; step *= 2) {
      probe = *seed + direction * step;
      if (probe >= 1.0 || probe <= 0.0) {
        probe = probe >= 1.0 ? 1.0 : 0.0;
        if (detail::locked_at(probe, coupling, ratio, opts))
          return probe;  // tongue reaches the domain edge
        found_outside = true;
        break;
      }
      if (detail::locked_at(probe, coupling, ratio, opts))
        inside = probe;
      else
        found_outside = true;
    }
    return detail::bisect_edge(inside, probe, coupling, ratio, opts, resolution);
  };

  const double hi = expand_edge(+1);
  const double lo = expand_edge(-1);
  return {ratio, coupling, lo, hi, hi - lo};
}

struct StaircasePoint {
  double omega;
  double rho;
  std::optional<Ratio> locked;
};

inline std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2)
    throw std::invalid_argument("uniform_grid: need at least 2 points");
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  return g;
}

// rho as a nondecreasing function of Omega; plateaus at rationals.
inline std::vector<StaircasePoint> devils_staircase(
    double coupling, const std::vector<double>& omega_grid,
    const RotationOptions& opts = {}, unsigned workers = 1) {
  if (!(coupling >= 0.0) || coupling > 1.0)
    throw std::invalid_argument("devils_staircase: K must be in [0, 1]");
  std::vector<StaircasePoint> out(omega_grid.size());
  parallel_for_index(omega_grid.size(), workers, [&](std::size_t i) {
    RotationResult r =
        rotation_number(CircleMapParams(omega_grid[i], coupling), opts);
    out[i] = {omega_grid[i], r.rho, r.locked};
  });
  return out;
}

struct MediantWidthReport {
  bool mediant_is_widest;
  Ratio mediant;
  // (rational, tongue width) for every rational strictly between the
  // parents with denominator <= q_max, in increasing order.
  std::vector<std::pair<Ratio, double>> widths;
};

// Checks that the mediant's tongue is strictly the widest synchronization
// zone between two Farey-adjacent parents.
inline MediantWidthReport mediant_width_check(const Ratio& parent_a,
                                              const Ratio& parent_b,
                                              double coupling,
                                              unsigned q_max = 12,
                                              const RotationOptions& opts = {},
                                              double resolution = 1e-7,
                                              unsigned workers = 1) {
  if (!are_farey_adjacent(parent_a, parent_b))
    throw std::invalid_argument("mediant_width_check: parents must be Farey-adjacent");
  if (!(coupling > 0.0) || !(coupling < 1.0))
    throw std::invalid_argument("mediant_width_check: K must be in (0, 1)");

  const Ratio med = mediant(parent_a, parent_b);
  const std::vector<Ratio> between = rationals_between(parent_a, parent_b, q_max);

  MediantWidthReport report;
  report.mediant = med;
  report.widths.resize(between.size());
  parallel_for_index(between.size(), workers, [&](std::size_t i) {
    TongueRegion t = tongue_interval(between[i], coupling, opts, resolution);
    report.widths[i] = {between[i], t.width};
  });

  double mediant_width = 0.0;
  for (const auto& [r, w] : report.widths)
    if (r == med)
      mediant_width = w;

  report.mediant_is_widest = true;
  for (const auto& [r, w] : report.widths) {
    if (!(r == med) && w >= mediant_width)
      report.mediant_is_widest = false;
  }
  return report;
}

}  // namespace harmonia

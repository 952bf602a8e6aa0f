#pragma once

// Quasiperiodically forced circle map (two independent drives):
//   theta' = theta + Omega + (K/2pi) sin(2pi theta) + (eps/2pi) sin(2pi phi)
//   phi'   = phi + omega_drive (mod 1)
// The second drive frequency is iterated mod 1 while the full f2/f1 value
// is retained for resonance labelling. With eps = 0 every quantity reduces
// exactly to the periodically forced map.

#include "harmonia/circle_map.hpp"
#include "harmonia/parallel.hpp"
#include "harmonia/resonance.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace harmonia {

struct QpForcingParams {
  double omega;        // bare frequency Omega, reduced mod 1
  double coupling;     // K >= 0
  double eps;          // second-drive amplitude >= 0
  double drive_ratio;  // full f2/f1, e.g. 12/7; iterated as its mod-1 part
  double theta0 = 0.0;
  double phi0 = 0.0;

  QpForcingParams(double omega_in, double coupling_in, double eps_in,
                  double drive_ratio_in, double theta0_in = 0.0,
                  double phi0_in = 0.0)
      : omega(omega_in == 1.0 ? 1.0 : omega_in - std::floor(omega_in)),
        coupling(coupling_in),
        eps(eps_in),
        drive_ratio(drive_ratio_in),
        theta0(theta0_in - std::floor(theta0_in)),
        phi0(phi0_in - std::floor(phi0_in)) {
    if (coupling < 0 || eps < 0)
      throw std::invalid_argument("QpForcingParams: K and eps must be >= 0");
    if (!(drive_ratio > 0))
      throw std::invalid_argument("QpForcingParams: drive ratio must be positive");
  }

  double drive_mod1() const {
    return drive_ratio - std::floor(drive_ratio);
  }
};

struct QpStepResult {
  double theta;     // mod 1
  double phi;       // mod 1
  double increment; // lift increment of theta
};

inline QpStepResult qp_step(double theta, double phi, const QpForcingParams& p) {
  const double two_pi = 2 * std::numbers::pi;
  const double increment = p.omega +
                           p.coupling / two_pi * std::sin(two_pi * theta) +
                           p.eps / two_pi * std::sin(two_pi * phi);
  double theta_next = theta + increment;
  double phi_next = phi + p.drive_mod1();
  return {theta_next - std::floor(theta_next), phi_next - std::floor(phi_next),
          increment};
}

struct QpRotationResult {
  double rho;        // f3/f1 in map units: averaged lift displacement
  double half_diff;  // |first-half - second-half| estimate disagreement
  long iterations;
};

// Full-span lift average, monotone in Omega. Convergence confidence comes
// from the agreement of the two half-sample estimates; quasiperiodic
// averaging converges as O(1/n).
inline QpRotationResult qp_rotation_number(const QpForcingParams& p,
                                           long n_transient = 1000,
                                           long n_iter = 100000) {
  const long n_total = n_transient + n_iter;
  const long n_half = n_total / 2;
  double theta = p.theta0;
  double phi = p.phi0;
  double lift = 0.0;
  double lift_half = 0.0;
  for (long i = 0; i < n_total; ++i) {
    QpStepResult s = qp_step(theta, phi, p);
    theta = s.theta;
    phi = s.phi;
    lift += s.increment;
    if (i + 1 == n_half)
      lift_half = lift;
  }
  const double rho1 = lift_half / n_half;
  const double rho2 = (lift - lift_half) / (n_total - n_half);
  return {lift / n_total, std::abs(rho1 - rho2), n_total};
}

struct ThreeFreqPoint {
  double omega;  // bare frequency Omega
  double f3;     // response frequency in units of f1
  std::optional<ResonanceTriple> resonance;  // annotation of its plateau
};

struct ThreeFreqStaircaseOptions {
  long n_transient = 1000;
  long n_iter = 400000;
  double plateau_tol = 1e-5;   // f3 agreement that joins grid cells
  int min_plateau_cells = 4;   // "wider than 3 grid cells"
  long long max_order = 30;
  double resonance_tol = 1e-4;
};

// f3 per grid point; runs of > 3 cells at the same f3 are annotated with
// the lowest-order triple p f1 + q f2 = r f3 against f1 = 1, f2 = drive.
inline std::vector<ThreeFreqPoint> three_freq_staircase(
    double coupling, double eps, double drive_ratio,
    const std::vector<double>& omega_grid,
    const ThreeFreqStaircaseOptions& opts = {}, unsigned workers = 1) {
  std::vector<ThreeFreqPoint> out(omega_grid.size());
  parallel_for_index(omega_grid.size(), workers, [&](std::size_t i) {
    QpForcingParams p(omega_grid[i], coupling, eps, drive_ratio);
    out[i] = {omega_grid[i],
              qp_rotation_number(p, opts.n_transient, opts.n_iter).rho,
              std::nullopt};
  });

  // Plateau annotation: maximal runs of agreeing f3 values.
  std::size_t i = 0;
  while (i < out.size()) {
    std::size_t j = i + 1;
    while (j < out.size() && std::abs(out[j].f3 - out[i].f3) < opts.plateau_tol)
      ++j;
    if (j - i >= static_cast<std::size_t>(opts.min_plateau_cells)) {
      const double f3 = out[i + (j - i) / 2].f3;  // median cell of the run
      auto triple = identify_resonance(1.0, drive_ratio, f3, opts.max_order,
                                       opts.resonance_tol);
      for (std::size_t k = i; k < j; ++k)
        out[k].resonance = triple;
    }
    i = j;
  }
  return out;
}

struct RampsCell {
  double drive_ratio;  // omega axis (f2/f1)
  double omega;        // Omega axis
  double f3;
  std::optional<ResonanceTriple> resonance;
};

struct RampsGridOptions {
  long n_transient = 1000;
  long n_iter = 10000;
  long long max_order = 12;
  double resonance_tol = 1e-3;
  double confirm_tol = 1e-3;  // two-half-sample agreement required to label
};

// Resonance label per (drive ratio, Omega) cell. For a fixed (p, q, r) the
// labelled cells satisfy f3 = (p + q w)/r, affine in the drive ratio w.
inline std::vector<RampsCell> ramps_grid(const std::vector<double>& drive_grid,
                                         const std::vector<double>& omega_grid,
                                         double coupling, double eps,
                                         const RampsGridOptions& opts = {},
                                         unsigned workers = 1) {
  std::vector<RampsCell> out(drive_grid.size() * omega_grid.size());
  parallel_for_index(out.size(), workers, [&](std::size_t idx) {
    const double w = drive_grid[idx / omega_grid.size()];
    const double om = omega_grid[idx % omega_grid.size()];
    QpForcingParams p(om, coupling, eps, w);
    QpRotationResult r = qp_rotation_number(p, opts.n_transient, opts.n_iter);
    RampsCell cell{w, om, r.rho, std::nullopt};
    if (r.half_diff < opts.confirm_tol)
      cell.resonance =
          identify_resonance(1.0, w, r.rho, opts.max_order, opts.resonance_tol);
    out[idx] = cell;
  });
  return out;
}

}  // namespace harmonia

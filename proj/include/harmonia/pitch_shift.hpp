#pragma once

// Residue pitch of a three-component complex tone
// {k w0 + dw, (k+1) w0 + dw, (k+2) w0 + dw}: the perceived pitch follows
// the three-frequency resonance (p, q, r) = (1, 1, 2k+1) applied to the
// two lower partials, giving P(dw) = w0 + 2 dw / (2k+1). Among the triples
// whose line passes through (dw = 0, P = w0), the two-partial sum
// resonance (1, 1, 2k+1) is the lowest-order one with nonzero slope; the
// single-partial lines (1, 0, k) and (0, 1, k+1) bracket its slope.

#include "harmonia/resonance.hpp"

#include <array>
#include <stdexcept>

namespace harmonia {

struct PitchStimulus {
  unsigned k;      // harmonic index of the lowest partial, >= 1
  double w0;       // fundamental spacing, Hz
  double dw;       // uniform partial shift, Hz

  PitchStimulus(unsigned k_in, double w0_in, double dw_in)
      : k(k_in), w0(w0_in), dw(dw_in) {
    if (k == 0)
      throw std::invalid_argument("PitchStimulus: k must be >= 1");
    if (!(w0 > 0))
      throw std::invalid_argument("PitchStimulus: w0 must be positive");
    if (!(k * w0 + dw > 0))
      throw std::invalid_argument("PitchStimulus: partials must stay positive");
  }

  std::array<double, 3> partials() const {
    return {k * w0 + dw, (k + 1) * w0 + dw, (k + 2) * w0 + dw};
  }

  // f = (k+1) w0 + dw, the middle partial.
  double center_frequency() const { return (k + 1) * w0 + dw; }
};

struct PitchLine {
  double slope;       // dP/ddw = 2/(2k+1)
  double intercept;   // P(0) = w0
  ResonanceTriple resonance;
};

inline PitchLine pitch_shift_line(unsigned k, double w0) {
  if (k == 0)
    throw std::invalid_argument("pitch_shift_line: k must be >= 1");
  if (!(w0 > 0))
    throw std::invalid_argument("pitch_shift_line: w0 must be positive");
  const long long r = 2LL * k + 1;
  const double f1 = k * w0;
  const double f2 = (k + 1) * w0;
  ResonanceTriple triple{1, 1, r, f1, f2, (f1 + f2) / r, 0.0};
  return {2.0 / r, w0, triple};
}

struct PitchPrediction {
  double pitch;       // P, Hz
  double shift;       // P - w0
  double slope;       // dP/ddw
  ResonanceTriple resonance;
};

inline PitchPrediction predicted_pitch(const PitchStimulus& s) {
  const PitchLine line = pitch_shift_line(s.k, s.w0);
  const double pitch = line.intercept + line.slope * s.dw;
  return {pitch, pitch - s.w0, line.slope, line.resonance};
}

// P as a function of the center frequency f: P = (2 f - w0)/(2k+1).
inline double pitch_from_center_frequency(unsigned k, double w0, double f) {
  if (k == 0)
    throw std::invalid_argument("pitch_from_center_frequency: k must be >= 1");
  return (2 * f - w0) / (2 * k + 1);
}

}  // namespace harmonia

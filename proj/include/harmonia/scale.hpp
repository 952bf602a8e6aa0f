#pragma once

// Scale construction by proportional division: the Pythagorean core, the
// Zarlino major/minor scales (arithmetic/harmonic means of the fifths), the
// 12-note golden scale with its sqrt(2) tritone, and N-note equal
// temperaments. Every scale carries a construction trace that replays to
// exactly the same note list.

#include "harmonia/means.hpp"
#include "harmonia/rational.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

inline double cents_of(double frequency_ratio) {
  return 1200.0 * std::log2(frequency_ratio);
}

inline double cents_of(const Ratio& r) {
  return cents_of(r.to_double());
}

// A pitch class in [1, 2]: either an exact rational or a tagged irrational
// (e.g. "sqrt2", "2^(7/12)"). Equality on irrationals is tag-based.
class Pitch {
public:
  static Pitch rational(Ratio r) {
    Pitch p;
    p.ratio_ = std::move(r);
    p.value_ = p.ratio_->to_double();
    p.cents_ = cents_of(*p.ratio_);
    return p;
  }

  static Pitch irrational(std::string symbol, double value,
                          std::optional<double> exact_cents = std::nullopt) {
    Pitch p;
    p.symbol_ = std::move(symbol);
    p.value_ = value;
    p.cents_ = exact_cents ? *exact_cents : cents_of(value);
    return p;
  }

  // 2^(e) for rational exponent e; rational pitch when e is an integer.
  static Pitch power_of_two(const Ratio& exponent) {
    if (exponent.is_integer()) {
      const long long e = exponent.num().convert_to<long long>();
      if (e < 0)
        return rational(Ratio(BigInt(1), BigInt(1) << (-e)));
      return rational(Ratio(BigInt(1) << e, BigInt(1)));
    }
    const double e = exponent.to_double();
    std::string symbol = exponent == Ratio(1, 2) ? "sqrt2"
                                                 : "2^(" + exponent.str() + ")";
    // Cents of 2^(p/q) is exactly 1200 p / q; avoid the log round trip.
    return irrational(std::move(symbol), std::exp2(e),
                      1200.0 * exponent.to_double());
  }

  bool is_rational() const { return ratio_.has_value(); }
  const Ratio& ratio() const {
    if (!ratio_)
      throw std::logic_error("Pitch: not a rational pitch");
    return *ratio_;
  }
  const std::string& symbol() const { return symbol_; }
  double value() const { return value_; }
  double cents() const { return cents_; }

  std::string str() const { return ratio_ ? ratio_->str() : symbol_; }

  friend bool operator==(const Pitch& a, const Pitch& b) {
    if (a.is_rational() != b.is_rational())
      return false;
    return a.is_rational() ? *a.ratio_ == *b.ratio_ : a.symbol_ == b.symbol_;
  }

private:
  Pitch() = default;
  std::optional<Ratio> ratio_;
  std::string symbol_;
  double value_ = 1.0;
  double cents_ = 0.0;
};

inline double to_cents(const Pitch& p) { return p.cents(); }

// x -> 2/x within the octave; sqrt2 is self-complementary.
inline Pitch octave_complement(const Pitch& p) {
  if (p.value() < 1.0 - 1e-12 || p.value() > 2.0 + 1e-12)
    throw std::domain_error("octave_complement: pitch outside [1, 2]");
  if (p.is_rational())
    return Pitch::rational(Ratio(2) / p.ratio());
  if (p.symbol() == "sqrt2")
    return p;
  return Pitch::irrational("2/(" + p.symbol() + ")", 2.0 / p.value());
}

struct TraceStep {
  enum class Op {
    literal,          // operands: {r}          -> r
    arithmetic_mean,  // operands: {a, b}       -> (a+b)/2
    harmonic_mean,    // operands: {a, b}       -> 2ab/(a+b)
    ratio_of,         // operands: {a, b}       -> a/b
    power_of_two,     // operands: {e}          -> 2^e
  };
  Op op;
  std::vector<Ratio> operands;
  Pitch result;
};

inline Pitch replay_step(const TraceStep& s) {
  using Op = TraceStep::Op;
  switch (s.op) {
    case Op::literal:
      return Pitch::rational(s.operands.at(0));
    case Op::arithmetic_mean:
      return Pitch::rational(arithmetic_mean(s.operands.at(0), s.operands.at(1)));
    case Op::harmonic_mean:
      return Pitch::rational(harmonic_mean(s.operands.at(0), s.operands.at(1)));
    case Op::ratio_of:
      return Pitch::rational(s.operands.at(0) / s.operands.at(1));
    case Op::power_of_two:
      return Pitch::power_of_two(s.operands.at(0));
  }
  throw std::logic_error("replay_step: unknown op");
}

struct Scale {
  std::string label;
  std::vector<Pitch> notes;       // increasing, 1/1 first, 2/1 last
  std::vector<TraceStep> trace;   // one step per note, insertion order

  // Recomputes every trace step and returns the results sorted by value;
  // equal to `notes` structurally for all built-in constructions.
  std::vector<Pitch> replay() const {
    std::vector<Pitch> out;
    out.reserve(trace.size());
    for (const TraceStep& s : trace)
      out.push_back(replay_step(s));
    std::sort(out.begin(), out.end(),
              [](const Pitch& a, const Pitch& b) { return a.value() < b.value(); });
    return out;
  }
};

namespace detail {

class ScaleBuilder {
public:
  explicit ScaleBuilder(std::string label) { scale_.label = std::move(label); }

  void literal(const Ratio& r) {
    add({TraceStep::Op::literal, {r}, Pitch::rational(r)});
  }
  void am(const Ratio& a, const Ratio& b) {
    add({TraceStep::Op::arithmetic_mean, {a, b},
         Pitch::rational(arithmetic_mean(a, b))});
  }
  void hm(const Ratio& a, const Ratio& b) {
    add({TraceStep::Op::harmonic_mean, {a, b},
         Pitch::rational(harmonic_mean(a, b))});
  }
  void ratio_of(const Ratio& a, const Ratio& b) {
    add({TraceStep::Op::ratio_of, {a, b}, Pitch::rational(a / b)});
  }
  void pow2(const Ratio& e) {
    add({TraceStep::Op::power_of_two, {e}, Pitch::power_of_two(e)});
  }

  Scale finish() {
    std::sort(scale_.notes.begin(), scale_.notes.end(),
              [](const Pitch& a, const Pitch& b) { return a.value() < b.value(); });
    return std::move(scale_);
  }

private:
  void add(TraceStep step) {
    scale_.notes.push_back(step.result);
    scale_.trace.push_back(std::move(step));
  }
  Scale scale_;
};

}  // namespace detail

// [1/1, 9/8, 4/3, 3/2, 2/1]: fifth and fourth as the arithmetic and
// harmonic means of the octave, whole tone as their quotient.
inline Scale pythagorean_core() {
  detail::ScaleBuilder b("pythagorean");
  const Ratio one(1), two(2);
  b.literal(one);
  b.am(one, two);                       // 3/2
  b.hm(one, two);                       // 4/3
  b.ratio_of(Ratio(3, 2), Ratio(4, 3)); // 9/8
  b.literal(two);
  return b.finish();
}

// [1/1, 9/8, 5/4, 4/3, 3/2, 5/3, 15/8, 2/1]: arithmetic means of the fifths
// [1, 3/2], [4/3, 2], [3/2, 9/4] added to the Pythagorean core.
inline Scale zarlino_major() {
  detail::ScaleBuilder b("zarlino-major");
  const Ratio one(1), two(2);
  b.literal(one);
  b.am(one, two);                       // 3/2
  b.hm(one, two);                       // 4/3
  b.ratio_of(Ratio(3, 2), Ratio(4, 3)); // 9/8
  b.am(one, Ratio(3, 2));               // 5/4
  b.am(Ratio(4, 3), two);               // 5/3
  b.am(Ratio(3, 2), Ratio(9, 4));       // 15/8
  b.literal(two);
  return b.finish();
}

// [1/1, 9/8, 6/5, 4/3, 3/2, 8/5, 9/5, 2/1]: harmonic means of the same
// fifths in a single step.
inline Scale zarlino_minor() {
  detail::ScaleBuilder b("zarlino-minor");
  const Ratio one(1), two(2);
  b.literal(one);
  b.am(one, two);                       // 3/2
  b.hm(one, two);                       // 4/3
  b.ratio_of(Ratio(3, 2), Ratio(4, 3)); // 9/8
  b.hm(one, Ratio(3, 2));               // 6/5
  b.hm(Ratio(4, 3), two);               // 8/5
  b.hm(Ratio(3, 2), Ratio(9, 4));       // 9/5
  b.literal(two);
  return b.finish();
}

// Twelve pitch classes plus the octave: both Zarlino mean families, the
// notes 10/9 and 16/15 from the means of the fifth [8/9, 4/3], and the
// sqrt(2) tritone (the geometric mean of the octave). The note set is
// closed under octave complement; 10/9 (not 9/8) represents the second
// degree so that the complement pairing with 9/5 closes.
inline Scale golden_scale_12() {
  detail::ScaleBuilder b("golden-12");
  const Ratio one(1), two(2);
  b.literal(one);
  b.am(one, two);                       // 3/2
  b.hm(one, two);                       // 4/3
  b.am(one, Ratio(3, 2));               // 5/4
  b.hm(one, Ratio(3, 2));               // 6/5
  b.am(Ratio(4, 3), two);               // 5/3
  b.hm(Ratio(4, 3), two);               // 8/5
  b.am(Ratio(3, 2), Ratio(9, 4));       // 15/8
  b.hm(Ratio(3, 2), Ratio(9, 4));       // 9/5
  b.am(Ratio(8, 9), Ratio(4, 3));       // 10/9
  b.hm(Ratio(8, 9), Ratio(4, 3));       // 16/15
  b.pow2(Ratio(1, 2));                  // sqrt2 tritone
  b.literal(two);
  return b.finish();
}

// Notes 2^(i/n), i = 0..n; every step exactly 1200/n cents.
inline Scale equal_temperament(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("equal_temperament: n must be >= 1");
  detail::ScaleBuilder b("equal-" + std::to_string(n));
  for (unsigned i = 0; i <= n; ++i)
    b.pow2(Ratio(i, n));
  return b.finish();
}

struct JustInterval {
  std::string name;
  Ratio ratio;
  bool consonant;
};

// Table of the thirteen named just intervals; the consonant subset has
// eight members (unison through minor third).
inline const std::vector<JustInterval>& just_interval_table() {
  static const std::vector<JustInterval> table = {
      {"Unison", Ratio(1, 1), true},
      {"Octave", Ratio(2, 1), true},
      {"Major Sixth", Ratio(5, 3), true},
      {"Minor Sixth", Ratio(8, 5), true},
      {"Fifth", Ratio(3, 2), true},
      {"Fourth", Ratio(4, 3), true},
      {"Major Third", Ratio(5, 4), true},
      {"Minor Third", Ratio(6, 5), true},
      {"Major Tone", Ratio(9, 8), false},
      {"Minor Tone", Ratio(10, 9), false},
      {"Major Semitone", Ratio(16, 15), false},
      {"Minor Semitone", Ratio(25, 24), false},
      {"Syntonic Comma", Ratio(81, 80), false},
  };
  return table;
}

inline std::vector<JustInterval> consonant_intervals() {
  std::vector<JustInterval> out;
  for (const JustInterval& j : just_interval_table())
    if (j.consonant)
      out.push_back(j);
  return out;
}

}  // namespace harmonia

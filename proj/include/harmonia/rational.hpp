#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
// Canonical form invariant: den > 0 and gcd(|num|, den) == 1 after every
// constructor and operation.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace harmonia {

using BigInt = boost::multiprecision::cpp_int;

// ~100 decimal digits; used wherever a double is not enough
// (continued fractions of irrationals, golden-ratio evaluation).
using Real100 = boost::multiprecision::cpp_bin_float_100;

class Ratio {
public:
  Ratio() : num_(0), den_(1) {}

  Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
      throw std::domain_error("Ratio: zero denominator");
    normalize();
  }

  Ratio(long long num, long long den) : Ratio(BigInt(num), BigInt(den)) {}

  // Integers are rationals with unit denominator.
  explicit Ratio(BigInt n) : num_(std::move(n)), den_(1) {}
  explicit Ratio(long long n) : num_(n), den_(1) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }

  Ratio operator-() const { return Ratio(-num_, den_, no_normalize{}); }

  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.num_ == 0)
      throw std::domain_error("Ratio: division by zero");
    return Ratio(a.num_ * b.den_, a.den_ * b.num_);
  }

  Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
  Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
  Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
  Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

  Ratio reciprocal() const {
    if (num_ == 0)
      throw std::domain_error("Ratio: reciprocal of zero");
    return Ratio(den_, num_);
  }

  // Nonnegative integer exponent.
  Ratio pow(unsigned e) const {
    using boost::multiprecision::pow;
    return Ratio(pow(num_, e), pow(den_, e), no_normalize{});
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const BigInt l = a.num_ * b.den_;
    const BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const { return to_real().convert_to<double>(); }

  Real100 to_real() const {
    return Real100(num_) / Real100(den_);
  }

  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  static Ratio parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
      return Ratio(BigInt(text));
    return Ratio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  }

private:
  struct no_normalize {};
  Ratio(BigInt num, BigInt den, no_normalize)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0)
      den_ = 1;
  }

  BigInt num_;
  BigInt den_;  // > 0
};

inline Ratio abs(const Ratio& r) {
  return r.num() < 0 ? -r : r;
}

}  // namespace harmonia

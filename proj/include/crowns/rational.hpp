#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace crowns {

// Exact rational on int64. All invariants in this library are strict
// inequalities between small fractions, so 64 bits is far more range than
// the arithmetic ever needs; normalization keeps operands tiny anyway.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend constexpr Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Normalized representations are unique, so field comparison is exact.
  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend constexpr bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend constexpr bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend constexpr bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "p/q", or just "p" when integral. Stable across platforms; used in
  // machine-readable output, so do not change the spelling.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace crowns

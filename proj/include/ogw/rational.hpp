#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ogw {

// Exact rational number on 64-bit words. All arithmetic goes through
// 128-bit intermediates and throws std::overflow_error instead of
// silently wrapping. Always stored normalized: den > 0, gcd(num, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Throws std::domain_error when the value is not an integer.
  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("rational is not an integer: " + str());
    return num_;
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  static long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  static Rational from_i128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = from_i128(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace ogw

// Exact rational arithmetic for certifying ranks of integer incidence
// matrices. int64 numerator/denominator with __int128 intermediates;
// overflow throws instead of wrapping.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace orliczlab {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: overflow");
    return static_cast<std::int64_t>(v);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den),
                    checked(static_cast<__int128>(a.den) * b.den));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den),
                    checked(static_cast<__int128>(a.den) * b.den));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num) * b.num),
                    checked(static_cast<__int128>(a.den) * b.den));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(checked(static_cast<__int128>(a.num) * b.den),
                    checked(static_cast<__int128>(a.den) * b.num));
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  bool is_zero() const { return num == 0; }
};

}  // namespace orliczlab

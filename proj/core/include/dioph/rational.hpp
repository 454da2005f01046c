#ifndef DIOPH_RATIONAL_HPP
#define DIOPH_RATIONAL_HPP

#include "dioph/error.hpp"
#include "dioph/int128.hpp"

namespace dioph {

// Exact rational over 128-bit integers; always stored reduced with den > 0.
struct Rational {
  Int128 num = 0;
  Int128 den = 1;

  Rational() = default;
  Rational(Int128 n) : num(n), den(1) {}
  Rational(Int128 n, Int128 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) raise(errc::division_by_zero, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  double to_double() const {
    return double((long double)(num) / (long double)(den));
  }
};

inline std::string to_string(const Rational& r) {
  if (r.den == 1) return to_string(r.num);
  return to_string(r.num) + "/" + to_string(r.den);
}

}  // namespace dioph

#endif

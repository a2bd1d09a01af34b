#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "qrd/errors.hpp"

namespace qrd {

using Int = boost::multiprecision::cpp_int;

// Exact rational number, always reduced, denominator always positive.
struct Rational {
  Int num{0};
  Int den{1};

  Rational() = default;
  Rational(Int n) : num(std::move(n)) {}  // NOLINT: implicit from integer
  Rational(long long n) : num(n) {}       // NOLINT
  Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  Int floor() const {
    if (num >= 0 || num % den == 0) return num / den;
    return num / den - 1;
  }

  // q - floor(q); canonical representative of the integer-shift class of q.
  Rational frac_part() const { return *this - Rational(floor()); }

  // True iff *this - other is an integer.
  bool integer_offset_from(const Rational& other) const {
    return (*this - other).is_integer();
  }

  std::string str() const {
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw domain_error("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace qrd

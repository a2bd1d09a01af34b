#pragma once

#include <string>
#include <utility>

#include "qrd/rational.hpp"

namespace qrd {

// Exact dyadic rational num / 2^den_log2, kept normalized (num odd or zero).
// All densities produced by the analysis are of this form; intermediate
// bookkeeping values may be negative.
struct Dyadic {
  Int num{0};
  unsigned den_log2{0};

  Dyadic() = default;
  Dyadic(Int n, unsigned e) : num(std::move(n)), den_log2(e) { normalize(); }
  static Dyadic from_int(const Int& n) { return Dyadic(n, 0); }

  // 2^e for any integer e (negative e gives a proper dyadic fraction).
  static Dyadic pow2(long e) {
    if (e >= 0) return Dyadic(Int(1) << e, 0);
    return Dyadic(1, static_cast<unsigned>(-e));
  }

  void normalize() {
    if (num == 0) {
      den_log2 = 0;
      return;
    }
    while (den_log2 > 0 && (num & 1) == 0) {
      num >>= 1;
      --den_log2;
    }
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.den_log2, b.den_log2);
    Int n = (a.num << (e - a.den_log2)) + (b.num << (e - b.den_log2));
    return Dyadic(std::move(n), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.den_log2, b.den_log2);
    Int n = (a.num << (e - a.den_log2)) - (b.num << (e - b.den_log2));
    return Dyadic(std::move(n), e);
  }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num * b.num, a.den_log2 + b.den_log2);
  }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num == b.num && a.den_log2 == b.den_log2;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.den_log2, b.den_log2);
    return (a.num << (e - a.den_log2)) < (b.num << (e - b.den_log2));
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }

  Rational to_rational() const { return Rational(num, Int(1) << den_log2); }

  double approx() const {
    double x = num.convert_to<double>();
    for (unsigned i = 0; i < den_log2; ++i) x /= 2.0;
    return x;
  }

  // "3/16" style exact fraction.
  std::string fraction_str() const {
    if (den_log2 == 0) return num.str();
    return num.str() + "/" + (Int(1) << den_log2).str();
  }

  // Exact decimal expansion; always terminates since the denominator is a
  // power of two.
  std::string decimal_str() const {
    Int n = num;
    bool neg = n < 0;
    if (neg) n = -n;
    Int ipart = n >> den_log2;
    Int rem = n - (ipart << den_log2);
    std::string out = (neg ? "-" : "") + ipart.str();
    if (rem != 0) {
      Int five = 1;
      for (unsigned i = 0; i < den_log2; ++i) five *= 5;
      std::string digits = Int(rem * five).str();
      if (digits.size() < den_log2)
        digits.insert(digits.begin(), den_log2 - digits.size(), '0');
      while (!digits.empty() && digits.back() == '0') digits.pop_back();
      out += "." + digits;
    }
    return out;
  }
};

}  // namespace qrd

#pragma once

#include <stdexcept>
#include <string>

#include "zaremba/int128.hpp"

namespace zaremba {

namespace detail {
inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

// Exact non-negative rational. Classification predicates (perfect, abundant,
// h <= H) must be decided exactly; floating point enters only at formula
// evaluation boundaries.
struct Rational {
  u128 num = 0;
  u128 den = 1;

  static Rational of(u128 num, u128 den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    u128 g = detail::gcd_u128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rational{num, den};
  }

  double to_double() const { return double(num) / double(den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  bool operator<(const Rational& o) const {
    u128 lhs, rhs;
    // Reduced cross products stay inside u128 for every value this library
    // produces (inputs are capped at 2^63 and h < H < 8).
    if (__builtin_mul_overflow(num, o.den, &lhs) ||
        __builtin_mul_overflow(o.num, den, &rhs)) {
      return to_double() < o.to_double();
    }
    return lhs < rhs;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string str() const { return to_string(num) + "/" + to_string(den); }
};

}  // namespace zaremba

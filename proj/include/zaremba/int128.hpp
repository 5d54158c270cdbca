#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zaremba {

using u128 = unsigned __int128;
using i128 = __int128;

// All exact values in this library live in the 127-bit unsigned range.
inline constexpr u128 kMaxValue = (u128(1) << 127) - 1;

inline bool mul_overflows(u128 a, u128 b, u128& out) {
  return __builtin_mul_overflow(a, b, &out) || out > kMaxValue;
}

inline u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (mul_overflows(a, b, out)) {
    throw std::overflow_error("checked_mul: product exceeds 127-bit range");
  }
  return out;
}

inline u128 checked_pow(u128 base, std::uint32_t exp) {
  u128 result = 1;
  for (u128 m = base; exp; exp /= 2) {
    if (exp % 2) result = checked_mul(result, m);
    if (exp > 1) m = checked_mul(m, m);
  }
  return result;
}

inline std::string to_string(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(char('0' + int(x % 10)));
    x /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

inline std::string to_string(i128 x) {
  if (x < 0) return "-" + to_string(u128(-x));
  return to_string(u128(x));
}

inline u128 parse_u128(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
  u128 x = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("parse_u128: not a digit: " + s);
    u128 next = x * 10 + u128(c - '0');
    if (next < x || next > kMaxValue) throw std::out_of_range("parse_u128: out of range: " + s);
    x = next;
  }
  return x;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = std::uint64_t(__builtin_sqrt(double(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace zaremba

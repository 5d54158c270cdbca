#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zaremba/int128.hpp"
#include "zaremba/primes.hpp"
#include "zaremba/rational.hpp"

namespace zaremba {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  bool operator==(const PrimePower&) const = default;
};

// Exact prime-power decomposition. Primes are strictly increasing, exponents
// >= 1, and the represented value fits the 127-bit range; n = 1 is the empty
// product.
class Factorization {
 public:
  Factorization() = default;

  static Factorization from_parts(std::vector<PrimePower> parts) {
    std::uint64_t prev = 0;
    u128 value = 1;
    for (const auto& pp : parts) {
      if (pp.prime <= prev) {
        throw std::invalid_argument("Factorization: primes must be strictly increasing");
      }
      if (pp.exponent == 0) {
        throw std::invalid_argument("Factorization: exponents must be >= 1");
      }
      if (!is_prime_u64(pp.prime)) {
        throw std::invalid_argument("Factorization: " + std::to_string(pp.prime) + " is not prime");
      }
      value = checked_mul(value, checked_pow(pp.prime, pp.exponent));
      prev = pp.prime;
    }
    Factorization f;
    f.parts_ = std::move(parts);
    f.value_ = value;
    return f;
  }

  const std::vector<PrimePower>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  u128 value() const { return value_; }

  bool operator==(const Factorization& o) const { return parts_ == o.parts_; }

 private:
  std::vector<PrimePower> parts_;
  u128 value_ = 1;
};

// Trial division over the sieve primes (default cutoff 10^6), then
// Miller-Rabin + Pollard rho for any remaining large cofactor. Valid for
// 1 <= n < 2^63.
inline Factorization factorize(std::uint64_t n) {
  constexpr std::uint64_t kTrialCutoff = 1'000'000;
  if (n == 0 || n >= (1ull << 63)) {
    throw std::out_of_range("factorize: n must be in [1, 2^63)");
  }
  std::vector<PrimePower> parts;
  if (n > 1) {
    auto sieve = acquire_sieve(std::min<std::uint64_t>(kTrialCutoff, n));
    for (std::uint64_t p : sieve->primes()) {
      if (p > kTrialCutoff || p * p > n) break;
      if (n % p == 0) {
        std::uint32_t e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        parts.push_back({p, e});
      }
    }
    if (n > 1) {
      // No factor <= 10^6 remains, so a cofactor below 10^12 is prime.
      std::vector<std::uint64_t> stack{n};
      std::vector<std::uint64_t> primes;
      while (!stack.empty()) {
        std::uint64_t m = stack.back();
        stack.pop_back();
        if (m <= kTrialCutoff * kTrialCutoff || is_prime_u64(m)) {
          primes.push_back(m);
          continue;
        }
        std::uint64_t d = pollard_rho_u64(m);
        stack.push_back(d);
        stack.push_back(m / d);
      }
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        parts.push_back({primes[i], std::uint32_t(j - i)});
        i = j;
      }
      std::sort(parts.begin(), parts.end(),
                [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    }
  }
  return Factorization::from_parts(std::move(parts));
}

// Complete sorted divisor list. Requires the value to fit in a uint64.
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
  if (f.value() > u128(~0ull)) {
    throw std::out_of_range("divisors: value too large to enumerate");
  }
  std::vector<std::uint64_t> divs{1};
  for (const auto& pp : f.parts()) {
    std::size_t old_count = divs.size();
    std::uint64_t power = 1;
    for (std::uint32_t e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < old_count; ++i) {
        divs.push_back(divs[i] * power);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::uint64_t tau_of(const Factorization& f) {
  std::uint64_t t = 1;
  for (const auto& pp : f.parts()) t *= pp.exponent + 1;
  return t;
}

inline u128 sigma_of(const Factorization& f) {
  u128 s = 1;
  for (const auto& pp : f.parts()) {
    u128 term = 1, power = 1;
    for (std::uint32_t e = 1; e <= pp.exponent; ++e) {
      power = checked_mul(power, pp.prime);
      term += power;
    }
    s = checked_mul(s, term);
  }
  return s;
}

inline u128 totient_of(const Factorization& f) {
  u128 phi = 1;
  for (const auto& pp : f.parts()) {
    phi = checked_mul(phi, pp.prime - 1);
    for (std::uint32_t e = 1; e < pp.exponent; ++e) phi = checked_mul(phi, pp.prime);
  }
  return phi;
}

// sigma_k for k in {-1, 0, 1}, exact. k = -1 is h(n) = sigma(n)/n.
inline Rational sigma_k(const Factorization& f, int k) {
  switch (k) {
    case 0:
      return Rational::of(tau_of(f), 1);
    case 1:
      return Rational::of(sigma_of(f), 1);
    case -1:
      return Rational::of(sigma_of(f), f.value());
    default:
      throw std::invalid_argument("sigma_k: k must be -1, 0 or 1");
  }
}

// h(n) = sigma(n)/n and H(n) = n/phi(n); h <= H with equality only at n = 1.
inline std::pair<Rational, Rational> h_and_H(const Factorization& f) {
  return {Rational::of(sigma_of(f), f.value()), Rational::of(f.value(), totient_of(f))};
}

inline bool is_perfect(const Factorization& f) { return sigma_of(f) == 2 * f.value(); }
inline bool is_abundant(const Factorization& f) { return sigma_of(f) > 2 * f.value(); }
inline bool is_deficient(const Factorization& f) { return sigma_of(f) < 2 * f.value(); }

}  // namespace zaremba

#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "zaremba/int128.hpp"

namespace zaremba {

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    return std::uint64_t(u128(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) -> std::uint64_t {
    std::uint64_t result = 1;
    a %= n;
    while (e) {
      if (e & 1) result = mulmod(result, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return result;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent-cycle Pollard rho. Deterministic: the polynomial increment is stepped
// through 1, 2, 3, ... until a factor splits, so repeated runs agree.
inline std::uint64_t pollard_rho_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    return std::uint64_t(u128(a) * b % n);
  };
  auto gcd64 = [](std::uint64_t a, std::uint64_t b) {
    while (b) {
      std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t saved_x = x, saved_y = y;
    int since_check = 0;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor, try next c
      if (++since_check == 64) {
        since_check = 0;
        d = gcd64(diff, n);
        saved_x = x;
        saved_y = y;
      }
    }
    if (d == 1 || d == n) {
      // Redo the last block one step at a time.
      x = saved_x;
      y = saved_y;
      d = 1;
      for (int i = 0; i < 64 && d == 1; ++i) {
        x = f(x);
        y = f(f(y));
        std::uint64_t diff = x > y ? x - y : y - x;
        if (diff == 0) break;
        d = gcd64(diff, n);
      }
    }
    if (d != 1 && d != n) return d;
  }
}

// Bit sieve over odd numbers, with the prime list materialized.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit) : limit_(limit < 2 ? 2 : limit) {
    std::uint64_t half = limit_ / 2 + 1;
    std::vector<std::uint64_t> bits((half + 63) / 64, ~0ull);
    bits[0] &= ~1ull;  // 1 is not prime
    for (std::uint64_t i = 3; i * i <= limit_; i += 2) {
      if (bits[(i / 2) / 64] >> ((i / 2) % 64) & 1) {
        for (std::uint64_t j = i * i / 2; j < half; j += i) {
          bits[j / 64] &= ~(1ull << (j % 64));
        }
      }
    }
    primes_.push_back(2);
    for (std::uint64_t i = 3; i <= limit_; i += 2) {
      if (bits[(i / 2) / 64] >> ((i / 2) % 64) & 1) primes_.push_back(i);
    }
    odd_bits_ = std::move(bits);
  }

  std::uint64_t limit() const { return limit_; }

  bool is_prime(std::uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeSieve::is_prime: beyond sieve limit");
    if (x == 2) return true;
    if (x < 2 || x % 2 == 0) return false;
    return odd_bits_[(x / 2) / 64] >> ((x / 2) % 64) & 1;
  }

  const std::vector<std::uint64_t>& primes() const { return primes_; }

  // 1-based: nth_prime(1) = 2.
  std::uint64_t nth_prime(std::size_t k) const {
    if (k == 0 || k > primes_.size()) {
      throw std::out_of_range("PrimeSieve::nth_prime: index beyond sieve capacity");
    }
    return primes_[k - 1];
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> odd_bits_;
  std::vector<std::uint64_t> primes_;
};

namespace detail {
struct SharedSieveState {
  std::mutex mu;
  std::shared_ptr<const PrimeSieve> sieve;
  std::uint64_t max_limit = 100'000'000;  // configurable capacity cap
};
inline SharedSieveState& shared_sieve_state() {
  static SharedSieveState state;
  return state;
}
}  // namespace detail

inline void set_sieve_capacity(std::uint64_t max_limit) {
  detail::shared_sieve_state().max_limit = max_limit;
}

// Process-wide sieve, built once and grown on demand; callers hold a
// shared_ptr so concurrent growth never invalidates a reader.
inline std::shared_ptr<const PrimeSieve> acquire_sieve(std::uint64_t min_limit = 0) {
  auto& state = detail::shared_sieve_state();
  std::lock_guard<std::mutex> lock(state.mu);
  if (min_limit > state.max_limit) {
    throw std::out_of_range("sieve capacity exceeded (limit " + std::to_string(state.max_limit) +
                            ", requested " + std::to_string(min_limit) + ")");
  }
  if (!state.sieve || state.sieve->limit() < min_limit) {
    std::uint64_t target = state.sieve ? state.sieve->limit() * 2 : 2'000'000;
    if (target < min_limit) target = min_limit;
    if (target > state.max_limit) target = state.max_limit;
    state.sieve = std::make_shared<const PrimeSieve>(target);
  }
  return state.sieve;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
  auto sieve = acquire_sieve(x);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : sieve->primes()) {
    if (p > x) break;
    out.push_back(p);
  }
  return out;
}

// 1-based kth prime.
inline std::uint64_t nth_prime(std::size_t k) {
  if (k == 0) throw std::out_of_range("nth_prime: k must be >= 1");
  std::uint64_t bound = 15;
  if (k >= 6) {
    double kk = double(k);
    bound = std::uint64_t(kk * (std::log(kk) + std::log(std::log(kk)))) + 2;
  }
  auto sieve = acquire_sieve(bound);
  return sieve->nth_prime(k);
}

// Product of the first k primes. Fits 127 bits for k <= 25.
inline u128 primorial(std::size_t k) {
  u128 result = 1;
  if (k == 0) return result;
  std::uint64_t p = nth_prime(k);  // ensures the sieve covers all k primes
  auto sieve = acquire_sieve(p);
  for (std::size_t i = 0; i < k; ++i) {
    result = checked_mul(result, sieve->primes()[i]);
  }
  return result;
}

}  // namespace zaremba

#pragma once

// Small-integer number theory on 64-bit operands: deterministic primality,
// trial-division factorization, modular arithmetic. Inputs throughout this
// project are tiny (p <= 23, n <= 30 in practice); these routines are exact
// for the full uint64 range anyway.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccg {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t acc = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin: the witness set {2,...,37} decides primality
// for every input below 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p, const char* what = "p") {
  if (!is_prime_u64(p)) throw std::invalid_argument(std::string(what) + " must be prime, got " + std::to_string(p));
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

// Trial division. Fine for the degrees and characteristics this project
// handles; do not feed it 60-bit semiprimes.
inline std::vector<PrimePower> factorize_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize_u64: n must be positive");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t q) {
    if (n % q != 0) return;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.push_back({q, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t q = 5; q <= n / q; q += 6) {
    strip(q);
    strip(q + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::uint64_t largest_prime_factor(std::uint64_t n) {
  auto f = factorize_u64(n);
  if (f.empty()) throw std::invalid_argument("largest_prime_factor: n must be >= 2");
  return f.back().prime;
}

// n == p^k for some k >= 1.
inline bool is_power_of(std::uint64_t p, std::uint64_t n) {
  if (p < 2 || n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::optional<std::uint64_t> checked_pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > UINT64_MAX / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ccg

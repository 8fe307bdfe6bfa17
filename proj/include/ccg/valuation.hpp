#pragma once

// p-adic valuations of exact rationals. A Valuation is a finite integer or
// +infinity (the valuation of 0); it satisfies v(xy) = v(x)+v(y) and
// v(x+y) >= min(v(x), v(y)).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ccg/nt.hpp"
#include "ccg/rational.hpp"

namespace ccg {

class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(long long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long long value() const {
    if (infinite_) throw std::domain_error("valuation is infinite");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.v_ + b.v_);
  }
  friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

  std::string str() const { return infinite_ ? "+inf" : std::to_string(v_); }

 private:
  Valuation(bool inf, long long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long long v_;
};

// Exponent of p in a nonzero integer.
inline Valuation vp(const BigInt& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  BigInt y = abs(x);
  long long v = 0;
  BigInt bp(p);
  while (y % bp == 0) {
    y /= bp;
    ++v;
  }
  return Valuation::finite(v);
}

inline Valuation vp(const Rational& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation::finite(vp(numerator(x), p).value() - vp(denominator(x), p).value());
}

}  // namespace ccg

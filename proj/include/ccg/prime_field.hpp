#pragma once

// F_p scalars. PrimeField is the field descriptor consumed by the generic
// linear algebra (elements are canonical residues in [0, p) stored as plain
// uint64); PrimeFieldElem is the self-contained (modulus, value) pair used
// at API boundaries such as reduce_mod_p.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ccg/nt.hpp"
#include "ccg/rational.hpp"
#include "ccg/valuation.hpp"

namespace ccg {

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) { require_prime(p); }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == one(); }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;  // p < 2^63 throughout this project, no overflow
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, p_); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return powmod_u64(a, p_ - 2, p_);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const { return powmod_u64(a, e, p_); }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }
  Elem from_bigint(const BigInt& v) const {
    return static_cast<Elem>(mod_floor(v, BigInt(p_)).convert_to<std::uint64_t>());
  }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem from_string(const std::string& s) const { return from_bigint(BigInt(s)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

struct PrimeFieldElem {
  std::uint64_t modulus;
  std::uint64_t value;  // reduced to [0, modulus)

  friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) = default;
};

inline PrimeFieldElem make_prime_field_elem(std::uint64_t p, const BigInt& v) {
  PrimeField f(p);
  return {p, f.from_bigint(v)};
}

inline PrimeFieldElem field_inverse(const PrimeFieldElem& x) {
  PrimeField f(x.modulus);
  return {x.modulus, f.inv(x.value)};
}

// Residue of a p-adic integer: numerator times inverse of denominator mod p.
// Requires vp(x, p) >= 0.
inline PrimeFieldElem reduce_mod_p(const Rational& x, std::uint64_t p) {
  PrimeField f(p);
  if (vp(x, p) < Valuation::finite(0))
    throw std::domain_error("reduce_mod_p: not a p-adic integer (negative valuation at p=" + std::to_string(p) + ")");
  PrimeField::Elem num = f.from_bigint(numerator(x));
  PrimeField::Elem den = f.from_bigint(denominator(x));
  return {p, f.div(num, den)};
}

}  // namespace ccg

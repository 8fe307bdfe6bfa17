#pragma once

// Field descriptors plugged into the generic matrix/polynomial code.
// A descriptor supplies constants and arithmetic on its Elem type; matrices
// carry their descriptor by value. Two models: RationalField (exact Q) and
// PrimeField (F_p, declared in prime_field.hpp).

#include <concepts>
#include <string>

#include "ccg/prime_field.hpp"
#include "ccg/rational.hpp"

namespace ccg {

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem acc(1);
    while (e != 0) {
      if (e & 1) acc *= a;
      a *= a;
      e >>= 1;
    }
    return acc;
  }

  Elem from_int(long long v) const { return Rational(v); }
  Elem from_bigint(const BigInt& v) const { return Rational(v); }

  std::string to_string(const Elem& a) const { return rational_to_string(a); }
  Elem from_string(const std::string& s) const { return rational_from_string(s); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept FieldDescriptor = requires(const F f, const typename F::Elem a, const typename F::Elem b) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.from_int(1LL) } -> std::convertible_to<typename F::Elem>;
};

inline std::string field_name(const RationalField&) { return "Q"; }
inline std::string field_name(const PrimeField& f) { return "Fp:" + std::to_string(f.modulus()); }

}  // namespace ccg

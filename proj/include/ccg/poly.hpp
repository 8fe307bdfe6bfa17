#pragma once

// Univariate polynomials over a field descriptor. Minimal polynomials are
// computed by Krylov elimination over the matrix's n^2-dimensional
// coordinate space (no factorization anywhere). Irreducibility testing is
// implemented over F_p only (Rabin's criterion).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/matrix.hpp"

namespace ccg {

template <FieldDescriptor F>
class Poly {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { normalize(); }

  static Poly constant(F field, const Elem& c) { return Poly(field, {c}); }
  static Poly x(F field) {
    auto zero = field.zero();
    auto one = field.one();
    return Poly(std::move(field), {zero, one});
  }
  static Poly monomial(F field, std::size_t deg, const Elem& c) {
    std::vector<Elem> v(deg + 1, field.zero());
    v[deg] = c;
    return Poly(std::move(field), std::move(v));
  }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  const Elem& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const F& k = a.field_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), k.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.add(a.coeff(i), b.coeff(i));
    return Poly(k, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    const F& k = a.field_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), k.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.sub(a.coeff(i), b.coeff(i));
    return Poly(k, std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const F& k = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(k);
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (k.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a.c_[i], b.c_[j]));
    }
    return Poly(k, std::move(c));
  }

  Poly scaled(const Elem& s) const {
    std::vector<Elem> c = c_;
    for (Elem& x : c) x = field_.mul(x, s);
    return Poly(field_, std::move(c));
  }

  Poly make_monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize zero polynomial");
    return scaled(field_.inv(c_.back()));
  }

  // Quotient and remainder; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const F& k = a.field_;
    Poly r = a;
    std::vector<Elem> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, k.zero());
    const Elem lead_inv = k.inv(b.c_.back());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      Elem f = k.mul(r.c_.back(), lead_inv);
      q[shift] = k.add(q[shift], f);
      for (std::size_t i = 0; i < b.c_.size(); ++i)
        r.c_[shift + i] = k.sub(r.c_[shift + i], k.mul(f, b.c_[i]));
      r.normalize();
    }
    return {Poly(k, std::move(q)), r};
  }

  Elem eval(const Elem& at) const {
    Elem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, at), c_[i]);
    return acc;
  }

  Matrix<F> eval(const Matrix<F>& a) const {
    if (!a.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
    Matrix<F> acc(field_, a.rows(), a.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * a;
      for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) = field_.add(acc(d, d), c_[i]);
    }
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (field_.is_zero(c_[i])) continue;
      std::string cs = field_.to_string(c_[i]);
      if (!out.empty()) {
        if (!cs.empty() && cs[0] == '-') {
          out += " - ";
          cs = cs.substr(1);
        } else {
          out += " + ";
        }
      }
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;  // ascending; empty means zero
};

// Standard companion matrix of a monic polynomial: ones on the first
// subdiagonal, negated coefficients in the last column.
template <class F>
Matrix<F> companion(const Poly<F>& m) {
  if (!m.is_monic() || m.degree() < 1) throw std::invalid_argument("companion: monic polynomial of degree >= 1 required");
  const F& k = m.field();
  std::size_t n = static_cast<std::size_t>(m.degree());
  Matrix<F> c(k, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = k.one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = k.neg(m.coeff(i));
  return c;
}

// Monic polynomial of least degree annihilating A, found as the first
// linear dependency among vec(I), vec(A), vec(A^2), ...
template <class F>
Poly<F> min_poly(const Matrix<F>& a) {
  if (!a.is_square()) throw std::invalid_argument("min_poly: square matrix required");
  const F& k = a.field();
  const std::size_t dim = a.rows() * a.cols();
  // echelon rows with their A-power combinations
  std::vector<std::vector<typename F::Elem>> rows;
  std::vector<std::size_t> pivots;
  std::vector<Poly<F>> combos;
  Matrix<F> power = Matrix<F>::identity(k, a.rows());
  for (std::size_t deg = 0; deg <= a.rows(); ++deg) {
    std::vector<typename F::Elem> v = vec_row_major(power);
    Poly<F> combo = Poly<F>::monomial(k, deg, k.one());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& c = v[pivots[r]];
      if (k.is_zero(c)) continue;
      auto f = c;  // rows are pivot-normalized
      for (std::size_t j = 0; j < dim; ++j) v[j] = k.sub(v[j], k.mul(f, rows[r][j]));
      combo = combo - combos[r].scaled(f);
    }
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (!k.is_zero(v[j])) {
        piv = j;
        break;
      }
    if (piv == dim) return combo;  // leading coefficient is 1 by construction
    auto norm = k.inv(v[piv]);
    for (std::size_t j = 0; j < dim; ++j) v[j] = k.mul(v[j], norm);
    combo = combo.scaled(norm);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    combos.push_back(std::move(combo));
    power = power * a;
  }
  throw std::runtime_error("min_poly: no dependency found (internal error)");
}

// ---- F_p-specific polynomial machinery ----

inline Poly<PrimeField> poly_mod(const Poly<PrimeField>& a, const Poly<PrimeField>& m) { return divmod(a, m).second; }

inline Poly<PrimeField> poly_gcd(Poly<PrimeField> a, Poly<PrimeField> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.make_monic();
}

inline Poly<PrimeField> poly_powmod(const Poly<PrimeField>& base, BigInt e, const Poly<PrimeField>& m) {
  Poly<PrimeField> acc = Poly<PrimeField>::constant(base.field(), base.field().one());
  Poly<PrimeField> b = poly_mod(base, m);
  while (e != 0) {
    if ((e & 1) != 0) acc = poly_mod(acc * b, m);
    b = poly_mod(b * b, m);
    e >>= 1;
  }
  return acc;
}

// Rabin irreducibility: m (monic, degree d) is irreducible over F_p iff
// x^(p^d) == x mod m and gcd(x^(p^(d/r)) - x, m) = 1 for every prime r | d.
inline bool poly_is_irreducible(const Poly<PrimeField>& m) {
  if (!m.is_monic() || m.degree() < 1) throw std::invalid_argument("irreducibility test needs a monic polynomial of degree >= 1");
  const PrimeField& k = m.field();
  const int d = m.degree();
  if (d == 1) return true;
  const Poly<PrimeField> x = Poly<PrimeField>::x(k);
  BigInt p(k.modulus());
  BigInt pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  if (!(poly_powmod(x, pd, m) == poly_mod(x, m))) return false;
  for (const auto& [r, e] : factorize_u64(static_cast<std::uint64_t>(d))) {
    (void)e;
    BigInt pe = 1;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(d) / r; ++i) pe *= p;
    auto g = poly_gcd(poly_powmod(x, pe, m) - poly_mod(x, m), m);
    if (g.degree() != 0) return false;
  }
  return true;
}

// First monic irreducible of the given degree, scanning constant-first
// coefficient tuples in base-p order. Deterministic.
inline Poly<PrimeField> find_irreducible(const PrimeField& k, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  const std::uint64_t p = k.modulus();
  auto total = checked_pow_u64(p, static_cast<unsigned>(degree));
  if (!total) throw std::invalid_argument("degree too large for exhaustive scan");
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    std::vector<PrimeField::Elem> c(static_cast<std::size_t>(degree) + 1, 0);
    std::uint64_t t = idx;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    c.back() = 1;
    Poly<PrimeField> m(k, std::move(c));
    if (m.degree() == degree && poly_is_irreducible(m)) return m;
  }
  throw std::runtime_error("no irreducible polynomial found (internal error)");
}

// x^p mod m: the Frobenius image of the residue-class generator, i.e. the
// polynomial g with g(C) = C^p for C the companion matrix of m.
inline Poly<PrimeField> frobenius_action(const Poly<PrimeField>& m) {
  const PrimeField& k = m.field();
  return poly_powmod(Poly<PrimeField>::x(k), BigInt(k.modulus()), m);
}

// g composed with itself mod m (used to iterate a Galois action).
template <class F>
Poly<F> compose_mod(const Poly<F>& g, const Poly<F>& h, const Poly<F>& m) {
  const F& k = g.field();
  Poly<F> acc(k);
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    acc = divmod(acc * h, m).second;
    acc = acc + Poly<F>::constant(k, g.coeff(i));
  }
  return acc;
}

}  // namespace ccg

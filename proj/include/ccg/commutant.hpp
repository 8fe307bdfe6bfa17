#pragma once

// Centralizer subspaces and the identical-cell similarity form. A Subspace
// is stored as the reduced row echelon form of its members' row-major
// coordinate vectors, so subspace equality is plain entry comparison and
// the representation is usable as a canonical key.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/matrix.hpp"
#include "ccg/poly.hpp"

namespace ccg {

template <FieldDescriptor F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  // Basis rows are coordinate vectors of n-by-n matrices; canonicalized on
  // construction (RREF, zero rows dropped).
  Subspace(F field, std::size_t n, std::vector<std::vector<Elem>> rows)
      : field_(std::move(field)), n_(n), rows_(field_, rows.size(), n * n) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n * n) throw std::invalid_argument("subspace basis vector has wrong length");
      for (std::size_t j = 0; j < n * n; ++j) rows_(i, j) = rows[i][j];
    }
    std::size_t r = rref_in_place(rows_);
    Matrix<F> trimmed(field_, r, n * n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n * n; ++j) trimmed(i, j) = rows_(i, j);
    rows_ = std::move(trimmed);
  }

  const F& field() const { return field_; }
  std::size_t ambient_n() const { return n_; }
  std::size_t dimension() const { return rows_.rows(); }
  const Matrix<F>& basis_rows() const { return rows_; }

  Matrix<F> basis_matrix(std::size_t i) const {
    if (i >= dimension()) throw std::out_of_range("basis index");
    Matrix<F> m(field_, n_, n_);
    for (std::size_t j = 0; j < n_ * n_; ++j) m(j / n_, j % n_) = rows_(i, j);
    return m;
  }

  bool contains(const Matrix<F>& m) const {
    if (m.rows() != n_ || m.cols() != n_) return false;
    std::vector<Elem> v = vec_row_major(m);
    return contains_vec(v);
  }

  bool contains_vec(std::vector<Elem> v) const {
    const F& k = field_;
    for (std::size_t r = 0; r < rows_.rows(); ++r) {
      std::size_t piv = 0;
      while (piv < v.size() && k.is_zero(rows_(r, piv))) ++piv;
      if (piv == v.size()) continue;
      if (k.is_zero(v[piv])) continue;
      const Elem f = v[piv];  // pivot entries are 1 in RREF
      for (std::size_t j = piv; j < v.size(); ++j) v[j] = k.sub(v[j], k.mul(f, rows_(r, j)));
    }
    for (const Elem& x : v)
      if (!k.is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  F field_;
  std::size_t n_;
  Matrix<F> rows_;  // RREF, dimension() x n^2
};

namespace detail {

// Rows of the linear system "X commutes with A" in the n^2 unknowns vec(X):
// equation (i,j):  sum_k A[i][k] X[k][j] - X[i][k] A[k][j] = 0.
template <class F>
void append_commutation_equations(const Matrix<F>& a, Matrix<F>& sys, std::size_t row_offset) {
  const F& k = a.field();
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = row_offset + i * n + j;
      for (std::size_t l = 0; l < n; ++l) {
        sys(r, l * n + j) = k.add(sys(r, l * n + j), a(i, l));
        sys(r, i * n + l) = k.sub(sys(r, i * n + l), a(l, j));
      }
    }
}

}  // namespace detail

// Basis of C(A) = {X : AX = XA}; always contains I, so dimension >= 1
// (and >= n by the classical bound).
template <class F>
Subspace<F> commutant_basis(const Matrix<F>& a) {
  if (!a.is_square()) throw std::invalid_argument("commutant_basis: square matrix required");
  const std::size_t n = a.rows();
  Matrix<F> sys(a.field(), n * n, n * n);
  detail::append_commutation_equations(a, sys, 0);
  return Subspace<F>(a.field(), n, nullspace_basis(std::move(sys)));
}

// Basis of C(A) n C(B); contains I, so dimension >= 1.
template <class F>
Subspace<F> joint_commutant_basis(const Matrix<F>& a, const Matrix<F>& b) {
  if (!a.is_square() || !b.is_square()) throw std::invalid_argument("joint_commutant_basis: square matrices required");
  if (a.rows() != b.rows() || !(a.field() == b.field()))
    throw std::invalid_argument("joint_commutant_basis: shape or field mismatch");
  const std::size_t n = a.rows();
  Matrix<F> sys(a.field(), 2 * n * n, n * n);
  detail::append_commutation_equations(a, sys, 0);
  detail::append_commutation_equations(b, sys, n * n);
  return Subspace<F>(a.field(), n, nullspace_basis(std::move(sys)));
}

template <class F>
struct CellForm {
  Matrix<F> transform;  // T with X = T^{-1} (C + ... + C) T
  Matrix<F> cell;       // companion matrix C of min_poly(X)
};

// Similarity form for X whose minimal polynomial is irreducible of degree
// d | n: X = T^{-1}(C + ... + C)T with n/d identical companion cells,
// obtained by stacking Krylov chains. Over F_p irreducibility is checked;
// over Q it is the caller's precondition, and any violation surfaces as a
// rank failure or a failed round-trip below.
template <class F>
CellForm<F> identical_cell_form(const Matrix<F>& x) {
  if (!x.is_square()) throw std::invalid_argument("identical_cell_form: square matrix required");
  const F& k = x.field();
  const std::size_t n = x.rows();
  Poly<F> m = min_poly(x);
  const std::size_t d = static_cast<std::size_t>(m.degree());
  if (d == 0 || n % d != 0)
    throw std::domain_error("identical_cell_form: min poly degree does not divide n");
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (!poly_is_irreducible(m)) throw std::domain_error("identical_cell_form: minimal polynomial is reducible");
  }

  // Columns of P are the Krylov chains v, Xv, ..., X^{d-1}v; the chains are
  // grown from the first standard basis vectors independent of what has
  // been collected so far.
  Matrix<F> p(k, n, n);
  Matrix<F> echelon(k, n, n);  // collected vectors, reduced
  std::size_t col = 0, ech_rows = 0;
  auto reduce = [&](std::vector<typename F::Elem> v) {
    for (std::size_t r = 0; r < ech_rows; ++r) {
      std::size_t piv = 0;
      while (piv < n && k.is_zero(echelon(r, piv))) ++piv;
      if (piv == n || k.is_zero(v[piv])) continue;
      auto f = v[piv];
      for (std::size_t j = 0; j < n; ++j) v[j] = k.sub(v[j], k.mul(f, echelon(r, j)));
    }
    return v;
  };
  auto insert = [&](const std::vector<typename F::Elem>& v) {
    auto w = reduce(v);
    std::size_t piv = 0;
    while (piv < n && k.is_zero(w[piv])) ++piv;
    if (piv == n) return false;
    auto norm = k.inv(w[piv]);
    for (std::size_t j = 0; j < n; ++j) echelon(ech_rows, j) = k.mul(w[j], norm);
    ++ech_rows;
    return true;
  };

  for (std::size_t seed = 0; seed < n && col < n; ++seed) {
    std::vector<typename F::Elem> v(n, k.zero());
    v[seed] = k.one();
    if (reduce(v) == std::vector<typename F::Elem>(n, k.zero())) continue;  // already spanned
    std::vector<typename F::Elem> w = v;
    for (std::size_t step = 0; step < d; ++step) {
      if (!insert(w)) throw std::domain_error("identical_cell_form: Krylov chain collapsed (hypotheses violated)");
      for (std::size_t i = 0; i < n; ++i) p(i, col) = w[i];
      ++col;
      if (step + 1 < d) {
        std::vector<typename F::Elem> nw(n, k.zero());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) nw[i] = k.add(nw[i], k.mul(x(i, j), w[j]));
        w = std::move(nw);
      }
    }
  }
  if (col != n) throw std::domain_error("identical_cell_form: could not assemble a full basis");

  Matrix<F> c = companion(m);
  Matrix<F> blocks = c;
  for (std::size_t i = 1; i < n / d; ++i) blocks = direct_sum(blocks, c);
  auto p_inv = inverse(p);
  if (!p_inv) throw std::runtime_error("identical_cell_form: basis matrix singular (internal error)");
  // X * P = P * blocks by construction; verify exactly and return T = P^{-1}.
  if (!(x * p == p * blocks)) throw std::domain_error("identical_cell_form: round-trip verification failed");
  return {*p_inv, c};
}

}  // namespace ccg

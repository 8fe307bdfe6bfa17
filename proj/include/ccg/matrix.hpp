#pragma once

// Dense exact matrices over a field descriptor, plus the elimination
// routines the whole project leans on. Pivoting is always "first nonzero"
// so every echelon form, nullspace basis and inverse is deterministic and
// reproducible across runs and thread counts.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ccg/fields.hpp"

namespace ccg {

template <FieldDescriptor F>
class Matrix {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  static Matrix scalar(F field, std::size_t n, const Elem& lambda) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const F& field() const { return field_; }

  Elem& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  bool is_zero() const {
    for (const Elem& x : e_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  // lambda*I for some lambda (including 0 and 1).
  bool is_scalar() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j) {
          if (!((*this)(i, j) == (*this)(0, 0))) return false;
        } else if (!field_.is_zero((*this)(i, j))) {
          return false;
        }
      }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(const Elem& c) const {
    Matrix s = *this;
    for (Elem& x : s.e_) x = field_.mul(x, c);
    return s;
  }

  const std::vector<Elem>& flat() const { return e_; }
  std::vector<Elem>& flat() { return e_; }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> e_;
};

namespace detail {
template <class F>
void check_compatible(const Matrix<F>& a, const Matrix<F>& b, bool product) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrix field mismatch");
  if (product ? (a.cols() != b.rows()) : (a.rows() != b.rows() || a.cols() != b.cols()))
    throw std::invalid_argument("matrix shape mismatch");
}
}  // namespace detail

template <class F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
  detail::check_compatible(a, b, false);
  Matrix<F> c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

template <class F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b) {
  detail::check_compatible(a, b, false);
  Matrix<F> c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  detail::check_compatible(a, b, true);
  const F& k = a.field();
  Matrix<F> c(k, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto& ail = a(i, l);
      if (k.is_zero(ail)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = k.add(c(i, j), k.mul(ail, b(l, j)));
    }
  return c;
}

template <class F>
bool commute(const Matrix<F>& a, const Matrix<F>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("commute: matrices must be square of equal size");
  return a * b == b * a;
}

template <class F>
Matrix<F> matrix_pow(Matrix<F> a, std::uint64_t e) {
  if (!a.is_square()) throw std::invalid_argument("matrix_pow: square matrix required");
  Matrix<F> acc = Matrix<F>::identity(a.field(), a.rows());
  while (e != 0) {
    if (e & 1) acc = acc * a;
    a = a * a;
    e >>= 1;
  }
  return acc;
}

// Reduced row echelon form in place; returns rank. First-nonzero pivoting.
template <class F>
std::size_t rref_in_place(Matrix<F>& m, std::vector<std::size_t>* pivot_cols = nullptr) {
  const F& k = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && k.is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
    const auto piv_inv = k.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), piv_inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || k.is_zero(m(i, c))) continue;
      const auto f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_in_place(m);
}

template <class F>
typename F::Elem det(Matrix<F> m) {
  if (!m.is_square()) throw std::invalid_argument("det: square matrix required");
  const F& k = m.field();
  auto d = k.one();
  bool negate = false;
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && k.is_zero(m(pr, c))) ++pr;
    if (pr == n) return k.zero();
    if (pr != c) {
      negate = !negate;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(c, j));
    }
    d = k.mul(d, m(c, c));
    const auto piv_inv = k.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (k.is_zero(m(i, c))) continue;
      const auto f = k.mul(m(i, c), piv_inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(c, j)));
    }
  }
  return negate ? k.neg(d) : d;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: square matrix required");
  const F& k = a.field();
  std::size_t n = a.rows();
  Matrix<F> aug(k, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = k.one();
  }
  // invertible iff every pivot lands in the left block
  std::vector<std::size_t> pivots;
  rref_in_place(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  Matrix<F> inv(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Basis of {x : Mx = 0}, one vector per free column, derived from the RREF.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_basis(Matrix<F> m) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  rref_in_place(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Elem> v(m.cols(), k.zero());
    v[f] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m(r, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Matrix<F> direct_sum(const Matrix<F>& a, const Matrix<F>& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("direct_sum: field mismatch");
  Matrix<F> c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

// T^{-1} A T. Throws if T is singular.
template <class F>
Matrix<F> conjugate(const Matrix<F>& t, const Matrix<F>& a) {
  detail::check_compatible(t, a, true);
  auto ti = inverse(t);
  if (!ti) throw std::domain_error("conjugate: transform matrix is singular");
  return (*ti) * a * t;
}

template <class F>
std::vector<typename F::Elem> vec_row_major(const Matrix<F>& a) {
  return a.flat();
}

template <class F>
Matrix<F> matrix_from_vec(const F& field, std::size_t n, const std::vector<typename F::Elem>& v) {
  if (v.size() != n * n) throw std::invalid_argument("matrix_from_vec: size mismatch");
  Matrix<F> a(field, n, n);
  a.flat() = v;
  return a;
}

}  // namespace ccg

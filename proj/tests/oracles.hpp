#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check:
//  - a definition-level commuting-graph model (explicit vertex list,
//    adjacency by commute(), plain queue BFS) for small (p, n);
//  - Samuelson-Berkowitz characteristic polynomial (division-free);
//  - definition-level primality / power-of-p;
//  - deterministic random matrix generators.

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "ccg/matrix.hpp"
#include "ccg/poly.hpp"

namespace ccg::testing {

// ---- naive vertex-level commuting graph ----

struct NaiveGraph {
  std::uint64_t p;
  int n;
  std::vector<Matrix<PrimeField>> vertices;      // nonscalar matrices, lex order
  std::vector<std::vector<std::uint32_t>> nbrs;  // adjacency lists

  // all-pairs distances by BFS; -1 means unreachable
  std::vector<std::vector<int>> all_distances() const {
    std::vector<std::vector<int>> d;
    for (std::uint32_t s = 0; s < vertices.size(); ++s) d.push_back(bfs(s));
    return d;
  }

  std::vector<int> bfs(std::uint32_t s) const {
    std::vector<int> dist(vertices.size(), -1);
    std::queue<std::uint32_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t v : nbrs[u])
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    return dist;
  }
};

inline NaiveGraph naive_graph(std::uint64_t p, int n) {
  PrimeField f(p);
  NaiveGraph g{p, n, {}, {}};
  std::uint64_t space = 1;
  for (int i = 0; i < n * n; ++i) space *= p;
  for (std::uint64_t k = 0; k < space; ++k) {
    Matrix<PrimeField> m(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::uint64_t t = k;
    for (int pos = n * n - 1; pos >= 0; --pos) {
      m(static_cast<std::size_t>(pos / n), static_cast<std::size_t>(pos % n)) = t % p;
      t /= p;
    }
    if (!m.is_scalar()) g.vertices.push_back(std::move(m));
  }
  g.nbrs.resize(g.vertices.size());
  for (std::uint32_t i = 0; i < g.vertices.size(); ++i)
    for (std::uint32_t j = i + 1; j < g.vertices.size(); ++j)
      if (commute(g.vertices[i], g.vertices[j])) {
        g.nbrs[i].push_back(j);
        g.nbrs[j].push_back(i);
      }
  return g;
}

// ---- division-free characteristic polynomial (Samuelson-Berkowitz) ----

template <class F>
Poly<F> char_poly_berkowitz(const Matrix<F>& a) {
  const F& k = a.field();
  const std::size_t n = a.rows();
  // coefficient vectors are descending: c[0] x^deg + ... + c[deg]
  std::vector<typename F::Elem> c = {k.one(), k.neg(a(0, 0))};
  for (std::size_t r = 2; r <= n; ++r) {
    // Toeplitz column: 1, -a_rr, -R A^0 S, -R A^1 S, ... for the leading
    // (r-1)x(r-1) block A, row R and column S bordering it
    std::vector<typename F::Elem> t(r + 1, k.zero());
    t[0] = k.one();
    t[1] = k.neg(a(r - 1, r - 1));
    std::vector<typename F::Elem> v(r - 1);
    for (std::size_t i = 0; i < r - 1; ++i) v[i] = a(i, r - 1);
    for (std::size_t step = 2; step <= r; ++step) {
      typename F::Elem dot = k.zero();
      for (std::size_t i = 0; i < r - 1; ++i) dot = k.add(dot, k.mul(a(r - 1, i), v[i]));
      t[step] = k.neg(dot);
      if (step < r) {
        std::vector<typename F::Elem> nv(r - 1, k.zero());
        for (std::size_t i = 0; i < r - 1; ++i)
          for (std::size_t j = 0; j < r - 1; ++j) nv[i] = k.add(nv[i], k.mul(a(i, j), v[j]));
        v = std::move(nv);
      }
    }
    std::vector<typename F::Elem> nc(c.size() + 1, k.zero());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (i + j < nc.size()) nc[i + j] = k.add(nc[i + j], k.mul(t[i], c[j]));
    c = std::move(nc);
  }
  std::vector<typename F::Elem> ascending(c.rbegin(), c.rend());
  return Poly<F>(k, std::move(ascending));
}

// ---- definition-level integer facts ----

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool naive_is_power_of(std::uint64_t p, std::uint64_t n) {
  for (std::uint64_t v = p; v <= n; v *= p)
    if (v == n) return true;
  return false;
}

// ---- deterministic random matrices ----

inline Matrix<PrimeField> random_fp_matrix(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  Matrix<PrimeField> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % f.modulus();
  return m;
}

inline Matrix<PrimeField> random_invertible_fp(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix<PrimeField> m = random_fp_matrix(f, n, rng);
    if (inverse(m)) return m;
  }
}

inline Matrix<RationalField> random_int_matrix(std::size_t n, long long lo, long long hi, std::mt19937_64& rng) {
  RationalField f;
  Matrix<RationalField> m(f, n, n);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(lo + static_cast<long long>(rng() % span));
  return m;
}

inline Rational random_rational(std::mt19937_64& rng, long long num_span = 41, std::uint64_t den_span = 7) {
  long long num = static_cast<long long>(rng() % static_cast<std::uint64_t>(num_span)) - num_span / 2;
  std::uint64_t den = 1 + rng() % den_span;
  return Rational(num, static_cast<long long>(den));
}

}  // namespace ccg::testing

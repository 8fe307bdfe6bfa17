#include "ccg/graph_engine.hpp"

#include <algorithm>
#include <chrono>
#include <thread>
#include <unordered_map>

namespace ccg {

namespace {

// ---------------------------------------------------------------------
// Quotient model shared by both enumeration paths. Matrices are indexed
// lexicographically over their entry sequence with value order 0..p-1;
// class ids follow the first-seen vertex in that order. Vertices with the
// same commutant subspace have identical neighborhoods, so adjacency is a
// property of classes: class j neighbors class i iff rep_j lies in
// C(rep_i). Neighbor lists are produced by enumerating the span of each
// class's canonical commutant basis and mapping elements to their classes.
// ---------------------------------------------------------------------

struct QuotientModel {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t matrix_space = 0;  // p^(n^2)
  std::uint64_t vertex_count = 0;
  std::vector<std::uint32_t> class_of;       // per lex index; UINT32_MAX on scalars
  std::vector<std::uint64_t> class_members;  // per class
  std::vector<std::uint64_t> class_rep_lex;  // lex index of first member

  bool gf2 = false;
  // GF(2): canonical commutant bases as packed words, bit (i*n+j) = entry (i,j).
  std::vector<std::vector<std::uint32_t>> gf2_basis;
  // generic p: RREF basis rows as byte vectors of length n^2, per class.
  std::vector<std::vector<std::uint8_t>> fp_basis;
};

// ----- GF(2) path (p = 2) -----

inline std::uint32_t gf2_lex_to_word(std::uint64_t k, int nn) {
  // lex entry order: entry (0,0) is the most significant digit of k
  std::uint32_t w = 0;
  for (int pos = 0; pos < nn; ++pos)
    if ((k >> (nn - 1 - pos)) & 1) w |= 1u << pos;
  return w;
}

inline std::uint64_t gf2_word_to_lex(std::uint32_t w, int nn) {
  std::uint64_t k = 0;
  for (int pos = 0; pos < nn; ++pos)
    if ((w >> pos) & 1) k |= std::uint64_t{1} << (nn - 1 - pos);
  return k;
}

inline std::uint32_t gf2_diag_mask(int n) {
  std::uint32_t diag = 0;
  for (int i = 0; i < n; ++i) diag |= 1u << (i * n + i);
  return diag;
}

// RREF over GF(2), columns = bit positions, lowest bit first.
inline void gf2_rref(std::vector<std::uint32_t>& rows, int cols) {
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && ((rows[pr] >> c) & 1) == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    ++r;
  }
  rows.resize(r);
}

// Canonical commutant basis of the matrix packed in `w`.
inline std::vector<std::uint32_t> gf2_commutant_basis(std::uint32_t w, int n) {
  const int nn = n * n;
  std::vector<std::uint32_t> sys(static_cast<std::size_t>(nn), 0);
  auto entry = [&](int i, int j) { return (w >> (i * n + j)) & 1u; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint32_t row = 0;
      for (int l = 0; l < n; ++l) {
        if (entry(i, l)) row ^= 1u << (l * n + j);
        if (entry(l, j)) row ^= 1u << (i * n + l);
      }
      sys[static_cast<std::size_t>(i * n + j)] = row;
    }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (int c = 0; c < nn && r < sys.size(); ++c) {
    std::size_t pr = r;
    while (pr < sys.size() && ((sys[pr] >> c) & 1) == 0) ++pr;
    if (pr == sys.size()) continue;
    std::swap(sys[pr], sys[r]);
    for (std::size_t i = 0; i < sys.size(); ++i)
      if (i != r && ((sys[i] >> c) & 1)) sys[i] ^= sys[r];
    pivots.push_back(static_cast<std::size_t>(c));
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(nn), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::uint32_t> basis;
  for (int f = 0; f < nn; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::uint32_t v = 1u << f;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      if ((sys[row] >> f) & 1) v |= 1u << pivots[row];
    basis.push_back(v);
  }
  gf2_rref(basis, nn);
  return basis;
}

void build_gf2(QuotientModel& m) {
  const int nn = m.n * m.n;
  const std::uint32_t diag = gf2_diag_mask(m.n);
  m.class_of.assign(m.matrix_space, UINT32_MAX);
  std::unordered_map<std::string, std::uint32_t> key_to_class;
  for (std::uint64_t k = 0; k < m.matrix_space; ++k) {
    std::uint32_t w = gf2_lex_to_word(k, nn);
    if (w == 0 || w == diag) continue;  // scalars over F_2
    auto basis = gf2_commutant_basis(w, m.n);
    std::string key(reinterpret_cast<const char*>(basis.data()), basis.size() * sizeof(std::uint32_t));
    auto [it, inserted] = key_to_class.try_emplace(key, static_cast<std::uint32_t>(m.class_rep_lex.size()));
    if (inserted) {
      m.gf2_basis.push_back(std::move(basis));
      m.class_members.push_back(0);
      m.class_rep_lex.push_back(k);
    }
    m.class_of[k] = it->second;
    ++m.class_members[it->second];
    ++m.vertex_count;
  }
}

// Distinct classes met by the nonscalar part of span(basis), Gray-code walk.
std::vector<std::uint32_t> gf2_span_classes(const QuotientModel& m, std::uint32_t cls) {
  const int nn = m.n * m.n;
  const std::uint32_t diag = gf2_diag_mask(m.n);
  const auto& basis = m.gf2_basis[cls];
  std::vector<std::uint32_t> out;
  std::uint32_t w = 0;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t t = 1; t < total; ++t) {
    w ^= basis[static_cast<std::size_t>(__builtin_ctzll(t))];
    if (w == 0 || w == diag) continue;
    out.push_back(m.class_of[gf2_word_to_lex(w, nn)]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ----- generic byte path (odd p) -----

struct FpCtx {
  std::uint64_t p;
  int n;
  int nn;
};

inline void fp_lex_to_bytes(const FpCtx& c, std::uint64_t k, std::uint8_t* out) {
  for (int pos = c.nn - 1; pos >= 0; --pos) {
    out[pos] = static_cast<std::uint8_t>(k % c.p);
    k /= c.p;
  }
}

inline std::uint64_t fp_bytes_to_lex(const FpCtx& c, const std::uint8_t* a) {
  std::uint64_t k = 0;
  for (int pos = 0; pos < c.nn; ++pos) k = k * c.p + a[pos];
  return k;
}

inline bool fp_is_scalar(const FpCtx& c, const std::uint8_t* a) {
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      if (i == j ? a[i * c.n + j] != a[0] : a[i * c.n + j] != 0) return false;
    }
  return true;
}

// RREF of an nrows x nn byte matrix mod p; returns pivot columns.
inline std::vector<int> fp_rref(const FpCtx& c, std::vector<std::uint8_t>& rows, std::size_t nrows) {
  const std::uint64_t p = c.p;
  const int cols = c.nn;
  auto at = [&](std::size_t r, int col) -> std::uint8_t& { return rows[r * cols + col]; };
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < cols && r < nrows; ++col) {
    std::size_t pr = r;
    while (pr < nrows && at(pr, col) == 0) ++pr;
    if (pr == nrows) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
    std::uint64_t pi = powmod_u64(at(r, col), p - 2, p);
    for (int j = col; j < cols; ++j) at(r, j) = static_cast<std::uint8_t>(at(r, j) * pi % p);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || at(i, col) == 0) continue;
      std::uint64_t f = at(i, col);
      for (int j = col; j < cols; ++j)
        at(i, j) = static_cast<std::uint8_t>((at(i, j) + (p - f) * at(r, j)) % p);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

inline std::vector<std::uint8_t> fp_commutant_basis(const FpCtx& c, const std::uint8_t* a) {
  const int n = c.n, nn = c.nn;
  const std::uint64_t p = c.p;
  std::vector<std::uint8_t> sys(static_cast<std::size_t>(nn) * nn, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint8_t* row = sys.data() + static_cast<std::size_t>(i * n + j) * nn;
      for (int l = 0; l < n; ++l) {
        row[l * n + j] = static_cast<std::uint8_t>((row[l * n + j] + a[i * n + l]) % p);
        row[i * n + l] = static_cast<std::uint8_t>((row[i * n + l] + p - a[l * n + j]) % p);
      }
    }
  auto pivots = fp_rref(c, sys, static_cast<std::size_t>(nn));
  std::vector<bool> is_pivot(static_cast<std::size_t>(nn), false);
  for (int col : pivots) is_pivot[static_cast<std::size_t>(col)] = true;
  std::vector<std::uint8_t> basis;
  std::size_t dim = 0;
  for (int f = 0; f < nn; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<std::uint8_t> v(static_cast<std::size_t>(nn), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint8_t coeff = sys[r * nn + f];
      if (coeff) v[static_cast<std::size_t>(pivots[r])] = static_cast<std::uint8_t>((p - coeff) % p);
    }
    basis.insert(basis.end(), v.begin(), v.end());
    ++dim;
  }
  fp_rref(c, basis, dim);
  return basis;
}

void build_fp(QuotientModel& m) {
  FpCtx c{m.p, m.n, m.n * m.n};
  m.class_of.assign(m.matrix_space, UINT32_MAX);
  std::unordered_map<std::string, std::uint32_t> key_to_class;
  std::vector<std::uint8_t> a(static_cast<std::size_t>(c.nn));
  for (std::uint64_t k = 0; k < m.matrix_space; ++k) {
    fp_lex_to_bytes(c, k, a.data());
    if (fp_is_scalar(c, a.data())) continue;
    auto basis = fp_commutant_basis(c, a.data());
    std::string key(reinterpret_cast<const char*>(basis.data()), basis.size());
    auto [it, inserted] = key_to_class.try_emplace(key, static_cast<std::uint32_t>(m.class_rep_lex.size()));
    if (inserted) {
      m.fp_basis.push_back(std::move(basis));
      m.class_members.push_back(0);
      m.class_rep_lex.push_back(k);
    }
    m.class_of[k] = it->second;
    ++m.class_members[it->second];
    ++m.vertex_count;
  }
}

// Odometer walk over span(basis) mod p; each digit increment adds one basis
// row, and a digit wrapping p -> 0 has added p copies, a net no-op.
std::vector<std::uint32_t> fp_span_classes(const QuotientModel& m, std::uint32_t cls) {
  FpCtx c{m.p, m.n, m.n * m.n};
  const auto& basis = m.fp_basis[cls];
  const std::size_t dim = basis.size() / static_cast<std::size_t>(c.nn);
  std::vector<std::uint32_t> out;
  std::vector<std::uint8_t> digits(dim, 0), vec(static_cast<std::size_t>(c.nn), 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= c.p;
  auto add_row = [&](std::size_t j) {
    const std::uint8_t* b = basis.data() + j * static_cast<std::size_t>(c.nn);
    for (int t = 0; t < c.nn; ++t) vec[static_cast<std::size_t>(t)] =
        static_cast<std::uint8_t>((vec[static_cast<std::size_t>(t)] + b[t]) % m.p);
  };
  for (std::uint64_t t = 1; t < total; ++t) {
    std::size_t j = 0;
    while (true) {
      add_row(j);
      if (++digits[j] < m.p) break;
      digits[j] = 0;
      ++j;
    }
    if (fp_is_scalar(c, vec.data())) continue;
    out.push_back(m.class_of[fp_bytes_to_lex(c, vec.data())]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void run_striped(int threads, std::uint32_t count, const std::function<void(std::uint32_t)>& body) {
  if (threads <= 1) {
    for (std::uint32_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::uint32_t i = static_cast<std::uint32_t>(t); i < count; i += static_cast<std::uint32_t>(threads)) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

// ---------------------------------------------------------------------

struct FiniteCommutingGraph::Impl {
  QuotientModel model;
  std::uint32_t classes = 0;
  std::vector<std::vector<std::uint32_t>> nbrs;  // sorted, self excluded
  std::vector<std::uint32_t> comp_of;
  CommutingGraphSummary sum;

  void build_neighbors(int threads) {
    nbrs.assign(classes, {});
    run_striped(threads, classes, [&](std::uint32_t i) {
      auto out = model.gf2 ? gf2_span_classes(model, i) : fp_span_classes(model, i);
      out.erase(std::remove(out.begin(), out.end(), i), out.end());
      nbrs[i] = std::move(out);
    });
  }

  // Single-source BFS levels; -1 where unreachable.
  std::vector<int> bfs_levels(std::uint32_t source) const {
    std::vector<int> dist(classes, kInfiniteDistance);
    std::vector<std::uint32_t> frontier{source}, next;
    dist[source] = 0;
    int level = 0;
    while (!frontier.empty()) {
      ++level;
      next.clear();
      for (std::uint32_t u : frontier)
        for (std::uint32_t v : nbrs[u])
          if (dist[v] == kInfiniteDistance) {
            dist[v] = level;
            next.push_back(v);
          }
      frontier.swap(next);
    }
    return dist;
  }

  // Eccentricity of every class via 64-source batched BFS.
  std::vector<int> all_eccentricities(int threads) const {
    std::vector<int> ecc(classes, 0);
    const std::uint32_t batches = (classes + 63) / 64;
    run_striped(threads, batches, [&](std::uint32_t b) {
      const std::uint32_t base = b * 64;
      const std::uint32_t cnt = std::min<std::uint32_t>(64, classes - base);
      std::vector<std::uint64_t> reached(classes, 0), next(classes, 0);
      for (std::uint32_t i = 0; i < cnt; ++i) reached[base + i] = std::uint64_t{1} << i;
      int level = 0;
      std::uint64_t active = ~std::uint64_t{0};
      while (active) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint32_t u = 0; u < classes; ++u) {
          const std::uint64_t m = reached[u];
          if (!m) continue;
          for (std::uint32_t v : nbrs[u]) next[v] |= m;
        }
        ++level;
        std::uint64_t changed = 0;
        for (std::uint32_t v = 0; v < classes; ++v) {
          const std::uint64_t fresh = next[v] & ~reached[v];
          if (fresh) {
            reached[v] |= fresh;
            changed |= fresh;
          }
        }
        std::uint64_t bits = changed;
        while (bits) {
          ecc[base + static_cast<std::uint32_t>(__builtin_ctzll(bits))] = level;
          bits &= bits - 1;
        }
        active = changed;
      }
    });
    return ecc;
  }

  void solve(int threads, double setup_seconds) {
    auto t0 = std::chrono::steady_clock::now();
    build_neighbors(threads);

    // components, discovered in class-id order
    comp_of.assign(classes, UINT32_MAX);
    std::vector<std::vector<std::uint32_t>> comp_classes;
    for (std::uint32_t c = 0; c < classes; ++c) {
      if (comp_of[c] != UINT32_MAX) continue;
      std::uint32_t id = static_cast<std::uint32_t>(comp_classes.size());
      std::vector<std::uint32_t> stack{c}, members;
      comp_of[c] = id;
      while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        members.push_back(u);
        for (std::uint32_t v : nbrs[u])
          if (comp_of[v] == UINT32_MAX) {
            comp_of[v] = id;
            stack.push_back(v);
          }
      }
      comp_classes.push_back(std::move(members));
    }

    std::vector<int> ecc = all_eccentricities(threads);

    sum.p = model.p;
    sum.n = model.n;
    sum.vertex_count = model.vertex_count;
    sum.class_count = classes;
    sum.component_count = comp_classes.size();
    sum.connected = comp_classes.size() == 1;
    sum.all_components_cliques = true;
    for (const auto& members : comp_classes) {
      ComponentSummary cs;
      cs.classes = members.size();
      int dia = 1;  // every class holds at least the p translates A + lambda*I
      bool clique = true;
      for (std::uint32_t c : members) {
        cs.vertices += model.class_members[c];
        dia = std::max(dia, ecc[c]);
        std::size_t in_comp = 0;
        for (std::uint32_t v : nbrs[c]) in_comp += comp_of[v] == comp_of[c];
        if (in_comp + 1 != members.size()) clique = false;
      }
      cs.diameter = dia;
      cs.clique = clique;
      sum.all_components_cliques &= clique;
      sum.components.push_back(cs);
    }
    sum.diameter = sum.connected ? sum.components[0].diameter : kInfiniteDistance;
    sum.wall_time_seconds = setup_seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

FiniteCommutingGraph::FiniteCommutingGraph(std::uint64_t p, int n, const GraphBudget& budget)
    : impl_(std::make_unique<Impl>()) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (n * n > 30) throw BudgetExceeded("n^2 exceeds the packed-engine limit");
  auto space = checked_pow_u64(p, static_cast<unsigned>(n) * static_cast<unsigned>(n));
  if (!space || *space > budget.max_matrix_space)
    throw BudgetExceeded("graph budget exceeded: p^(n^2) " + (space ? std::to_string(*space) : std::string("overflows")) +
                         " > " + std::to_string(budget.max_matrix_space) + " (exact enumeration refused)");
  auto t0 = std::chrono::steady_clock::now();
  impl_->model.p = p;
  impl_->model.n = n;
  impl_->model.matrix_space = *space;
  impl_->model.gf2 = (p == 2);
  if (impl_->model.gf2)
    build_gf2(impl_->model);
  else
    build_fp(impl_->model);
  impl_->classes = static_cast<std::uint32_t>(impl_->model.class_rep_lex.size());
  double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  impl_->solve(std::max(1, budget.threads), setup);
}

FiniteCommutingGraph::~FiniteCommutingGraph() = default;
FiniteCommutingGraph::FiniteCommutingGraph(FiniteCommutingGraph&&) noexcept = default;
FiniteCommutingGraph& FiniteCommutingGraph::operator=(FiniteCommutingGraph&&) noexcept = default;

std::uint64_t FiniteCommutingGraph::p() const { return impl_->model.p; }
int FiniteCommutingGraph::n() const { return impl_->model.n; }
std::uint64_t FiniteCommutingGraph::vertex_count() const { return impl_->model.vertex_count; }
std::uint32_t FiniteCommutingGraph::class_count() const { return impl_->classes; }
std::uint64_t FiniteCommutingGraph::class_size(std::uint32_t cls) const { return impl_->model.class_members.at(cls); }

std::uint32_t FiniteCommutingGraph::class_of(const Matrix<PrimeField>& a) const {
  const auto& m = impl_->model;
  if (a.field().modulus() != m.p || a.rows() != static_cast<std::size_t>(m.n) || !a.is_square())
    throw std::invalid_argument("class_of: matrix does not live in this graph");
  if (a.is_scalar()) throw std::domain_error("class_of: scalar matrices are not vertices");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) k = k * m.p + a(i, j);
  return m.class_of[k];
}

Matrix<PrimeField> FiniteCommutingGraph::class_representative(std::uint32_t cls) const {
  const auto& m = impl_->model;
  PrimeField f(m.p);
  Matrix<PrimeField> a(f, static_cast<std::size_t>(m.n), static_cast<std::size_t>(m.n));
  std::uint64_t k = m.class_rep_lex.at(cls);
  for (int pos = m.n * m.n - 1; pos >= 0; --pos) {
    a(static_cast<std::size_t>(pos / m.n), static_cast<std::size_t>(pos % m.n)) = k % m.p;
    k /= m.p;
  }
  return a;
}

std::vector<int> FiniteCommutingGraph::distances_from_class(std::uint32_t cls) const {
  if (cls >= impl_->classes) throw std::out_of_range("class id");
  return impl_->bfs_levels(cls);
}

int FiniteCommutingGraph::distance(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b) const {
  std::uint32_t ca = class_of(a), cb = class_of(b);
  if (ca == cb) return a == b ? 0 : 1;
  return impl_->bfs_levels(ca)[cb];
}

const CommutingGraphSummary& FiniteCommutingGraph::summary() const { return impl_->sum; }

CommutingGraphSummary ff_graph_summary(std::uint64_t p, int n, const GraphBudget& budget) {
  return FiniteCommutingGraph(p, n, budget).summary();
}

int ff_distance(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b, const GraphBudget& budget) {
  if (!(a.field() == b.field()) || a.rows() != b.rows() || !a.is_square() || !b.is_square())
    throw std::invalid_argument("ff_distance: matrices must be square over the same F_p");
  if (a.is_scalar() || b.is_scalar()) throw std::domain_error("ff_distance: scalar matrices are not vertices");
  FiniteCommutingGraph g(a.field().modulus(), static_cast<int>(a.rows()), budget);
  return g.distance(a, b);
}

}  // namespace ccg

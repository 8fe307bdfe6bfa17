#pragma once

// Desk-scale construction and verification of the explicit matrices behind
// the diameter-6 mechanism: the cyclic field K = F[C], the twist matrix U
// with U*x = sigma(x)*U for x in K, the block matrix S = [[I,U],[U,-U^3]],
// randomized probes of the non-commuting property, and the mod-p
// chain-reduction algorithm.
//
// U is searched inside the twist space and accepted only when it passes the
// four stated properties (invertibility, U^q scalar, U(I+U) invertible,
// direct K-module sum of full rank); the checks are the contract, not the
// construction path.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ccg/chain.hpp"
#include "ccg/commutant.hpp"
#include "ccg/matrix.hpp"
#include "ccg/poly.hpp"

namespace ccg {

template <FieldDescriptor F>
struct CyclicFieldData {
  F field;
  Poly<F> modulus;        // irreducible monic m of prime degree q
  Matrix<F> C;            // companion(m)
  Poly<F> galois_action;  // g with C -> g(C) generating Gal(K/F)
  int q = 0;
};

// K = F_p[C] for the first monic irreducible of degree q (lexicographic
// coefficient scan); the Galois action is Frobenius, g = x^p mod m.
CyclicFieldData<PrimeField> make_cyclic_field_fp(std::uint64_t p, int q);

// The degree-7 cyclic subfield of the 29th cyclotomic field: minimal
// polynomial of a Gaussian period eta together with the action polynomial g
// sending eta to its conjugate. Shipped as verified integer constants.
CyclicFieldData<RationalField> cyclotomic29_degree7_field();

// Basis of {U : U C = g(C) U}. For a cyclic K/F of degree q this space is
// K * U0 and has F-dimension q.
template <class F>
Subspace<F> frobenius_twist_space(const CyclicFieldData<F>& data) {
  const F& k = data.field;
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (!poly_is_irreducible(data.modulus))
      throw std::domain_error("frobenius_twist_space: modulus is reducible, K is not a field");
  }
  const std::size_t q = static_cast<std::size_t>(data.q);
  const Matrix<F>& c = data.C;
  Matrix<F> g = data.galois_action.eval(c);
  Matrix<F> sys(k, q * q, q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t r = i * q + j;
      for (std::size_t l = 0; l < q; ++l) {
        sys(r, i * q + l) = k.add(sys(r, i * q + l), c(l, j));
        sys(r, l * q + j) = k.sub(sys(r, l * q + j), g(i, l));
      }
    }
  return Subspace<F>(k, q, nullspace_basis(std::move(sys)));
}

struct UChecks {
  bool invertible = false;
  bool qth_power_scalar = false;
  bool shifted_product_invertible = false;  // U(I+U)
  bool direct_sum_full_rank = false;        // rank {C^i U^j} = q^2
  bool all() const { return invertible && qth_power_scalar && shifted_product_invertible && direct_sum_full_rank; }
};

struct USearchStats {
  std::uint64_t candidates = 0;
  std::uint64_t fail_invertible = 0;
  std::uint64_t fail_qth_power = 0;
  std::uint64_t fail_shifted_product = 0;
  std::uint64_t fail_direct_sum = 0;
  std::string most_frequent_failure() const;
};

template <class F>
std::size_t direct_sum_rank(const CyclicFieldData<F>& data, const Matrix<F>& u) {
  const F& k = data.field;
  const std::size_t q = static_cast<std::size_t>(data.q);
  Matrix<F> rows(k, q * q, q * q);
  Matrix<F> ci = Matrix<F>::identity(k, q);
  std::size_t r = 0;
  for (std::size_t i = 0; i < q; ++i) {
    Matrix<F> cu = ci;
    for (std::size_t j = 0; j < q; ++j) {
      auto v = vec_row_major(cu);
      for (std::size_t t = 0; t < q * q; ++t) rows(r, t) = v[t];
      ++r;
      if (j + 1 < q) cu = cu * u;
    }
    ci = ci * data.C;
  }
  return rank(std::move(rows));
}

template <class F>
UChecks verify_U(const CyclicFieldData<F>& data, const Matrix<F>& u) {
  UChecks out;
  out.invertible = inverse(u).has_value();
  out.qth_power_scalar = matrix_pow(u, static_cast<std::uint64_t>(data.q)).is_scalar();
  Matrix<F> shifted = u * (Matrix<F>::identity(data.field, u.rows()) + u);
  out.shifted_product_invertible = inverse(shifted).has_value();
  out.direct_sum_full_rank = direct_sum_rank(data, u) == static_cast<std::size_t>(data.q) * data.q;
  return out;
}

namespace detail {
template <class F>
typename F::Elem random_scalar(const F& k, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    return rng() % k.modulus();
  } else {
    return k.from_int(static_cast<long long>(rng() % 7) - 3);
  }
}
}  // namespace detail

// Search the twist space for a U passing all four checks: basis vectors
// first, then seeded random combinations, up to `budget` candidates.
template <class F>
std::optional<Matrix<F>> find_U(const CyclicFieldData<F>& data, std::uint64_t seed, std::uint64_t budget,
                                USearchStats* stats = nullptr) {
  const F& k = data.field;
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (k.modulus() == 2) throw std::invalid_argument("find_U: characteristic 2 is excluded");
  }
  Subspace<F> twist = frobenius_twist_space(data);
  if (twist.dimension() == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  USearchStats local;
  USearchStats& st = stats ? *stats : local;
  auto candidate = [&](std::uint64_t idx) -> Matrix<F> {
    if (idx < twist.dimension()) return twist.basis_matrix(idx);
    Matrix<F> u(k, twist.ambient_n(), twist.ambient_n());
    for (std::size_t b = 0; b < twist.dimension(); ++b)
      u = u + twist.basis_matrix(b).scaled(detail::random_scalar(k, rng));
    return u;
  };
  for (std::uint64_t idx = 0; idx < budget; ++idx) {
    Matrix<F> u = candidate(idx);
    if (u.is_zero()) continue;
    ++st.candidates;
    UChecks c = verify_U(data, u);
    if (c.all()) return u;
    st.fail_invertible += !c.invertible;
    st.fail_qth_power += !c.qth_power_scalar;
    st.fail_shifted_product += !c.shifted_product_invertible;
    st.fail_direct_sum += !c.direct_sum_full_rank;
  }
  return std::nullopt;
}

// S = [[I, U], [U, -U^3]], invertible whenever U passes its checks.
template <class F>
Matrix<F> build_S(const Matrix<F>& u) {
  const F& k = u.field();
  const std::size_t q = u.rows();
  Matrix<F> i = Matrix<F>::identity(k, q);
  Matrix<F> u3 = u * u * u;
  Matrix<F> s(k, 2 * q, 2 * q);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      s(r, c) = i(r, c);
      s(r, q + c) = u(r, c);
      s(q + r, c) = u(r, c);
      s(q + r, q + c) = k.neg(u3(r, c));
    }
  if (!inverse(s)) throw std::domain_error("build_S: singular S; upstream U is invalid");
  return s;
}

template <FieldDescriptor F>
struct WitnessBundle {
  CyclicFieldData<F> data;
  Matrix<F> U;
  Matrix<F> S;
  Matrix<F> S_inv;
};

template <class F>
WitnessBundle<F> make_witness_bundle(const CyclicFieldData<F>& data, std::uint64_t seed, std::uint64_t budget,
                                     USearchStats* stats = nullptr) {
  auto u = find_U(data, seed, budget, stats);
  if (!u) throw std::runtime_error("find_U: search budget exhausted" + (stats ? " (" + stats->most_frequent_failure() + ")" : std::string()));
  Matrix<F> s = build_S(*u);
  Matrix<F> si = *inverse(s);
  return {data, *u, std::move(s), std::move(si)};
}

// [[a(C), b(C)], [c(C), d(C)]] in M_{2q}(F), the M_2(K) embedding.
template <class F>
Matrix<F> embed_m2k(const CyclicFieldData<F>& data, const Poly<F>& a, const Poly<F>& b, const Poly<F>& c,
                    const Poly<F>& d) {
  const std::size_t q = static_cast<std::size_t>(data.q);
  Matrix<F> blocks[4] = {a.eval(data.C), b.eval(data.C), c.eval(data.C), d.eval(data.C)};
  Matrix<F> m(data.field, 2 * q, 2 * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      m(i, j) = blocks[0](i, j);
      m(i, q + j) = blocks[1](i, j);
      m(q + i, j) = blocks[2](i, j);
      m(q + i, q + j) = blocks[3](i, j);
    }
  return m;
}

struct ProbeReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;  // commuting pairs observed; the claim is 0
  std::uint64_t seed = 0;
};

namespace detail {
template <class F>
Poly<F> random_k_element(const CyclicFieldData<F>& data, std::mt19937_64& rng) {
  std::vector<typename F::Elem> c(static_cast<std::size_t>(data.q));
  for (auto& x : c) x = random_scalar(data.field, rng);
  return Poly<F>(data.field, std::move(c));
}
}  // namespace detail

// Sample nonscalar F, G in M_2(K) and check that F and S^{-1} G S never
// commute. `equal_pair` restricts to the G = F special case.
template <class F>
ProbeReport lemma33_probe(const WitnessBundle<F>& bundle, std::uint64_t trials, std::uint64_t seed,
                          bool equal_pair = false) {
  std::mt19937_64 rng(seed);
  ProbeReport rep{trials, 0, seed};
  auto sample_nonscalar = [&]() {
    while (true) {
      Matrix<F> m = embed_m2k(bundle.data, detail::random_k_element(bundle.data, rng),
                              detail::random_k_element(bundle.data, rng), detail::random_k_element(bundle.data, rng),
                              detail::random_k_element(bundle.data, rng));
      if (!m.is_scalar()) return m;
    }
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    Matrix<F> f = sample_nonscalar();
    Matrix<F> g = equal_pair ? f : sample_nonscalar();
    Matrix<F> conj = bundle.S_inv * g * bundle.S;
    if (f * conj == conj * f) ++rep.failures;
  }
  return rep;
}

// Deterministic search for a nonderogatory A1 in M_2(K) whose algebra
// contains C + C: blocks [[0, gamma],[1, 0]] with gamma = C + a, accepted
// when the minimal polynomial has full degree 2q.
template <class F>
Matrix<F> make_ambient_generator(const WitnessBundle<F>& bundle, std::uint64_t seed, std::uint64_t budget = 64) {
  const CyclicFieldData<F>& d = bundle.data;
  const F& k = d.field;
  std::mt19937_64 rng(seed);
  Poly<F> zero(k);
  Poly<F> one = Poly<F>::constant(k, k.one());
  for (std::uint64_t idx = 0; idx < budget; ++idx) {
    Poly<F> gamma = idx < 8 ? Poly<F>::x(k) + Poly<F>::constant(k, k.from_int(static_cast<long long>(idx)))
                            : detail::random_k_element(d, rng);
    Matrix<F> a1 = embed_m2k(d, zero, gamma, one, zero);
    if (min_poly(a1).degree() == 2 * d.q) return a1;
  }
  throw std::runtime_error("make_ambient_generator: no degree-2q generator found within budget");
}

struct DistanceProbeReport {
  std::size_t joint_commutant_dim = 0;
  bool within_distance_2 = true;
};

// Echo of the distance >= 4 step: A1 nonderogatory with C + C in F[A1],
// B1 = S^{-1} A1 S; their joint commutant should be the scalars only.
template <class F>
DistanceProbeReport distance_lower_probe(const WitnessBundle<F>& bundle, const Matrix<F>& a1) {
  const std::size_t n = 2 * static_cast<std::size_t>(bundle.data.q);
  if (a1.rows() != n || !a1.is_square()) throw std::invalid_argument("distance_lower_probe: A1 must be 2q x 2q");
  if (min_poly(a1).degree() != static_cast<int>(n))
    throw std::domain_error("distance_lower_probe: A1 is not nonderogatory");
  Matrix<F> cc = direct_sum(bundle.data.C, bundle.data.C);
  if (!commute(a1, cc)) throw std::domain_error("distance_lower_probe: C + C does not lie in F[A1]");
  Matrix<F> b1 = bundle.S_inv * a1 * bundle.S;
  auto joint = joint_commutant_basis(a1, b1);
  return {joint.dimension(), joint.dimension() >= 2};
}

// ---- mod-p chain reduction ----

// Normalization loop from the mod-p lower-bound argument: scale by powers
// of p until the minimum entry valuation is 0; while the reduction is a
// scalar lambda*I, subtract the integer lift of lambda and rescale. Only
// scalings and scalar shifts are applied, so commutation with anything X
// commuted with is preserved.
Matrix<RationalField> normalize_matrix(Matrix<RationalField> x, std::uint64_t p);

Matrix<PrimeField> reduce_matrix_mod_p(const Matrix<RationalField>& x, std::uint64_t p);

// Entrywise reduction of a commuting chain over Q to one over F_p of the
// same length: endpoints get a single min-valuation scaling (their reduced
// images are the chain's endpoints and must already be nonscalar), interior
// entries are fully normalized.
CommutingChain<PrimeField> reduce_chain(const CommutingChain<RationalField>& chain, std::uint64_t p);

// ---- aggregated run for the CLI and the acceptance suite ----

struct WitnessRunReport {
  std::string field;
  int q = 0;
  std::uint64_t seed = 0;
  std::string modulus;
  std::string galois_action;
  std::size_t twist_dimension = 0;
  bool u_found = false;
  USearchStats search;
  UChecks checks;
  std::size_t direct_sum_rank_value = 0;
  bool twist_relation_on_basis = false;  // U C^i = g(C)^i U for i < q
  bool s_invertible = false;
  ProbeReport probe;
  ProbeReport probe_equal_pair;
  int ambient_degree = 0;
  DistanceProbeReport distance;
};

template <FieldDescriptor F>
struct WitnessRun {
  WitnessRunReport report;
  std::optional<WitnessBundle<F>> bundle;
  std::optional<Matrix<F>> ambient;
};

WitnessRun<PrimeField> witness_run_fp(std::uint64_t p, int q, std::uint64_t trials, std::uint64_t seed,
                                      std::uint64_t budget = 512);
WitnessRun<RationalField> witness_run_q(int q, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget = 128);

}  // namespace ccg

#include "ccg/witness.hpp"

#include "ccg/valuation.hpp"

namespace ccg {

std::string USearchStats::most_frequent_failure() const {
  struct {
    const char* name;
    std::uint64_t count;
  } fails[] = {{"invertibility", fail_invertible},
               {"qth power not scalar", fail_qth_power},
               {"U(I+U) singular", fail_shifted_product},
               {"direct-sum rank", fail_direct_sum}};
  const auto* worst = &fails[0];
  for (const auto& f : fails)
    if (f.count > worst->count) worst = &f;
  return std::string(worst->name) + " failed " + std::to_string(worst->count) + "/" + std::to_string(candidates) +
         " times";
}

CyclicFieldData<PrimeField> make_cyclic_field_fp(std::uint64_t p, int q) {
  if (p == 2) throw std::invalid_argument("make_cyclic_field_fp: characteristic 2 is excluded");
  require_prime(p);
  require_prime(static_cast<std::uint64_t>(q), "q");
  PrimeField k(p);
  Poly<PrimeField> m = find_irreducible(k, q);
  return {k, m, companion(m), frobenius_action(m), q};
}

CyclicFieldData<RationalField> cyclotomic29_degree7_field() {
  RationalField k;
  // minimal polynomial of the Gaussian period eta = sum of zeta_29^t over
  // t in {1, 12, 17, 28}
  Poly<RationalField> m(k, {Rational(1), Rational(-9), Rational(14), Rational(28), Rational(-7), Rational(-12),
                            Rational(1), Rational(1)});
  // the conjugation eta -> g(eta) generating the cyclic Galois group
  Poly<RationalField> g(k, {Rational(-160, 17), Rational(700, 17), Rational(785, 17), Rational(-350, 17),
                            Rational(-350, 17), Rational(42, 17), Rational(30, 17)});
  return {k, m, companion(m), g, 7};
}

// ---- chain reduction ----

namespace {

// minimum p-adic valuation over the entries; the matrix must be nonzero
long long min_entry_valuation(const Matrix<RationalField>& x, std::uint64_t p) {
  bool seen = false;
  long long best = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Valuation v = vp(x(i, j), p);
      if (v.is_infinite()) continue;
      if (!seen || v.value() < best) {
        best = v.value();
        seen = true;
      }
    }
  if (!seen) throw std::domain_error("zero matrix has no finite valuation");
  return best;
}

Matrix<RationalField> scale_to_min_valuation_zero(Matrix<RationalField> x, std::uint64_t p) {
  long long k = min_entry_valuation(x, p);
  if (k == 0) return x;
  RationalField f;
  Rational scale = k > 0 ? Rational(1) / f.pow(Rational(p), static_cast<std::uint64_t>(k))
                         : f.pow(Rational(p), static_cast<std::uint64_t>(-k));
  return x.scaled(scale);
}

}  // namespace

Matrix<PrimeField> reduce_matrix_mod_p(const Matrix<RationalField>& x, std::uint64_t p) {
  PrimeField k(p);
  Matrix<PrimeField> r(k, x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = reduce_mod_p(x(i, j), p).value;
  return r;
}

Matrix<RationalField> normalize_matrix(Matrix<RationalField> x, std::uint64_t p) {
  require_prime(p);
  if (!x.is_square()) throw std::invalid_argument("normalize_matrix: square matrix required");
  if (x.is_scalar()) throw std::domain_error("normalize_matrix: scalar input (loop would not terminate)");
  while (true) {
    x = scale_to_min_valuation_zero(std::move(x), p);
    Matrix<PrimeField> r = reduce_matrix_mod_p(x, p);
    if (!r.is_scalar()) return x;
    // scalar residue lambda != 0; subtract the integer lift and rescale
    Rational lift(r(0, 0));
    for (std::size_t i = 0; i < x.rows(); ++i) x(i, i) -= lift;
  }
}

CommutingChain<PrimeField> reduce_chain(const CommutingChain<RationalField>& chain, std::uint64_t p) {
  require_prime(p);
  if (chain.empty()) throw std::invalid_argument("reduce_chain: empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].is_scalar())
      throw std::domain_error("reduce_chain: scalar entry at index " + std::to_string(i));
  CommutingChain<PrimeField> out;
  out.reserve(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const bool endpoint = (i == 0 || i + 1 == chain.size());
    Matrix<RationalField> y =
        endpoint ? scale_to_min_valuation_zero(chain[i], p) : normalize_matrix(chain[i], p);
    Matrix<PrimeField> r = reduce_matrix_mod_p(y, p);
    if (r.is_scalar())
      throw std::domain_error("reduce_chain: endpoint " + std::to_string(i) +
                              " reduces to a scalar after min-valuation scaling");
    out.push_back(std::move(r));
  }
  return out;
}

// ---- aggregated runs ----

namespace {

template <class F>
bool twist_relation_on_basis(const CyclicFieldData<F>& data, const Matrix<F>& u) {
  Matrix<F> g = data.galois_action.eval(data.C);
  Matrix<F> ci = Matrix<F>::identity(data.field, static_cast<std::size_t>(data.q));
  Matrix<F> gi = ci;
  for (int i = 0; i < data.q; ++i) {
    if (!(u * ci == gi * u)) return false;
    ci = ci * data.C;
    gi = gi * g;
  }
  return true;
}

template <class F>
WitnessRun<F> witness_run_with(const CyclicFieldData<F>& data, std::uint64_t trials, std::uint64_t seed,
                               std::uint64_t budget) {
  WitnessRun<F> run;
  WitnessRunReport& rep = run.report;
  rep.field = field_name(data.field);
  rep.q = data.q;
  rep.seed = seed;
  rep.modulus = data.modulus.str();
  rep.galois_action = data.galois_action.str();
  rep.twist_dimension = frobenius_twist_space(data).dimension();

  auto u = find_U(data, seed, budget, &rep.search);
  rep.u_found = u.has_value();
  if (!u) return run;

  rep.checks = verify_U(data, *u);
  rep.direct_sum_rank_value = direct_sum_rank(data, *u);
  rep.twist_relation_on_basis = twist_relation_on_basis(data, *u);

  Matrix<F> s = build_S(*u);
  rep.s_invertible = true;  // build_S throws otherwise
  WitnessBundle<F> bundle{data, *u, s, *inverse(s)};

  rep.probe = lemma33_probe(bundle, trials, seed);
  rep.probe_equal_pair = lemma33_probe(bundle, std::max<std::uint64_t>(1, trials / 10), seed + 1, true);

  Matrix<F> a1 = make_ambient_generator(bundle, seed);
  rep.ambient_degree = min_poly(a1).degree();
  rep.distance = distance_lower_probe(bundle, a1);

  run.bundle = std::move(bundle);
  run.ambient = std::move(a1);
  return run;
}

}  // namespace

WitnessRun<PrimeField> witness_run_fp(std::uint64_t p, int q, std::uint64_t trials, std::uint64_t seed,
                                      std::uint64_t budget) {
  return witness_run_with(make_cyclic_field_fp(p, q), trials, seed, budget);
}

WitnessRun<RationalField> witness_run_q(int q, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget) {
  if (q != 7) throw std::invalid_argument("witness_run_q: only the q = 7 cyclotomic instance ships with the library");
  return witness_run_with(cyclotomic29_degree7_field(), trials, seed, budget);
}

}  // namespace ccg

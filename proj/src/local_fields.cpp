#include "ccg/local_fields.hpp"

#include <numeric>
#include <stdexcept>

#include "ccg/nt.hpp"

namespace ccg {

std::uint64_t ExtensionInvariants::total_degree() const {
  auto pk = checked_pow_u64(p, static_cast<unsigned>(wild_exponent_k));
  if (!pk) throw std::invalid_argument("wild degree overflows");
  return residue_degree_f * tame_index_e * *pk;
}

void ExtensionInvariants::validate() const {
  require_prime(p);
  if (base_degree_h < 1 || residue_degree_f < 1 || tame_index_e < 1)
    throw std::invalid_argument("extension invariants must be positive");
  if (tame_index_e % p == 0) throw std::invalid_argument("tame index must be coprime to p");
  // r < gcd(e, p^(h f) - 1), computed mod e to dodge overflow
  std::uint64_t e = tame_index_e;
  std::uint64_t pe = powmod_u64(p, base_degree_h * residue_degree_f, e);
  std::uint64_t g = std::gcd(e, (pe + e - 1) % e);  // gcd(e, p^(hf)-1)
  if (tame_parameter_r >= g) throw std::invalid_argument("tame parameter out of range");
  (void)total_degree();
}

bool primitive_extension_exists(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return is_prime_u64(n) || is_power_of(p, n);
}

bool is_connected(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (n == 2) return false;
  return !primitive_extension_exists(p, n);
}

SubextensionCondition condition_a(std::uint64_t p, std::uint64_t n, std::uint64_t q) {
  require_prime(p);
  require_prime(q, "q");
  if (n % q != 0) throw std::invalid_argument("q must divide n");
  if (q == p) throw std::invalid_argument("q must differ from p");
  if (q * q >= n) throw std::invalid_argument("q^2 must be below n");
  SubextensionCondition out{'a', p, n, q, true, {}};
  for (std::uint64_t f : divisors_u64(n)) {
    if (f % q == 0) continue;
    std::uint64_t residue = (powmod_u64(p, f, q) + q - 1) % q;  // p^f - 1 mod q
    out.evidence.push_back("f=" + std::to_string(f) + ": p^f-1 = " + std::to_string(residue) + " mod " +
                           std::to_string(q) + (residue == 0 ? " (divisible)" : ""));
    if (residue == 0) out.holds = false;
  }
  return out;
}

SubextensionCondition condition_b(std::uint64_t p, std::uint64_t q) {
  require_prime(p);
  require_prime(q, "q");
  SubextensionCondition out{'b', p, 0, q, p % q == 1, {}};
  out.evidence.push_back("p = " + std::to_string(p % q) + " mod " + std::to_string(q));
  return out;
}

SubextensionCondition condition_c(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  SubextensionCondition out{'c', p, n, 0, n % p != 0, {}};
  out.evidence.push_back("n = " + std::to_string(n % p) + " mod p");
  return out;
}

bool small_prime_factor_criterion(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (is_power_of(p, n)) return false;
  std::uint64_t lpf = largest_prime_factor(n);
  return lpf * lpf < n;
}

std::uint64_t count_ramified_quadratic(unsigned d) {
  if (d < 1) throw std::invalid_argument("base degree must be >= 1");
  if (d > 61) throw std::invalid_argument("count overflows 64 bits");
  return (std::uint64_t{1} << (d + 2)) - 2;
}

bool theorem31_group_hypotheses(const GroupHypotheses& g) {
  if (g.group_order == 0 || g.index_k_in_g == 0 || g.index_h_in_k == 0)
    throw std::invalid_argument("group data must be positive");
  if (g.group_order % (g.index_k_in_g * g.index_h_in_k) != 0)
    throw std::invalid_argument("inconsistent subgroup indices");
  return is_prime_u64(g.index_k_in_g) && g.index_k_in_g >= 7 && g.index_h_in_k == 2 && g.k_normal && g.h_maximal;
}

GroupHypotheses c2_wreath_c7_data() {
  // |C2 wr C7| = 2^7 * 7 = 896; K = C2^7 (normal, index 7), H of index 2 in K.
  return {896, 7, 2, true, true};
}

const std::vector<long long>& q2_14_defining_polynomial() {
  static const std::vector<long long> coeffs = {1, 0, 0, 2, 2, 0, 0, 0, 0, 0, 2, 2, -1, 0, 1};
  return coeffs;
}

std::string q2_14_polynomial_provenance() { return "LMFDB p-adic field 2.14.14.13"; }

}  // namespace ccg

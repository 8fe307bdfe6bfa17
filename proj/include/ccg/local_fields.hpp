#pragma once

// Structure theory of finite extensions of Q_p as decidable predicates and
// counting formulas. Extensions are represented only by their invariants
// (residue degree f, tame index e, wild exponent k, tame parameter r);
// there is no element arithmetic here.

#include <cstdint>
#include <string>
#include <vector>

namespace ccg {

// Invariants of an extension L/K with K of degree h over Q_p:
// total degree = f * e * p^k, p does not divide e,
// 0 <= r < gcd(e, p^(h f) - 1).
struct ExtensionInvariants {
  std::uint64_t p = 2;
  std::uint64_t base_degree_h = 1;
  std::uint64_t residue_degree_f = 1;
  std::uint64_t tame_index_e = 1;
  std::uint64_t wild_exponent_k = 0;
  std::uint64_t tame_parameter_r = 0;

  std::uint64_t total_degree() const;
  void validate() const;  // throws std::invalid_argument on violated invariants
};

struct SubextensionCondition {
  char tag = '?';  // 'a', 'b' or 'c'
  std::uint64_t p = 0, n = 0, q = 0;
  bool holds = false;
  std::vector<std::string> evidence;  // each line is a checked congruence
};

// A degree-n extension of Q_p with no intermediate field exists iff n is
// prime or a power of p.
bool primitive_extension_exists(std::uint64_t p, std::uint64_t n);

// Connectivity of the commuting graph over Q_p: false for n = 2, otherwise
// connected iff no primitive degree-n extension exists.
bool is_connected(std::uint64_t p, std::uint64_t n);

// (a) for every divisor f of n with q not dividing f, q does not divide p^f - 1.
SubextensionCondition condition_a(std::uint64_t p, std::uint64_t n, std::uint64_t q);
// (b) p == 1 mod q.
SubextensionCondition condition_b(std::uint64_t p, std::uint64_t q);
// (c) p does not divide n.
SubextensionCondition condition_c(std::uint64_t p, std::uint64_t n);

// Largest prime factor of n squared is below n and n is not a power of p.
bool small_prime_factor_criterion(std::uint64_t p, std::uint64_t n);

// Number of ramified quadratic extensions of the unramified degree-d
// extension of Q_2: |K*/(K*)^2| - 2 = 2^(d+2) - 2. Adding the single
// unramified quadratic extension gives the total quadratic count.
std::uint64_t count_ramified_quadratic(unsigned d);

// User-supplied Galois-group bookkeeping for the diameter-6 sufficient
// condition: [G:K] = q prime >= 7, [K:H] = 2, K normal in G, H contained
// in no proper subgroup of G other than K.
struct GroupHypotheses {
  std::uint64_t group_order = 0;
  std::uint64_t index_k_in_g = 0;
  std::uint64_t index_h_in_k = 0;
  bool k_normal = false;
  bool h_maximal = false;
};

bool theorem31_group_hypotheses(const GroupHypotheses& g);

// The wreath product C2 wr C7 = C2^7 : C7, which satisfies the hypotheses
// above for q = 7.
GroupHypotheses c2_wreath_c7_data();

// Defining polynomial (ascending coefficients) of the degree-14 2-adic
// field whose Galois closure realizes C2 wr C7 over Q_2, shipped as a data
// constant: x^14 - x^12 + 2x^11 + 2x^10 + 2x^4 + 2x^3 + 1.
const std::vector<long long>& q2_14_defining_polynomial();
std::string q2_14_polynomial_provenance();

}  // namespace ccg

#include "doctest.h"

#include "ccg/local_fields.hpp"
#include "ccg/nt.hpp"

#include "oracles.hpp"

using namespace ccg;

TEST_CASE("primitive_extension_exists") {
  CHECK(primitive_extension_exists(2, 8));   // power of p
  CHECK(primitive_extension_exists(3, 5));   // prime
  CHECK_FALSE(primitive_extension_exists(5, 6));
  CHECK(primitive_extension_exists(2, 2));
  CHECK_THROWS_AS(primitive_extension_exists(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(primitive_extension_exists(2, 1), std::invalid_argument);
}

TEST_CASE("is_connected spot values") {
  CHECK(is_connected(2, 14));
  CHECK_FALSE(is_connected(3, 9));
  CHECK_FALSE(is_connected(7, 7));
  CHECK_FALSE(is_connected(5, 2));
  CHECK(is_connected(2, 6));
}

TEST_CASE("connectivity law vs definition-level factorization, p < 100, n <= 100") {
  for (std::uint64_t p = 2; p < 100; ++p) {
    if (!testing::naive_is_prime(p)) continue;
    for (std::uint64_t n = 2; n <= 100; ++n) {
      bool expected = n >= 3 && !testing::naive_is_prime(n) && !testing::naive_is_power_of(p, n);
      CHECK(is_connected(p, n) == expected);
    }
  }
}

TEST_CASE("condition (a)") {
  auto c = condition_a(5, 15, 3);
  CHECK(c.holds);  // f in {1,5}: 4 and 3124, neither divisible by 3
  CHECK(c.evidence.size() == 2);

  auto d = condition_a(2, 12, 3);
  CHECK_FALSE(d.holds);  // f = 4: 3 | 2^4 - 1 = 15

  CHECK(condition_a(2, 15, 3).holds);  // f in {1,5}: 1 and 31

  CHECK_THROWS_AS(condition_a(2, 15, 5), std::invalid_argument);   // q^2 >= n
  CHECK_THROWS_AS(condition_a(3, 15, 3), std::invalid_argument);   // q == p
  CHECK_THROWS_AS(condition_a(2, 15, 7), std::invalid_argument);   // q does not divide n
}

TEST_CASE("condition (b)") {
  CHECK(condition_b(7, 2).holds);
  CHECK_FALSE(condition_b(2, 3).holds);
  CHECK(condition_b(13, 3).holds);
}

TEST_CASE("condition (c)") {
  CHECK(condition_c(2, 15).holds);
  CHECK_FALSE(condition_c(2, 14).holds);
  CHECK(condition_c(3, 14).holds);
}

TEST_CASE("conditions are deterministic and evidence recomputes holds") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    for (std::uint64_t n = 4; n <= 40; ++n) {
      for (const auto& [q, e] : factorize_u64(n)) {
        (void)e;
        if (q == p || q * q >= n) continue;
        auto a1 = condition_a(p, n, q);
        auto a2 = condition_a(p, n, q);
        CHECK(a1.holds == a2.holds);
        CHECK(a1.evidence == a2.evidence);
        // recompute from evidence: (a) holds iff no line is marked divisible
        bool recomputed = true;
        for (const auto& line : a1.evidence)
          if (line.find("(divisible)") != std::string::npos) recomputed = false;
        CHECK(recomputed == a1.holds);
      }
    }
  }
}

TEST_CASE("small_prime_factor_criterion") {
  CHECK(small_prime_factor_criterion(2, 12));       // 3 < sqrt(12)
  CHECK_FALSE(small_prime_factor_criterion(2, 14)); // 7 > sqrt(14)
  CHECK(small_prime_factor_criterion(2, 18));       // 3 < sqrt(18)
  CHECK_FALSE(small_prime_factor_criterion(2, 16)); // power of p
  CHECK(small_prime_factor_criterion(3, 16));       // 2 < 4, not a power of 3
}

TEST_CASE("count_ramified_quadratic") {
  CHECK(count_ramified_quadratic(7) == 510);
  CHECK(count_ramified_quadratic(1) == 6);
  CHECK(count_ramified_quadratic(1) + 1 == 7);  // all quadratic extensions of Q_2
  CHECK(count_ramified_quadratic(2) == 14);
  for (unsigned d = 1; d <= 20; ++d) CHECK(count_ramified_quadratic(d) == (1ull << (d + 2)) - 2);
  CHECK_THROWS_AS(count_ramified_quadratic(0), std::invalid_argument);
  CHECK_THROWS_AS(count_ramified_quadratic(62), std::invalid_argument);
}

TEST_CASE("theorem31_group_hypotheses") {
  CHECK(theorem31_group_hypotheses(c2_wreath_c7_data()));
  CHECK(c2_wreath_c7_data().group_order == 896);

  GroupHypotheses g = c2_wreath_c7_data();
  g.index_h_in_k = 3;
  g.group_order = 7 * 3 * 64;
  CHECK_FALSE(theorem31_group_hypotheses(g));

  g = c2_wreath_c7_data();
  g.index_k_in_g = 4;  // not prime
  g.group_order = 896;
  CHECK_FALSE(theorem31_group_hypotheses(g));

  g = c2_wreath_c7_data();
  g.index_k_in_g = 5;  // prime but below 7
  g.group_order = 2 * 5 * 64;
  CHECK_FALSE(theorem31_group_hypotheses(g));

  g = c2_wreath_c7_data();
  g.k_normal = false;
  CHECK_FALSE(theorem31_group_hypotheses(g));

  g = c2_wreath_c7_data();
  g.group_order = 897;  // not divisible by 14
  CHECK_THROWS_AS(theorem31_group_hypotheses(g), std::invalid_argument);
}

TEST_CASE("extension invariants validate") {
  // the diameter-6 instance shape over Q_2: residue degree 7 and a wild
  // quadratic step (e = 2 is divisible by p, so it counts as p^k)
  ExtensionInvariants e{2, 1, 7, 1, 1, 0};
  e.validate();
  CHECK(e.total_degree() == 14);

  ExtensionInvariants bad = e;
  bad.tame_index_e = 4;  // p | e
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  // tame quadratic over Q_3: gcd(e, p^(hf)-1) = gcd(2, 2) = 2, so r < 2
  ExtensionInvariants tame{3, 1, 1, 2, 0, 1};
  tame.validate();
  CHECK(tame.total_degree() == 2);
  ExtensionInvariants r = tame;
  r.tame_parameter_r = 5;
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
}

TEST_CASE("q2_14 defining polynomial constant") {
  const auto& c = q2_14_defining_polynomial();
  // x^14 - x^12 + 2x^11 + 2x^10 + 2x^4 + 2x^3 + 1
  REQUIRE(c.size() == 15);
  CHECK(c[14] == 1);
  CHECK(c[12] == -1);
  CHECK(c[11] == 2);
  CHECK(c[10] == 2);
  CHECK(c[4] == 2);
  CHECK(c[3] == 2);
  CHECK(c[0] == 1);
  long long sum_abs = 0;
  for (long long v : c) sum_abs += v < 0 ? -v : v;
  CHECK(sum_abs == 11);  // no stray coefficients
  CHECK(q2_14_polynomial_provenance().find("2.14.14.13") != std::string::npos);
}

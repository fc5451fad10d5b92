#include <doctest.h>

#include "nlrunge/descent.hpp"

using namespace nlrunge;

TEST_CASE("delta_exponent matches the valuation of the cyclotomic quotient") {
  CHECK(delta_exponent(BigInt(4), 3) == 1);   // ord_3(21) = 1
  CHECK(delta_exponent(BigInt(2), 3) == 0);   // 7 coprime to 3
  CHECK(delta_exponent(BigInt(6), 5) == 1);   // 1555 = 5 * 311
  CHECK(delta_exponent(BigInt(-5), 3) == 1);  // -5 = 1 mod 3
  CHECK_THROWS_AS(delta_exponent(BigInt(1), 3), precondition_error);
  CHECK_THROWS_AS(delta_exponent(BigInt(4), 2), precondition_error);
}

TEST_CASE("mod-p^2 law: repunit(X, p) = p mod p^2 when X = 1 mod p") {
  for (unsigned long p = 3; p <= 50; p += 2) {
    if (!is_prime_ul(p)) continue;
    BigInt p2 = BigInt(p) * p;
    long kmax = 10000 / static_cast<long>(p);
    for (long k = -kmax; k <= kmax; ++k) {
      long X = 1 + k * static_cast<long>(p);
      if (X == 1 || X == 0 || X == -1) continue;
      BigInt rem = repunit(BigInt(X), p) % p2;
      if (rem < 0) rem += p2;
      CHECK(rem == p);
    }
  }
}

TEST_CASE("shorey admissibility") {
  CHECK(shorey_admissible(35, 5));  // Q_7 = 6, gcd(5,6) = 1
  CHECK(shorey_admissible(35, 7));  // Q_5 = 4, gcd(7,4) = 1
  CHECK(!shorey_admissible(9, 3));  // gcd(3,3) = 3
}

TEST_CASE("shorey_split computes the two factor equations") {
  NLCandidate cand{BigInt(2), 35, 5, std::nullopt};
  auto res = shorey_split(cand, 5);
  CHECK(res.top == repunit(BigInt(32), 7));
  CHECK(res.bottom == 31);
  CHECK(res.product_ok);
  CHECK_THROWS_AS(shorey_split(NLCandidate{BigInt(2), 9, 3, std::nullopt}, 3),
                  precondition_error);
  CHECK_THROWS_AS(shorey_split(NLCandidate{BigInt(2), 36, 3, std::nullopt}, 4),
                  precondition_error);  // n even
}

TEST_CASE("tower telescoping identity on the full grid") {
  for (long x = -30; x <= 30; ++x) {
    if (x >= -1 && x <= 1) continue;
    for (unsigned long n = 3; n <= 199; n += 2) {
      auto tower = build_tower(NLCandidate{BigInt(x), n, 5, std::nullopt});
      CHECK(tower.product_identity_ok);
      CHECK(tower.delta_t_independent);
    }
  }
}

TEST_CASE("tower delta values") {
  auto t1 = build_tower(NLCandidate{BigInt(4), 9, 3, std::nullopt});
  REQUIRE(t1.entries.size() == 2);
  CHECK(t1.entries[0].delta == 1);  // 4 = 1 mod 3
  CHECK(t1.entries[1].delta == 1);

  auto t2 = build_tower(NLCandidate{BigInt(2), 25, 5, std::nullopt});
  REQUIRE(t2.entries.size() == 2);
  CHECK(t2.entries[0].delta == 0);
  CHECK(t2.entries[1].delta == 0);
}

TEST_CASE("tower entry count is Omega(n) and M values are correct") {
  auto tower = build_tower(NLCandidate{BigInt(2), 45, 5, std::nullopt});
  REQUIRE(tower.entries.size() == 3);  // 45 = 3^2 * 5
  CHECK(tower.entries[0].M == 5);      // 3^0 * 5
  CHECK(tower.entries[1].M == 15);     // 3^1 * 5
  CHECK(tower.entries[2].M == 1);      // 5^0
}

TEST_CASE("tower roots found on a genuine tower of q-th powers") {
  // x = 2, n = 3: not a descent input (n must be odd, it is), quotient checks.
  auto tower = build_tower(NLCandidate{BigInt(4), 9, 3, std::nullopt});
  // (4^3-1)/(4-1) = 21 = 3 * 7, delta = 1, stripped 7: no cube, recorded.
  CHECK(!tower.all_roots_found);
  CHECK(tower.entries[0].quotient == 21);
}

TEST_CASE("proposition-1 filter") {
  auto r1 = filter_proposition1(NLCandidate{BigInt(3), 5, 2, std::nullopt});
  CHECK(r1.known);
  bool q_flagged = false;
  for (const auto& v : r1.violations)
    if (v.find("q >= 3") != std::string::npos) q_flagged = true;
  CHECK(q_flagged);

  auto r2 = filter_proposition1(NLCandidate{BigInt(18), 3, 3, std::nullopt});
  CHECK(r2.known);
  bool least_flagged = false;
  for (const auto& v : r2.violations)
    if (v.find("least prime") != std::string::npos) least_flagged = true;
  CHECK(least_flagged);

  auto r3 = filter_proposition1(NLCandidate{BigInt(10007), 35, 5, std::nullopt});
  CHECK(!r3.known);
  for (const auto& v : r3.violations) CHECK(v.find("10^4") == std::string::npos);
  // 10007 is prime and 10007 = 2 mod 5: the divisor condition fails.
  bool div_flagged = false;
  for (const auto& v : r3.violations)
    if (v.find("prime divisor = 1 mod q") != std::string::npos) div_flagged = true;
  CHECK(div_flagged);

  // 10^4 + 7 = 3 mod 7; 10007 prime; but 29 = 1 mod 7 and 29 | 29 * 10007.
  auto r4 = filter_proposition1(NLCandidate{BigInt(29) * 10007, 35, 7, std::nullopt});
  for (const auto& v : r4.violations) CHECK(v.find("prime divisor") == std::string::npos);
}

TEST_CASE("candidate validation") {
  CHECK_THROWS_AS(build_tower(NLCandidate{BigInt(1), 9, 3, std::nullopt}), precondition_error);
  CHECK_THROWS_AS(build_tower(NLCandidate{BigInt(2), 8, 3, std::nullopt}), precondition_error);
  CHECK_THROWS_AS(build_tower(NLCandidate{BigInt(2), 2, 3, std::nullopt}), precondition_error);
}

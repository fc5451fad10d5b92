#ifndef NLRUNGE_DESCENT_HPP
#define NLRUNGE_DESCENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "nlrunge/exact.hpp"

namespace nlrunge {

/// A candidate (x, n, q[, y]) for the repunit-power equation.
struct NLCandidate {
  BigInt x;
  unsigned long n = 0;
  unsigned long q = 0;
  std::optional<BigInt> y;
};

/// Returns 1 iff X = 1 mod p, and asserts ord_p((X^p-1)/(X-1)) equals that.
int delta_exponent(const BigInt& X, unsigned long p);

/// gcd(D, n/D) = gcd(D, Q_{n/D}) = 1, for D a divisor of odd n.
bool shorey_admissible(unsigned long n, unsigned long D);

struct SplitResult {
  BigInt top;                  // ((x^D)^{n/D}-1)/(x^D-1)
  BigInt bottom;               // (x^D-1)/(x-1)
  bool product_ok = false;     // top * bottom == repunit(x, n)
  std::optional<BigInt> y1, y2;
};

/// Splitting of the repunit along a divisor D of n with
/// gcd(D, n/D) = gcd(D, Q_{n/D}) = 1. Root extraction succeeds for genuine
/// solutions; failures are reported, not fatal.
SplitResult shorey_split(const NLCandidate& cand, unsigned long D);

struct TowerEntry {
  unsigned long s = 0, t = 0;
  unsigned long prime = 0;     // p_s
  BigInt M;                    // p_s^t * p_{s+1}^{a_{s+1}} ... p_k^{a_k}
  int delta = 0;
  BigInt quotient;             // (x^{p_s M}-1)/(x^M-1)
  std::optional<BigInt> root;  // y with quotient = p_s^delta y^q, if any
};

struct DescentFactorization {
  NLCandidate candidate;
  std::vector<TowerEntry> entries;
  bool product_identity_ok = false;  // prod of quotients == repunit(x, n)
  bool delta_t_independent = false;  // within each prime's tower
  bool all_roots_found = false;
};

/// The full tower of factor equations for odd n; built for non-solutions too.
DescentFactorization build_tower(const NLCandidate& cand);

struct FilterReport {
  std::vector<std::string> violations;  // violated Proposition-1 constraints
  bool known = false;                   // matches one of the four known solutions
};

FilterReport filter_proposition1(const NLCandidate& cand);

}  // namespace nlrunge

#endif

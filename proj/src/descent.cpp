#include "nlrunge/descent.hpp"

#include <numeric>

namespace nlrunge {

namespace {

// Rough guard: refuse towers whose repunits would not fit at desk scale.
void check_size(const BigInt& x, unsigned long n) {
  size_t xbits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (static_cast<double>(xbits) * n > 8e6)
    throw precondition_error("candidate too large for exact tower computation");
}

void check_candidate(const NLCandidate& cand) {
  if (abs(cand.x) <= 1) throw precondition_error("candidate: |x| must exceed 1");
  if (cand.n < 3) throw precondition_error("candidate: n must exceed 2");
  if (cand.n > 1000000000UL) throw precondition_error("candidate: n > 10^9 rejected");
  if (cand.n % 2 == 0) throw precondition_error("descent requires odd n");
}

BigInt pow_big(const BigInt& x, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

}  // namespace

int delta_exponent(const BigInt& X, unsigned long p) {
  if (abs(X) <= 1) throw precondition_error("delta_exponent: |X| must exceed 1");
  if (p < 3 || !is_prime_ul(p)) throw precondition_error("delta_exponent: p must be an odd prime");
  BigInt rm = X % static_cast<long>(p);
  if (rm < 0) rm += static_cast<long>(p);
  int delta = (rm == 1) ? 1 : 0;
  Valuation v = ord_prime(repunit(X, p), BigInt(p));
  if (!(v == delta))
    throw internal_inconsistency_error("delta_exponent: ord_p of the cyclotomic quotient disagrees with X mod p");
  return delta;
}

bool shorey_admissible(unsigned long n, unsigned long D) {
  if (D == 0 || n % D != 0) return false;
  unsigned long co = n / D;
  return std::gcd(D, co) == 1 && std::gcd(D, Q_of(co)) == 1;
}

SplitResult shorey_split(const NLCandidate& cand, unsigned long D) {
  check_candidate(cand);
  check_size(cand.x, cand.n);
  if (D == 0 || cand.n % D != 0)
    throw precondition_error("shorey_split: D must divide n");
  unsigned long co = cand.n / D;
  if (std::gcd(D, co) != 1)
    throw precondition_error("shorey_split: gcd(D, n/D) must be 1");
  if (std::gcd(D, Q_of(co)) != 1)
    throw precondition_error("shorey_split: gcd(D, Q_{n/D}) must be 1");

  SplitResult res;
  res.top = repunit(pow_big(cand.x, D), co);
  res.bottom = repunit(cand.x, D);
  res.product_ok = res.top * res.bottom == repunit(cand.x, cand.n);
  res.y1 = perfect_power_root(res.top, cand.q);
  res.y2 = perfect_power_root(res.bottom, cand.q);
  return res;
}

DescentFactorization build_tower(const NLCandidate& cand) {
  check_candidate(cand);
  check_size(cand.x, cand.n);
  auto fac = factorize(cand.n);

  DescentFactorization out;
  out.candidate = cand;
  out.delta_t_independent = true;
  out.all_roots_found = true;
  BigInt product = 1;

  for (size_t si = 0; si < fac.size(); ++si) {
    auto [p, alpha] = fac[si];
    unsigned long tail = 1;  // p_{s+1}^{a_{s+1}} ... p_k^{a_k}
    for (size_t j = si + 1; j < fac.size(); ++j)
      for (unsigned long t = 0; t < fac[j].second; ++t) tail *= fac[j].first;

    int first_delta = -1;
    unsigned long M = tail;
    for (unsigned long t = 0; t < alpha; ++t, M *= p) {
      TowerEntry e;
      e.s = si + 1;
      e.t = t;
      e.prime = p;
      e.M = M;
      e.quotient = repunit(pow_big(cand.x, M), p);
      // x^M mod p by modular exponentiation, never via the full power.
      BigInt xm = powmod(cand.x, BigInt(M), BigInt(p));
      e.delta = (xm == 1) ? 1 : 0;
      if (first_delta < 0) first_delta = e.delta;
      else if (e.delta != first_delta) out.delta_t_independent = false;

      BigInt stripped = e.quotient;
      if (e.delta == 1) {
        if (stripped % static_cast<long>(p) != 0)
          throw internal_inconsistency_error("build_tower: delta = 1 but p does not divide the quotient");
        stripped /= static_cast<long>(p);
      }
      e.root = perfect_power_root(stripped, cand.q);
      if (!e.root) out.all_roots_found = false;
      product *= e.quotient;
      out.entries.push_back(std::move(e));
    }
  }
  out.product_identity_ok = product == repunit(cand.x, cand.n);
  return out;
}

FilterReport filter_proposition1(const NLCandidate& cand) {
  FilterReport rep;
  if (cand.q < 3 || cand.q % 2 == 0)
    rep.violations.push_back("q >= 3 odd");
  if (cand.n >= 2) {
    unsigned long least = factorize(cand.n).front().first;
    if (least < 5) rep.violations.push_back("least prime divisor of n >= 5");
  }
  BigInt ax = abs(cand.x);
  if (ax < 10000) {
    rep.violations.push_back("|x| >= 10^4");
  }
  // Prime divisor of x congruent to 1 mod q, by trial division.
  if (cand.q >= 2 && ax > 1) {
    bool found = false;
    BigInt rest = ax;
    for (BigInt d = 2; d * d <= rest && !found; d += (d == 2 ? 1 : 2)) {
      if (rest % d == 0) {
        while (rest % d == 0) rest /= d;
        if (d % static_cast<long>(cand.q) == 1) found = true;
      }
    }
    if (!found && rest > 1 && rest % static_cast<long>(cand.q) == 1) found = true;
    if (!found) rep.violations.push_back("x has a prime divisor = 1 mod q");
  }

  static const struct { long x; unsigned long n, q; } known[] = {
      {3, 5, 2}, {7, 4, 2}, {18, 3, 3}, {-19, 3, 3}};
  for (const auto& k : known)
    if (cand.x == k.x && cand.n == k.n && cand.q == k.q) rep.known = true;
  return rep;
}

}  // namespace nlrunge

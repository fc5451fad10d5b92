#include "nlrunge/exact.hpp"

namespace nlrunge {

bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (!n.fits_ulong_p()) {
    // Trial division on the mpz itself; desk-scale inputs only.
    if (n % 2 == 0) return false;
    BigInt d = 3;
    while (d * d <= n) {
      if (n % d == 0) return false;
      d += 2;
    }
    return true;
  }
  return is_prime_ul(n.get_ui());
}

std::vector<std::pair<unsigned long, unsigned long>> factorize(unsigned long n) {
  if (n == 0) throw precondition_error("factorize: n must be >= 1");
  std::vector<std::pair<unsigned long, unsigned long>> out;
  for (unsigned long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      unsigned long e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Valuation ord_prime(const BigInt& v, const BigInt& p) {
  if (!is_prime(p)) throw precondition_error("ord_prime: p is not prime");
  if (v == 0) return Valuation::infinity();
  BigInt rem;
  unsigned long e = mpz_remove(rem.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Valuation::of(static_cast<long>(e));
}

Valuation ord_prime(const Rational& v, const BigInt& p) {
  if (!is_prime(p)) throw precondition_error("ord_prime: p is not prime");
  if (v == 0) return Valuation::infinity();
  BigInt rem;
  long num = static_cast<long>(
      mpz_remove(rem.get_mpz_t(), v.get_num().get_mpz_t(), p.get_mpz_t()));
  long den = static_cast<long>(
      mpz_remove(rem.get_mpz_t(), v.get_den().get_mpz_t(), p.get_mpz_t()));
  return Valuation::of(num - den);
}

unsigned long ord_factorial(unsigned long n, unsigned long q) {
  if (q < 2) throw precondition_error("ord_factorial: q must be >= 2");
  unsigned long sum = 0;
  for (unsigned long pk = q; pk <= n; ) {
    sum += n / pk;
    if (pk > n / q) break;  // next power would overflow / exceed n
    pk *= q;
  }
  return sum;
}

Rational binom_fractional(long m, unsigned long q, unsigned long l) {
  // (m/q)(m/q - 1)...(m/q - l + 1)/l! = prod_{i<l}(m - i q) / (q^l l!)
  BigInt num = 1, den = 1;
  for (unsigned long i = 0; i < l; ++i) {
    num *= BigInt(m) - BigInt(i) * q;
    den *= BigInt(q) * (i + 1);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt repunit(const BigInt& x, unsigned long n) {
  if (n == 0) throw precondition_error("repunit: n must be >= 1");
  BigInt r = 0;
  for (unsigned long i = 0; i < n; ++i) r = r * x + 1;
  return r;
}

std::optional<BigInt> perfect_power_root(const BigInt& v, unsigned long q) {
  if (q < 2) throw precondition_error("perfect_power_root: q must be >= 2");
  if (v < 0 && q % 2 == 0) return std::nullopt;
  BigInt a = abs(v);
  BigInt root;
  int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), q);
  if (!exact) return std::nullopt;
  return v < 0 ? BigInt(-root) : root;
}

unsigned long squarefree_kernel(unsigned long n) {
  unsigned long g = 1;
  for (auto [p, e] : factorize(n)) g *= p;
  if (n == 1) g = 1;
  return g;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  if (n == 1) phi = 1;
  return phi;
}

BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& m) {
  if (m <= 0) throw precondition_error("powmod: modulus must be positive");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace nlrunge

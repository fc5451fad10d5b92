#ifndef NLRUNGE_EXACT_HPP
#define NLRUNGE_EXACT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nlrunge {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a caller violates a documented precondition.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a requested computation has no stated answer for the given
/// parameters (for example the p = q regime of the Theorem-3 bound).
struct not_applicable_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal identity that is guaranteed by theory fails;
/// this always signals a bug, never bad input.
struct internal_inconsistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// A p-adic valuation: a plain integer, or infinity for the valuation of zero.
class Valuation {
public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation of(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw std::logic_error("value() of infinite valuation");
    return value_;
  }

  Valuation operator+(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return of(value_ + o.value_);
  }
  bool operator==(const Valuation& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  bool operator==(long v) const { return !infinite_ && value_ == v; }

private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

/// Deterministic trial-division primality test. All primes in scope are tiny.
bool is_prime(const BigInt& n);
bool is_prime_ul(unsigned long n);

/// Trial-division factorization, ascending primes. n >= 1.
std::vector<std::pair<unsigned long, unsigned long>> factorize(unsigned long n);

/// ord_p(v) for a rational v and prime p. Infinite iff v == 0.
Valuation ord_prime(const Rational& v, const BigInt& p);
Valuation ord_prime(const BigInt& v, const BigInt& p);

/// Legendre's formula: ord_q(n!) = sum_{k>=1} floor(n/q^k).
unsigned long ord_factorial(unsigned long n, unsigned long q);

/// Generalized binomial coefficient binom(m/q, l), exact.
Rational binom_fractional(long m, unsigned long q, unsigned long l);

/// (x^n - 1)/(x - 1) = 1 + x + ... + x^{n-1}, by Horner summation.
/// Exact for every x, including x = 1 (where the value is n).
BigInt repunit(const BigInt& x, unsigned long n);

/// Exact integer q-th root: returns y with y^q = v if one exists.
/// Negative v admits a root only for odd q.
std::optional<BigInt> perfect_power_root(const BigInt& v, unsigned long q);

/// Product of the distinct primes dividing n (G(n)); 1 for n = 1.
unsigned long squarefree_kernel(unsigned long n);

/// Euler's totient, by trial-division factorization.
unsigned long euler_phi(unsigned long n);

/// Q_n = phi(G(n)).
inline unsigned long Q_of(unsigned long n) { return euler_phi(squarefree_kernel(n)); }

/// base^exp mod m, m > 0. Negative base handled.
BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& m);

}  // namespace nlrunge

#endif

#include "nlrunge/series.hpp"

#include <algorithm>

namespace nlrunge {

long ExpansionSetup::linear_exponent() const {
  for (const auto& f : factors)
    if (f.degree == 1) return f.exp_num;
  return 0;
}

ExpansionSetup make_setup(unsigned long q, std::vector<FactorSpec> factors,
                          Rational tail_ratio) {
  if (!is_prime_ul(q)) throw precondition_error("make_setup: q must be prime");
  long N = 0;
  for (const auto& f : factors) {
    if (f.degree < 1) throw precondition_error("make_setup: factor degree must be >= 1");
    N += f.exp_num * f.degree;
  }
  if (N < 0 || N % static_cast<long>(q) != 0)
    throw precondition_error("make_setup: total degree N must be nonnegative and divisible by q");
  ExpansionSetup s;
  s.q = q;
  s.factors = std::move(factors);
  s.N = N;
  s.tail_ratio = std::move(tail_ratio);
  return s;
}

std::vector<CoefficientRecord> expand_coefficients(const ExpansionSetup& setup,
                                                   unsigned long up_to) {
  const unsigned long M = up_to;
  std::vector<Rational> acc(M + 1, Rational(0));
  acc[0] = 1;
  std::vector<Rational> next(M + 1);
  for (const auto& f : setup.factors) {
    // (1 - u^d)^{e/q} = sum_i (-1)^i binom(e/q, i) u^{d i}
    std::fill(next.begin(), next.end(), Rational(0));
    for (unsigned long i = 0; i * static_cast<unsigned long>(f.degree) <= M; ++i) {
      Rational c = binom_fractional(f.exp_num, setup.q, i);
      if (i % 2 == 1) c = -c;
      if (c == 0) continue;
      unsigned long off = i * static_cast<unsigned long>(f.degree);
      for (unsigned long n = 0; n + off <= M; ++n) {
        if (acc[n] != 0) next[n + off] += acc[n] * c;
      }
    }
    acc.swap(next);
  }
  const BigInt qz(setup.q);
  std::vector<CoefficientRecord> out(M + 1);
  BigInt scale = 1;  // q^{n + [n/(q-1)]}, updated incrementally
  unsigned long scale_exp = 0;
  for (unsigned long n = 0; n <= M; ++n) {
    unsigned long want = n + n / (setup.q - 1);
    while (scale_exp < want) { scale *= qz; ++scale_exp; }
    CoefficientRecord& rec = out[n];
    rec.index = static_cast<long>(n);
    rec.value = acc[n];
    rec.q_valuation = ord_prime(acc[n], qz);
    Rational scaled = acc[n] * scale;
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      throw internal_inconsistency_error(
          "expand_coefficients: q^{n+[n/(q-1)]} * coeff_" + std::to_string(n) +
          " is not an integer");
    rec.scaled_integer = scaled.get_num();
  }
  return out;
}

ValuationLawReport verify_valuation_law(const ExpansionSetup& setup,
                                        unsigned long up_to) {
  ValuationLawReport rep;
  long e1 = setup.linear_exponent();
  if (e1 % static_cast<long>(setup.q) == 0) {
    rep.status = LawStatus::NotApplicable;
    return rep;
  }
  auto coeffs = expand_coefficients(setup, up_to);
  for (unsigned long n = 0; n <= up_to; ++n) {
    long expected = -static_cast<long>(n) -
                    static_cast<long>(ord_factorial(n, setup.q));
    if (!(coeffs[n].q_valuation == expected)) {
      rep.status = LawStatus::Fail;
      rep.first_failure = static_cast<long>(n);
      return rep;
    }
    ++rep.checked;
  }
  rep.status = LawStatus::Pass;
  return rep;
}

BigInt coefficient_magnitude_bound(const ExpansionSetup& setup, unsigned long n) {
  BigInt b = 1;
  for (const auto& f : setup.factors)
    if (f.degree > 1) b *= n / static_cast<unsigned long>(f.degree) + 1;
  long e1 = setup.linear_exponent();
  if ((e1 < 0 ? -e1 : e1) > static_cast<long>(setup.q)) b *= n + 1;
  return b;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial truncation_polynomial(const ExpansionSetup& setup) {
  const unsigned long deg = static_cast<unsigned long>(setup.N) / setup.q;
  auto coeffs = expand_coefficients(setup, deg);
  BigInt scale;
  unsigned long e = deg + static_cast<unsigned long>(setup.N) / (setup.q * (setup.q - 1));
  mpz_ui_pow_ui(scale.get_mpz_t(), setup.q, e);
  IntPolynomial P;
  P.coeffs.assign(deg + 1, BigInt(0));
  for (unsigned long n = 0; n <= deg; ++n) {
    Rational c = coeffs[n].value * scale;
    c.canonicalize();
    if (c.get_den() != 1)
      throw internal_inconsistency_error(
          "truncation_polynomial: non-integer coefficient at n=" + std::to_string(n));
    P.coeffs[deg - n] = c.get_num();
  }
  return P;
}

TailBoundReport tail_bound_check(const ExpansionSetup& setup, const BigInt& x,
                                 unsigned long precision_terms) {
  const unsigned long q = setup.q;
  const Rational ax(abs(x));
  if (!(ax > setup.tail_ratio))
    throw precondition_error("tail_bound_check: |x| must exceed the tail ratio");

  const unsigned long deg = static_cast<unsigned long>(setup.N) / q;
  const unsigned long m = deg + 1;
  const unsigned long M = precision_terms < m ? m : precision_terms;
  auto coeffs = expand_coefficients(setup, M);
  IntPolynomial P = truncation_polynomial(setup);

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), q, deg + static_cast<unsigned long>(setup.N) / (q * (q - 1)));

  // q^{..} * S_M(x) - P(x) = q^{..} * sum_{n=m}^{M} a_n x^{deg-n}
  Rational xr(x);
  Rational diff = 0;
  Rational xpow = 1 / xr;  // x^{deg - n} for n = m = deg+1
  for (unsigned long n = m; n <= M; ++n) {
    diff += coeffs[n].value * xpow;
    xpow /= xr;
  }
  diff *= scale;
  Rational lhs = abs(diff);

  // rhs = q^{N/(q-1)} T_m / (|x| - ratio); compare both sides to the (q-1)-th
  // power so only the integer power q^N appears.
  BigInt qN;
  mpz_ui_pow_ui(qN.get_mpz_t(), q, static_cast<unsigned long>(setup.N));
  Rational tail = Rational(coefficient_magnitude_bound(setup, m)) / (ax - setup.tail_ratio);

  TailBoundReport rep;
  rep.lhs_pow = 1;
  rep.rhs_pow = qN;
  for (unsigned long i = 0; i + 1 < q; ++i) {
    rep.lhs_pow *= lhs;
    rep.rhs_pow *= tail;
  }
  rep.holds = rep.lhs_pow <= rep.rhs_pow;
  return rep;
}

}  // namespace nlrunge

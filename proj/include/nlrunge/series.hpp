#ifndef NLRUNGE_SERIES_HPP
#define NLRUNGE_SERIES_HPP

#include <vector>

#include "nlrunge/exact.hpp"

namespace nlrunge {

/// One factor (x^d - 1)^{e/q} of a Runge product. The (x-1) power is the
/// d = 1 entry, with negative exponent numerator.
struct FactorSpec {
  long degree;
  long exp_num;
};

/// A full product prod_t (x^{d_t}-1)^{e_t/q}. N is the x-degree of the
/// underlying polynomial, sum of e_t * d_t, and must be divisible by q.
struct ExpansionSetup {
  unsigned long q = 0;
  std::vector<FactorSpec> factors;
  long N = 0;
  Rational tail_ratio;  // geometric ratio of the tail bound (3 or 7/2)

  /// Exponent numerator of the d = 1 factor (0 if absent).
  long linear_exponent() const;
};

/// Validates invariants (q prime, N = sum e*d, q | N) and fills N.
ExpansionSetup make_setup(unsigned long q, std::vector<FactorSpec> factors,
                          Rational tail_ratio);

struct CoefficientRecord {
  long index = 0;
  Rational value;
  Valuation q_valuation = Valuation::infinity();
  BigInt scaled_integer;  // value * q^{n + [n/(q-1)]}, always an integer
};

/// Exact coefficients of x^{-n}, n = 0..M, of prod_t (1 - x^{-d_t})^{e_t/q},
/// by iterated convolution of the one-factor binomial series.
std::vector<CoefficientRecord> expand_coefficients(const ExpansionSetup& setup,
                                                   unsigned long up_to);

enum class LawStatus { Pass, Fail, NotApplicable };

struct ValuationLawReport {
  LawStatus status = LawStatus::Pass;
  long first_failure = -1;
  unsigned long checked = 0;
};

/// Checks ord_q(coeff_n) = -n - ord_q(n!) for all n <= M. NotApplicable when
/// q divides the (x-1)-factor exponent numerator (the perfect-power regime,
/// where the law's dominating-term argument does not hold).
ValuationLawReport verify_valuation_law(const ExpansionSetup& setup,
                                        unsigned long up_to);

/// Upper bound on |coeff_n|: product over degree-d factors of (floor(n/d)+1),
/// times (n+1) when |linear exponent| > q.
BigInt coefficient_magnitude_bound(const ExpansionSetup& setup, unsigned long n);

/// Integer polynomial, coeffs[i] multiplies x^i.
struct IntPolynomial {
  std::vector<BigInt> coeffs;
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Rational eval(const Rational& x) const;
};

/// P(x) = q^{N/q + [N/(q(q-1))]} x^{N/q} sum_{n<=N/q} a_n x^{-n}.
/// Every coefficient is asserted to be an integer.
IntPolynomial truncation_polynomial(const ExpansionSetup& setup);

struct TailBoundReport {
  bool holds = false;
  // Both sides raised to the (q-1)-th power so the comparison is rational.
  Rational lhs_pow;
  Rational rhs_pow;
};

/// Checks |q^{N/q + [N/(q(q-1))]} S_M(x) - P(x)| <= q^{N/(q-1)} T_m / (|x| - ratio)
/// for the partial sum S_M, with T_m the magnitude bound at m = N/q + 1.
TailBoundReport tail_bound_check(const ExpansionSetup& setup, const BigInt& x,
                                 unsigned long precision_terms);

}  // namespace nlrunge

#endif

#ifndef NLRUNGE_BOUNDS_HPP
#define NLRUNGE_BOUNDS_HPP

#include <optional>
#include <string>

#include "nlrunge/exact.hpp"
#include "nlrunge/series.hpp"

namespace nlrunge {

enum class Variant { Thm2, Thm3, Sec5 };

std::string variant_name(Variant v);

/// Derived congruence parameters for one instance.
struct RungeParams {
  Variant variant = Variant::Thm2;
  unsigned long q = 0;
  long r = 0, s = 0;            // Thm2
  long p = 0;                   // Thm3
  long p_prev = 0, p_last = 0;  // Sec5
  long a = 0;
  std::optional<long> b;
  unsigned long N = 0;
  unsigned long m = 0;  // N/q + 1
};

/// A bound of the form additive + coeff * q^{exp_num/exp_den}, kept exact.
/// Integer comparisons against it never touch floating point: |x| < bound is
/// decided by cross-powering, (|x| - additive)^v < coeff^v * q^u.
class BoundValue {
public:
  BoundValue(Rational additive, Rational coeff, unsigned long q, unsigned long exp_num,
             unsigned long exp_den);

  const Rational& additive() const { return additive_; }
  const Rational& coeff() const { return coeff_; }
  unsigned long base() const { return q_; }
  unsigned long exp_num() const { return exp_num_; }
  unsigned long exp_den() const { return exp_den_; }

  /// Exact test: is v strictly below the bound?
  bool exceeds(const BigInt& v) const;  // true iff v < bound

  /// Largest integer B with B < bound.
  BigInt largest_integer_below() const;

  /// Rational enclosure lo <= bound <= hi with |hi - lo| <= 2^{-bits} * coeff.
  std::pair<Rational, Rational> enclose(unsigned long bits = 128) const;

  /// Decimal rendering for humans; assertions never use it.
  std::string decimal(int digits = 6) const;

private:
  Rational additive_;
  Rational coeff_;
  unsigned long q_, exp_num_, exp_den_;
};

/// Exact comparison lhs <= rhs via rational enclosures, refining until disjoint.
bool bound_le(const BoundValue& lhs, const BoundValue& rhs);

struct BoundPair {
  RungeParams params;
  BoundValue internal_bound;  // 3 + q^{N/(q-1)} ([m/r]+1)([m/s]+1) and analogues
  BoundValue theorem_bound;   // the stated closed-form bound
};

/// a = -(r-1)^{-1}(s-1) mod q, N = a(r-1)+s-1. Preconditions: 1, r, s pairwise
/// incongruent mod q.
RungeParams derive_params_thm2(unsigned long q, long r, long s);

/// a = 2p+1 mod q, b = -p-2 mod q (smallest nonnegative),
/// N = a(p-1)+b(p^2-1)+p^3-1. Requires p != q.
RungeParams derive_params_thm3(long p, unsigned long q);

/// q = 5; unique (a,b) in [0,4]^2 with a(pk-1)+b(pk^2-1)+p_prev*pk^2-1 = 0 and
/// a+2b+2 = 0 mod 5. Requires p_last != 1 mod 5.
RungeParams derive_params_sec5(long p_prev, long p_last);

BoundPair bound_thm2(const RungeParams& params);
BoundPair bound_thm3(long p, unsigned long q);

/// Series setup whose coefficients are the a_n / b_n / c_n of the instance.
ExpansionSetup setup_from_params(const RungeParams& params);

struct RatioWitness {
  Rational ratio;
  unsigned long n = 0;
  long param1 = 0, param2 = 0;  // (r,s), (p,0) or (p_prev,p_last)
};

struct RatioGrid {
  unsigned long n_min = 2, n_max = 10000;
  long param_min = 3, param_max = 50;
};

/// Brute-force supremum of consecutive-term ratios T_{n+1}/T_n of the tail
/// majorant, with the first attaining witness in scan order.
RatioWitness ratio_supremum(Variant variant, const RatioGrid& grid);

/// TRUE iff 2^{p^2} q^{p(p-1)(q-2)/(q-1)} < p fails (the contradiction stands).
bool contradiction_check_case1(long p, long q);

/// TRUE iff 10^{4p^4} >= 5^{10p^2}.
bool contradiction_check_final(long p);

/// TRUE iff (2q)^{p^{alpha-3}} < 17 p^3 max{1,p/q}^3 q^{p^2+p-2+(p^3-1)/(q-1)}
/// fails. FALSE on the surviving cases (q,alpha) in {(3,3),(5,5)}.
bool contradiction_check_thm3_descent(long p, long q, long alpha);

}  // namespace nlrunge

#endif

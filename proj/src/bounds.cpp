#include "nlrunge/bounds.hpp"

#include <algorithm>
#include <bit>

namespace nlrunge {

namespace {

long mod_pos(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

long mod_inverse(long v, unsigned long q) {
  // q prime, gcd(v, q) = 1; Fermat.
  BigInt r = powmod(BigInt(mod_pos(v, static_cast<long>(q))), BigInt(q - 2), BigInt(q));
  return r.get_si();
}

unsigned bitlen(unsigned long v) {
  return v == 0 ? 0 : 64 - std::countl_zero(v);
}

BigInt pow_ui(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Rational pow_q(const Rational& base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Thm2: return "thm2";
    case Variant::Thm3: return "thm3";
    case Variant::Sec5: return "sec5";
  }
  return "?";
}

BoundValue::BoundValue(Rational additive, Rational coeff, unsigned long q,
                       unsigned long exp_num, unsigned long exp_den)
    : additive_(std::move(additive)),
      coeff_(std::move(coeff)),
      q_(q),
      exp_num_(exp_num),
      exp_den_(exp_den) {
  if (exp_den_ == 0 || coeff_ <= 0)
    throw precondition_error("BoundValue: need positive coefficient and exponent denominator");
}

bool BoundValue::exceeds(const BigInt& v) const {
  Rational x(v);
  if (x <= additive_) return true;
  Rational lhs = pow_q(x - additive_, exp_den_);
  Rational rhs = pow_q(coeff_, exp_den_) * pow_ui(q_, exp_num_);
  return lhs < rhs;
}

std::pair<Rational, Rational> BoundValue::enclose(unsigned long bits) const {
  // 2^{-bits} enclosure of q^{u/v} via an exact integer v-th root.
  BigInt t = pow_ui(q_, exp_num_);
  BigInt shift = 1;
  mpz_mul_2exp(shift.get_mpz_t(), shift.get_mpz_t(), bits * exp_den_);
  t *= shift;
  BigInt lo;
  mpz_root(lo.get_mpz_t(), t.get_mpz_t(), exp_den_);
  Rational two_k = pow_ui(2, bits);
  Rational rlo = additive_ + coeff_ * Rational(lo) / two_k;
  Rational rhi = additive_ + coeff_ * Rational(lo + 1) / two_k;
  return {rlo, rhi};
}

BigInt BoundValue::largest_integer_below() const {
  auto [lo, hi] = enclose();
  BigInt b = BigInt(hi.get_num() / hi.get_den());
  while (b >= 0 && !exceeds(b)) b -= 1;
  return b;
}

std::string BoundValue::decimal(int digits) const {
  auto [lo, hi] = enclose(96);
  Rational mid = (lo + hi) / 2;
  mpf_class f(mid, 320);
  mp_exp_t exp10;
  std::string mant = f.get_str(exp10, 10, static_cast<size_t>(digits));
  if (mant.empty()) return "0";
  bool neg = mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  while (d.size() < static_cast<size_t>(digits)) d += '0';
  std::string out = (neg ? "-" : "") + d.substr(0, 1) + "." + d.substr(1) + "e" +
                    std::to_string(exp10 - 1);
  return out;
}

bool bound_le(const BoundValue& lhs, const BoundValue& rhs) {
  for (unsigned long bits = 64; bits <= 4096; bits *= 2) {
    auto [llo, lhi] = lhs.enclose(bits);
    auto [rlo, rhi] = rhs.enclose(bits);
    if (lhi <= rlo) return true;
    if (rhi < llo) return false;
  }
  throw internal_inconsistency_error("bound_le: enclosures failed to separate");
}

RungeParams derive_params_thm2(unsigned long q, long r, long s) {
  if (!is_prime_ul(q)) throw precondition_error("thm2: q must be prime");
  if (!(3 <= r && r < s)) throw precondition_error("thm2: need 3 <= r < s");
  long lq = static_cast<long>(q);
  if (mod_pos(r - 1, lq) == 0) throw precondition_error("thm2: r = 1 mod q violates pairwise incongruence");
  if (mod_pos(s - 1, lq) == 0) throw precondition_error("thm2: s = 1 mod q violates pairwise incongruence");
  if (mod_pos(r - s, lq) == 0) throw precondition_error("thm2: r = s mod q violates pairwise incongruence");

  long a = mod_pos(-mod_inverse(r - 1, q) * mod_pos(s - 1, lq), lq);
  if (!(1 <= a && a <= lq - 2))
    throw internal_inconsistency_error("thm2: a outside [1, q-2]");
  long N = a * (r - 1) + s - 1;
  if (N % lq != 0) throw internal_inconsistency_error("thm2: q does not divide N");

  RungeParams p;
  p.variant = Variant::Thm2;
  p.q = q;
  p.r = r;
  p.s = s;
  p.a = a;
  p.N = static_cast<unsigned long>(N);
  p.m = p.N / q + 1;
  return p;
}

RungeParams derive_params_thm3(long p, unsigned long q) {
  if (!is_prime_ul(static_cast<unsigned long>(p)) || p < 3 || p % 2 == 0)
    throw precondition_error("thm3: p must be an odd prime");
  if (!is_prime_ul(q) || q < 3) throw precondition_error("thm3: q must be an odd prime");
  if (static_cast<unsigned long>(p) == q)
    throw not_applicable_error("thm3: p = q (q | a+b+1 regime, no stated bound)");

  long lq = static_cast<long>(q);
  long a = mod_pos(2 * p + 1, lq);
  long b = mod_pos(-p - 2, lq);
  long N = a * (p - 1) + b * (p * p - 1) + (p * p * p - 1);
  if (N % lq != 0) throw internal_inconsistency_error("thm3: q does not divide N");

  RungeParams par;
  par.variant = Variant::Thm3;
  par.q = q;
  par.p = p;
  par.a = a;
  par.b = b;
  par.N = static_cast<unsigned long>(N);
  par.m = par.N / q + 1;

  long m = static_cast<long>(par.m);
  if (!(m < p * p * p)) throw internal_inconsistency_error("thm3: m < p^3 fails");
  if (lq >= p) {
    if (!(m < 2 * p * p + p - 1))
      throw internal_inconsistency_error("thm3: m < 2p^2+p-1 fails for q >= p");
  } else {
    if (!((m + 1) * lq < 2 * p * p * p))
      throw internal_inconsistency_error("thm3: m < 2p^3/q-1 fails for q < p");
  }
  return par;
}

RungeParams derive_params_sec5(long p_prev, long p_last) {
  if (!is_prime_ul(static_cast<unsigned long>(p_prev)) || p_prev < 5)
    throw precondition_error("sec5: p_prev must be a prime >= 5");
  if (!is_prime_ul(static_cast<unsigned long>(p_last)) || p_last <= p_prev)
    throw precondition_error("sec5: p_last must be a prime > p_prev");
  if (p_last % 5 == 1)
    throw precondition_error("sec5: p_last = 1 mod 5 makes the system singular");

  // a(pk-1) + b(pk^2-1) = -(p_prev pk^2 - 1), a + 2b = -2 (mod 5);
  // unique by the determinant -(pk-1)^2 != 0 mod 5.
  long c1 = mod_pos(-(p_prev * p_last * p_last - 1), 5);
  long c2 = mod_pos(-2, 5);
  std::optional<std::pair<long, long>> sol;
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b) {
      if (mod_pos(a * (p_last - 1) + b * (p_last * p_last - 1), 5) == c1 &&
          mod_pos(a + 2 * b, 5) == c2) {
        if (sol) throw internal_inconsistency_error("sec5: system solution not unique");
        sol = {a, b};
      }
    }
  if (!sol) throw internal_inconsistency_error("sec5: system has no solution");

  RungeParams par;
  par.variant = Variant::Sec5;
  par.q = 5;
  par.p_prev = p_prev;
  par.p_last = p_last;
  par.a = sol->first;
  par.b = sol->second;
  long N = par.a * (p_last - 1) + *par.b * (p_last * p_last - 1) + p_prev * p_last * p_last - 1;
  if (N % 5 != 0) throw internal_inconsistency_error("sec5: 5 does not divide N");
  par.N = static_cast<unsigned long>(N);
  par.m = par.N / 5 + 1;
  return par;
}

ExpansionSetup setup_from_params(const RungeParams& par) {
  long q = static_cast<long>(par.q);
  switch (par.variant) {
    case Variant::Thm2:
      return make_setup(par.q,
                        {{par.r, par.a}, {par.s, 1}, {1, -(par.a + 1)}},
                        Rational(3));
    case Variant::Thm3:
      return make_setup(par.q,
                        {{par.p, par.a},
                         {par.p * par.p, *par.b},
                         {par.p * par.p * par.p, 1},
                         {1, -(par.a + *par.b + 1)}},
                        Rational(7, 2));
    case Variant::Sec5:
      return make_setup(par.q,
                        {{par.p_last, par.a},
                         {par.p_last * par.p_last, *par.b},
                         {par.p_prev * par.p_last * par.p_last, 1},
                         {1, -(par.a + *par.b + 1)}},
                        Rational(3));
  }
  (void)q;
  throw std::logic_error("setup_from_params: bad variant");
}

BoundPair bound_thm2(const RungeParams& par) {
  if (par.variant != Variant::Thm2) throw precondition_error("bound_thm2: wrong variant");
  unsigned long q = par.q;
  Rational internal_coeff((par.m / par.r + 1) * (par.m / par.s + 1));
  BoundValue internal(Rational(3), internal_coeff, q, par.N, q - 1);

  Rational max_factor = Rational(par.s, static_cast<long>(q) * par.r);
  if (max_factor < 1) max_factor = 1;
  unsigned long u = static_cast<unsigned long>((par.r - 1)) * (q - 1) +
                    static_cast<unsigned long>(par.s - par.r);
  BoundValue theorem(Rational(0), 4 * max_factor, q, u, q - 1);

  if (!bound_le(internal, theorem))
    throw internal_inconsistency_error("bound_thm2: internal bound exceeds theorem bound");
  return {par, internal, theorem};
}

BoundPair bound_thm3(long p, unsigned long q) {
  RungeParams par = derive_params_thm3(p, q);
  unsigned long m = par.m;
  unsigned long up = static_cast<unsigned long>(p);
  Rational internal_coeff(BigInt((m / up + 1)) * (m / (up * up) + 1) *
                          (m / (up * up * up) + 1) * (m + 1));
  BoundValue internal(Rational(7, 2), internal_coeff, q, par.N, q - 1);

  Rational max_factor = Rational(p, static_cast<long>(q));
  if (max_factor < 1) max_factor = 1;
  Rational coeff = Rational(17) * (p * p * p) * pow_q(max_factor, 3);
  unsigned long u = static_cast<unsigned long>(p * p + p - 2) * (q - 1) +
                    static_cast<unsigned long>(p * p * p - 1);
  BoundValue theorem(Rational(0), coeff, q, u, q - 1);

  if (!bound_le(internal, theorem))
    throw internal_inconsistency_error("bound_thm3: internal bound exceeds theorem bound");
  return {par, internal, theorem};
}

namespace {

// Tail majorant T_n per variant; values stay far below 2^63 on the grids.
unsigned long tail_term_thm2(unsigned long n, long r, long s) {
  return (n / r + 1) * (n / s + 1);
}
unsigned long tail_term_thm3(unsigned long n, unsigned long p) {
  return (n / p + 1) * (n / (p * p) + 1) * (n / (p * p * p) + 1) * (n + 1);
}
unsigned long tail_term_sec5(unsigned long n, unsigned long pp, unsigned long pk) {
  return (n / pk + 1) * (n / (pk * pk) + 1) * (n / (pp * pk * pk) + 1) * (n + 1);
}

bool ratio_greater(unsigned long num, unsigned long den, const RatioWitness& best) {
  if (best.ratio == 0) return true;
  // num/den > best, cross-multiplied in 128 bits.
  __int128 l = static_cast<__int128>(num) * best.ratio.get_den().get_ui();
  __int128 r = static_cast<__int128>(den) * best.ratio.get_num().get_ui();
  return l > r;
}

void consider(RatioWitness& best, unsigned long num, unsigned long den,
              unsigned long n, long p1, long p2) {
  if (ratio_greater(num, den, best)) {
    best.ratio = Rational(num, den);
    best.ratio.canonicalize();
    best.n = n;
    best.param1 = p1;
    best.param2 = p2;
  }
}

}  // namespace

RatioWitness ratio_supremum(Variant variant, const RatioGrid& grid) {
  RatioWitness best;
  best.ratio = 0;
  switch (variant) {
    case Variant::Thm2: {
      long lo = grid.param_min < 3 ? 3 : grid.param_min;
      for (long r = lo; r <= grid.param_max; ++r)
        for (long s = r + 1; s <= grid.param_max; ++s)
          for (unsigned long n = std::max<unsigned long>(grid.n_min, 2); n < grid.n_max; ++n)
            consider(best, tail_term_thm2(n + 1, r, s), tail_term_thm2(n, r, s), n, r, s);
      break;
    }
    case Variant::Thm3: {
      for (long p = std::max(grid.param_min, 3L); p <= grid.param_max; ++p) {
        if (!is_prime_ul(static_cast<unsigned long>(p))) continue;
        unsigned long up = static_cast<unsigned long>(p);
        for (unsigned long n = std::max<unsigned long>(grid.n_min, 2); n < grid.n_max; ++n)
          consider(best, tail_term_thm3(n + 1, up), tail_term_thm3(n, up), n, p, 0);
      }
      break;
    }
    case Variant::Sec5: {
      for (long pp = std::max(grid.param_min, 5L); pp <= grid.param_max; ++pp) {
        if (!is_prime_ul(static_cast<unsigned long>(pp))) continue;
        for (long pk = pp + 1; pk <= grid.param_max; ++pk) {
          if (!is_prime_ul(static_cast<unsigned long>(pk))) continue;
          for (unsigned long n = std::max<unsigned long>(grid.n_min, 3); n < grid.n_max; ++n)
            consider(best, tail_term_sec5(n + 1, pp, pk), tail_term_sec5(n, pp, pk), n, pp, pk);
        }
      }
      break;
    }
  }
  return best;
}

namespace {

// Exact test lhs >= rhs for positive integers given as power products, with a
// bit-length shortcut that avoids materializing astronomically large sides.
bool power_product_ge(const std::vector<std::pair<unsigned long, BigInt>>& lhs,
                      const std::vector<std::pair<unsigned long, BigInt>>& rhs) {
  BigInt lhs_low_bits = 0, rhs_up_bits = 0;
  for (const auto& [base, e] : lhs) lhs_low_bits += e * (bitlen(base) - 1);
  for (const auto& [base, e] : rhs) rhs_up_bits += e * bitlen(base);
  if (lhs_low_bits >= rhs_up_bits) return true;  // lhs >= 2^low >= 2^up > rhs
  BigInt lhs_up_bits = 0, rhs_low_bits = 0;
  for (const auto& [base, e] : lhs) lhs_up_bits += e * bitlen(base);
  for (const auto& [base, e] : rhs) rhs_low_bits += e * (bitlen(base) - 1);
  if (rhs_low_bits > lhs_up_bits) return false;
  BigInt l = 1, r = 1;
  for (const auto& [base, e] : lhs) l *= pow_ui(base, e.get_ui());
  for (const auto& [base, e] : rhs) r *= pow_ui(base, e.get_ui());
  return l >= r;
}

}  // namespace

bool contradiction_check_case1(long p, long q) {
  if (!is_prime_ul(static_cast<unsigned long>(p)) || p < 5)
    throw precondition_error("case1: p must be a prime >= 5");
  if (!is_prime_ul(static_cast<unsigned long>(q)) || q < 3)
    throw precondition_error("case1: q must be a prime >= 3");
  // Raised to the (q-1)-th power: 2^{p^2(q-1)} q^{p(p-1)(q-2)} vs p^{q-1}.
  BigInt e2 = BigInt(p) * p * (q - 1);
  BigInt eq = BigInt(p) * (p - 1) * (q - 2);
  return power_product_ge({{2, e2}, {static_cast<unsigned long>(q), eq}},
                          {{static_cast<unsigned long>(p), BigInt(q - 1)}});
}

bool contradiction_check_final(long p) {
  if (p < 2) throw precondition_error("final: p must be >= 2");
  BigInt p2 = BigInt(p) * p;
  return power_product_ge({{10, 4 * p2 * p2}}, {{5, 10 * p2}});
}

bool contradiction_check_thm3_descent(long p, long q, long alpha) {
  if (!is_prime_ul(static_cast<unsigned long>(p)) || p < 5)
    throw precondition_error("thm3_descent: p must be a prime >= 5");
  if (!is_prime_ul(static_cast<unsigned long>(q)) || q < 3)
    throw precondition_error("thm3_descent: q must be an odd prime");
  if (alpha < q || alpha % q != 0)
    throw precondition_error("thm3_descent: alpha must be a multiple of q with alpha >= q");

  // Both sides to the (q-1)-th power. LHS' = (2q)^{E(q-1)} with E = p^{alpha-3};
  // RHS' = (17 p^3)^{q-1} max{1,p/q}^{3(q-1)} q^{(p^2+p-2)(q-1)+p^3-1}, rational.
  BigInt E;
  mpz_ui_pow_ui(E.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(alpha - 3));
  BigInt Ep = E * (q - 1);

  Rational max_factor = Rational(p, q);
  if (max_factor < 1) max_factor = 1;
  Rational rhs = pow_q(Rational(17) * (BigInt(p) * p * p), q - 1) *
                 pow_q(max_factor, 3 * (q - 1));
  unsigned long u = static_cast<unsigned long>((p * p + p - 2) * (q - 1) + p * p * p - 1);
  rhs *= pow_ui(static_cast<unsigned long>(q), u);
  rhs.canonicalize();

  // Bit-length shortcut: 2q >= 6, so LHS' >= 2^{2 E'} > RHS' once 2 E' covers
  // the numerator's bit length.
  size_t rhs_bits = mpz_sizeinbase(rhs.get_num().get_mpz_t(), 2);
  if (2 * Ep >= BigInt(rhs_bits)) return true;

  BigInt lhs = pow_ui(2 * static_cast<unsigned long>(q), Ep.get_ui());
  return Rational(lhs) >= rhs;
}

}  // namespace nlrunge

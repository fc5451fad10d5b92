// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nlrunge/bounds.hpp"
#include "nlrunge/certify.hpp"
#include "nlrunge/descent.hpp"
#include "nlrunge/series.hpp"

using namespace nlrunge;

namespace {

int failures = 0;

void run(const std::string& name, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("[%s] %-22s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              static_cast<long long>(ms), err.empty() ? "" : " error: ",
              err.c_str());
  if (!ok) ++failures;
}

bool known_solutions() {
  verify_known_solutions();
  auto sols = search_nl(20, 6, 5);
  if (sols.size() != 4) return false;
  for (const auto& s : sols)
    if (!s.matches_known) return false;
  return true;
}

bool lemma4_suite() {
  const struct { unsigned long q; long r, s; } cases[] = {
      {5, 3, 4}, {5, 3, 7}, {7, 3, 5}, {7, 5, 6}, {11, 5, 7}};
  for (const auto& c : cases) {
    auto setup = setup_from_params(derive_params_thm2(c.q, c.r, c.s));
    // expand_coefficients throws if any scaled coefficient is non-integral.
    auto coeffs = expand_coefficients(setup, 200);
    for (unsigned long n = 0; n <= 200; ++n) {
      long want = -static_cast<long>(n) - ord_factorial(n, c.q);
      if (coeffs[n].q_valuation.is_infinite() ||
          coeffs[n].q_valuation.value() != want)
        return false;
      BigInt mag = (BigInt(n) / c.r + 1) * (BigInt(n) / c.s + 1);
      if (abs(coeffs[n].value) > Rational(mag)) return false;
    }
    if (verify_valuation_law(setup, 200).status != LawStatus::Pass) return false;
  }
  return true;
}

bool certification() {
  const struct { unsigned long q; long r, s; } cases[] = {
      {5, 3, 4}, {7, 3, 5}, {7, 3, 6}};
  for (const auto& c : cases) {
    CertifyOptions opts;
    opts.bound_kind = BoundKind::Theorem;
    opts.workers = 4;
    auto cert = certify_thm2(c.q, c.r, c.s, opts);
    if (!cert.exceptions.empty()) return false;
    if (cert.search_max <= 0) return false;
  }
  return true;
}

bool sharp_constants() {
  RatioGrid g;  // defaults: n <= 10^4, parameters in [3, 50]
  auto w2 = ratio_supremum(Variant::Thm2, g);
  if (w2.ratio != 3 || w2.param2 != 2 * w2.param1 ||
      w2.n != static_cast<unsigned long>(2 * w2.param1 - 1))
    return false;

  RatioGrid g3;
  g3.param_min = 3;
  g3.param_max = 13;
  auto w3 = ratio_supremum(Variant::Thm3, g3);
  if (w3.ratio != Rational(2240, 729) || w3.n != 26 || w3.param1 != 3)
    return false;

  RatioGrid g5;
  g5.n_min = 3;
  g5.param_min = 5;
  auto w5 = ratio_supremum(Variant::Sec5, g5);
  return w5.ratio == Rational(106272, 42875) && w5.n == 244 &&
         w5.param1 == 5 && w5.param2 == 7;
}

bool contradiction_grid() {
  for (long p = 5; p <= 97; ++p) {
    if (!is_prime_ul(p)) continue;
    for (long q = 3; q <= 97; ++q) {
      if (!is_prime_ul(q)) continue;
      if (!contradiction_check_case1(p, q)) return false;
    }
  }
  for (long p = 2; p <= 31; ++p)
    if (is_prime_ul(p) && !contradiction_check_final(p)) return false;
  for (long q = 3; q <= 13; ++q) {
    if (!is_prime_ul(q)) continue;
    for (long alpha = q; alpha <= 26; alpha += q) {
      bool surviving = (q == 3 && alpha == 3) || (q == 5 && alpha == 5);
      if (contradiction_check_thm3_descent(5, q, alpha) == surviving)
        return false;
    }
  }
  return true;
}

bool tail_bound() {
  auto setup = setup_from_params(derive_params_thm2(5, 3, 4));
  for (long x : {11L, -11L, 100L, -100L, 10000L, -10000L}) {
    auto rep = tail_bound_check(setup, BigInt(x), 60);
    if (!rep.holds) return false;
  }
  return true;
}

bool descent_invariants() {
  for (long x = -30; x <= 30; ++x) {
    if (x >= -1 && x <= 1) continue;
    for (unsigned long n = 3; n <= 200; n += 2) {
      auto tower = build_tower(NLCandidate{BigInt(x), n, 5, std::nullopt});
      if (!tower.product_identity_ok || !tower.delta_t_independent) return false;
    }
  }
  for (unsigned long p = 3; p <= 50; p += 2) {
    if (!is_prime_ul(p)) continue;
    BigInt p2 = BigInt(p) * p;
    long kmax = 10000 / static_cast<long>(p);
    for (long k = -kmax; k <= kmax; ++k) {
      long X = 1 + k * static_cast<long>(p);
      if (X == 1 || X == 0 || X == -1) continue;
      BigInt rem = repunit(BigInt(X), p) % p2;
      if (rem < 0) rem += p2;
      if (rem != p) return false;
    }
  }
  return true;
}

bool scale_limitation() {
  std::printf(
      "       note: exhaustive certification under the Theorem-3 / tower\n"
      "       bounds (>= 10^13) and any claim about ALL solutions of the\n"
      "       repunit-power equation are out of desk-scale reach; they are\n"
      "       covered by the exact property suites above, not enumeration.\n");
  // The smallest Theorem-3 bound already dwarfs the default search budget,
  // and the budget guard must refuse rather than silently truncate.
  auto bp = bound_thm3(3, 5);
  BigInt B = bp.theorem_bound.largest_integer_below();
  if (B <= BigInt("10000000000000")) return false;
  CertifyOptions opts;
  opts.budget = 50;  // theorem bound for (5,3,4) is 149
  try {
    certify_thm2(5, 3, 4, opts);
    return false;
  } catch (const budget_exceeded_error& e) {
    return e.bound == 149;
  }
}

}  // namespace

int main() {
  run("known-solutions", known_solutions);
  run("lemma4-suite", lemma4_suite);
  run("certification", certification);
  run("sharp-constants", sharp_constants);
  run("contradiction-grid", contradiction_grid);
  run("tail-bound", tail_bound);
  run("descent-invariants", descent_invariants);
  run("scale-limitation", scale_limitation);
  std::printf(failures ? "%d criterion(s) FAILED\n" : "all criteria passed\n",
              failures);
  return failures ? 1 : 0;
}

#include <doctest.h>

#include "nlrunge/bounds.hpp"
#include "nlrunge/series.hpp"

using namespace nlrunge;

namespace {

// Oracle: the closed multi-sum over lattice points r i + s j + k = n.
Rational thm2_coefficient_by_multisum(unsigned long q, long r, long s, long a,
                                      unsigned long n) {
  Rational sum = 0;
  for (unsigned long i = 0; i * r <= n; ++i)
    for (unsigned long j = 0; i * r + j * s <= n; ++j) {
      unsigned long k = n - i * r - j * s;
      Rational term = binom_fractional(a, q, i) * binom_fractional(1, q, j) *
                      binom_fractional(-(a + 1), q, k);
      if ((i + j + k) % 2 == 1) term = -term;
      sum += term;
    }
  return sum;
}

ExpansionSetup thm2_setup(unsigned long q, long r, long s) {
  return setup_from_params(derive_params_thm2(q, r, s));
}

}  // namespace

TEST_CASE("expand_coefficients on the (5,3,4) instance") {
  auto setup = thm2_setup(5, 3, 4);
  auto coeffs = expand_coefficients(setup, 10);
  CHECK(coeffs[0].value == 1);
  CHECK(coeffs[1].value == Rational(2, 5));
  CHECK(coeffs[2].value == Rational(7, 25));
}

TEST_CASE("convolution agrees with the closed multi-sum") {
  for (auto [q, r, s] : {std::tuple<unsigned long, long, long>{5, 3, 4},
                         {5, 3, 7},
                         {7, 3, 5}}) {
    auto params = derive_params_thm2(q, r, s);
    auto coeffs = expand_coefficients(setup_from_params(params), 25);
    for (unsigned long n = 0; n <= 25; ++n)
      CHECK(coeffs[n].value == thm2_coefficient_by_multisum(q, r, s, params.a, n));
  }
}

TEST_CASE("valuation law on Theorem-2 and Theorem-3 instances") {
  auto rep = verify_valuation_law(thm2_setup(5, 3, 4), 100);
  CHECK(rep.status == LawStatus::Pass);
  CHECK(rep.checked == 101);

  auto rep3 = verify_valuation_law(setup_from_params(derive_params_thm3(3, 5)), 100);
  CHECK(rep3.status == LawStatus::Pass);
}

TEST_CASE("valuation law is NOT-APPLICABLE when q divides the (x-1) exponent") {
  auto setup = make_setup(5, {{3, 5}, {4, 5}, {1, -5}}, Rational(3));
  CHECK(verify_valuation_law(setup, 20).status == LawStatus::NotApplicable);
}

TEST_CASE("strictly decreasing valuations under the law hypothesis") {
  auto coeffs = expand_coefficients(thm2_setup(5, 3, 4), 120);
  for (size_t n = 0; n + 1 < coeffs.size(); ++n) {
    REQUIRE(!coeffs[n].q_valuation.is_infinite());
    CHECK(coeffs[n].q_valuation.value() <= 0);
    CHECK(coeffs[n + 1].q_valuation.value() < coeffs[n].q_valuation.value());
  }
}

TEST_CASE("scaled coefficients are integers on every setup tested") {
  // expand_coefficients throws internal_inconsistency_error otherwise.
  CHECK_NOTHROW(expand_coefficients(thm2_setup(7, 5, 6), 150));
  CHECK_NOTHROW(expand_coefficients(setup_from_params(derive_params_thm3(5, 3)), 80));
  CHECK_NOTHROW(expand_coefficients(setup_from_params(derive_params_sec5(5, 7)), 60));
  CHECK_NOTHROW(expand_coefficients(make_setup(5, {{3, 5}, {4, 5}, {1, -5}}, Rational(3)), 40));
}

TEST_CASE("perfect q-th power setups terminate: polynomial coefficients") {
  // (1-u^2)(1-u^5)/(1-u) = (1-u^2)(1+u+u^2+u^3+u^4), degree 6.
  auto setup = make_setup(5, {{2, 5}, {5, 5}, {1, -5}}, Rational(3));
  auto coeffs = expand_coefficients(setup, 30);
  const long expected[] = {1, 1, 0, 0, 0, -1, -1};
  for (unsigned long n = 0; n <= 30; ++n) {
    if (n <= 6) CHECK(coeffs[n].value == expected[n]);
    else CHECK(coeffs[n].value == 0);
  }
}

TEST_CASE("coefficient magnitude bounds") {
  auto setup = thm2_setup(5, 3, 4);
  CHECK(coefficient_magnitude_bound(setup, 7) == 6);  // (2+1)(1+1)
  auto coeffs = expand_coefficients(setup, 500);
  for (unsigned long n = 0; n <= 500; ++n) {
    Rational b(coefficient_magnitude_bound(setup, n));
    CHECK(abs(coeffs[n].value) <= b);
  }
}

TEST_CASE("magnitude bound tracks Theorem-3 coefficients") {
  auto setup = setup_from_params(derive_params_thm3(3, 5));
  auto coeffs = expand_coefficients(setup, 200);
  for (unsigned long n = 0; n <= 200; ++n)
    CHECK(abs(coeffs[n].value) <= Rational(coefficient_magnitude_bound(setup, n)));
}

TEST_CASE("truncation polynomial") {
  auto P = truncation_polynomial(thm2_setup(5, 3, 4));
  REQUIRE(P.degree() == 1);
  CHECK(P.coeffs[1] == 5);
  CHECK(P.coeffs[0] == 2);

  auto P0 = truncation_polynomial(make_setup(5, {}, Rational(3)));
  REQUIRE(P0.degree() == 0);
  CHECK(P0.coeffs[0] == 1);

  auto P3 = truncation_polynomial(setup_from_params(derive_params_thm3(3, 5)));
  CHECK(P3.degree() == 6);  // N/q = 30/5
}

TEST_CASE("tail bound holds at sample points") {
  auto setup = thm2_setup(5, 3, 4);
  CHECK(tail_bound_check(setup, BigInt(100), 60).holds);
  CHECK(tail_bound_check(setup, BigInt(-100), 60).holds);
  CHECK_THROWS_AS(tail_bound_check(setup, BigInt(3), 60), precondition_error);

  auto setup3 = setup_from_params(derive_params_thm3(3, 5));
  CHECK(setup3.tail_ratio == Rational(7, 2));
  CHECK(tail_bound_check(setup3, BigInt(1000000), 80).holds);
  CHECK_THROWS_AS(tail_bound_check(setup3, BigInt(3), 80), precondition_error);
}

TEST_CASE("setup validation") {
  CHECK_THROWS_AS(make_setup(4, {{3, 1}}, Rational(3)), precondition_error);   // q not prime
  CHECK_THROWS_AS(make_setup(5, {{3, 1}}, Rational(3)), precondition_error);   // q does not divide N
  CHECK_THROWS_AS(make_setup(5, {{0, 1}}, Rational(3)), precondition_error);   // bad degree
}

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "htau/polyring.hpp"

using htau::Family;
using htau::PowerPoly;
using htau::Rational;
using htau::TSeries;

namespace {

PowerPoly p(int n) { return PowerPoly::generator(n); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(htau::frac(2, 4) == Rational(1, 2));
  CHECK(htau::to_string(htau::frac(6, -4)) == "-3/2");
  CHECK(htau::to_string(Rational(5)) == "5");
  CHECK(htau::parse_rational("-7/21") == Rational(-1, 3));
  CHECK_THROWS(htau::frac(1, 0));
  CHECK(htau::pow2(-3) == Rational(1, 8));
  CHECK(htau::power(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(htau::binomial(7, 3) == 35);
  CHECK(htau::binomial(3, 5) == 0);
  CHECK(htau::factorial(10) == 3628800);
}

TEST_CASE("polynomial arithmetic") {
  PowerPoly a = p(1) + p(2) * Rational(3);
  PowerPoly b = p(1) - p(2) * Rational(3);
  CHECK(a * b == p(1).pow(2) - p(2).pow(2) * Rational(9));
  CHECK((a - a).is_zero());
  CHECK(a.weighted_degree() == 2);
  CHECK_FALSE(a.is_homogeneous());
  CHECK((p(1) * p(1) + p(2)).is_homogeneous());
  CHECK(PowerPoly().weighted_degree() == -1);
  CHECK((p(3) + p(1)).uses_only_odd_generators());
  CHECK_FALSE(a.uses_only_odd_generators());
  CHECK(a.coefficient(htau::Partition{2}) == 3);
  CHECK(a.coefficient(htau::Partition{3}) == 0);
}

TEST_CASE("canonical printing") {
  PowerPoly f = p(3) * Rational(1, 3) - p(1).pow(2) + p(1) * Rational(2, 3);
  CHECK(f.to_string() == "1/3*p3 - p1^2 + 2/3*p1");
  CHECK(PowerPoly().to_string() == "0");
  CHECK(PowerPoly::generator(2, Family::miwa).to_string() == "t2");
}

TEST_CASE("families do not mix") {
  CHECK_THROWS_AS(p(1) + PowerPoly::generator(1, Family::miwa), std::invalid_argument);
}

TEST_CASE("derivative, substitution and evaluation") {
  PowerPoly f = p(1).pow(3) * Rational(2) + p(1) * p(2);
  CHECK(f.derivative(1) == p(1).pow(2) * Rational(6) + p(2));
  CHECK(f.derivative(3).is_zero());
  CHECK(f.substitute(2, p(1) * Rational(5)) == p(1).pow(3) * Rational(2) + p(1).pow(2) * Rational(5));
  CHECK(f.evaluate([](int n) { return Rational(n + 1); }) == Rational(2 * 8 + 2 * 3));
  PowerPoly scaled = f.scale_generators([](int n) { return Rational(1, n); }, Family::miwa);
  CHECK(scaled.family() == Family::miwa);
  CHECK(scaled.coefficient(htau::Partition{2, 1}) == Rational(1, 2));
}

TEST_CASE("truncated exponential") {
  const int order = 6;
  TSeries x = TSeries::monomial(1, p(1), order) + TSeries::monomial(2, p(2), order);
  TSeries e = htau::exp_truncated(x, order);
  TSeries e_minus = htau::exp_truncated(x * Rational(-1), order);
  TSeries product = e * e_minus;
  CHECK(product.coeff(0) == PowerPoly::constant(1));
  for (int k = 1; k <= order; ++k) CHECK(product.coeff(k).is_zero());
  // exp(t p1) has [t^k] = p1^k / k!.
  TSeries single = htau::exp_truncated(TSeries::monomial(1, p(1), order), order);
  for (int k = 0; k <= order; ++k)
    CHECK(single.coeff(k) == p(1).pow(k) * (Rational(1) / Rational(htau::factorial(k))));
  CHECK_THROWS_AS(htau::exp_truncated(TSeries::constant(p(1), order), order), std::invalid_argument);
  CHECK_THROWS_AS(e.coeff(order + 1), std::out_of_range);
}

TEST_CASE("geometric inverse powers") {
  const int order = 5;
  CHECK(htau::geometric_inverse_powers(Rational(2), 0, order) == TSeries::constant(PowerPoly::constant(1), order));
  for (int n = 1; n <= 3; ++n) {
    TSeries g = htau::geometric_inverse_powers(Rational(2, 3), n, order);
    for (int k = 0; k <= order; ++k)
      CHECK(g.coeff(k) == PowerPoly::constant(Rational(htau::binomial(n + k - 1, k)) * htau::power(Rational(2, 3), k)));
  }
}

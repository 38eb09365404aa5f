// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "htau/charspin.hpp"
#include "htau/hurwitz.hpp"
#include "oracles.hpp"

using htau::BasisVector;
using htau::OddPartition;
using htau::Partition;
using htau::PowerPoly;
using htau::Rational;

TEST_CASE("geometric oracles") {
  CHECK(htau::hurwitz_number({{2}, {2}, 0, 0}).value == Rational(1, 2));
  CHECK(htau::hurwitz_number({{2}, {1, 1}, 0, 0}).value == 0);
  CHECK(htau::hurwitz_number({{1}, {1}, 0, 0}).value == 1);
  CHECK(htau::spin_hurwitz_number({{1}, {1}, 0}).value == 1);
  CHECK(htau::spin_hurwitz_number({{3}, {3}, 0}).value == Rational(1, 3));
}

TEST_CASE("Hurwitz numbers match permutation counts") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : htau::enumerate(d))
      for (const auto& nu : htau::enumerate(d))
        for (int r2 = 0; r2 <= 2; ++r2)
          for (int r3 = 0; r3 + r2 <= 3; ++r3) {
            INFO(mu.to_string() << " " << nu.to_string() << " r2=" << r2 << " r3=" << r3);
            CHECK(htau::hurwitz_number({mu, nu, r2, r3}).value == oracle::hurwitz_by_permutations(mu, nu, r2, r3));
          }
  CHECK(htau::hurwitz_number({{3, 2}, {5}, 1, 1}).value == oracle::hurwitz_by_permutations({3, 2}, {5}, 1, 1));
}

TEST_CASE("Riemann-Hurwitz Euler characteristic") {
  // χ = ℓ(μ) + ℓ(ν) - r2 - 2 r3.
  CHECK(htau::hurwitz_number({{2}, {2}, 0, 0}).euler_characteristic == 2);
  CHECK(htau::hurwitz_number({{3, 1}, {2, 2}, 3, 1}).euler_characteristic == 4 - 3 - 2);
  CHECK(htau::spin_hurwitz_number({{3}, {1, 1, 1}, 1}).euler_characteristic == 4 - 2);
}

TEST_CASE("size mismatches are rejected") {
  CHECK_THROWS_AS(htau::hurwitz_number({{2}, {1}, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(htau::spin_hurwitz_number({{3}, {1}, 0}), std::invalid_argument);
}

TEST_CASE("Bernoulli numbers and zeta values") {
  CHECK(htau::bernoulli(0) == 1);
  CHECK(htau::bernoulli(1) == Rational(-1, 2));
  CHECK(htau::bernoulli(2) == Rational(1, 6));
  CHECK(htau::bernoulli(3) == 0);
  CHECK(htau::bernoulli(4) == Rational(-1, 30));
  CHECK(htau::bernoulli(12) == Rational(-691, 2730));
  CHECK(htau::zeta_negative(1) == Rational(-1, 12));
  CHECK(htau::zeta_negative(3) == Rational(1, 120));
  CHECK(htau::zeta_negative(2) == 0);
}

TEST_CASE("basis inversion examples") {
  const auto pb = htau::Family::shifted_power_sum;
  BasisVector two = htau::invert_phi_basis(PowerPoly::generator(2, pb), 2);
  CHECK(two == BasisVector::single(Partition{2}, 2));
  const PowerPoly f3 =
      PowerPoly::generator(3) * Rational(1, 3) - PowerPoly::generator(1).pow(2) + PowerPoly::generator(1) * Rational(2, 3);
  CHECK(htau::invert_f_basis(f3, 3) == BasisVector::single(Partition{3}, 2));
}

TEST_CASE("phi_mu has leading coefficient 1/z_mu") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : htau::enumerate(d)) {
      const PowerPoly f = htau::phi_in_shifted_powers(mu);
      CHECK(f.weighted_degree() == d);
      CHECK(f.coefficient(mu) == Rational(1) / Rational(htau::z_of(mu)));
    }
}

TEST_CASE("random round trips through the phi basis") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    BasisVector v;
    for (const auto& mu : htau::enumerate(1 + static_cast<int>(rng() % 4)))
      if (rng() % 2) v.add(mu, htau::frac(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5)));
    if (v.terms.empty()) continue;
    PowerPoly target(htau::Family::shifted_power_sum);
    for (const auto& [mu, c] : v.terms) target += htau::phi_in_shifted_powers(mu) * c;
    CHECK(htau::invert_phi_basis(target, 4) == v);
  }
}

TEST_CASE("genus forms") {
  for (int h = 0; h <= 3; ++h) {
    CHECK(htau::spin_gunningham_form(h, 0, 1, {}) == 1);
    CHECK(htau::spin_gunningham_form(h, 1, 1, {}) == -1);
  }
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : htau::enumerate(d))
      for (const auto& nu : htau::enumerate(d)) {
        std::vector<BasisVector> vs{BasisVector::single(mu), BasisVector::single(nu)};
        CHECK(htau::gw_h_form(0, d, vs) == htau::hurwitz_number({mu, nu, 0, 0}).value);
      }
}

TEST_CASE("spin GW/H right-hand side") {
  const std::vector<int> k0{0};
  for (int h = 0; h <= 2; ++h) {
    CHECK(htau::spin_gwh_rhs(1, k0, h, 0).value == 1);
    CHECK(htau::spin_gwh_rhs(1, k0, h, 1).value == -1);
  }
  for (int d = 1; d <= 2; ++d)
    for (int h = 0; h <= 2; ++h)
      for (int p = 0; p <= 1; ++p) {
        const std::vector<int> ks{0, 1};
        const auto rhs = htau::spin_gwh_rhs(d, ks, h, p);
        CHECK_FALSE(rhs.conjectural);
        CHECK(rhs.value == htau::spin_gwh_rhs_direct(d, ks, h, p));
      }
  CHECK(htau::spin_gwh_rhs(3, k0, 0, 0).conjectural);
}

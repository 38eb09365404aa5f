// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "htau/charsym.hpp"
#include "htau/polyring.hpp"
#include "oracles.hpp"

using htau::Integer;
using htau::Partition;
using htau::PowerPoly;
using htau::Rational;

namespace {

// h_n = Σ_{μ⊢n} p_μ / z_μ.
PowerPoly complete_h(int n) {
  if (n < 0) return PowerPoly();
  if (n == 0) return PowerPoly::constant(1);
  PowerPoly h;
  for (const auto& mu : htau::enumerate(n))
    h.add_term(mu, Rational(1) / Rational(htau::z_of(mu)));
  return h;
}

// Determinant by cofactor expansion; fine for the small sizes used here.
PowerPoly det(const std::vector<std::vector<PowerPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return PowerPoly::constant(1);
  PowerPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<PowerPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<PowerPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    PowerPoly term = m[0][j] * det(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

PowerPoly jacobi_trudi(const Partition& lambda) {
  const std::size_t n = static_cast<std::size_t>(lambda.length());
  std::vector<std::vector<PowerPoly>> m(n, std::vector<PowerPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = complete_h(lambda[i] - static_cast<int>(i) + static_cast<int>(j));
  return det(m);
}

}  // namespace

TEST_CASE("hand-checked characters of S_3") {
  CHECK(htau::character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(htau::character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(htau::character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(htau::character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
  CHECK(htau::character(Partition{3}, Partition{3}) == 1);
  CHECK(htau::character(Partition(), Partition()) == 1);
  CHECK_THROWS_AS(htau::character(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("Schur functions agree with Jacobi-Trudi") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : htau::enumerate(d)) {
      INFO("lambda = " << lambda.to_string());
      CHECK(htau::schur_in_powersums(lambda) == jacobi_trudi(lambda));
    }
}

TEST_CASE("dimensions count standard tableaux") {
  for (int d = 1; d <= 9; ++d)
    for (const auto& lambda : htau::enumerate(d)) {
      const Integer syt = oracle::count_syt(lambda.parts());
      CHECK(htau::dim_irrep(lambda) == syt);
      CHECK(htau::character(lambda, Partition().with_ones(d)) == syt);
    }
}

TEST_CASE("character orthogonality") {
  for (int d = 1; d <= 8; ++d) {
    const auto parts = htau::enumerate(d);
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        Integer col = 0;
        for (const auto& lambda : parts) col += htau::character(lambda, mu) * htau::character(lambda, nu);
        CHECK(col == (mu == nu ? htau::z_of(mu) : Integer(0)));
      }
    for (const auto& lambda : parts)
      for (const auto& kappa : parts) {
        Rational row = 0;
        for (const auto& mu : parts)
          row += Rational(htau::character(lambda, mu) * htau::character(kappa, mu)) / Rational(htau::z_of(mu));
        CHECK(row == (lambda == kappa ? 1 : 0));
      }
  }
}

TEST_CASE("characters match permutation traces for d <= 4") {
  // Sum over the group of χ(g)^2 / d! is 1; with the class sizes from
  // counting permutations this pins down the class weights independently.
  for (int d = 1; d <= 4; ++d) {
    std::map<Partition, long> sizes;
    for (const auto& p : oracle::all_perms(d)) ++sizes[oracle::cycle_type(p)];
    for (const auto& lambda : htau::enumerate(d)) {
      Integer total = 0;
      for (const auto& [mu, n] : sizes) total += htau::character(lambda, mu) * htau::character(lambda, mu) * n;
      CHECK(total == htau::factorial(d));
    }
  }
}

TEST_CASE("shifted power sums") {
  CHECK(htau::shifted_power_sum(1, Partition{2}) == 2);
  // (3/2)^3 - (-1/2)^3.
  CHECK(htau::shifted_power_sum(3, Partition{2}) == Rational(7, 2));
  CHECK(htau::shifted_power_sum(2, Partition()) == 0);
  // p̄_2 is twice the content sum.
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : htau::enumerate(d)) {
      long content = 0;
      for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) content += j - i;
      CHECK(htau::shifted_power_sum(2, lambda) == Rational(2 * content));
    }
}

TEST_CASE("central character of a transposition is the content sum") {
  for (int d = 2; d <= 7; ++d)
    for (const auto& lambda : htau::enumerate(d)) {
      long content = 0;
      for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) content += j - i;
      CHECK(htau::central_character(Partition({2}).with_ones(d - 2), lambda) == content);
      CHECK(htau::phi_extended(Partition{2}, lambda) == content);
    }
}

TEST_CASE("phi2 and phi3 closed forms") {
  for (int d = 0; d <= 8; ++d)
    for (const auto& lambda : htau::enumerate(d)) {
      const Rational p1 = htau::shifted_power_sum(1, lambda);
      const Rational p2 = htau::shifted_power_sum(2, lambda);
      const Rational p3 = htau::shifted_power_sum(3, lambda);
      const Rational phi2 = htau::phi_extended(Partition{2}, lambda);
      const Rational phi3 = htau::phi_extended(Partition{3}, lambda);
      CHECK(phi2 == p2 / 2);
      CHECK(phi3 == p3 / 3 - p1 * p1 / 2 + Rational(5, 12) * p1);
    }
  CHECK(htau::phi_extended(Partition{3}, Partition{1}) == 0);
  CHECK(htau::phi_extended(Partition{3}, Partition{2}) == 0);
}

TEST_CASE("shifted t^4 extraction") {
  const auto pb = htau::Family::shifted_power_sum;
  const PowerPoly expected = PowerPoly::generator(3, pb) - PowerPoly::generator(1, pb).pow(2) * Rational(3, 2) +
                             PowerPoly::generator(1, pb) * Rational(5, 4);
  CHECK(htau::p3_sharp_series(4).coeff(4) == expected);
}

TEST_CASE("table insert and warm") {
  htau::CharTable t;
  t.warm(4);
  CHECK(t.entries(4).size() == 25);
  CHECK(t.character(Partition{2, 2}, Partition{2, 2}) == 2);
  t.clear();
  CHECK(t.entries(4).empty());
  CHECK_THROWS_AS(t.insert(Partition{2}, Partition{1}, 1), std::invalid_argument);
}

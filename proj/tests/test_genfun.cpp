// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "htau/charsym.hpp"
#include "htau/genfun.hpp"

using htau::GenSeries;
using htau::Partition;
using htau::Rational;
using htau::SeriesKey;

TEST_CASE("series bookkeeping") {
  GenSeries s(2, 1);
  CHECK_THROWS_AS(s.add({1, {1}, {1, 1}, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add({3, {3}, {3}, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add({1, {1}, {1}, 2}, 1), std::invalid_argument);
  s.add({1, {1}, {1}, 0}, Rational(1, 2));
  s.add({1, {1}, {1}, 0}, Rational(-1, 2));
  CHECK(s.terms().empty());
  CHECK_THROWS_AS(GenSeries(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(s.merge(GenSeries(2, 2)), std::invalid_argument);
}

TEST_CASE("squaring a small series") {
  GenSeries s = GenSeries::one(1, 0);
  s.add({1, {1}, {1}, 0}, Rational(1, 2));
  GenSeries sq = htau::square(s);
  CHECK(sq.coefficient({0, {}, {}, 0}) == 1);
  CHECK(sq.coefficient({1, {1}, {1}, 0}) == 1);
  CHECK(sq.terms().size() == 2);
}

TEST_CASE("squaring recombines b with binomials") {
  GenSeries s = GenSeries::one(0, 2);
  s.add({0, {}, {}, 1}, 1);
  GenSeries sq = htau::square(s);
  // (1 + b)^2 in the b^s/s! basis: 1 + 2b + 2 b^2/2!.
  CHECK(sq.coefficient({0, {}, {}, 1}) == 2);
  CHECK(sq.coefficient({0, {}, {}, 2}) == 2);
}

TEST_CASE("json round trip") {
  GenSeries s = htau::build_phiB_q(3, 2);
  GenSeries back = GenSeries::from_json(s.to_json());
  CHECK(back.terms() == s.terms());
  CHECK(back.qmax() == 3);
  CHECK(back.bmax() == 2);
}

TEST_CASE("low-order coefficients of the Schur-side series") {
  GenSeries phi = htau::build_phi_schur(2, 1);
  CHECK(phi.coefficient({0, {}, {}, 0}) == 1);
  CHECK(phi.coefficient({1, {1}, {1}, 0}) == 1);
  // d=1: E = 1 + φ2 + φ3 = 1 on λ = (1).
  CHECK(phi.coefficient({1, {1}, {1}, 1}) == 1);
  CHECK(phi.coefficient({2, {2}, {2}, 0}) == Rational(1, 2));
  CHECK(phi.coefficient({2, {2}, {1, 1}, 0}) == 0);
}

TEST_CASE("Schur side equals the Hurwitz sum") {
  CHECK(htau::compare_series("phi", htau::build_phi_schur(4, 3), htau::build_phi_hurwitz(4, 3), false).ok());
  CHECK(htau::compare_series("phiB", htau::build_phiB_q(4, 3), htau::build_phiB_spin(4, 3), false).ok());
}

TEST_CASE("serial and parallel builders agree") {
  CHECK(htau::build_phi_schur(5, 2, htau::Exec::serial).terms() == htau::build_phi_schur(5, 2).terms());
  CHECK(htau::build_phiB_q(5, 2, htau::Exec::serial).terms() == htau::build_phiB_q(5, 2).terms());
}

TEST_CASE("square of the spin series is the odd part") {
  const auto r = htau::verify_theorem(4, 2, htau::Exec::serial);
  CHECK(r.ok());
  CHECK(r.checked > 0);
  CHECK_FALSE(r.first_discrepancy.has_value());
}

TEST_CASE("restriction keeps odd profiles only") {
  GenSeries r = htau::restrict_odd(htau::build_phi_schur(3, 0));
  for (const auto& [k, c] : r.terms()) {
    CHECK(k.mu.is_odd());
    CHECK(k.nu.is_odd());
  }
  CHECK(r.coefficient({3, {3}, {3}, 0}) == Rational(1, 3));
}

TEST_CASE("comparison reports the first mismatch") {
  GenSeries a = GenSeries::one(1, 0);
  GenSeries b = GenSeries::one(1, 0);
  b.add({1, {1}, {1}, 0}, 1);
  const auto r = htau::compare_series("x", a, b, false);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_discrepancy.has_value());
  CHECK(r.first_discrepancy->find("d=1") != std::string::npos);
}

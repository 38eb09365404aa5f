// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"
#include "htau/fock.hpp"
#include "oracles.hpp"

using htau::BasisState;
using htau::FockSpace;
using htau::FockVector;
using htau::OperatorSpec;
using htau::Partition;
using htau::QSqrt2;
using htau::Rational;
using htau::StrictPartition;

namespace {

// Σ_i (λ_i - i + ½)^n - (-i + ½)^n, computed directly.
Rational shifted_sum(int n, const Partition& lambda) {
  Rational s = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    s += htau::power(Rational(2 * (lambda[static_cast<std::size_t>(i - 1)] - i) + 1, 2), n);
    s -= htau::power(Rational(-2 * i + 1, 2), n);
  }
  return s;
}

Rational plain_sum(int n, const Partition& lambda) {
  Rational s = 0;
  for (int part : lambda.parts()) s += htau::power(Rational(part), n);
  return s;
}

}  // namespace

TEST_CASE("quadratic-surd arithmetic") {
  CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(2));
  CHECK(QSqrt2::inv_sqrt2() * QSqrt2::sqrt2() == QSqrt2(1));
  CHECK(QSqrt2::pow_sqrt2(3) == QSqrt2(0, 2));
  CHECK(QSqrt2::pow_sqrt2(-2) == QSqrt2(Rational(1, 2)));
  CHECK((QSqrt2(1, 1) * QSqrt2(1, -1)) == QSqrt2(-1));
  CHECK(QSqrt2(3).is_rational());
}

TEST_CASE("state enumeration by energy") {
  for (int e2 = 0; e2 <= 14; ++e2) {
    long expected = 0;
    for (int c = -4; c <= 4; ++c)
      for (int n = 0; 2 * n + c * c <= e2; ++n) expected += oracle::count_partitions(n, n);
    CHECK(static_cast<long>(htau::states_up_to(e2).size()) == expected);
  }
  CHECK(BasisState{1, Partition{2}}.energy2() == 5);
}

TEST_CASE("charged fermions on the vacuum") {
  const FockVector vac = FockVector::vacuum();
  CHECK(htau::apply_exact(OperatorSpec::psi(Rational(-1, 2)), vac).is_zero());
  CHECK(htau::apply_exact(OperatorSpec::psi_star(Rational(1, 2)), vac).is_zero());
  const FockVector up = htau::apply_exact(OperatorSpec::psi(Rational(1, 2)), vac);
  CHECK(up == FockVector::basis({1, {}}));
  CHECK(htau::apply_exact(OperatorSpec::psi(Rational(1, 2)), up).is_zero());
  // ψ_{3/2} ψ*_{-1/2} v_∅ = v_{(2)} up to sign.
  const FockVector v2 =
      htau::apply_exact(OperatorSpec::psi(Rational(3, 2)), htau::apply_exact(OperatorSpec::psi_star(Rational(-1, 2)), vac));
  CHECK((v2 == htau::charged_basis(Partition{2}) || v2 == htau::charged_basis(Partition{2}) * QSqrt2(-1)));
}

TEST_CASE("canonical anticommutators on small states") {
  const auto states = htau::states_up_to(6);
  for (int a = -5; a <= 5; a += 2)
    for (int b = -5; b <= 5; b += 2) {
      const auto pa = OperatorSpec::psi(Rational(a, 2));
      const auto pb = OperatorSpec::psi_star(Rational(b, 2));
      for (const auto& st : states) {
        const FockVector v = FockVector::basis(st);
        FockVector ac = htau::apply_exact(pa, htau::apply_exact(pb, v)) + htau::apply_exact(pb, htau::apply_exact(pa, v));
        CHECK(ac == (a == b ? v : FockVector()));
      }
    }
}

TEST_CASE("E_3 on v_(2)") {
  const FockSpace space(8);
  const FockVector v = htau::charged_basis(Partition{2});
  CHECK(space.apply_En(3, v) == v * QSqrt2(Rational(7, 2)));
}

TEST_CASE("E_n eigenvalues are shifted power sums") {
  const FockSpace space(12);
  for (int d = 0; d <= 6; ++d)
    for (const auto& lambda : htau::enumerate(d)) {
      const FockVector v = htau::charged_basis(lambda);
      for (int n = 1; n <= 4; ++n) CHECK(space.apply_En(n, v) == v * QSqrt2(shifted_sum(n, lambda)));
    }
}

TEST_CASE("neutral basis is orthonormal at larger energy") {
  std::vector<StrictPartition> ls;
  for (int d = 0; d <= 6; ++d)
    for (auto& l : htau::strict_partitions(d)) ls.push_back(l);
  for (bool hat : {false, true})
    for (const auto& a : ls)
      for (const auto& b : ls) {
        const QSqrt2 ip = htau::inner(htau::neutral_basis(a, hat), htau::neutral_basis(b, hat));
        CHECK(ip == QSqrt2(a == b ? 1 : 0));
      }
  const FockVector v1 = htau::neutral_basis(StrictPartition{1});
  CHECK(htau::inner(v1, v1) == QSqrt2(1));
}

TEST_CASE("neutral energy operators are diagonal on the basis") {
  const FockSpace space(10);
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : htau::strict_partitions(d)) {
      if (htau::neutral_basis_max_energy(l) + 1 > 10) continue;
      const FockVector v = htau::neutral_basis(l);
      for (int n : {1, 3, 5}) CHECK(space.apply_EnB(n, v) == v * QSqrt2(plain_sum(n, l)));
      const Rational p1 = plain_sum(1, l);
      const Rational p3 = plain_sum(3, l);
      CHECK(space.apply_FB(v) == v * QSqrt2(Rational(d * d) + p3 / 3 - p1 * p1 + Rational(2, 3) * p1));
    }
}

TEST_CASE("charged boson vectors expand by characters") {
  const FockSpace space(10);
  for (int d = 1; d <= 5; ++d)
    for (const auto& nu : htau::enumerate(d)) {
      const FockVector w = htau::charged_boson_vector(nu, space);
      for (const auto& lambda : htau::enumerate(d)) {
        const Rational got = htau::inner_rational(w, htau::charged_basis(lambda)) / Rational(nu.product_of_parts());
        CHECK(got == Rational(htau::character(lambda, nu)) / Rational(htau::z_of(nu)));
      }
    }
}

TEST_CASE("neutral boson vectors expand by Q-functions") {
  const FockSpace space(10);
  for (int d = 1; d <= 5; ++d)
    for (const auto& nu : htau::odd_partitions(d)) {
      const FockVector w = htau::neutral_boson_vector(nu, space);
      for (const auto& lambda : htau::strict_partitions(d)) {
        if (htau::neutral_basis_max_energy(lambda) > 10) continue;
        const QSqrt2 got = htau::inner(w, htau::neutral_basis(lambda)) * QSqrt2(Rational(1) / Rational(nu.partition().product_of_parts()));
        const QSqrt2 expected = QSqrt2::pow_sqrt2(-lambda.length()) *
                                QSqrt2(htau::pow2(-nu.length()) * htau::schurQ(lambda).expansion.coefficient(nu));
        CHECK(got == expected);
      }
    }
}

TEST_CASE("truncation is enforced") {
  const FockSpace space(2);
  CHECK_THROWS_AS(space.apply_psi(Rational(7, 2), FockVector::vacuum()), htau::TruncationError);
  CHECK_THROWS_AS(space.apply(OperatorSpec::E(1), htau::charged_basis(Partition{3})), htau::TruncationError);
  CHECK_NOTHROW(space.apply_psi(Rational(1, 2), FockVector::vacuum()));
}

TEST_CASE("vacuum expectations") {
  const FockSpace space(6);
  CHECK(space.vacuum_expectation({}) == 1);
  CHECK(space.vacuum_expectation({OperatorSpec::psi_star(Rational(1, 2)), OperatorSpec::psi(Rational(1, 2))}) == 1);
  CHECK(space.vacuum_expectation({OperatorSpec::psi(Rational(1, 2)), OperatorSpec::psi_star(Rational(1, 2))}) == 0);
  // α_1 α*_1 v_∅ = v_∅.
  CHECK(space.vacuum_expectation({OperatorSpec::alpha(1), OperatorSpec::alpha_star(1)}) == 1);
}

TEST_CASE("operator identity suites at small energy") {
  CHECK(htau::check_anticommutators(4).ok());
  CHECK(htau::check_shift_relations(2, 4).ok());
  CHECK(htau::check_cnH(1, 5).ok());
  CHECK(htau::check_cnH(3, 5).ok());
  CHECK(htau::check_eigen(5).ok());
  CHECK(htau::check_neutral_orthonormal(5).ok());
  CHECK(htau::factorization_check(4).ok());
}

TEST_CASE("vacuum series agree with the builders") {
  CHECK(htau::check_vacuum_series(2, 2, 6).ok());
  CHECK(htau::phi_vacuum_series(2, 1, 6).terms() == htau::build_phi_schur(2, 1).terms());
  CHECK(htau::phiB_vacuum_series(2, 1, 6, true).terms() == htau::build_phiB_q(2, 1).terms());
}

TEST_CASE("serial and parallel checks agree") {
  const auto a = htau::check_shift_relations(2, 4, htau::Exec::serial);
  const auto b = htau::check_shift_relations(2, 4, htau::Exec::parallel);
  CHECK(a.checked == b.checked);
  CHECK(a.ok() == b.ok());
}

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"
#include "htau/genfun.hpp"
#include "htau/hirota.hpp"

using htau::Family;
using htau::HirotaFlavor;
using htau::HirotaForm;
using htau::PowerPoly;
using htau::Rational;

namespace {

// p_n -> n t_n.
PowerPoly to_miwa(const PowerPoly& f) {
  return f.scale_generators([](int n) { return Rational(n); }, Family::miwa);
}

PowerPoly t(int n) { return PowerPoly::generator(n, Family::miwa); }

}  // namespace

TEST_CASE("Hirota derivative basics") {
  // D_1 f·f = 0 for any f; D_1^2 t1·1 = 0; D_1^2 t1·t1 = -2.
  HirotaForm d1{{{Rational(1), {1}}}};
  HirotaForm d11{{{Rational(1), {2}}}};
  CHECK(htau::hirota_bilinear(d1, t(1) * t(2), t(1) * t(2)).is_zero());
  CHECK(htau::hirota_bilinear(d11, t(1), t(1)) == PowerPoly::constant(-2, Family::miwa));
  CHECK(htau::hirota_bilinear(d11, t(1), PowerPoly::constant(1, Family::miwa)).is_zero());
}

TEST_CASE("Schur polynomials solve KP") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& lambda : htau::enumerate(d)) {
      const PowerPoly tau = to_miwa(htau::schur_in_powersums(lambda));
      INFO(lambda.to_string());
      CHECK(htau::hirota_bilinear(HirotaForm::kp(), tau, tau).is_zero());
    }
}

TEST_CASE("a non-tau polynomial fails KP") {
  const PowerPoly one = PowerPoly::constant(1, Family::miwa);
  const PowerPoly bad = one + t(1).pow(4);
  CHECK_FALSE(htau::hirota_bilinear(HirotaForm::kp(), bad, bad).is_zero());
}

TEST_CASE("Q-functions solve BKP") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : htau::strict_partitions(d)) {
      // Q_λ(p/2) in t_n = p_n / n.
      const PowerPoly tau = htau::schurQ(lambda).expansion.scale_generators(
          [](int n) { return Rational(n, 2); }, Family::miwa);
      INFO(lambda.to_string());
      CHECK(htau::hirota_bilinear(HirotaForm::bkp(), tau, tau).is_zero());
    }
}

TEST_CASE("generating functions pass the smoke tests") {
  const auto kp = htau::hirota_check(HirotaFlavor::kp, 4, 2);
  CHECK(kp.status == htau::Status::advisory);
  CHECK(kp.advisory_ok);
  const auto bkp = htau::hirota_check(HirotaFlavor::bkp, 4, 2);
  CHECK(bkp.status == htau::Status::advisory);
  CHECK(bkp.advisory_ok);
}

TEST_CASE("a perturbed tau fails the smoke test") {
  htau::GenSeries phi = htau::build_phi_schur(4, 1);
  // Shifts P(D)τ·τ at q^4 by 2 P(D) t1^4·1 = 48.
  phi.add({4, {1, 1, 1, 1}, {1, 1, 1, 1}, 0}, Rational(1, 5));
  const auto tau = htau::tau_from_series(phi, [](int n) { return Rational(1, n); });
  const auto r = htau::hirota_smoke_test(tau, HirotaFlavor::kp, 4);
  CHECK(r.status == htau::Status::advisory);
  CHECK_FALSE(r.advisory_ok);
}

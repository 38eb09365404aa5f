// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "htau/genfun.hpp"
#include "htau/polyring.hpp"
#include "htau/report.hpp"

namespace htau {

enum class HirotaFlavor { kp, bkp };

const char* to_string(HirotaFlavor f);

/// A polynomial P(D_1, D_2, ...) in Hirota derivatives: list of
/// (coefficient, exponents by index) terms; exponents[n-1] is the power of D_n.
struct HirotaForm {
  std::vector<std::pair<Rational, std::vector<int>>> terms;

  /// D_1^4 - 4 D_1 D_3 + 3 D_2^2.
  static HirotaForm kp();
  /// D_1^6 - 5 D_1^3 D_3 - 5 D_3^2 + 9 D_1 D_5.
  static HirotaForm bkp();
  static HirotaForm of(HirotaFlavor f);
};

/// P(D) f·g for polynomials in the Miwa variables t_n.
PowerPoly hirota_bilinear(const HirotaForm& form, const PowerPoly& f, const PowerPoly& g);

/**
 * τ as a polynomial in q and b with t-polynomial coefficients, keyed by
 * (q-degree, s) against q^d b^s/s!.
 */
struct HirotaTau {
  int qmax = 0;
  int bmax = 0;
  std::map<std::pair<int, int>, PowerPoly> terms;

  const PowerPoly& at(int d, int s) const;
};

/// Rewrites a series in t_n = p_n / n with p'_n frozen at prime(n).
HirotaTau tau_from_series(const GenSeries& s, const std::function<Rational(int)>& prime);

/// Checks P(D)τ·τ = 0 in every q-degree <= q_order and every b^s/s!, s <= bmax.
/// The report is advisory; `advisory_ok` carries the outcome.
CheckReport hirota_smoke_test(const HirotaTau& tau, HirotaFlavor flavor, int q_order);

/// Φ (KP) or Φ_B (BKP) built to q_order with p'_n = 1/n.
CheckReport hirota_check(HirotaFlavor flavor, int q_order, int bmax, Exec exec = Exec::parallel);

}  // namespace htau

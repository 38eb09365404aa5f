// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "htau/report.hpp"

namespace htau {

struct SuiteConfig {
  int qmax = 5;
  int bmax = 3;
  int emax = 6;
  Exec exec = Exec::parallel;
  std::uint64_t seed = 20260101;
};

/// φ_(2) = ½p̄_2 and φ_(3) = ⅓p̄_3 - ½p̄_1² + 5/12 p̄_1 on every λ with |λ| <= dmax.
CheckReport verify_lemma_phi(int dmax = 8);
/// f_(3) = ⅓p_3 - p_1² + ⅔p_1 on every strict λ with |λ| <= dmax.
CheckReport verify_lemma_f3(int dmax = 10);
/// [t⁴] of both generating series behind the lemmas.
CheckReport verify_t4_extractions();
/// Schur side = Hurwitz side for Φ, Q side = spin side for Φ_B.
CheckReport verify_dual_routes(int qmax, int bmax, Exec exec = Exec::parallel);
/// Genus-h forms: H^{h,p}_1 = (-1)^p, basis inversion round trips on seeded
/// random vectors, spin GW/H pipeline vs direct evaluation, and the genus-0
/// forms against the character-formula Hurwitz numbers.
CheckReport verify_forms(std::uint64_t seed);
/// Every operator identity in the Fock space plus the vacuum-expectation series.
std::vector<CheckReport> verify_fock(int emax, Exec exec = Exec::parallel);

/// Suite names: theorem, lemmas, genfun-consistency, fock, hirota, forms, all.
/// Throws std::invalid_argument for anything else.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& config);

const std::vector<std::string>& suite_names();

}  // namespace htau

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"
#include "htau/fock.hpp"
#include "htau/genfun.hpp"
#include "htau/hirota.hpp"
#include "htau/hurwitz.hpp"

namespace htau {

CheckReport verify_lemma_phi(int dmax) {
  CheckReport r;
  r.check = "lemma-phi2-phi3";
  r.params = {{"dmax", dmax}};
  for (int d = 0; d <= dmax; ++d) {
    for (const auto& lambda : enumerate(d)) {
      const Rational p1 = shifted_power_sum(1, lambda);
      const Rational p2 = shifted_power_sum(2, lambda);
      const Rational p3 = shifted_power_sum(3, lambda);
      const Rational phi2 = phi_extended({2}, lambda);
      const Rational phi3 = phi_extended({3}, lambda);
      r.record(phi2 == p2 / 2, "phi_(2)" + lambda.to_string() + " = " + to_string(phi2));
      const Rational rhs = p3 / 3 - p1 * p1 / 2 + Rational(5, 12) * p1;
      r.record(phi3 == rhs, "phi_(3)" + lambda.to_string() + " = " + to_string(phi3) + " vs " + to_string(rhs));
    }
  }
  return r;
}

CheckReport verify_lemma_f3(int dmax) {
  CheckReport r;
  r.check = "lemma-f3";
  r.params = {{"dmax", dmax}};
  for (int d = 0; d <= dmax; ++d) {
    for (const auto& lambda : strict_partitions(d)) {
      const Rational p1 = power_sum(1, lambda);
      const Rational p3 = power_sum(3, lambda);
      const Rational f3 = f_extended({3}, lambda);
      const Rational rhs = p3 / 3 - p1 * p1 + Rational(2, 3) * p1;
      r.record(f3 == rhs, "f_(3)" + lambda.to_string() + " = " + to_string(f3) + " vs " + to_string(rhs));
    }
  }
  return r;
}

CheckReport verify_t4_extractions() {
  CheckReport r;
  r.check = "t4-extractions";
  const Family pb = Family::shifted_power_sum;
  PowerPoly shifted = PowerPoly::generator(3, pb) - PowerPoly::monomial({1, 1}, Rational(3, 2), pb) +
                      PowerPoly::monomial({1}, Rational(5, 4), pb);
  const PowerPoly got = p3_sharp_series(4).coeff(4);
  r.record(got == shifted, "[t^4] shifted series = " + got.to_string());
  PowerPoly spin = PowerPoly::generator(3) - PowerPoly::monomial({1, 1}, 3) + PowerPoly::monomial({1}, 2);
  const PowerPoly got_spin = p3_sharp_spin_series(4).coeff(4);
  r.record(got_spin == spin, "[t^4] spin series = " + got_spin.to_string());
  return r;
}

CheckReport verify_dual_routes(int qmax, int bmax, Exec exec) {
  CheckReport r;
  r.check = "genfun-consistency";
  r.params = {{"qmax", qmax}, {"bmax", bmax}};
  r.absorb(compare_series("phi", build_phi_schur(qmax, bmax, exec), build_phi_hurwitz(qmax, bmax)));
  r.absorb(compare_series("phiB", build_phiB_q(qmax, bmax, exec), build_phiB_spin(qmax, bmax)));
  r.absorb(compare_series("phi-serial", build_phi_schur(qmax, bmax, Exec::serial), build_phi_schur(qmax, bmax, exec)));
  r.absorb(compare_series("phiB-serial", build_phiB_q(qmax, bmax, Exec::serial), build_phiB_q(qmax, bmax, exec)));
  return r;
}

namespace {

BasisVector random_vector(std::mt19937_64& rng, const std::vector<Partition>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), count(1, 4);
  BasisVector v;
  for (int i = count(rng); i > 0; --i) {
    const Rational c = frac(num(rng), den(rng));
    v.add(pool[pick(rng)], c);
  }
  return v;
}

}  // namespace

CheckReport verify_forms(std::uint64_t seed) {
  CheckReport r;
  r.check = "forms";
  r.params = {{"seed", seed}};

  for (int h = 0; h <= 3; ++h)
    for (int p = 0; p <= 1; ++p) {
      const Rational v = spin_gunningham_form(h, p, 1, {});
      r.record(v == (p ? -1 : 1), "H^{" + std::to_string(h) + "," + std::to_string(p) + "}_1 = " + to_string(v));
    }

  std::mt19937_64 rng(seed);
  std::vector<Partition> all, odd;
  for (int d = 1; d <= 6; ++d) {
    for (auto& p : enumerate(d)) all.push_back(p);
    for (auto& p : odd_partitions(d)) odd.push_back(p);
  }
  for (int trial = 0; trial < 6; ++trial) {
    const BasisVector v = random_vector(rng, all);
    PowerPoly target(Family::shifted_power_sum);
    for (const auto& [mu, c] : v.terms) target += phi_in_shifted_powers(mu) * c;
    const BasisVector back = invert_phi_basis(target, 6);
    r.record(back == v, "phi round trip " + v.to_string() + " -> " + back.to_string());
  }
  for (int trial = 0; trial < 6; ++trial) {
    const BasisVector v = random_vector(rng, odd);
    PowerPoly target(Family::power_sum);
    for (const auto& [rho, c] : v.terms)
      target += f_in_odd_powers(OddPartition(rho)) * (c * pow2((rho.length() - rho.size()) / 2));
    const BasisVector back = invert_f_basis(target, 6);
    r.record(back == v, "f round trip " + v.to_string() + " -> " + back.to_string());
  }

  const std::vector<std::vector<int>> descendants{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 1}, {2}, {0, 0, 0}};
  for (int d = 1; d <= 2; ++d)
    for (const auto& ks : descendants)
      for (int h = 0; h <= 2; ++h)
        for (int p = 0; p <= 1; ++p) {
          const Rational a = spin_gwh_rhs(d, ks, h, p).value;
          const Rational b = spin_gwh_rhs_direct(d, ks, h, p);
          r.record(a == b, "spin GW/H d=" + std::to_string(d) + " h=" + std::to_string(h) + " p=" +
                               std::to_string(p) + ": " + to_string(a) + " vs " + to_string(b));
        }

  for (int d = 1; d <= 4; ++d) {
    for (const auto& mu : enumerate(d))
      for (const auto& nu : enumerate(d))
        for (int r2 = 0; r2 <= 2; ++r2)
          for (int r3 = 0; r3 <= 1; ++r3) {
            std::vector<BasisVector> span{BasisVector::single(mu), BasisVector::single(nu)};
            for (int i = 0; i < r2; ++i) span.push_back(BasisVector::single({2}));
            for (int i = 0; i < r3; ++i) span.push_back(BasisVector::single({3}));
            const Rational a = gw_h_form(0, d, span);
            const Rational b = hurwitz_number({mu, nu, r2, r3}).value;
            r.record(a == b, "genus-0 form vs H0 at " + mu.to_string() + nu.to_string());
          }
    for (const auto& rho : odd_partitions(d))
      for (const auto& sigma : odd_partitions(d))
        for (int k = 0; k <= 2; ++k) {
          std::vector<BasisVector> span{BasisVector::single(rho), BasisVector::single(sigma)};
          for (int i = 0; i < k; ++i) span.push_back(BasisVector::single({3}));
          const Rational a = spin_gunningham_form(0, 0, d, span);
          const Rational b = spin_hurwitz_number({rho, sigma, k}).value;
          r.record(a == b, "genus-0 spin form vs H0+ at " + rho.to_string() + sigma.to_string());
        }
  }
  return r;
}

std::vector<CheckReport> verify_fock(int emax, Exec exec) {
  std::vector<CheckReport> out;
  out.push_back(check_anticommutators(emax, exec));
  out.push_back(check_shift_relations(4, emax, exec));
  out.push_back(check_cnH(1, emax, exec));
  out.push_back(check_cnH(3, emax, exec));
  out.push_back(check_eigen(emax, exec));
  out.push_back(check_neutral_orthonormal(emax));
  out.push_back(bfc_expand(BfcFlavor::charged, std::min(4, emax), emax));
  out.push_back(bfc_expand(BfcFlavor::neutral, std::min(4, emax), emax));
  out.push_back(factorization_check(emax, exec));
  out.push_back(check_vacuum_series(3, 2, emax));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem", "lemmas", "genfun-consistency", "fock",
                                              "hirota",  "forms",  "all"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite: " + name);
  const bool all = name == "all";
  std::vector<CheckReport> out;
  if (all || name == "theorem") out.push_back(verify_theorem(c.qmax, c.bmax, c.exec));
  if (all || name == "lemmas") {
    out.push_back(verify_lemma_phi(8));
    out.push_back(verify_lemma_f3(10));
    out.push_back(verify_t4_extractions());
  }
  if (all || name == "genfun-consistency") out.push_back(verify_dual_routes(c.qmax, c.bmax, c.exec));
  if (all || name == "fock")
    for (auto& r : verify_fock(c.emax, c.exec)) out.push_back(std::move(r));
  if (all || name == "hirota") {
    out.push_back(hirota_check(HirotaFlavor::kp, c.qmax, c.bmax, c.exec));
    out.push_back(hirota_check(HirotaFlavor::bkp, c.qmax, c.bmax, c.exec));
  }
  if (all || name == "forms") out.push_back(verify_forms(c.seed));
  return out;
}

}  // namespace htau

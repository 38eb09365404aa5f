// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/hirota.hpp"

#include <string>

namespace htau {

const char* to_string(HirotaFlavor f) { return f == HirotaFlavor::kp ? "kp" : "bkp"; }

HirotaForm HirotaForm::kp() {
  return {{{1, {4}}, {-4, {1, 0, 1}}, {3, {0, 2}}}};
}

HirotaForm HirotaForm::bkp() {
  return {{{1, {6}}, {-5, {3, 0, 1}}, {-5, {0, 0, 2}}, {9, {1, 0, 0, 0, 1}}}};
}

HirotaForm HirotaForm::of(HirotaFlavor f) { return f == HirotaFlavor::kp ? kp() : bkp(); }

namespace {

PowerPoly derive(PowerPoly f, const std::vector<int>& orders) {
  for (std::size_t j = 0; j < orders.size(); ++j)
    for (int k = 0; k < orders[j]; ++k) f = f.derivative(static_cast<int>(j) + 1);
  return f;
}

// Σ_{i <= a} Π_j binom(a_j, i_j) (-1)^{|i|} (∂^{a-i} f)(∂^i g).
void bilinear_monomial(const std::vector<int>& a, std::vector<int>& i, std::size_t j, const PowerPoly& f,
                       const PowerPoly& g, const Rational& c, PowerPoly& out) {
  if (j == a.size()) {
    std::vector<int> rest(a.size());
    int total = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      rest[k] = a[k] - i[k];
      total += i[k];
    }
    PowerPoly term = derive(f, rest) * derive(g, i);
    out += (total % 2 == 0 ? c : -c) * term;
    return;
  }
  for (int k = 0; k <= a[j]; ++k) {
    i[j] = k;
    bilinear_monomial(a, i, j + 1, f, g, c * Rational(binomial(a[j], k)), out);
  }
  i[j] = 0;
}

}  // namespace

PowerPoly hirota_bilinear(const HirotaForm& form, const PowerPoly& f, const PowerPoly& g) {
  PowerPoly out(f.family());
  for (const auto& [c, exps] : form.terms) {
    std::vector<int> i(exps.size(), 0);
    bilinear_monomial(exps, i, 0, f, g, c, out);
  }
  return out;
}

const PowerPoly& HirotaTau::at(int d, int s) const {
  static const PowerPoly zero(Family::miwa);
  auto it = terms.find({d, s});
  return it == terms.end() ? zero : it->second;
}

HirotaTau tau_from_series(const GenSeries& s, const std::function<Rational(int)>& prime) {
  HirotaTau tau{s.qmax(), s.bmax(), {}};
  for (const auto& [k, c] : s.terms()) {
    Rational frozen = c * Rational(k.mu.product_of_parts());
    for (int n : k.nu.parts()) frozen *= prime(n);
    auto [it, inserted] = tau.terms.try_emplace({k.d, k.s}, Family::miwa);
    it->second.add_term(k.mu, frozen);
  }
  return tau;
}

CheckReport hirota_smoke_test(const HirotaTau& tau, HirotaFlavor flavor, int q_order) {
  CheckReport report;
  report.check = std::string("hirota-") + to_string(flavor);
  report.params = {{"q_order", q_order}, {"bmax", tau.bmax}};
  report.status = Status::advisory;
  const HirotaForm form = HirotaForm::of(flavor);
  for (int n = 0; n <= q_order && n <= tau.qmax; ++n) {
    for (int s = 0; s <= tau.bmax; ++s) {
      PowerPoly total(Family::miwa);
      for (int a = 0; a <= n; ++a)
        for (int s1 = 0; s1 <= s; ++s1)
          total += Rational(binomial(s, s1)) * hirota_bilinear(form, tau.at(a, s1), tau.at(n - a, s - s1));
      report.record(total.is_zero(),
                    "q^" + std::to_string(n) + " b^" + std::to_string(s) + "/" + std::to_string(s) + "!: " +
                        total.to_string());
    }
  }
  return report;
}

CheckReport hirota_check(HirotaFlavor flavor, int q_order, int bmax, Exec exec) {
  const GenSeries s =
      flavor == HirotaFlavor::kp ? build_phi_schur(q_order, bmax, exec) : build_phiB_q(q_order, bmax, exec);
  return hirota_smoke_test(tau_from_series(s, [](int n) { return Rational(1, n); }), flavor, q_order);
}

}  // namespace htau

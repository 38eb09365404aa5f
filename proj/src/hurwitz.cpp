// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/hurwitz.hpp"

#include <mutex>
#include <stdexcept>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"
#include "htau/linsolve.hpp"

namespace htau {

HurwitzResult hurwitz_number(const HurwitzQuery& q) {
  const int d = q.mu.size();
  if (q.nu.size() != d) throw std::invalid_argument("hurwitz_number: |μ| != |ν|");
  if (q.r2 < 0 || q.r3 < 0) throw std::invalid_argument("hurwitz_number: negative branch-point count");
  const Partition eta2{2}, eta3{3};
  const Rational zmu(z_of(q.mu)), znu(z_of(q.nu));
  Rational total = 0;
  for (const auto& lambda : enumerate(d)) {
    Rational term = Rational(character(lambda, q.mu)) / zmu * Rational(character(lambda, q.nu)) / znu;
    if (term == 0) continue;
    if (q.r2) term *= power(phi_extended(eta2, lambda), q.r2);
    if (q.r3) term *= power(phi_extended(eta3, lambda), q.r3);
    total += term;
  }
  return {total, q.mu.length() + q.nu.length() - q.r2 - 2 * q.r3};
}

HurwitzResult spin_hurwitz_number(const SpinHurwitzQuery& q) {
  const int d = q.rho.size();
  if (q.sigma.size() != d) throw std::invalid_argument("spin_hurwitz_number: |ρ| != |σ|");
  if (q.r < 0) throw std::invalid_argument("spin_hurwitz_number: negative branch-point count");
  const OddPartition eta3{3};
  const Rational zrho(z_of(q.rho)), zsigma(z_of(q.sigma));
  Rational total = 0;
  for (const auto& lambda : strict_partitions(d)) {
    Rational term = pow2(-delta(lambda)) * spin_character(lambda, q.rho) / zrho * spin_character(lambda, q.sigma) / zsigma;
    if (term == 0) continue;
    if (q.r) term *= power(f_extended(eta3, lambda), q.r);
    total += term;
  }
  // ℓ(ρ) + ℓ(σ) ≡ 2d (mod 2), so the exponent is an integer.
  const int exponent = -(q.rho.length() + q.sigma.length() + 2 * q.r) / 2;
  return {pow2(exponent) * total, q.rho.length() + q.sigma.length() - 2 * q.r};
}

void BasisVector::add(const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BasisVector BasisVector::single(const Partition& p, const Rational& c) {
  BasisVector v;
  v.add(p, c);
  return v;
}

std::string BasisVector::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms) {
    if (!s.empty()) s += " + ";
    s += htau::to_string(c) + "*" + p.to_string();
  }
  return s;
}

namespace {

Rational phi_b_scale(const Partition& rho) {
  // ℓ(ρ) ≡ |ρ| (mod 2) for odd ρ.
  return pow2((rho.length() - rho.size()) / 2);
}

Rational gunningham_weight(int h, int parity, int d, const StrictPartition& lambda) {
  const int del = delta(lambda);
  const Rational sc_order = pow2(d + 1) * Rational(factorial(d));
  // (2^{(1-δ)/2})^{2-2h} = 2^{(1-δ)(1-h)}
  Rational w = pow2((1 - del) * (1 - h)) * power(dim_spin(lambda) / sc_order, 2 - 2 * h);
  if (parity % 2 && del) w = -w;
  return w;
}

}  // namespace

Rational phi_image_eval(const BasisVector& v, const Partition& lambda) {
  Rational total = 0;
  for (const auto& [mu, c] : v.terms) total += c * phi_extended(mu, lambda);
  return total;
}

Rational f_image_eval(const BasisVector& v, const StrictPartition& lambda) {
  Rational total = 0;
  for (const auto& [rho, c] : v.terms) total += c * phi_b_scale(rho) * f_extended(OddPartition(rho), lambda);
  return total;
}

Rational gw_h_form(int h, int d, std::span<const BasisVector> vectors) {
  if (d < 0) throw std::invalid_argument("gw_h_form: negative degree");
  const Rational dfact(factorial(d));
  Rational total = 0;
  for (const auto& lambda : enumerate(d)) {
    Rational term = power(Rational(dim_irrep(lambda)) / dfact, 2 - 2 * h);
    for (const auto& v : vectors) {
      if (term == 0) break;
      term *= phi_image_eval(v, lambda);
    }
    total += term;
  }
  return total;
}

Rational spin_gunningham_form(int h, int parity, int d, std::span<const BasisVector> vectors) {
  if (d < 0) throw std::invalid_argument("spin_gunningham_form: negative degree");
  for (const auto& v : vectors)
    for (const auto& [rho, c] : v.terms)
      if (!rho.is_odd()) throw std::invalid_argument("spin_gunningham_form: non-odd partition " + rho.to_string());
  Rational total = 0;
  for (const auto& lambda : strict_partitions(d)) {
    Rational term = gunningham_weight(h, parity, d, lambda);
    for (const auto& v : vectors) {
      if (term == 0) break;
      term *= f_image_eval(v, lambda);
    }
    total += term;
  }
  return pow2((d + 1) * (1 - h)) * total;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    // Σ_{k=0}^{m} binom(m+1, k) B_k = 0
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * cache[static_cast<std::size_t>(k)];
    cache.push_back(-s / (m + 1));
  }
  return cache[static_cast<std::size_t>(n)];
}

Rational zeta_negative(int n) {
  if (n < 1) throw std::invalid_argument("zeta_negative: n must be >= 1");
  return -bernoulli(n + 1) / (n + 1);
}

Rational regularized_shifted(int n, const Partition& lambda) {
  return shifted_power_sum(n, lambda) + (1 - pow2(-n)) * zeta_negative(n);
}

namespace {

std::vector<Partition> partitions_up_to(int n, PartitionKind kind) {
  std::vector<Partition> out;
  for (int d = 0; d <= n; ++d)
    for (auto& p : enumerate(d, kind)) out.push_back(std::move(p));
  return out;
}

template <typename BasisFn, typename TargetFn>
std::vector<Rational> interpolate(const std::vector<Partition>& basis, const std::vector<Partition>& points,
                                  BasisFn basis_at, TargetFn target_at) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(points.size());
  for (const auto& lambda : points) {
    std::vector<Rational> row;
    row.reserve(basis.size());
    for (const auto& mu : basis) row.push_back(basis_at(mu, lambda));
    a.push_back(std::move(row));
    b.push_back(target_at(lambda));
  }
  return solve_exact(std::move(a), std::move(b));
}

Rational shifted_monomial_at(const Partition& nu, const Partition& lambda) {
  Rational v = 1;
  for (int n : nu.parts()) v *= shifted_power_sum(n, lambda);
  return v;
}

Rational power_monomial_at(const Partition& nu, const Partition& lambda) {
  Rational v = 1;
  for (int n : nu.parts()) v *= power_sum(n, lambda);
  return v;
}

}  // namespace

BasisVector invert_phi_basis(const PowerPoly& target, int degree_bound) {
  if (target.family() != Family::shifted_power_sum)
    throw std::invalid_argument("invert_phi_basis: target must be in shifted power sums");
  if (target.weighted_degree() > degree_bound)
    throw std::invalid_argument("invert_phi_basis: target degree exceeds the bound");
  const auto basis = partitions_up_to(degree_bound, PartitionKind::all);
  const auto points = partitions_up_to(2 * degree_bound, PartitionKind::all);
  auto coeffs = interpolate(
      basis, points, [](const Partition& mu, const Partition& lambda) { return phi_extended(mu, lambda); },
      [&](const Partition& lambda) {
        return target.evaluate([&](int n) { return shifted_power_sum(n, lambda); });
      });
  BasisVector v;
  for (std::size_t i = 0; i < basis.size(); ++i) v.add(basis[i], coeffs[i]);
  return v;
}

BasisVector invert_f_basis(const PowerPoly& target, int degree_bound) {
  if (target.family() != Family::power_sum || !target.uses_only_odd_generators())
    throw std::invalid_argument("invert_f_basis: target must be in odd power sums");
  if (target.weighted_degree() > degree_bound)
    throw std::invalid_argument("invert_f_basis: target degree exceeds the bound");
  const auto basis = partitions_up_to(degree_bound, PartitionKind::odd);
  const auto points = partitions_up_to(2 * degree_bound, PartitionKind::strict);
  auto coeffs = interpolate(
      basis, points,
      [](const Partition& rho, const Partition& lambda) -> Rational {
        return phi_b_scale(rho) * f_extended(OddPartition(rho), StrictPartition(lambda));
      },
      [&](const Partition& lambda) { return target.evaluate([&](int n) { return power_sum(n, lambda); }); });
  BasisVector v;
  for (std::size_t i = 0; i < basis.size(); ++i) v.add(basis[i], coeffs[i]);
  return v;
}

PowerPoly phi_in_shifted_powers(const Partition& mu) {
  static std::mutex mutex;
  static std::map<Partition, PowerPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(mu); it != cache.end()) return it->second;
  }
  const auto basis = partitions_up_to(mu.size(), PartitionKind::all);
  const auto points = partitions_up_to(2 * mu.size(), PartitionKind::all);
  auto coeffs = interpolate(basis, points, shifted_monomial_at,
                            [&](const Partition& lambda) { return phi_extended(mu, lambda); });
  PowerPoly p(Family::shifted_power_sum);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  std::lock_guard lock(mutex);
  return cache.emplace(mu, p).first->second;
}

PowerPoly f_in_odd_powers(const OddPartition& rho) {
  static std::mutex mutex;
  static std::map<Partition, PowerPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(rho.partition()); it != cache.end()) return it->second;
  }
  const auto basis = partitions_up_to(rho.size(), PartitionKind::odd);
  const auto points = partitions_up_to(2 * rho.size(), PartitionKind::strict);
  auto coeffs = interpolate(basis, points, power_monomial_at, [&](const Partition& lambda) {
    return f_extended(rho, StrictPartition(lambda));
  });
  PowerPoly p(Family::power_sum);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  std::lock_guard lock(mutex);
  return cache.emplace(rho.partition(), p).first->second;
}

Rational descendent_scale(int k) {
  if (k < 0) throw std::invalid_argument("descendent index must be >= 0");
  Rational s = Rational(factorial(k)) / (pow2(k) * Rational(factorial(2 * k + 1)));
  return k % 2 ? -s : s;
}

SpinGwhResult spin_gwh_rhs(int d, std::span<const int> ks, int h, int parity) {
  SpinGwhResult out;
  for (int k : ks) {
    PowerPoly target = PowerPoly::generator(2 * k + 1) * descendent_scale(k);
    out.insertions.push_back(invert_f_basis(target, 2 * k + 1));
  }
  out.value = spin_gunningham_form(h, parity, d, out.insertions);
  out.conjectural = d >= 3;
  return out;
}

Rational spin_gwh_rhs_direct(int d, std::span<const int> ks, int h, int parity) {
  Rational total = 0;
  for (const auto& lambda : strict_partitions(d)) {
    Rational term = gunningham_weight(h, parity, d, lambda);
    for (int k : ks) term *= descendent_scale(k) * power_sum(2 * k + 1, lambda);
    total += term;
  }
  return pow2((d + 1) * (1 - h)) * total;
}

}  // namespace htau

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "htau/partition.hpp"
#include "htau/polyring.hpp"
#include "htau/rational.hpp"

namespace htau {

/// H⁰_d(μ, ν, η₂^{r₂}, η₃^{r₃}) with η₂ = (2,1^{d-2}), η₃ = (3,1^{d-3}).
struct HurwitzQuery {
  Partition mu;
  Partition nu;
  int r2 = 0;
  int r3 = 0;
};

/// H^{0,+}_d(ρ, σ, η₃^r) over odd profiles.
struct SpinHurwitzQuery {
  OddPartition rho;
  OddPartition sigma;
  int r = 0;
};

struct HurwitzResult {
  Rational value;
  /// χ(C) of the domain from the Riemann–Hurwitz count.
  int euler_characteristic = 0;
};

/**
 * Character-formula Hurwitz number
 *
 *   Σ_{λ⊢d} (χ^λ_μ/z_μ)(χ^λ_ν/z_ν) φ_2(λ)^{r₂} φ_3(λ)^{r₃}.
 *
 * The η-factors use the extended functions φ_{(2)}, φ_{(3)}, which vanish
 * when d is too small for the profile to exist.
 */
HurwitzResult hurwitz_number(const HurwitzQuery& q);

/**
 * Spin Hurwitz number of (P¹, O(-1)):
 *
 *   2^{(-ℓ(ρ)-ℓ(σ)-2r)/2} Σ_{λ∈SP(d)} 2^{-δ(λ)} (ζ^λ_ρ/z_ρ)(ζ^λ_σ/z_σ) f_3(λ)^r.
 */
HurwitzResult spin_hurwitz_number(const SpinHurwitzQuery& q);

/// Finite formal rational combination of partitions.
struct BasisVector {
  std::map<Partition, Rational> terms;

  void add(const Partition& p, const Rational& c);
  static BasisVector single(const Partition& p, const Rational& c = 1);
  std::string to_string() const;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// Σ_μ c_μ φ_μ(λ).
Rational phi_image_eval(const BasisVector& v, const Partition& lambda);
/// Σ_ρ c_ρ 2^{(ℓ(ρ)-|ρ|)/2} f_ρ(λ); every ρ must be odd.
Rational f_image_eval(const BasisVector& v, const StrictPartition& lambda);

/// Σ_{λ⊢d} (dim π^λ / d!)^{2-2h} Π_i φ(v_i)(λ).
Rational gw_h_form(int h, int d, std::span<const BasisVector> vectors);

/// 2^{(d+1)(1-h)} Σ_{λ∈SP(d)} (-1)^{pδ(λ)} (2^{(1-δ(λ))/2} dim V^λ / |SC(d)|)^{2-2h} Π_i φ_b(w_i)(λ),
/// |SC(d)| = 2^{d+1} d!.
Rational spin_gunningham_form(int h, int parity, int d, std::span<const BasisVector> vectors);

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(int n);
/// ζ(-n) = -B_{n+1}/(n+1) for n >= 1.
Rational zeta_negative(int n);
/// p̄_n(λ) + (1 - 2^{-n}) ζ(-n).
Rational regularized_shifted(int n, const Partition& lambda);

/// Coefficients c_μ (|μ| <= degree_bound) with Σ c_μ φ_μ = target, where the
/// target is a polynomial in shifted power sums. Solved exactly by evaluating
/// at every partition of size <= 2*degree_bound.
BasisVector invert_phi_basis(const PowerPoly& target, int degree_bound);

/// Coefficients c_ρ (odd ρ, |ρ| <= degree_bound) with Σ c_ρ φ_b(ρ) = target,
/// φ_b(ρ) = 2^{(ℓ(ρ)-|ρ|)/2} f_ρ; the target is a polynomial in odd power sums
/// evaluated on strict partitions of size <= 2*degree_bound.
BasisVector invert_f_basis(const PowerPoly& target, int degree_bound);

/// φ_μ written in shifted power sums p̄_ν (|ν| <= |μ|), by interpolation.
PowerPoly phi_in_shifted_powers(const Partition& mu);
/// f_ρ written in odd power sums p_σ (|σ| <= |ρ|), by interpolation.
PowerPoly f_in_odd_powers(const OddPartition& rho);

struct SpinGwhResult {
  Rational value;
  /// True for d >= 3, where only the right-hand side is available.
  bool conjectural = false;
  std::vector<BasisVector> insertions;
};

/// Right-hand side of the spin GW/H relation for stationary descendents
/// τ_{k_1}(ω)...τ_{k_n}(ω): each insertion is φ_b^{-1} of
/// (-1)^k k! / (2^k (2k+1)!) · p_{2k+1}.
SpinGwhResult spin_gwh_rhs(int d, std::span<const int> ks, int h, int parity);

/// The same quantity evaluated directly from the power sums on SP(d), with
/// no basis inversion.
Rational spin_gwh_rhs_direct(int d, std::span<const int> ks, int h, int parity);

/// (-1)^k k! / (2^k (2k+1)!).
Rational descendent_scale(int k);

}  // namespace htau

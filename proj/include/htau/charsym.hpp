// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <shared_mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "htau/partition.hpp"
#include "htau/polyring.hpp"
#include "htau/rational.hpp"

namespace htau {

/**
 * Memoized irreducible characters χ^λ_μ of the symmetric group, computed by
 * the Murnaghan–Nakayama rule on beta-sets.
 *
 * The memo is keyed on (λ, remaining cycle type) so partial rim-hook
 * removals are shared across queries. Cache writes are synchronized; reads
 * may run concurrently.
 */
class CharTable {
 public:
  /// Throws std::invalid_argument if |λ| != |μ|.
  Integer character(const Partition& lambda, const Partition& mu);

  /// Fully computed entries (λ, μ) -> χ with |λ| = |μ| = d.
  std::vector<std::tuple<Partition, Partition, Integer>> entries(int d) const;
  void insert(const Partition& lambda, const Partition& mu, const Integer& value);
  /// Computes every χ^λ_μ with |λ| = d.
  void warm(int d);
  void clear();

 private:
  Integer murnaghan_nakayama(const Partition& lambda, const Partition& mu);

  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, Integer> memo_;
};

/// Process-wide table used by the free functions below.
CharTable& default_char_table();

/// χ^λ_μ; throws std::invalid_argument on a size mismatch.
Integer character(const Partition& lambda, const Partition& mu);

/// dim π^λ by the hook-length formula.
Integer dim_irrep(const Partition& lambda);

/// φ^λ_μ = (|C_μ| / dim π^λ) χ^λ_μ with |C_μ| = d!/z_μ.
Rational central_character(const Partition& mu, const Partition& lambda);

/// φ_μ(λ): 0 if |λ| < |μ|, else binom(μ(1)+k, μ(1)) φ^λ_{μ∪(1^k)}, k = |λ|-|μ|.
Rational phi_extended(const Partition& mu, const Partition& lambda);

/// p̄_n(λ) = Σ_i ((λ_i - i + 1/2)^n - (-i + 1/2)^n).
Rational shifted_power_sum(int n, const Partition& lambda);

/// (φ_2(λ), φ_3(λ)) from the closed forms ½p̄_2 and ⅓p̄_3 - ½p̄_1² + 5/12 p̄_1.
std::pair<Rational, Rational> phi2_phi3_eval(const Partition& lambda);

/// s_λ = Σ_μ χ^λ_μ / z_μ p_μ.
PowerPoly schur_in_powersums(const Partition& lambda);

/// The series in t whose [t^4] coefficient is p̄_3^# = d^{↓3} χ^λ_{(3,1^{d-3})}/dim π^λ,
/// written in shifted power sums p̄_j:
///   -⅓ Π_{j=1}^{3} (1 - (j-½)t) · exp(Σ_j p̄_j t^j/j · (1 - (1-3t)^{-j})).
TSeries p3_sharp_series(int order = 4);

}  // namespace htau

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

/// Schur Q-function together with its strict index.
struct QFunction {
  StrictPartition lambda;
  PowerPoly expansion;  // odd power sums only, homogeneous of degree |λ|
};

/**
 * Spin characters ζ^λ_ρ of the Sergeev group, read off from the p_ρ
 * coefficients of Q_λ:
 *
 *   Q_λ = Σ_ρ 2^{(ℓ(λ)-δ(λ))/2} ζ^λ_ρ / z_ρ · p_ρ.
 *
 * Q_λ itself is built from q_r (the coefficients of exp(2 Σ_{n odd} p_n t^n/n))
 * by the two-row rule and a Pfaffian, so this relation is what fixes the
 * normalization of ζ.
 */
class SpinCharTable {
 public:
  Rational character(const StrictPartition& lambda, const OddPartition& rho);
  const QFunction& q_function(const StrictPartition& lambda);

  std::vector<std::tuple<Partition, Partition, Rational>> entries(int d) const;
  void insert(const Partition& lambda, const Partition& rho, const Rational& value);
  void warm(int d);
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, Rational> memo_;
  std::map<Partition, QFunction> q_memo_;
};

SpinCharTable& default_spin_table();

/// q_r = [t^r] exp(2 Σ_{n odd} p_n t^n / n); q_0 = 1.
PowerPoly q_gen(int r);

/// Q_{(a,b)} = q_a q_b + 2 Σ_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}, for any a, b >= 0.
PowerPoly schurQ_two_row(int a, int b);

/// Q_λ via the Pfaffian of [Q_{(λ_i, λ_j)}] (a zero part appended for odd length).
QFunction schurQ(const StrictPartition& lambda);

/// ζ^λ_ρ; throws std::invalid_argument on a size mismatch.
Rational spin_character(const StrictPartition& lambda, const OddPartition& rho);

/// dim V^λ = ζ^λ_{(1^d)}.
Rational dim_spin(const StrictPartition& lambda);

/// f^λ_ρ = (|C_ρ| / dim V^λ) ζ^λ_ρ.
Rational spin_central_character(const OddPartition& rho, const StrictPartition& lambda);

/// f_ρ(λ): 0 if |ρ| > |λ|, else binom(ρ(1)+k, ρ(1)) f^λ_{ρ∪(1^k)}.
Rational f_extended(const OddPartition& rho, const StrictPartition& lambda);

/// Ordinary power sum of the parts, Σ λ_i^n.
Rational power_sum(int n, const Partition& lambda);

/// ⅓p_3(λ) - p_1(λ)² + ⅔p_1(λ).
Rational f3_eval(const StrictPartition& lambda);

/// The series whose [t^4] coefficient is p_3^# for strict partitions:
///   -1/6 (1 - 3t/2) Π_{j=1}^{2}(1 - jt) · exp(Σ_j 2p_{2j-1} t^{2j-1}/(2j-1) · (1 - (1-3t)^{-(2j-1)})).
TSeries p3_sharp_spin_series(int order = 4);

}  // namespace htau

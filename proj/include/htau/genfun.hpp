// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <string>

#include <json.hpp>

#include "htau/partition.hpp"
#include "htau/rational.hpp"
#include "htau/report.hpp"

namespace htau {

/// Index of the coefficient of q^d p_μ p'_ν b^s/s!.
struct SeriesKey {
  int d = 0;
  Partition mu;
  Partition nu;
  int s = 0;

  std::string to_string() const;
  friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

/**
 * Truncated generating series Σ c(d,μ,ν,s) q^d p_μ p'_ν b^s/s!.
 *
 * b is stored against the exponential basis b^s/s!. Only degree-diagonal
 * entries |μ| = |ν| = d with d <= qmax and s <= bmax are admitted; add()
 * throws std::invalid_argument for anything else.
 */
class GenSeries {
 public:
  GenSeries(int qmax, int bmax);
  /// The series 1.
  static GenSeries one(int qmax, int bmax);

  int qmax() const { return qmax_; }
  int bmax() const { return bmax_; }
  const std::map<SeriesKey, Rational>& terms() const { return terms_; }
  Rational coefficient(const SeriesKey& key) const;

  void add(const SeriesKey& key, const Rational& c);
  /// Adds every term of other (orders must match).
  void merge(const GenSeries& other);

  /// {qmax, bmax, terms: [{d, mu, nu, s, coeff: "a/b"}]}
  nlohmann::json to_json() const;
  static GenSeries from_json(const nlohmann::json& j);

  friend bool operator==(const GenSeries&, const GenSeries&) = default;

 private:
  int qmax_;
  int bmax_;
  std::map<SeriesKey, Rational> terms_;
};

/// Φ from the Schur side: Σ_λ q^d e^{b(½(d+d²)+φ_2(λ)+φ_3(λ))} s_λ(p) s_λ(p').
GenSeries build_phi_schur(int qmax, int bmax, Exec exec = Exec::parallel);

/// Φ from its definition as a sum over Hurwitz numbers with multinomial b-weights.
GenSeries build_phi_hurwitz(int qmax, int bmax);

/// Φ_B from the Q side: Σ_{λ strict} q^d e^{b(d²+f_3(λ))} 2^{-ℓ(λ)} Q_λ(½p) Q_λ(½p').
GenSeries build_phiB_q(int qmax, int bmax, Exec exec = Exec::parallel);

/// Φ_B from its definition as a sum over spin Hurwitz numbers weighted by 2^{-χ(C)/2}.
GenSeries build_phiB_spin(int qmax, int bmax);

/// Sets p_2 = p_4 = ... = 0 and likewise for p'.
GenSeries restrict_odd(const GenSeries& s);

/// s², with b^i/i! · b^j/j! = binom(i+j, i) b^{i+j}/(i+j)!; same truncation orders.
GenSeries square(const GenSeries& s);

/// Coefficient-wise comparison over the union of supports.
CheckReport compare_series(const std::string& check, const GenSeries& lhs, const GenSeries& rhs,
                           bool list_details = false);

/// square(Φ_B) == restrict_odd(Φ) to the given orders.
CheckReport verify_theorem(int qmax, int bmax, Exec exec = Exec::parallel);

}  // namespace htau

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "htau/partition.hpp"
#include "htau/rational.hpp"

namespace htau {

/// Which countable family of generators g_1, g_2, ... a polynomial lives in.
enum class Family {
  power_sum,          ///< p_n, printed "p<n>"
  shifted_power_sum,  ///< p̄_n, printed "pb<n>"
  miwa,               ///< t_n, printed "t<n>"
};

const char* generator_prefix(Family f);

/// A monomial Π g_{k_i} is stored as the partition (k_1 >= k_2 >= ...);
/// the empty partition is the constant monomial. Multiplication is the
/// multiset union, so p_μ is literally keyed by μ.
using Monomial = Partition;

/**
 * Sparse polynomial with exact rational coefficients in one generator family.
 *
 * Canonical form: no zero coefficients, monomials are sorted part lists.
 * Binary operations require equal families and throw std::invalid_argument
 * otherwise.
 */
class PowerPoly {
 public:
  explicit PowerPoly(Family family = Family::power_sum) : family_(family) {}

  static PowerPoly constant(const Rational& c, Family family = Family::power_sum);
  /// The single generator g_n.
  static PowerPoly generator(int n, Family family = Family::power_sum);
  static PowerPoly monomial(const Monomial& m, const Rational& c, Family family = Family::power_sum);

  Family family() const { return family_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  /// max over terms of Σ k_i (weight deg g_n = n); -1 for the zero polynomial.
  int weighted_degree() const;
  bool is_homogeneous() const;
  bool uses_only_odd_generators() const;

  PowerPoly& operator+=(const PowerPoly& o);
  PowerPoly& operator-=(const PowerPoly& o);
  PowerPoly& operator*=(const PowerPoly& o);
  PowerPoly& operator*=(const Rational& c);
  friend PowerPoly operator+(PowerPoly a, const PowerPoly& b) { return a += b; }
  friend PowerPoly operator-(PowerPoly a, const PowerPoly& b) { return a -= b; }
  friend PowerPoly operator*(const PowerPoly& a, const PowerPoly& b);
  friend PowerPoly operator*(PowerPoly a, const Rational& c) { return a *= c; }
  friend PowerPoly operator*(const Rational& c, PowerPoly a) { return a *= c; }
  PowerPoly operator-() const;

  PowerPoly pow(int e) const;

  /// Replaces generator g_n by `value` (which must share the family).
  PowerPoly substitute(int n, const PowerPoly& value) const;
  /// g_n <- scale(n) * g_n for every generator; the family may be relabelled.
  PowerPoly scale_generators(const std::function<Rational(int)>& scale, Family target) const;
  PowerPoly scale_generators(const std::function<Rational(int)>& scale) const {
    return scale_generators(scale, family_);
  }
  /// ∂/∂g_n.
  PowerPoly derivative(int n) const;
  /// Evaluates with g_n <- value(n).
  Rational evaluate(const std::function<Rational(int)>& value) const;

  /// Canonical text: terms by weighted degree (high first), then reverse-lex,
  /// e.g. "1/3*p3 - p1^2 + 2/3*p1"; zero prints "0".
  std::string to_string() const;

  friend bool operator==(const PowerPoly& a, const PowerPoly& b) {
    return a.family_ == b.family_ && a.terms_ == b.terms_;
  }

  /// Adds c * m in place (skips zero, removes cancelled terms).
  void add_term(const Monomial& m, const Rational& c);

 private:
  void require_same_family(const PowerPoly& o) const;

  Family family_;
  std::map<Monomial, Rational> terms_;
};

/**
 * Truncated power series in an auxiliary variable t with PowerPoly
 * coefficients. All terms of t-degree above order() are discarded; binary
 * operations truncate to the smaller order of the operands.
 */
class TSeries {
 public:
  TSeries(int order, Family family);

  static TSeries constant(const PowerPoly& c, int order);
  /// c * t^k.
  static TSeries monomial(int k, const PowerPoly& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Family family() const { return family_; }
  /// [t^k]; throws std::out_of_range if k exceeds the truncation order.
  const PowerPoly& coeff(int k) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const Rational& c);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const Rational& c) { return a *= c; }
  friend TSeries operator*(const Rational& c, TSeries a) { return a *= c; }
  /// Multiplies every coefficient by a PowerPoly.
  TSeries times(const PowerPoly& c) const;
  TSeries truncated(int order) const;

  friend bool operator==(const TSeries& a, const TSeries& b) = default;

 private:
  Family family_;
  std::vector<PowerPoly> coeffs_;
};

/// Σ_{k<=N} a^k / k! truncated at t-degree N (or a's order, if smaller).
/// Throws std::invalid_argument if a has a nonzero constant term.
TSeries exp_truncated(const TSeries& a, int order);

/// [t^k] a; same as a.coeff(k).
inline const PowerPoly& coeff(const TSeries& a, int k) { return a.coeff(k); }

/// (1 - c t)^{-n} to order N, for n >= 0.
TSeries geometric_inverse_powers(const Rational& c, int n, int order, Family family = Family::power_sum);

}  // namespace htau

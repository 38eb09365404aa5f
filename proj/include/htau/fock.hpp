// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "htau/genfun.hpp"
#include "htau/partition.hpp"
#include "htau/rational.hpp"
#include "htau/report.hpp"

namespace htau {

/// Raised when an operator would produce a state above the energy cutoff.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result that must be rational (or real) is not.
class ConventionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a + b√2 with rational a, b.
struct QSqrt2 {
  Rational a;
  Rational b;

  QSqrt2() = default;
  QSqrt2(const Rational& a_, const Rational& b_ = 0) : a(a_), b(b_) {}
  QSqrt2(int a_) : a(a_) {}
  static QSqrt2 sqrt2() { return {0, 1}; }
  static QSqrt2 inv_sqrt2() { return {0, Rational(1, 2)}; }
  /// 2^{e/2} for any integer e.
  static QSqrt2 pow_sqrt2(int e);

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  std::string to_string() const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  QSqrt2 operator-() const { return {-a, -b}; }
  friend bool operator==(const QSqrt2&, const QSqrt2&) = default;
};

/**
 * Semi-infinite wedge basis vector of charge c labelled by λ. The occupied
 * positions are k_i = λ_i - i + c + ½ (i >= 1), and the energy is
 * |λ| + c²/2. energy2() returns twice the energy, which is an integer.
 */
struct BasisState {
  int charge = 0;
  Partition lambda;

  int energy2() const { return 2 * lambda.size() + charge * charge; }
  std::string to_string() const;
  friend bool operator==(const BasisState&, const BasisState&) = default;
  friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

/// All basis states with twice-energy <= e2, any charge.
std::vector<BasisState> states_up_to(int e2);

/**
 * Finite combination i^phase · Σ c_S v_S with c_S in Q(√2).
 *
 * The global phase records the factors of i coming from φ̂; i² folds into a
 * sign. Adding vectors whose phases differ, or an inner product left with a
 * lone factor of i, raises ConventionError.
 */
class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const BasisState& s, const QSqrt2& c = 1);
  static FockVector vacuum() { return basis({0, {}}); }

  const std::map<BasisState, QSqrt2>& terms() const { return terms_; }
  int phase() const { return phase_; }
  bool is_zero() const { return terms_.empty(); }
  QSqrt2 coefficient(const BasisState& s) const;
  /// Largest twice-energy present; -1 for the zero vector.
  int max_energy2() const;

  /// Adds c·v_s within the current phase.
  void add(const BasisState& s, const QSqrt2& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const QSqrt2& c);
  friend FockVector operator+(FockVector x, const FockVector& y) { return x += y; }
  friend FockVector operator-(FockVector x, const FockVector& y) { return x -= y; }
  friend FockVector operator*(FockVector x, const QSqrt2& c) { return x *= c; }
  friend FockVector operator*(const QSqrt2& c, FockVector x) { return x *= c; }
  /// Multiplies by i.
  FockVector& times_i();

  std::string to_string() const;
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  std::map<BasisState, QSqrt2> terms_;
  int phase_ = 0;
};

/// Hermitian inner product; the basis {v_S} is orthonormal.
QSqrt2 inner(const FockVector& u, const FockVector& v);
/// inner() that must come out rational; ConventionError otherwise.
Rational inner_rational(const FockVector& u, const FockVector& v);

enum class OpKind {
  identity,
  psi,         ///< ψ_k, k half-integer
  psi_star,    ///< ψ*_k
  phi,         ///< φ_m
  phi_hat,     ///< φ̂_m
  E,           ///< E_n
  EB,          ///< E^B_n, n odd
  EB_hat,      ///< Ê^B_n
  F,           ///< ⅓E_3 + ½E_2 + 11/12 E_1
  FB,          ///< ⅓E^B_3 + ⅔E^B_1
  FB_hat,      ///< hat image of F^B
  alpha,       ///< α_n = Σ_k ψ_{k-n}ψ*_k
  alpha_star,  ///< α*_n = Σ_k ψ_k ψ*_{k-n}
  beta,        ///< β_N = ½ Σ_m (-1)^{m+1} φ_m φ_{-m-N}, N odd
  beta_star,   ///< β*_N = ½ Σ_m (-1)^m φ_{m+N} φ_{-m}
  beta_hat,
  beta_hat_star,
};

/**
 * One primitive or composite operator with its parameter (k for ψ, ψ*;
 * the integer index otherwise) and a declared maximum energy shift, used
 * to decide truncation soundness before anything is applied.
 */
struct OperatorSpec {
  OpKind kind = OpKind::identity;
  Rational param = 0;

  static OperatorSpec identity() { return {}; }
  static OperatorSpec psi(const Rational& k);
  static OperatorSpec psi_star(const Rational& k);
  static OperatorSpec phi(int m) { return {OpKind::phi, m}; }
  static OperatorSpec phi_hat(int m) { return {OpKind::phi_hat, m}; }
  static OperatorSpec E(int n) { return {OpKind::E, n}; }
  static OperatorSpec EB(int n);
  static OperatorSpec EB_hat(int n);
  static OperatorSpec F() { return {OpKind::F, 0}; }
  static OperatorSpec FB() { return {OpKind::FB, 0}; }
  static OperatorSpec FB_hat() { return {OpKind::FB_hat, 0}; }
  static OperatorSpec alpha(int n);
  static OperatorSpec alpha_star(int n);
  static OperatorSpec beta(int n, bool hat = false);
  static OperatorSpec beta_star(int n, bool hat = false);

  /// Upper bound on (output energy - input energy).
  Rational max_shift() const;
  /// The image under φ_m <-> φ̂_m (identity on charged operators).
  OperatorSpec hatted() const;
  std::string to_string() const;
};

/// max(0, largest partial energy shift) of a product A_1...A_n applied right to left.
Rational sound_bound(const std::vector<OperatorSpec>& product);

/// Exact action; no cutoff is involved.
FockVector apply_exact(const OperatorSpec& op, const FockVector& v);

/// Cutoff-aware front end: every result must have energy <= emax.
class FockSpace {
 public:
  explicit FockSpace(int emax) : emax_(emax) {}
  int emax() const { return emax_; }

  /// Throws TruncationError if the declared shift could leave the cutoff.
  FockVector apply(const OperatorSpec& op, const FockVector& v) const;
  /// A_1 A_2 ... A_n v (A_n acts first); soundness is checked up front.
  FockVector apply(const std::vector<OperatorSpec>& product, const FockVector& v) const;
  /// (A_1...A_n v_∅, v_∅), which must be rational.
  Rational vacuum_expectation(const std::vector<OperatorSpec>& product) const;

  FockVector apply_psi(const Rational& k, const FockVector& v) const { return apply(OperatorSpec::psi(k), v); }
  FockVector apply_psi_star(const Rational& k, const FockVector& v) const {
    return apply(OperatorSpec::psi_star(k), v);
  }
  FockVector apply_phi(int m, const FockVector& v) const { return apply(OperatorSpec::phi(m), v); }
  FockVector apply_phi_hat(int m, const FockVector& v) const { return apply(OperatorSpec::phi_hat(m), v); }
  FockVector apply_En(int n, const FockVector& v) const { return apply(OperatorSpec::E(n), v); }
  FockVector apply_EnB(int n, const FockVector& v) const { return apply(OperatorSpec::EB(n), v); }
  FockVector apply_F(const FockVector& v) const { return apply(OperatorSpec::F(), v); }
  FockVector apply_FB(const FockVector& v) const { return apply(OperatorSpec::FB(), v); }

 private:
  void require_within(const FockVector& v, const std::string& what) const;
  int emax_;
};

/// v_λ at charge 0.
FockVector charged_basis(const Partition& lambda);
/// v^B_λ for strict λ (hatted: built from φ̂ instead of φ).
FockVector neutral_basis(const StrictPartition& lambda, bool hat = false);
/// Largest energy that can occur in v^B_λ: |λ| + (ℓ(λ) + δ(λ))/2.
Rational neutral_basis_max_energy(const StrictPartition& lambda);

/// Π_n (α*_n)^{m_n}/m_n! v_∅, i.e. the t^ν coefficient of e^{α*(t)} v_∅.
FockVector charged_boson_vector(const Partition& nu, const FockSpace& space);
/// The t^ν coefficient of e^{β*(t)} v_∅ (ν odd), or of its hat image.
FockVector neutral_boson_vector(const OddPartition& nu, const FockSpace& space, bool hat = false);

/// Checks {ψ_k, ψ*_l} = δ_kl, {ψ, ψ} = {ψ*, ψ*} = 0 (|k|, |l| <= 5/2) and
/// {φ_n, φ_m} = {φ̂_n, φ̂_m} = (-1)^m δ_{m,-n}, {φ_m, φ̂_n} = 0 (|m|, |n| <= 2)
/// on every basis state of energy <= emax - 2 for which the products stay
/// within the cutoff.
CheckReport check_anticommutators(int emax, Exec exec = Exec::parallel);

/// E_n ψ_k = ψ_k (E_n + k^n), E_n ψ*_k = ψ*_k (E_n - k^n) for n <= n_max, and
/// E^B_n φ_m = φ_m (E^B_n + m^n) (plus the hat image) for odd n <= n_max.
CheckReport check_shift_relations(int n_max, int emax, Exec exec = Exec::parallel);

/// E^B_n + Ê^B_n = Σ_i binom(n, i) E_{n-i} / 2^i, n odd.
CheckReport check_cnH(int n, int emax, Exec exec = Exec::parallel);

/// E_n v_λ = p̄_n(λ) v_λ (n <= 4), F v_λ = (½(d+d²) + φ_2 + φ_3) v_λ,
/// E^B_n v^B_λ = p_n(λ) v^B_λ (n = 1, 3), F^B v^B_λ = (d² + f_3) v^B_λ,
/// for every λ that fits below the cutoff.
CheckReport check_eigen(int emax, Exec exec = Exec::parallel);

/// (v^B_λ, v^B_μ) = δ_λμ for strict λ, μ that fit below the cutoff.
CheckReport check_neutral_orthonormal(int emax);

enum class BfcFlavor { charged, neutral };

/// Expands e^{α*(t)} v_∅ (resp. e^{β*(t)} v_∅) through degree d_max and
/// compares against s_λ(p) (resp. 2^{-ℓ(λ)/2} Q_λ(½p)), with t_n = p_n/n.
CheckReport bfc_expand(BfcFlavor flavor, int d_max, int emax);

/// ⟨Z⟩⟨Ŵ⟩ = ⟨ZŴ⟩ for Z, W products of two φ's (indices in [-2, 2]) and of
/// four φ's (indices in {-1, 0, 1}); ZŴ = ŴZ on states for the two-φ family.
/// ⟨ZŴ⟩ is evaluated as (Ŵ v_∅, Z* v_∅) so each side stays below the cutoff.
CheckReport factorization_check(int emax, Exec exec = Exec::parallel);

/// ⟨e^{α(t)} q^{E_1} e^{bF} e^{α*(t')}⟩ as a series in q, p, p', b.
GenSeries phi_vacuum_series(int qmax, int bmax, int emax);
/// ⟨e^{β(t)} q^{E^B_1} e^{bF^B} e^{β*(t')}⟩, or its hat image.
GenSeries phiB_vacuum_series(int qmax, int bmax, int emax, bool hat = false);

/// Both vacuum-expectation series (and the hat image) against the genfun builders.
CheckReport check_vacuum_series(int qmax, int bmax, int emax);

}  // namespace htau

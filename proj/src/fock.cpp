// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <utility>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"

namespace htau {

// ---------------------------------------------------------------------------
// Q(√2)

QSqrt2 QSqrt2::pow_sqrt2(int e) {
  if (e % 2 == 0) return {pow2(e / 2), 0};
  return {0, pow2((e - 1) / 2)};
}

std::string QSqrt2::to_string() const {
  if (b == 0) return htau::to_string(a);
  std::string r = htau::to_string(b) + "*sqrt2";
  if (a == 0) return r;
  return htau::to_string(a) + (b < 0 ? " - " + htau::to_string(-b) + "*sqrt2" : " + " + r);
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a += o.a;
  b += o.b;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational na = a * o.a + 2 * b * o.b;
  Rational nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

// ---------------------------------------------------------------------------
// States and vectors

std::string BasisState::to_string() const {
  return "v[" + std::to_string(charge) + ";" + lambda.to_string() + "]";
}

std::vector<BasisState> states_up_to(int e2) {
  std::vector<BasisState> out;
  for (int c = 0; c * c <= e2; ++c) {
    for (int sign : {1, -1}) {
      if (c == 0 && sign < 0) continue;
      for (int n = 0; 2 * n + c * c <= e2; ++n)
        for (auto& l : enumerate(n)) out.push_back({sign * c, std::move(l)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FockVector FockVector::basis(const BasisState& s, const QSqrt2& c) {
  FockVector v;
  v.add(s, c);
  return v;
}

QSqrt2 FockVector::coefficient(const BasisState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? QSqrt2() : it->second;
}

int FockVector::max_energy2() const {
  int e = -1;
  for (const auto& [s, c] : terms_) e = std::max(e, s.energy2());
  return e;
}

void FockVector::add(const BasisState& s, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) phase_ = o.phase_;
  if (phase_ != o.phase_) throw ConventionError("adding Fock vectors with different i-phases");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  FockVector neg = o;
  neg *= QSqrt2(-1);
  return *this += neg;
}

FockVector& FockVector::operator*=(const QSqrt2& c) {
  if (c.is_zero()) {
    terms_.clear();
    phase_ = 0;
    return *this;
  }
  for (auto& [s, x] : terms_) x *= c;
  return *this;
}

FockVector& FockVector::times_i() {
  if (phase_ == 0) {
    phase_ = 1;
  } else {
    phase_ = 0;
    for (auto& [s, x] : terms_) x = -x;
  }
  return *this;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out = phase_ ? "i*(" : "";
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")" + s.to_string();
  }
  return phase_ ? out + ")" : out;
}

QSqrt2 inner(const FockVector& u, const FockVector& v) {
  QSqrt2 total;
  for (const auto& [s, c] : u.terms()) {
    auto it = v.terms().find(s);
    if (it != v.terms().end()) total += c * it->second;
  }
  if (u.phase() == v.phase() || total.is_zero()) return total;
  throw ConventionError("inner product left with a factor of i: " + total.to_string());
}

Rational inner_rational(const FockVector& u, const FockVector& v) {
  QSqrt2 x = inner(u, v);
  if (!x.is_rational()) throw ConventionError("expected a rational inner product, got " + x.to_string());
  return x.a;
}

// ---------------------------------------------------------------------------
// Charged fermions on basis states. Slot s stands for position k = s + ½.

namespace {

std::vector<int> occupied_slots(const BasisState& st, int floor) {
  std::vector<int> out;
  for (int i = 1;; ++i) {
    int s = st.lambda[static_cast<std::size_t>(i - 1)] - i + st.charge;
    if (s < floor) break;
    out.push_back(s);
  }
  return out;
}

BasisState from_slots(const std::vector<int>& slots, int charge) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    int p = slots[i] + static_cast<int>(i) + 1 - charge;
    if (p <= 0) break;
    parts.push_back(p);
  }
  return {charge, Partition(std::move(parts))};
}

int slot_floor(const BasisState& st, int s) { return std::min(s, st.charge - st.lambda.length() - 1) - 1; }

using Image = std::optional<std::pair<int, BasisState>>;

// u_k ∧ v: zero if occupied, sign (-1)^{#occupied above k}.
Image insert_slot(int s, const BasisState& st) {
  auto slots = occupied_slots(st, slot_floor(st, s));
  auto pos = std::find_if(slots.begin(), slots.end(), [&](int x) { return x <= s; });
  if (pos != slots.end() && *pos == s) return std::nullopt;
  const int above = static_cast<int>(pos - slots.begin());
  slots.insert(pos, s);
  return std::make_pair(above % 2 ? -1 : 1, from_slots(slots, st.charge + 1));
}

Image remove_slot(int s, const BasisState& st) {
  auto slots = occupied_slots(st, slot_floor(st, s));
  auto pos = std::find(slots.begin(), slots.end(), s);
  if (pos == slots.end()) return std::nullopt;
  const int above = static_cast<int>(pos - slots.begin());
  slots.erase(pos);
  return std::make_pair(above % 2 ? -1 : 1, from_slots(slots, st.charge - 1));
}

FockVector map_states(const FockVector& v, const std::function<Image(const BasisState&)>& f) {
  FockVector out;
  bool any = false;
  for (const auto& [st, c] : v.terms()) {
    if (auto img = f(st)) {
      out.add(img->second, img->first > 0 ? c : -c);
      any = true;
    }
  }
  if (any && v.phase()) out.times_i();
  return out;
}

int half_integer_slot(const Rational& k) {
  Rational s = k - Rational(1, 2);
  if (!is_integer(s)) throw std::invalid_argument("fermion index must be a half-integer: " + to_string(k));
  return static_cast<int>(s.get_num().get_si());
}

FockVector psi_raw(int slot, const FockVector& v) {
  return map_states(v, [&](const BasisState& st) { return insert_slot(slot, st); });
}

FockVector psi_star_raw(int slot, const FockVector& v) {
  return map_states(v, [&](const BasisState& st) { return remove_slot(slot, st); });
}

int sign_of(int m) { return (m % 2 == 0) ? 1 : -1; }

// φ_m = (ψ_{m-½} + (-1)^m ψ*_{-m-½})/√2; φ̂_m = i(ψ_{m-½} - (-1)^m ψ*_{-m-½})/√2.
FockVector phi_raw(int m, const FockVector& v, bool hat) {
  FockVector a = psi_raw(m - 1, v);
  FockVector b = psi_star_raw(-m - 1, v);
  b *= QSqrt2(hat ? -sign_of(m) : sign_of(m));
  a += b;
  a *= QSqrt2::inv_sqrt2();
  if (hat) a.times_i();
  return a;
}

// Beyond this index every φ-bilinear of the family annihilates the state.
int window(const BasisState& st) {
  return std::max(st.lambda.length(), st.lambda[0]) + std::abs(st.charge) + 2;
}

// Applies, state by state, Σ_m c(m) φ_{a(m)} φ_{b(m)} over the window.
FockVector neutral_bilinear(const FockVector& v, bool hat, int lo_shift, int hi_shift,
                            const std::function<std::optional<std::tuple<QSqrt2, int, int>>(int)>& term) {
  FockVector out;
  for (const auto& [st, c] : v.terms()) {
    FockVector single = FockVector::basis(st, c);
    if (v.phase()) single.times_i();
    const int w = window(st);
    for (int m = -w - lo_shift; m <= w + hi_shift; ++m) {
      auto t = term(m);
      if (!t) continue;
      auto [coef, a, b] = *t;
      FockVector r = phi_raw(a, phi_raw(b, single, hat), hat);
      r *= coef;
      out += r;
    }
  }
  return out;
}

FockVector EB_raw(int n, const FockVector& v, bool hat) {
  return neutral_bilinear(v, hat, 0, 0, [&](int m) -> std::optional<std::tuple<QSqrt2, int, int>> {
    if (m <= 0) return std::nullopt;
    return std::make_tuple(QSqrt2(sign_of(m) * power(Rational(m), n)), m, -m);
  });
}

FockVector beta_raw(int n, const FockVector& v, bool hat) {
  return neutral_bilinear(v, hat, n, n, [&](int m) -> std::optional<std::tuple<QSqrt2, int, int>> {
    return std::make_tuple(QSqrt2(Rational(-sign_of(m), 2)), m, -m - n);
  });
}

FockVector beta_star_raw(int n, const FockVector& v, bool hat) {
  return neutral_bilinear(v, hat, n, n, [&](int m) -> std::optional<std::tuple<QSqrt2, int, int>> {
    return std::make_tuple(QSqrt2(Rational(sign_of(m), 2)), m + n, -m);
  });
}

// E_n is diagonal: Σ_{occupied k>0} k^n - Σ_{empty k<0} k^n.
Rational E_eigenvalue(int n, const BasisState& st) {
  const int floor = std::min(st.charge - st.lambda.length() - 1, -1) - 1;
  auto slots = occupied_slots(st, floor + 1);
  Rational total = 0;
  auto k_of = [](int s) -> Rational { return Rational(2 * s + 1, 2); };
  for (int s : slots)
    if (s >= 0) total += power(k_of(s), n);
  for (int s = floor + 1; s < 0; ++s)
    if (std::find(slots.begin(), slots.end(), s) == slots.end()) total -= power(k_of(s), n);
  return total;
}

FockVector diagonal(const FockVector& v, const std::function<Rational(const BasisState&)>& eig) {
  FockVector out;
  for (const auto& [st, c] : v.terms()) out.add(st, c * QSqrt2(eig(st)));
  if (!out.is_zero() && v.phase()) out.times_i();
  return out;
}

FockVector alpha_raw(int n, const FockVector& v, bool star) {
  FockVector out;
  for (const auto& [st, c] : v.terms()) {
    FockVector single = FockVector::basis(st, c);
    if (v.phase()) single.times_i();
    const int lo = st.charge - st.lambda.length() - n - 2;
    const int hi = st.lambda[0] + st.charge + n + 2;
    for (int s = lo; s <= hi; ++s)
      out += star ? psi_raw(s, psi_star_raw(s - n, single)) : psi_raw(s - n, psi_star_raw(s, single));
  }
  return out;
}

int require_int(const Rational& x) {
  if (!is_integer(x)) throw std::invalid_argument("operator index must be an integer");
  return static_cast<int>(x.get_num().get_si());
}

}  // namespace

// ---------------------------------------------------------------------------
// Operator specs

OperatorSpec OperatorSpec::psi(const Rational& k) {
  half_integer_slot(k);
  return {OpKind::psi, k};
}

OperatorSpec OperatorSpec::psi_star(const Rational& k) {
  half_integer_slot(k);
  return {OpKind::psi_star, k};
}

OperatorSpec OperatorSpec::EB(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("E^B_n needs odd n >= 1");
  return {OpKind::EB, n};
}

OperatorSpec OperatorSpec::EB_hat(int n) { return EB(n).hatted(); }

OperatorSpec OperatorSpec::alpha(int n) {
  if (n < 1) throw std::invalid_argument("alpha_n needs n >= 1");
  return {OpKind::alpha, n};
}

OperatorSpec OperatorSpec::alpha_star(int n) {
  if (n < 1) throw std::invalid_argument("alpha*_n needs n >= 1");
  return {OpKind::alpha_star, n};
}

OperatorSpec OperatorSpec::beta(int n, bool hat) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("beta_n needs odd n >= 1");
  return {hat ? OpKind::beta_hat : OpKind::beta, n};
}

OperatorSpec OperatorSpec::beta_star(int n, bool hat) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("beta*_n needs odd n >= 1");
  return {hat ? OpKind::beta_hat_star : OpKind::beta_star, n};
}

Rational OperatorSpec::max_shift() const {
  switch (kind) {
    case OpKind::identity:
    case OpKind::E:
    case OpKind::F: return 0;
    case OpKind::psi: return param;
    case OpKind::psi_star: return -param;
    case OpKind::phi:
    case OpKind::phi_hat: return param + Rational(1, 2);
    case OpKind::EB:
    case OpKind::EB_hat:
    case OpKind::FB:
    case OpKind::FB_hat: return 1;
    case OpKind::alpha: return -param;
    case OpKind::alpha_star: return param;
    case OpKind::beta:
    case OpKind::beta_hat: return 1 - param;
    case OpKind::beta_star:
    case OpKind::beta_hat_star: return param + 1;
  }
  return 0;
}

OperatorSpec OperatorSpec::hatted() const {
  OperatorSpec o = *this;
  switch (kind) {
    case OpKind::phi: o.kind = OpKind::phi_hat; break;
    case OpKind::phi_hat: o.kind = OpKind::phi; break;
    case OpKind::EB: o.kind = OpKind::EB_hat; break;
    case OpKind::EB_hat: o.kind = OpKind::EB; break;
    case OpKind::FB: o.kind = OpKind::FB_hat; break;
    case OpKind::FB_hat: o.kind = OpKind::FB; break;
    case OpKind::beta: o.kind = OpKind::beta_hat; break;
    case OpKind::beta_hat: o.kind = OpKind::beta; break;
    case OpKind::beta_star: o.kind = OpKind::beta_hat_star; break;
    case OpKind::beta_hat_star: o.kind = OpKind::beta_star; break;
    default: break;
  }
  return o;
}

std::string OperatorSpec::to_string() const {
  const std::string p = htau::to_string(param);
  switch (kind) {
    case OpKind::identity: return "1";
    case OpKind::psi: return "psi[" + p + "]";
    case OpKind::psi_star: return "psi*[" + p + "]";
    case OpKind::phi: return "phi[" + p + "]";
    case OpKind::phi_hat: return "phihat[" + p + "]";
    case OpKind::E: return "E[" + p + "]";
    case OpKind::EB: return "EB[" + p + "]";
    case OpKind::EB_hat: return "EBhat[" + p + "]";
    case OpKind::F: return "F";
    case OpKind::FB: return "FB";
    case OpKind::FB_hat: return "FBhat";
    case OpKind::alpha: return "alpha[" + p + "]";
    case OpKind::alpha_star: return "alpha*[" + p + "]";
    case OpKind::beta: return "beta[" + p + "]";
    case OpKind::beta_star: return "beta*[" + p + "]";
    case OpKind::beta_hat: return "betahat[" + p + "]";
    case OpKind::beta_hat_star: return "betahat*[" + p + "]";
  }
  return "?";
}

Rational sound_bound(const std::vector<OperatorSpec>& product) {
  Rational sum = 0, best = 0;
  for (auto it = product.rbegin(); it != product.rend(); ++it) {
    sum += it->max_shift();
    best = std::max(best, sum);
  }
  return best;
}

FockVector apply_exact(const OperatorSpec& op, const FockVector& v) {
  switch (op.kind) {
    case OpKind::identity: return v;
    case OpKind::psi: return psi_raw(half_integer_slot(op.param), v);
    case OpKind::psi_star: return psi_star_raw(half_integer_slot(op.param), v);
    case OpKind::phi: return phi_raw(require_int(op.param), v, false);
    case OpKind::phi_hat: return phi_raw(require_int(op.param), v, true);
    case OpKind::E: {
      const int n = require_int(op.param);
      return diagonal(v, [n](const BasisState& st) { return E_eigenvalue(n, st); });
    }
    case OpKind::F:
      return diagonal(v, [](const BasisState& st) -> Rational {
        return E_eigenvalue(3, st) / 3 + E_eigenvalue(2, st) / 2 + Rational(11, 12) * E_eigenvalue(1, st);
      });
    case OpKind::EB: return EB_raw(require_int(op.param), v, false);
    case OpKind::EB_hat: return EB_raw(require_int(op.param), v, true);
    case OpKind::FB:
    case OpKind::FB_hat: {
      const bool hat = op.kind == OpKind::FB_hat;
      FockVector a = EB_raw(3, v, hat);
      a *= QSqrt2(Rational(1, 3));
      FockVector b = EB_raw(1, v, hat);
      b *= QSqrt2(Rational(2, 3));
      return a += b;
    }
    case OpKind::alpha: return alpha_raw(require_int(op.param), v, false);
    case OpKind::alpha_star: return alpha_raw(require_int(op.param), v, true);
    case OpKind::beta: return beta_raw(require_int(op.param), v, false);
    case OpKind::beta_hat: return beta_raw(require_int(op.param), v, true);
    case OpKind::beta_star: return beta_star_raw(require_int(op.param), v, false);
    case OpKind::beta_hat_star: return beta_star_raw(require_int(op.param), v, true);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Cutoff front end

void FockSpace::require_within(const FockVector& v, const std::string& what) const {
  if (v.max_energy2() > 2 * emax_)
    throw TruncationError(what + " produced a state above energy " + std::to_string(emax_));
}

FockVector FockSpace::apply(const OperatorSpec& op, const FockVector& v) const {
  return apply(std::vector<OperatorSpec>{op}, v);
}

FockVector FockSpace::apply(const std::vector<OperatorSpec>& product, const FockVector& v) const {
  if (!v.is_zero() && Rational(v.max_energy2(), 1) + 2 * sound_bound(product) > 2 * emax_) {
    std::string names;
    for (const auto& op : product) names += op.to_string();
    throw TruncationError(names + " may leave energy " + std::to_string(emax_));
  }
  FockVector r = v;
  for (auto it = product.rbegin(); it != product.rend(); ++it) r = apply_exact(*it, r);
  require_within(r, "operator product");
  return r;
}

Rational FockSpace::vacuum_expectation(const std::vector<OperatorSpec>& product) const {
  return inner_rational(apply(product, FockVector::vacuum()), FockVector::vacuum());
}

// ---------------------------------------------------------------------------
// Special vectors

FockVector charged_basis(const Partition& lambda) { return FockVector::basis({0, lambda}); }

FockVector neutral_basis(const StrictPartition& lambda, bool hat) {
  FockVector v = FockVector::vacuum();
  const auto& parts = lambda.partition().parts();
  if (parts.size() % 2 == 1) {
    v = phi_raw(0, v, hat);
    v *= QSqrt2::sqrt2();
  }
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) v = phi_raw(*it, v, hat);
  return v;
}

Rational neutral_basis_max_energy(const StrictPartition& lambda) {
  return Rational(lambda.size()) + frac(lambda.length() + delta(lambda), 2);
}

FockVector charged_boson_vector(const Partition& nu, const FockSpace& space) {
  FockVector v = FockVector::vacuum();
  for (int n : nu.parts()) v = space.apply(OperatorSpec::alpha_star(n), v);
  Rational scale = 1;
  for (int n = 1; n <= nu.size(); ++n) scale /= Rational(factorial(nu.multiplicity(n)));
  return v *= QSqrt2(scale);
}

FockVector neutral_boson_vector(const OddPartition& nu, const FockSpace& space, bool hat) {
  FockVector v = FockVector::vacuum();
  for (int n : nu.partition().parts()) v = space.apply(OperatorSpec::beta_star(n, hat), v);
  Rational scale = 1;
  for (int n = 1; n <= nu.size(); ++n) scale /= Rational(factorial(nu.partition().multiplicity(n)));
  return v *= QSqrt2(scale);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

// Runs body on each state and folds the per-state reports in order.
CheckReport over_states(const std::string& name, const std::vector<BasisState>& states, Exec exec,
                        const std::function<void(const BasisState&, CheckReport&)>& body) {
  std::vector<CheckReport> parts(states.size());
  auto run = [&](std::size_t i) {
    try {
      body(states[i], parts[i]);
    } catch (const std::exception& e) {
      parts[i].record(false, states[i].to_string() + ": " + e.what());
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < states.size(); ++i) run(i);
  } else {
    const long n = static_cast<long>(states.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) run(static_cast<std::size_t>(i));
  }
  CheckReport report;
  report.check = name;
  for (const auto& p : parts) report.absorb(p);
  return report;
}

// States of energy <= cap from which every product in the relation stays below emax.
std::vector<BasisState> states_for(int emax, const Rational& bound, int cap) {
  std::vector<BasisState> out;
  for (auto& st : states_up_to(2 * cap))
    if (Rational(st.energy2()) + 2 * bound <= 2 * emax) out.push_back(st);
  return out;
}

struct Relation {
  std::string name;
  std::vector<std::vector<OperatorSpec>> products;  // all products appearing
  std::function<FockVector(const FockSpace&, const FockVector&)> residual;
};

Rational bound_of(const Relation& r) {
  Rational b = 0;
  for (const auto& p : r.products) b = std::max(b, sound_bound(p));
  return b;
}

// Checks each relation's residual vanishes on every state of energy <= cap
// (and within the relation's soundness bound).
CheckReport check_relations(const std::string& name, const std::vector<Relation>& relations, int emax, int cap,
                            Exec exec) {
  const FockSpace space(emax);
  CheckReport report;
  report.check = name;
  for (const auto& rel : relations) {
    const auto states = states_for(emax, bound_of(rel), cap);
    report.absorb(over_states(name, states, exec, [&](const BasisState& st, CheckReport& r) {
      FockVector res = rel.residual(space, FockVector::basis(st));
      r.record(res.is_zero(), rel.name + " on " + st.to_string() + ": residual " + res.to_string());
    }));
  }
  report.params = {{"emax", emax}};
  return report;
}

Relation anticommutator(const OperatorSpec& a, const OperatorSpec& b, const QSqrt2& expected) {
  return {"{" + a.to_string() + "," + b.to_string() + "}",
          {{a, b}, {b, a}},
          [a, b, expected](const FockSpace& s, const FockVector& v) {
            FockVector lhs = s.apply({a, b}, v) + s.apply({b, a}, v);
            return lhs - v * expected;
          }};
}

}  // namespace

CheckReport check_anticommutators(int emax, Exec exec) {
  std::vector<Relation> rels;
  std::vector<Rational> ks;
  for (int t = -5; t <= 5; t += 2) ks.emplace_back(t, 2);
  for (const auto& k : ks) {
    for (const auto& l : ks) {
      rels.push_back(anticommutator(OperatorSpec::psi(k), OperatorSpec::psi_star(l), k == l ? 1 : 0));
      rels.push_back(anticommutator(OperatorSpec::psi(k), OperatorSpec::psi(l), 0));
      rels.push_back(anticommutator(OperatorSpec::psi_star(k), OperatorSpec::psi_star(l), 0));
    }
  }
  for (int n = -2; n <= 2; ++n) {
    for (int m = -2; m <= 2; ++m) {
      const QSqrt2 delta_nm = (m == -n) ? QSqrt2(m % 2 == 0 ? 1 : -1) : QSqrt2(0);
      rels.push_back(anticommutator(OperatorSpec::phi(n), OperatorSpec::phi(m), delta_nm));
      rels.push_back(anticommutator(OperatorSpec::phi_hat(n), OperatorSpec::phi_hat(m), delta_nm));
      rels.push_back(anticommutator(OperatorSpec::phi(m), OperatorSpec::phi_hat(n), 0));
    }
  }
  return check_relations("anticommutators", rels, emax, emax - 2, exec);
}

CheckReport check_shift_relations(int n_max, int emax, Exec exec) {
  std::vector<Relation> rels;
  for (int n = 0; n <= n_max; ++n) {
    for (int t = -5; t <= 5; t += 2) {
      const Rational k(t, 2);
      const QSqrt2 kn(power(k, n));
      for (bool star : {false, true}) {
        const OperatorSpec f = star ? OperatorSpec::psi_star(k) : OperatorSpec::psi(k);
        const OperatorSpec e = OperatorSpec::E(n);
        rels.push_back({e.to_string() + f.to_string(),
                        {{e, f}, {f, e}},
                        [=](const FockSpace& s, const FockVector& v) {
                          FockVector rhs = s.apply({f, e}, v) + s.apply(f, v) * (star ? -kn : kn);
                          return s.apply({e, f}, v) - rhs;
                        }});
      }
    }
  }
  for (int n = 1; n <= n_max; n += 2) {
    for (int m = -3; m <= 3; ++m) {
      const QSqrt2 mn(power(Rational(m), n));
      for (bool hat : {false, true}) {
        const OperatorSpec f = hat ? OperatorSpec::phi_hat(m) : OperatorSpec::phi(m);
        const OperatorSpec e = hat ? OperatorSpec::EB_hat(n) : OperatorSpec::EB(n);
        rels.push_back({e.to_string() + f.to_string(),
                        {{e, f}, {f, e}},
                        [=](const FockSpace& s, const FockVector& v) {
                          FockVector rhs = s.apply({f, e}, v) + s.apply(f, v) * mn;
                          return s.apply({e, f}, v) - rhs;
                        }});
      }
    }
  }
  CheckReport r = check_relations("shift-relations", rels, emax, emax, exec);
  r.params["n_max"] = n_max;
  return r;
}

CheckReport check_cnH(int n, int emax, Exec exec) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("check_cnH needs odd n");
  Relation rel{"cn-H n=" + std::to_string(n),
               {{OperatorSpec::EB(n)}, {OperatorSpec::EB_hat(n)}},
               [n](const FockSpace& s, const FockVector& v) {
                 FockVector lhs = s.apply(OperatorSpec::EB(n), v) + s.apply(OperatorSpec::EB_hat(n), v);
                 FockVector rhs;
                 for (int i = 0; i <= n; ++i)
                   rhs += s.apply(OperatorSpec::E(n - i), v) * QSqrt2(Rational(binomial(n, i)) * pow2(-i));
                 return lhs - rhs;
               }};
  CheckReport r = check_relations("cn-H-n" + std::to_string(n), {rel}, emax, emax, exec);
  r.params["n"] = n;
  return r;
}

CheckReport check_eigen(int emax, Exec exec) {
  const FockSpace space(emax);
  CheckReport report;
  report.check = "eigen";
  report.params = {{"emax", emax}};

  std::vector<BasisState> charged;
  for (int d = 0; d <= emax; ++d)
    for (auto& l : enumerate(d)) charged.push_back({0, std::move(l)});
  report.absorb(over_states("eigen", charged, exec, [&](const BasisState& st, CheckReport& r) {
    const FockVector v = FockVector::basis(st);
    for (int n = 0; n <= 4; ++n) {
      const Rational ev = n == 0 ? Rational(0) : shifted_power_sum(n, st.lambda);
      FockVector res = space.apply_En(n, v) - v * QSqrt2(ev);
      r.record(res.is_zero(), "E_" + std::to_string(n) + " on " + st.to_string());
    }
    const int d = st.lambda.size();
    auto [phi2, phi3] = phi2_phi3_eval(st.lambda);
    FockVector res = space.apply_F(v) - v * QSqrt2(frac(d + d * d, 2) + phi2 + phi3);
    r.record(res.is_zero(), "F on " + st.to_string());
  }));

  std::vector<StrictPartition> strict;
  for (int d = 0; d <= emax; ++d)
    for (auto& l : strict_partitions(d))
      if (neutral_basis_max_energy(l) + 1 <= emax) strict.push_back(std::move(l));
  std::vector<CheckReport> parts(strict.size());
  auto body = [&](std::size_t i) {
    const StrictPartition& l = strict[i];
    CheckReport& r = parts[i];
    try {
      for (bool hat : {false, true}) {
        const FockVector v = neutral_basis(l, hat);
        for (int n : {1, 3}) {
          const OperatorSpec e = hat ? OperatorSpec::EB_hat(n) : OperatorSpec::EB(n);
          FockVector res = space.apply(e, v) - v * QSqrt2(power_sum(n, l));
          r.record(res.is_zero(), e.to_string() + " on vB" + l.to_string());
        }
        const int d = l.size();
        FockVector res = space.apply(hat ? OperatorSpec::FB_hat() : OperatorSpec::FB(), v) -
                         v * QSqrt2(Rational(d * d) + f3_eval(l));
        r.record(res.is_zero(), std::string(hat ? "FBhat" : "FB") + " on vB" + l.to_string());
      }
    } catch (const std::exception& e) {
      r.record(false, "vB" + l.to_string() + ": " + e.what());
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < strict.size(); ++i) body(i);
  } else {
    const long n = static_cast<long>(strict.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  }
  for (const auto& p : parts) report.absorb(p);
  return report;
}

CheckReport check_neutral_orthonormal(int emax) {
  CheckReport report;
  report.check = "neutral-orthonormal";
  report.params = {{"emax", emax}};
  for (bool hat : {false, true}) {
    std::vector<std::pair<StrictPartition, FockVector>> basis;
    for (int d = 0; d <= emax; ++d)
      for (auto& l : strict_partitions(d))
        if (neutral_basis_max_energy(l) <= emax) basis.emplace_back(l, neutral_basis(l, hat));
    for (const auto& [l, u] : basis) {
      for (const auto& [m, v] : basis) {
        QSqrt2 x = inner(u, v);
        const bool ok = x == QSqrt2(l == m ? 1 : 0);
        report.record(ok, "(vB" + l.to_string() + ", vB" + m.to_string() + ") = " + x.to_string());
      }
    }
  }
  return report;
}

CheckReport bfc_expand(BfcFlavor flavor, int d_max, int emax) {
  const FockSpace space(emax);
  CheckReport report;
  report.check = flavor == BfcFlavor::charged ? "bfc-charged" : "bfc-neutral";
  report.params = {{"d_max", d_max}, {"emax", emax}};
  for (int d = 0; d <= d_max; ++d) {
    if (flavor == BfcFlavor::charged) {
      for (const auto& nu : enumerate(d)) {
        const FockVector w = charged_boson_vector(nu, space);
        FockVector residual = w;
        for (const auto& lambda : enumerate(d)) {
          const FockVector v = charged_basis(lambda);
          const Rational c = inner_rational(w, v);
          const Rational expected = schur_in_powersums(lambda).coefficient(nu) * Rational(nu.product_of_parts());
          report.record(c == expected, "[p" + nu.to_string() + "] s" + lambda.to_string() + ": fock " +
                                           to_string(c) + " vs " + to_string(expected));
          residual -= v * QSqrt2(c);
        }
        report.record(residual.is_zero(), "charged residual for nu=" + nu.to_string());
      }
    } else {
      for (const auto& nu : odd_partitions(d)) {
        const FockVector w = neutral_boson_vector(nu, space);
        FockVector residual = w;
        for (const auto& lambda : strict_partitions(d)) {
          const FockVector v = neutral_basis(lambda);
          const QSqrt2 c = inner(w, v);
          const Rational q = default_spin_table().q_function(lambda).expansion.coefficient(nu);
          const QSqrt2 expected =
              QSqrt2::pow_sqrt2(-lambda.length()) * QSqrt2(q * pow2(-nu.length()) * Rational(nu.partition().product_of_parts()));
          report.record(c == expected, "[p" + nu.to_string() + "] Q" + lambda.to_string() + ": fock " +
                                           c.to_string() + " vs " + expected.to_string());
          residual -= v * c;
        }
        report.record(residual.is_zero(), "neutral residual for nu=" + nu.to_string());
      }
    }
  }
  return report;
}

namespace {

using Monomial = std::vector<int>;

std::vector<OperatorSpec> phi_product(const Monomial& m, bool hat) {
  std::vector<OperatorSpec> out;
  for (int i : m) out.push_back(hat ? OperatorSpec::phi_hat(i) : OperatorSpec::phi(i));
  return out;
}

// (φ_{a_1}...φ_{a_n})* = Π (-1)^{a_i} · φ_{-a_n}...φ_{-a_1}; the same holds for φ̂.
std::pair<int, Monomial> adjoint(const Monomial& m) {
  int sign = 1;
  Monomial out;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (*it % 2 != 0) sign = -sign;
    out.push_back(-*it);
  }
  return {sign, out};
}

std::vector<Monomial> monomials(int length, int lo, int hi) {
  std::vector<Monomial> out{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (int a = lo; a <= hi; ++a) {
        Monomial x = m;
        x.push_back(a);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

std::string monomial_name(const Monomial& m, bool hat) {
  std::string s;
  for (int i : m) s += (hat ? "phihat[" : "phi[") + std::to_string(i) + "]";
  return s.empty() ? "1" : s;
}

}  // namespace

CheckReport factorization_check(int emax, Exec exec) {
  const FockSpace space(emax);
  CheckReport report;
  report.check = "factorization";
  report.params = {{"emax", emax}};
  std::size_t skipped = 0;

  auto family = monomials(2, -2, 2);
  for (const auto& m : monomials(4, -1, 1)) family.push_back(m);
  family.push_back({});

  auto fits = [&](const std::vector<OperatorSpec>& p) { return sound_bound(p) <= emax; };
  for (const auto& z : family) {
    for (const auto& w : family) {
      if (z.size() != w.size() && !z.empty() && !w.empty()) continue;
      const auto zp = phi_product(z, false);
      const auto wp = phi_product(w, true);
      auto [sign, zadj] = adjoint(z);
      const auto zadj_p = phi_product(zadj, false);
      if (!fits(zp) || !fits(wp) || !fits(zadj_p)) {
        ++skipped;
        continue;
      }
      const Rational ez = space.vacuum_expectation(zp);
      const Rational ew = space.vacuum_expectation(wp);
      const FockVector wv = space.apply(wp, FockVector::vacuum());
      const FockVector zv = space.apply(zadj_p, FockVector::vacuum()) * QSqrt2(sign);
      const Rational ezw = inner_rational(wv, zv);
      report.record(ez * ew == ezw, "<" + monomial_name(z, false) + "><" + monomial_name(w, true) + "> = " +
                                        to_string(ez * ew) + " but <ZW^> = " + to_string(ezw));
    }
  }

  std::vector<Relation> rels;
  for (const auto& z : monomials(2, -2, 2)) {
    for (const auto& w : monomials(2, -2, 2)) {
      auto zw = phi_product(z, false);
      for (const auto& op : phi_product(w, true)) zw.push_back(op);
      auto wz = phi_product(w, true);
      for (const auto& op : phi_product(z, false)) wz.push_back(op);
      rels.push_back({monomial_name(z, false) + " commutes with " + monomial_name(w, true),
                      {zw, wz},
                      [zw, wz](const FockSpace& s, const FockVector& v) { return s.apply(zw, v) - s.apply(wz, v); }});
    }
  }
  report.absorb(check_relations("factorization", rels, emax, emax - 2, exec));
  report.details.push_back("expectation pairs skipped by the cutoff: " + std::to_string(skipped));
  return report;
}

GenSeries phi_vacuum_series(int qmax, int bmax, int emax) {
  const FockSpace space(emax);
  GenSeries out = GenSeries::one(qmax, bmax);
  for (int d = 1; d <= qmax; ++d) {
    const auto parts = enumerate(d);
    std::vector<FockVector> w;
    for (const auto& nu : parts) {
      w.push_back(charged_boson_vector(nu, space));
      if (!(space.apply_En(1, w.back()) == w.back() * QSqrt2(d)))
        throw std::logic_error("e^{alpha*} component is not an E_1 eigenvector");
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      FockVector f = w[j];
      for (int s = 0; s <= bmax; ++s) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          const Rational c = inner_rational(f, w[i]) /
                             Rational(parts[i].product_of_parts() * parts[j].product_of_parts());
          out.add({d, parts[i], parts[j], s}, c);
        }
        if (s < bmax) f = space.apply_F(f);
      }
    }
  }
  return out;
}

GenSeries phiB_vacuum_series(int qmax, int bmax, int emax, bool hat) {
  const FockSpace space(emax);
  GenSeries out = GenSeries::one(qmax, bmax);
  const OperatorSpec e1 = hat ? OperatorSpec::EB_hat(1) : OperatorSpec::EB(1);
  const OperatorSpec fb = hat ? OperatorSpec::FB_hat() : OperatorSpec::FB();
  for (int d = 1; d <= qmax; ++d) {
    const auto parts = odd_partitions(d);
    std::vector<FockVector> w;
    for (const auto& nu : parts) {
      w.push_back(neutral_boson_vector(nu, space, hat));
      if (!(space.apply(e1, w.back()) == w.back() * QSqrt2(d)))
        throw std::logic_error("e^{beta*} component is not an E^B_1 eigenvector");
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      FockVector f = w[j];
      for (int s = 0; s <= bmax; ++s) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          const Rational c = inner_rational(f, w[i]) /
                             Rational(parts[i].partition().product_of_parts() * parts[j].partition().product_of_parts());
          out.add({d, parts[i], parts[j], s}, c);
        }
        if (s < bmax) f = space.apply(fb, f);
      }
    }
  }
  return out;
}

CheckReport check_vacuum_series(int qmax, int bmax, int emax) {
  CheckReport report;
  report.check = "vacuum-series";
  report.params = {{"qmax", qmax}, {"bmax", bmax}, {"emax", emax}};
  auto run = [&](const std::string& name, const std::function<CheckReport()>& f) {
    try {
      report.absorb(f());
    } catch (const std::exception& e) {
      report.record(false, name + ": " + e.what());
    }
  };
  run("G1-VE", [&] { return compare_series("G1-VE", phi_vacuum_series(qmax, bmax, emax), build_phi_schur(qmax, bmax)); });
  run("G3-VE", [&] {
    return compare_series("G3-VE", phiB_vacuum_series(qmax, bmax, emax), build_phiB_q(qmax, bmax));
  });
  run("G3-VE hat", [&] {
    return compare_series("G3-VE hat", phiB_vacuum_series(qmax, bmax, emax, true), build_phiB_q(qmax, bmax));
  });
  return report;
}

}  // namespace htau

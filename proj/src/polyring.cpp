// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace htau {

const char* generator_prefix(Family f) {
  switch (f) {
    case Family::power_sum: return "p";
    case Family::shifted_power_sum: return "pb";
    case Family::miwa: return "t";
  }
  return "?";
}

PowerPoly PowerPoly::constant(const Rational& c, Family family) {
  PowerPoly r(family);
  r.add_term(Monomial{}, c);
  return r;
}

PowerPoly PowerPoly::generator(int n, Family family) {
  if (n < 1) throw std::invalid_argument("generator index must be >= 1");
  return monomial(Monomial{n}, 1, family);
}

PowerPoly PowerPoly::monomial(const Monomial& m, const Rational& c, Family family) {
  PowerPoly r(family);
  r.add_term(m, c);
  return r;
}

Rational PowerPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int PowerPoly::weighted_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.size());
  return deg;
}

bool PowerPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int deg = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.size() == deg; });
}

bool PowerPoly::uses_only_odd_generators() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_odd(); });
}

void PowerPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PowerPoly::require_same_family(const PowerPoly& o) const {
  if (family_ != o.family_)
    throw std::invalid_argument(std::string("generator family mismatch: ") + generator_prefix(family_) +
                                " vs " + generator_prefix(o.family_));
}

PowerPoly& PowerPoly::operator+=(const PowerPoly& o) {
  require_same_family(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PowerPoly& PowerPoly::operator-=(const PowerPoly& o) {
  require_same_family(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PowerPoly operator*(const PowerPoly& a, const PowerPoly& b) {
  a.require_same_family(b);
  PowerPoly r(a.family_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.merged(mb), ca * cb);
  return r;
}

PowerPoly& PowerPoly::operator*=(const PowerPoly& o) { return *this = *this * o; }

PowerPoly& PowerPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PowerPoly PowerPoly::operator-() const {
  PowerPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

PowerPoly PowerPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  PowerPoly r = constant(1, family_);
  PowerPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

PowerPoly PowerPoly::substitute(int n, const PowerPoly& value) const {
  require_same_family(value);
  PowerPoly r(family_);
  for (const auto& [m, c] : terms_) {
    int k = m.multiplicity(n);
    if (k == 0) {
      r.add_term(m, c);
      continue;
    }
    std::vector<int> rest;
    for (int x : m.parts())
      if (x != n) rest.push_back(x);
    r += PowerPoly::monomial(Monomial(std::move(rest)), c, family_) * value.pow(k);
  }
  return r;
}

PowerPoly PowerPoly::scale_generators(const std::function<Rational(int)>& scale, Family target) const {
  PowerPoly r(target);
  for (const auto& [m, c] : terms_) {
    Rational f = c;
    for (int x : m.parts()) f *= scale(x);
    r.add_term(m, f);
  }
  return r;
}

PowerPoly PowerPoly::derivative(int n) const {
  PowerPoly r(family_);
  for (const auto& [m, c] : terms_) {
    int k = m.multiplicity(n);
    if (k == 0) continue;
    std::vector<int> parts = m.parts();
    parts.erase(std::find(parts.begin(), parts.end(), n));
    r.add_term(Monomial(std::move(parts)), c * k);
  }
  return r;
}

Rational PowerPoly::evaluate(const std::function<Rational(int)>& value) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int x : m.parts()) t *= value(x);
    total += t;
  }
  return total;
}

std::string PowerPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first > b.first;
  });
  std::string out;
  const char* prefix = generator_prefix(family_);
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    const auto& parts = m.parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += prefix + std::to_string(parts[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) {
      out += htau::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += htau::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

TSeries::TSeries(int order, Family family) : family_(family) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, PowerPoly(family));
}

TSeries TSeries::constant(const PowerPoly& c, int order) { return monomial(0, c, order); }

TSeries TSeries::monomial(int k, const PowerPoly& c, int order) {
  TSeries s(order, c.family());
  if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

const PowerPoly& TSeries::coeff(int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("coefficient index " + std::to_string(k) + " beyond truncation order " +
                            std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(k)];
}

TSeries TSeries::truncated(int order) const {
  TSeries r(std::min(order, this->order()), family_);
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
  return r;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  *this = truncated(o.order());
  for (int k = 0; k <= order(); ++k) coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  *this = truncated(o.order());
  for (int k = 0; k <= order(); ++k) coeffs_[static_cast<std::size_t>(k)] -= o.coeffs_[static_cast<std::size_t>(k)];
  return *this;
}

TSeries& TSeries::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  if (a.family_ != b.family_) throw std::invalid_argument("generator family mismatch in series product");
  int n = std::min(a.order(), b.order());
  TSeries r(n, a.family_);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      r.coeffs_[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return r;
}

TSeries TSeries::times(const PowerPoly& c) const {
  TSeries r = *this;
  for (auto& p : r.coeffs_) p *= c;
  return r;
}

TSeries exp_truncated(const TSeries& a, int order) {
  if (!a.coeff(0).is_zero()) throw std::invalid_argument("exp_truncated: nonzero constant term");
  int n = std::min(order, a.order());
  TSeries x = a.truncated(n);
  TSeries result = TSeries::constant(PowerPoly::constant(1, a.family()), n);
  TSeries term = result;
  for (int k = 1; k <= n; ++k) {
    term = term * x * Rational(1, k);
    result += term;
  }
  return result;
}

TSeries geometric_inverse_powers(const Rational& c, int n, int order, Family family) {
  if (n < 0) throw std::invalid_argument("geometric_inverse_powers: negative exponent");
  TSeries s(order, family);
  Rational cpow = 1;
  for (int k = 0; k <= order; ++k) {
    // [t^k] (1 - ct)^{-n} = binom(n+k-1, k) c^k
    Rational coef = n == 0 ? Rational(k == 0 ? 1 : 0) : Rational(binomial(n + k - 1, k)) * cpow;
    s += TSeries::monomial(k, PowerPoly::constant(coef, family), order);
    cpow *= c;
  }
  return s;
}

}  // namespace htau

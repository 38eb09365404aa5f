// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/charsym.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace htau {

namespace {

// Beta-set of λ with exactly ℓ(λ) beads: β_i = λ_i + ℓ - i, decreasing.
std::vector<int> beta_set(const Partition& lambda) {
  int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition drop_first(const Partition& mu) {
  return Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
}

}  // namespace

Integer CharTable::character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character: |λ| != |μ| for " + lambda.to_string() + ", " + mu.to_string());
  return murnaghan_nakayama(lambda, mu);
}

Integer CharTable::murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find({lambda, mu});
    if (it != memo_.end()) return it->second;
  }
  // Remove every rim hook of length μ_1: move a bead from b to b - r.
  const int r = mu[0];
  const Partition rest = drop_first(mu);
  std::vector<int> beta = beta_set(lambda);
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = static_cast<int>(std::count_if(beta.begin(), beta.end(), [&](int x) { return x > target && x < b; }));
    auto moved = beta;
    moved[i] = target;
    Integer sub = murnaghan_nakayama(from_beta_set(std::move(moved)), rest);
    if (between % 2) total -= sub;
    else total += sub;
  }
  std::unique_lock lock(mutex_);
  memo_.emplace(std::make_pair(lambda, mu), total);
  return total;
}

std::vector<std::tuple<Partition, Partition, Integer>> CharTable::entries(int d) const {
  std::shared_lock lock(mutex_);
  std::vector<std::tuple<Partition, Partition, Integer>> out;
  for (const auto& [key, v] : memo_)
    if (key.first.size() == d && key.second.size() == d) out.emplace_back(key.first, key.second, v);
  return out;
}

void CharTable::insert(const Partition& lambda, const Partition& mu, const Integer& value) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("CharTable::insert: size mismatch");
  std::unique_lock lock(mutex_);
  memo_[{lambda, mu}] = value;
}

void CharTable::warm(int d) {
  for (const auto& lambda : enumerate(d))
    for (const auto& mu : enumerate(d)) character(lambda, mu);
}

void CharTable::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

CharTable& default_char_table() {
  static CharTable table;
  return table;
}

Integer character(const Partition& lambda, const Partition& mu) {
  return default_char_table().character(lambda, mu);
}

Integer dim_irrep(const Partition& lambda) {
  // d! / Π hooks
  std::vector<int> conj(static_cast<std::size_t>(lambda.empty() ? 0 : lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
      hooks *= (lambda[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

Rational central_character(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("central_character: size mismatch");
  Rational class_size = frac(factorial(mu.size()), z_of(mu));
  return class_size * Rational(character(lambda, mu)) / Rational(dim_irrep(lambda));
}

Rational phi_extended(const Partition& mu, const Partition& lambda) {
  int k = lambda.size() - mu.size();
  if (k < 0) return 0;
  int m1 = mu.multiplicity(1);
  return Rational(binomial(m1 + k, m1)) * central_character(mu.with_ones(k), lambda);
}

Rational shifted_power_sum(int n, const Partition& lambda) {
  if (n < 1) throw std::invalid_argument("shifted_power_sum: n must be >= 1");
  Rational total = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    Rational a = Rational(lambda[static_cast<std::size_t>(i - 1)] - i) + Rational(1, 2);
    Rational b = Rational(-i) + Rational(1, 2);
    total += power(a, n) - power(b, n);
  }
  return total;
}

std::pair<Rational, Rational> phi2_phi3_eval(const Partition& lambda) {
  Rational p1 = shifted_power_sum(1, lambda);
  Rational p2 = shifted_power_sum(2, lambda);
  Rational p3 = shifted_power_sum(3, lambda);
  return {p2 / 2, p3 / 3 - p1 * p1 / 2 + Rational(5, 12) * p1};
}

PowerPoly schur_in_powersums(const Partition& lambda) {
  PowerPoly s(Family::power_sum);
  for (const auto& mu : enumerate(lambda.size()))
    s.add_term(mu, frac(character(lambda, mu), z_of(mu)));
  return s;
}

TSeries p3_sharp_series(int order) {
  const Family fam = Family::shifted_power_sum;
  auto one = PowerPoly::constant(1, fam);
  TSeries prefactor = TSeries::constant(PowerPoly::constant(Rational(-1, 3), fam), order);
  for (int j = 1; j <= 3; ++j)
    prefactor = prefactor * (TSeries::constant(one, order) -
                             TSeries::monomial(1, PowerPoly::constant(Rational(j) - Rational(1, 2), fam), order));
  TSeries exponent(order, fam);
  for (int j = 1; j <= order; ++j) {
    TSeries bracket = TSeries::constant(one, order) - geometric_inverse_powers(3, j, order, fam);
    exponent += TSeries::monomial(j, PowerPoly::generator(j, fam) * Rational(1, j), order) * bracket;
  }
  return prefactor * exp_truncated(exponent, order);
}

}  // namespace htau

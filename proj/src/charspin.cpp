// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/charspin.hpp"

#include <mutex>
#include <stdexcept>

namespace htau {

namespace {

std::mutex q_gen_mutex;
std::vector<PowerPoly> q_gen_cache;

// Pfaffian by expansion along the first row; rows/cols index into `entry`.
PowerPoly pfaffian(const std::vector<std::vector<PowerPoly>>& entry, std::vector<int> idx) {
  if (idx.empty()) return PowerPoly::constant(1);
  PowerPoly total(Family::power_sum);
  int first = idx[0];
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    PowerPoly term = entry[static_cast<std::size_t>(first)][static_cast<std::size_t>(idx[j])] * pfaffian(entry, rest);
    if (j % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace

PowerPoly q_gen(int r) {
  if (r < 0) throw std::invalid_argument("q_gen: negative index");
  std::lock_guard lock(q_gen_mutex);
  if (static_cast<int>(q_gen_cache.size()) <= r) {
    int order = std::max(r, 2 * static_cast<int>(q_gen_cache.size()) + 4);
    TSeries exponent(order, Family::power_sum);
    for (int n = 1; n <= order; n += 2)
      exponent += TSeries::monomial(n, PowerPoly::generator(n) * frac(2, n), order);
    TSeries e = exp_truncated(exponent, order);
    q_gen_cache.clear();
    for (int k = 0; k <= order; ++k) q_gen_cache.push_back(e.coeff(k));
  }
  return q_gen_cache[static_cast<std::size_t>(r)];
}

PowerPoly schurQ_two_row(int a, int b) {
  PowerPoly r = q_gen(a) * q_gen(b);
  for (int i = 1; i <= b; ++i) {
    PowerPoly t = q_gen(a + i) * q_gen(b - i) * Rational(2);
    if (i % 2) r -= t;
    else r += t;
  }
  return r;
}

QFunction schurQ(const StrictPartition& lambda) {
  return default_spin_table().q_function(lambda);
}

const QFunction& SpinCharTable::q_function(const StrictPartition& lambda) {
  {
    std::shared_lock lock(mutex_);
    auto it = q_memo_.find(lambda.partition());
    if (it != q_memo_.end()) return it->second;
  }
  std::vector<int> parts = lambda.partition().parts();
  PowerPoly expansion(Family::power_sum);
  if (parts.empty()) {
    expansion = PowerPoly::constant(1);
  } else if (parts.size() == 1) {
    expansion = q_gen(parts[0]);
  } else {
    if (parts.size() % 2) parts.push_back(0);
    std::size_t n = parts.size();
    std::vector<std::vector<PowerPoly>> m(n, std::vector<PowerPoly>(n, PowerPoly(Family::power_sum)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m[i][j] = schurQ_two_row(parts[i], parts[j]);
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    expansion = pfaffian(m, idx);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = q_memo_.try_emplace(lambda.partition(), QFunction{lambda, std::move(expansion)});
  return it->second;
}

Rational SpinCharTable::character(const StrictPartition& lambda, const OddPartition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("spin_character: |λ| != |ρ| for " + lambda.to_string() + ", " + rho.to_string());
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find({lambda.partition(), rho.partition()});
    if (it != memo_.end()) return it->second;
  }
  const QFunction& q = q_function(lambda);
  int len = lambda.length();
  // ℓ(λ) - δ(λ) is even.
  Rational value = pow2(-(len - delta(lambda)) / 2) * Rational(z_of(rho)) * q.expansion.coefficient(rho);
  std::unique_lock lock(mutex_);
  memo_.emplace(std::make_pair(lambda.partition(), rho.partition()), value);
  return value;
}

std::vector<std::tuple<Partition, Partition, Rational>> SpinCharTable::entries(int d) const {
  std::shared_lock lock(mutex_);
  std::vector<std::tuple<Partition, Partition, Rational>> out;
  for (const auto& [key, v] : memo_)
    if (key.first.size() == d) out.emplace_back(key.first, key.second, v);
  return out;
}

void SpinCharTable::insert(const Partition& lambda, const Partition& rho, const Rational& value) {
  if (lambda.size() != rho.size() || !lambda.is_strict() || !rho.is_odd())
    throw std::invalid_argument("SpinCharTable::insert: invalid key");
  std::unique_lock lock(mutex_);
  memo_[{lambda, rho}] = value;
}

void SpinCharTable::warm(int d) {
  for (const auto& lambda : strict_partitions(d))
    for (const auto& rho : odd_partitions(d)) character(lambda, rho);
}

void SpinCharTable::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
  q_memo_.clear();
}

SpinCharTable& default_spin_table() {
  static SpinCharTable table;
  return table;
}

Rational spin_character(const StrictPartition& lambda, const OddPartition& rho) {
  return default_spin_table().character(lambda, rho);
}

Rational dim_spin(const StrictPartition& lambda) {
  return spin_character(lambda, OddPartition(Partition().with_ones(lambda.size())));
}

Rational spin_central_character(const OddPartition& rho, const StrictPartition& lambda) {
  if (rho.size() != lambda.size()) throw std::invalid_argument("spin_central_character: size mismatch");
  return Rational(sergeev_class_size(rho)) / dim_spin(lambda) * spin_character(lambda, rho);
}

Rational f_extended(const OddPartition& rho, const StrictPartition& lambda) {
  int k = lambda.size() - rho.size();
  if (k < 0) return 0;
  int r1 = rho.partition().multiplicity(1);
  return Rational(binomial(r1 + k, r1)) * spin_central_character(OddPartition(rho.partition().with_ones(k)), lambda);
}

Rational power_sum(int n, const Partition& lambda) {
  Rational total = 0;
  for (int part : lambda.parts()) total += power(Rational(part), n);
  return total;
}

Rational f3_eval(const StrictPartition& lambda) {
  Rational p1 = power_sum(1, lambda);
  Rational p3 = power_sum(3, lambda);
  return p3 / 3 - p1 * p1 + Rational(2, 3) * p1;
}

TSeries p3_sharp_spin_series(int order) {
  const Family fam = Family::power_sum;
  auto one = PowerPoly::constant(1, fam);
  auto linear = [&](const Rational& c) {
    return TSeries::constant(one, order) - TSeries::monomial(1, PowerPoly::constant(c, fam), order);
  };
  TSeries prefactor = TSeries::constant(PowerPoly::constant(Rational(-1, 6), fam), order) * linear(Rational(3, 2));
  for (int j = 1; j <= 2; ++j) prefactor = prefactor * linear(j);
  TSeries exponent(order, fam);
  for (int n = 1; n <= order; n += 2) {
    TSeries bracket = TSeries::constant(one, order) - geometric_inverse_powers(3, n, order, fam);
    exponent += TSeries::monomial(n, PowerPoly::generator(n, fam) * frac(2, n), order) * bracket;
  }
  return prefactor * exp_truncated(exponent, order);
}

}  // namespace htau

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference computations shared by the unit tests. None of these
// call into the library's character or series code.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "htau/partition.hpp"
#include "htau/rational.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline htau::Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return htau::Partition::from_parts(parts);
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

/// (1/d!) #{(σ_0, τ_1..τ_r2, κ_1..κ_r3, σ_∞)} with product 1, by class type.
inline htau::Rational hurwitz_by_permutations(const htau::Partition& mu, const htau::Partition& nu, int r2, int r3) {
  const int d = mu.size();
  const auto perms = all_perms(d);
  std::vector<Perm> transpositions, three_cycles;
  for (const auto& p : perms) {
    auto t = cycle_type(p);
    if (d >= 2 && t == htau::Partition({2}).with_ones(d - 2)) transpositions.push_back(p);
    if (d >= 3 && t == htau::Partition({3}).with_ones(d - 3)) three_cycles.push_back(p);
  }
  std::map<Perm, htau::Integer> dist;
  for (const auto& p : perms)
    if (cycle_type(p) == mu) dist[p] += 1;
  auto step = [&](const std::vector<Perm>& cls) {
    std::map<Perm, htau::Integer> next;
    for (const auto& [g, n] : dist)
      for (const auto& c : cls) next[compose(g, c)] += n;
    dist = std::move(next);
  };
  for (int i = 0; i < r2; ++i) step(transpositions);
  for (int i = 0; i < r3; ++i) step(three_cycles);
  htau::Integer count = 0;
  for (const auto& [g, n] : dist)
    if (cycle_type(g) == nu) count += n;
  return htau::Rational(count) / htau::Rational(htau::factorial(d));
}

/// Standard Young tableaux of shape λ, by removing corners.
inline htau::Integer count_syt(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  htau::Integer total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i + 1 < rows.size() && rows[i + 1] == rows[i]) continue;
    auto r = rows;
    --r[i];
    total += count_syt(r);
  }
  return total;
}

/// Standard shifted tableaux of strict shape λ.
inline htau::Integer count_shifted_syt(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  htau::Integer total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i + 1 < rows.size() && rows[i + 1] == rows[i] - 1) continue;
    auto r = rows;
    --r[i];
    total += count_shifted_syt(r);
  }
  return total;
}

/// Number of partitions of n with parts at most k.
inline long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  return count_partitions(n, k - 1) + (n >= k ? count_partitions(n - k, k) : 0);
}

}  // namespace oracle

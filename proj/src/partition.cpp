// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace htau {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string s(text);
  if (s.empty() || s == "0" || s == "()") return {};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("malformed partition: '" + s + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: '" + s + "'");
    }
    if (used != item.size() || v <= 0) throw std::invalid_argument("malformed partition: '" + s + "'");
    parts.push_back(v);
  }
  return from_parts(std::move(parts));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 1; });
}

Partition Partition::with_ones(int k) const {
  if (k < 0) throw std::invalid_argument("negative number of ones");
  auto parts = parts_;
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> parts;
  parts.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Integer Partition::product_of_parts() const {
  Integer r = 1;
  for (int x : parts_) r *= x;
  return r;
}

std::string Partition::to_string() const { return "(" + to_csv_field() + ")"; }

std::string Partition::to_csv_field() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p)) {
  if (!p_.is_strict()) throw std::invalid_argument("not a strict partition: " + p_.to_string());
}

OddPartition::OddPartition(Partition p) : p_(std::move(p)) {
  if (!p_.is_odd()) throw std::invalid_argument("non-odd partition: " + p_.to_string());
}

namespace {

// Partitions of n with every part <= max_part, reverse-lexicographic.
void generate(int n, int max_part, std::vector<int>& prefix, PartitionKind kind,
              std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    if (kind == PartitionKind::odd && part % 2 == 0) continue;
    prefix.push_back(part);
    generate(n - part, kind == PartitionKind::strict ? part - 1 : part, prefix, kind, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int d, PartitionKind kind) {
  if (d < 0) throw std::invalid_argument("enumerate: negative degree");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(d, d, prefix, kind, out);
  return out;
}

std::vector<StrictPartition> strict_partitions(int d) {
  std::vector<StrictPartition> out;
  for (auto& p : enumerate(d, PartitionKind::strict)) out.emplace_back(std::move(p));
  return out;
}

std::vector<OddPartition> odd_partitions(int d) {
  std::vector<OddPartition> out;
  for (auto& p : enumerate(d, PartitionKind::odd)) out.emplace_back(std::move(p));
  return out;
}

Integer z_of(const Partition& mu) {
  Integer z = 1;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int m = static_cast<int>(j - i);
    Integer kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
    z *= factorial(m) * kpow;
    i = j;
  }
  return z;
}

Integer sergeev_class_size(const OddPartition& rho) {
  const Partition& p = rho;
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(p.size() - p.length()));
  return two_pow * factorial(p.size()) / z_of(p);
}

int delta(const Partition& lambda) { return lambda.length() % 2; }

}  // namespace htau

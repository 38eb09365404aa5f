// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "htau/rational.hpp"

namespace htau {

/**
 * Integer partition: a weakly decreasing sequence of positive parts.
 *
 * Immutable value type with structural equality and a total order (the
 * lexicographic order on the part sequence), so it can key ordered maps.
 * The empty sequence is the empty partition of 0.
 */
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts the given positive parts into decreasing order.
  static Partition from_parts(std::vector<int> parts);

  /// Parses "2,1,1" (also accepts "" / "0" for the empty partition).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// λ_i with 0-based i; zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of parts equal to k.
  int multiplicity(int k) const;
  bool is_strict() const;
  bool is_odd() const;

  /// μ ∪ (1^k).
  Partition with_ones(int k) const;
  /// Multiset union of parts.
  Partition merged(const Partition& other) const;
  /// Product of the parts (1 for ∅).
  Integer product_of_parts() const;

  /// "(2,1,1)"; the empty partition prints as "()".
  std::string to_string() const;
  /// "2,1,1"; the empty partition prints as "".
  std::string to_csv_field() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Partition with strictly decreasing parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  /// Throws std::invalid_argument if p has a repeated part.
  explicit StrictPartition(Partition p);
  StrictPartition(std::initializer_list<int> parts) : StrictPartition(Partition(parts)) {}

  const Partition& partition() const { return p_; }
  operator const Partition&() const { return p_; }
  int size() const { return p_.size(); }
  int length() const { return p_.length(); }
  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) { return a.p_ <=> b.p_; }

 private:
  Partition p_;
};

/// Partition whose parts are all odd.
class OddPartition {
 public:
  OddPartition() = default;
  /// Throws std::invalid_argument if p has an even part.
  explicit OddPartition(Partition p);
  OddPartition(std::initializer_list<int> parts) : OddPartition(Partition(parts)) {}

  const Partition& partition() const { return p_; }
  operator const Partition&() const { return p_; }
  int size() const { return p_.size(); }
  int length() const { return p_.length(); }
  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const OddPartition&, const OddPartition&) = default;
  friend auto operator<=>(const OddPartition& a, const OddPartition& b) { return a.p_ <=> b.p_; }

 private:
  Partition p_;
};

enum class PartitionKind { all, strict, odd };

/// All partitions of d of the given kind, in reverse-lexicographic order:
/// (3), (2,1), (1,1,1).
std::vector<Partition> enumerate(int d, PartitionKind kind = PartitionKind::all);
std::vector<StrictPartition> strict_partitions(int d);
std::vector<OddPartition> odd_partitions(int d);

/// Order of the centralizer of a permutation of cycle type μ: Π_k μ(k)! k^{μ(k)}.
Integer z_of(const Partition& mu);

/// Size of the Sergeev-group class indexed by an odd partition: 2^{|ρ|-ℓ(ρ)} |ρ|! / z_ρ.
Integer sergeev_class_size(const OddPartition& rho);

/// Parity of the length.
int delta(const Partition& lambda);

}  // namespace htau

template <>
struct std::hash<htau::Partition> {
  std::size_t operator()(const htau::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "htau/partition.hpp"
#include "oracles.hpp"

using htau::Partition;

TEST_CASE("partition construction and parsing") {
  CHECK(Partition::parse("2,1,1") == Partition({2, 1, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("0") == Partition());
  CHECK(Partition::from_parts({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(htau::OddPartition({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(htau::StrictPartition({2, 2}), std::invalid_argument);
}

TEST_CASE("partition accessors") {
  Partition p{4, 2, 2, 1};
  CHECK(p.size() == 9);
  CHECK(p.length() == 4);
  CHECK(p[0] == 4);
  CHECK(p[7] == 0);
  CHECK(p.multiplicity(2) == 2);
  CHECK_FALSE(p.is_strict());
  CHECK_FALSE(p.is_odd());
  CHECK(p.with_ones(2) == Partition({4, 2, 2, 1, 1, 1}));
  CHECK(p.merged(Partition{3, 1}) == Partition({4, 3, 2, 2, 1, 1}));
  CHECK(p.product_of_parts() == 16);
  CHECK(p.to_string() == "(4,2,2,1)");
  CHECK(p.to_csv_field() == "4,2,2,1");
  CHECK(Partition().to_string() == "()");
  CHECK(Partition().to_csv_field().empty());
}

TEST_CASE("partition counts match the recursive count") {
  for (int n = 0; n <= 16; ++n) {
    const auto all = htau::enumerate(n);
    CHECK(static_cast<long>(all.size()) == oracle::count_partitions(n, n));
    std::set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& p : all) CHECK(p.size() == n);
    // Euler: strict and odd partitions are equinumerous.
    CHECK(htau::strict_partitions(n).size() == htau::odd_partitions(n).size());
  }
}

TEST_CASE("z_mu sums to one over classes") {
  for (int d = 1; d <= 9; ++d) {
    htau::Rational total = 0;
    for (const auto& mu : htau::enumerate(d)) total += htau::Rational(1) / htau::Rational(htau::z_of(mu));
    CHECK(total == 1);
  }
  CHECK(htau::z_of(Partition{2, 1}) == 2);
  CHECK(htau::z_of(Partition{1, 1, 1}) == 6);
  CHECK(htau::z_of(Partition{2, 2}) == 8);
}

TEST_CASE("z_mu is the centralizer order") {
  for (int d = 1; d <= 5; ++d) {
    std::map<Partition, long> class_sizes;
    for (const auto& p : oracle::all_perms(d)) ++class_sizes[oracle::cycle_type(p)];
    const htau::Integer dfact = htau::factorial(d);
    for (const auto& [mu, n] : class_sizes) CHECK(htau::z_of(mu) * n == dfact);
  }
}

TEST_CASE("delta is the parity of the length") {
  CHECK(htau::delta(Partition{3, 1}) == 0);
  CHECK(htau::delta(Partition{3}) == 1);
  CHECK(htau::delta(Partition()) == 0);
}

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>

#include "htau/cache.hpp"
#include "htau/charspin.hpp"
#include "htau/charsym.hpp"
#include "htau/linsolve.hpp"
#include "htau/suites.hpp"

using htau::Rational;

TEST_CASE("exact linear solve") {
  const auto x = htau::solve_exact({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
}

TEST_CASE("suite registry") {
  const auto& names = htau::suite_names();
  for (const char* n : {"theorem", "lemmas", "genfun-consistency", "fock", "hirota", "all"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(htau::run_suite("nope", {}), std::invalid_argument);
}

TEST_CASE("small suites pass") {
  htau::SuiteConfig c;
  c.qmax = 3;
  c.bmax = 2;
  c.emax = 4;
  for (const char* n : {"theorem", "lemmas", "genfun-consistency"})
    for (const auto& r : htau::run_suite(n, c)) {
      INFO(r.check);
      CHECK(r.ok());
    }
}

TEST_CASE("report json shape") {
  htau::CheckReport r;
  r.check = "demo";
  r.record(true, "a");
  r.record(false, "b");
  r.record(false, "c");
  const auto j = r.to_json();
  CHECK(j.at("check") == "demo");
  CHECK(j.at("status") == "fail");
  CHECK(j.at("checked") == 3);
  CHECK(j.at("first_discrepancy") == "b");
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "htau-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  htau::cache::save_tables(dir, 4);
  CHECK(std::filesystem::exists(dir / "charsym_d4.json"));
  CHECK(std::filesystem::exists(dir / "charspin_d4.json"));
  htau::default_char_table().clear();
  htau::default_spin_table().clear();
  CHECK(htau::cache::load_tables(dir, 4) == 8);
  CHECK(htau::default_char_table().entries(4).size() == 25);
  CHECK(htau::character({3, 1}, {2, 2}) == -1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  CHECK(htau::cache::resolve_cache_dir(std::filesystem::path("/x")) == std::filesystem::path("/x"));
}

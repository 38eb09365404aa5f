// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace htau::cache {

namespace {

using nlohmann::json;

json parts_json(const Partition& p) { return json(p.parts()); }

Partition parts_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

Rational value_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw std::invalid_argument("cache entry value must be a string or integer");
}

bool header_matches(const json& doc, const char* kind, int d) {
  return doc.is_object() && doc.value("version", -1) == kVersion && doc.value("kind", std::string()) == kind &&
         doc.value("d", -1) == d && doc.contains("entries") && doc["entries"].is_array();
}

std::filesystem::path file_for(const std::filesystem::path& dir, const char* stem, int d) {
  return dir / (std::string(stem) + "_d" + std::to_string(d) + ".json");
}

std::optional<json> read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::parse_error&) {
    return std::nullopt;
  }
}

}  // namespace

json char_table_to_json(const CharTable& table, int d) {
  json entries = json::array();
  for (const auto& [lambda, mu, value] : table.entries(d))
    entries.push_back(json::array({parts_json(lambda), parts_json(mu), value.get_str()}));
  return {{"version", kVersion}, {"kind", "symmetric"}, {"d", d}, {"entries", entries}};
}

json spin_table_to_json(const SpinCharTable& table, int d) {
  json entries = json::array();
  for (const auto& [lambda, rho, value] : table.entries(d))
    entries.push_back(json::array({parts_json(lambda), parts_json(rho), to_string(value)}));
  return {{"version", kVersion}, {"kind", "spin"}, {"d", d}, {"entries", entries}};
}

bool load_char_table(CharTable& table, const json& doc, int d) {
  if (!header_matches(doc, "symmetric", d)) return false;
  for (const auto& e : doc["entries"]) {
    Rational v = value_from_json(e.at(2));
    if (!is_integer(v)) throw std::invalid_argument("non-integer symmetric character in cache");
    table.insert(parts_from_json(e.at(0)), parts_from_json(e.at(1)), v.get_num());
  }
  return true;
}

bool load_spin_table(SpinCharTable& table, const json& doc, int d) {
  if (!header_matches(doc, "spin", d)) return false;
  for (const auto& e : doc["entries"])
    table.insert(parts_from_json(e.at(0)), parts_from_json(e.at(1)), value_from_json(e.at(2)));
  return true;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return explicit_dir;
  if (const char* env = std::getenv("HURWITZ_TAU_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

int load_tables(const std::filesystem::path& dir, int d_max) {
  int loaded = 0;
  for (int d = 1; d <= d_max; ++d) {
    if (auto doc = read_json(file_for(dir, "charsym", d)); doc && load_char_table(default_char_table(), *doc, d))
      ++loaded;
    if (auto doc = read_json(file_for(dir, "charspin", d)); doc && load_spin_table(default_spin_table(), *doc, d))
      ++loaded;
  }
  return loaded;
}

void save_tables(const std::filesystem::path& dir, int d_max) {
  std::filesystem::create_directories(dir);
  for (int d = 1; d <= d_max; ++d) {
    default_char_table().warm(d);
    default_spin_table().warm(d);
    std::ofstream(file_for(dir, "charsym", d)) << char_table_to_json(default_char_table(), d).dump() << '\n';
    std::ofstream(file_for(dir, "charspin", d)) << spin_table_to_json(default_spin_table(), d).dump() << '\n';
  }
}

}  // namespace htau::cache

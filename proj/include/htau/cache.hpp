// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "htau/charspin.hpp"
#include "htau/charsym.hpp"

namespace htau::cache {

inline constexpr int kVersion = 1;

/// {version, kind: "symmetric", d, entries: [[λ, μ, "χ"], ...]}
nlohmann::json char_table_to_json(const CharTable& table, int d);
/// {version, kind: "spin", d, entries: [[λ, ρ, "ζ"], ...]}
nlohmann::json spin_table_to_json(const SpinCharTable& table, int d);

/// Loads entries into the table. Returns false (and loads nothing) when the
/// version, kind or degree does not match; throws on malformed entries.
bool load_char_table(CharTable& table, const nlohmann::json& doc, int d);
bool load_spin_table(SpinCharTable& table, const nlohmann::json& doc, int d);

/// Cache directory from, in order: explicit path, $HURWITZ_TAU_CACHE, none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& explicit_dir);

/// Loads whatever matching files exist under dir for degrees 1..d_max into
/// the default tables. Returns the number of files loaded.
int load_tables(const std::filesystem::path& dir, int d_max);
/// Warms and writes both default tables for degrees 1..d_max.
void save_tables(const std::filesystem::path& dir, int d_max);

}  // namespace htau::cache

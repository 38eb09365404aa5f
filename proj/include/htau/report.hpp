// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace htau {

/// Parallel kernels take this; `serial` is the reference path.
enum class Exec { serial, parallel };

enum class Status { pass, fail, advisory };

const char* to_string(Status s);

/**
 * Result of one verification check, serialized as
 * {check, params, status, first_discrepancy?, checked, details?}.
 *
 * Advisory checks carry status `advisory`; whether the underlying identity
 * held is recorded in `advisory_ok`.
 */
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::pass;
  std::optional<std::string> first_discrepancy;
  std::size_t checked = 0;
  std::vector<std::string> details;
  bool advisory_ok = true;

  /// Records one comparison; the first failure is kept verbatim.
  void record(bool ok, const std::string& what);
  /// Folds another report's outcome into this one.
  void absorb(const CheckReport& other);
  bool ok() const { return status != Status::fail; }
  nlohmann::json to_json() const;
};

}  // namespace htau

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#include "htau/report.hpp"

namespace htau {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::advisory: return "advisory";
  }
  return "?";
}

void CheckReport::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  if (status != Status::advisory) status = Status::fail;
  advisory_ok = false;
  if (!first_discrepancy) first_discrepancy = what;
}

void CheckReport::absorb(const CheckReport& other) {
  checked += other.checked;
  if (!other.advisory_ok) advisory_ok = false;
  if (other.status == Status::fail && status != Status::advisory) status = Status::fail;
  if (!first_discrepancy && other.first_discrepancy) first_discrepancy = other.first_discrepancy;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"check", check}, {"params", params}, {"status", htau::to_string(status)}, {"checked", checked}};
  if (status == Status::advisory) j["advisory_result"] = advisory_ok ? "pass" : "fail";
  if (first_discrepancy) j["first_discrepancy"] = *first_discrepancy;
  if (!details.empty()) j["details"] = details;
  return j;
}

}  // namespace htau

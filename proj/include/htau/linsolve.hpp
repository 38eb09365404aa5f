// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "htau/rational.hpp"

namespace htau {

/// Solves A x = b exactly for an overdetermined system of full column rank.
/// Throws std::logic_error if the columns are dependent or the system is
/// inconsistent; both indicate a bug in whoever built the system.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace htau

// Copyright 2026 The hurwitz-tau Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace htau {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);
Integer binomial(int n, int k);

/// a/b in lowest terms; throws std::domain_error if b == 0.
Rational frac(const Integer& a, const Integer& b);

/// 2^e for any integer e, exactly.
Rational pow2(int e);

/// x^e; negative exponents require x != 0.
Rational power(const Rational& x, int e);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& x);

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace htau

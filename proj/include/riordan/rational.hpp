// Copyright 2026 The riordan-zero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace riordan {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation; construct through make_rational() so that literal
// fractions are canonical as well.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rational &r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else
// or on a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational &r);

// r^k for any integer k; k < 0 requires r != 0.
Rational pow(const Rational &r, long k);

// C(phi + k - 1, k) = prod_{j=1..k} (phi + j - 1) / j, and 0 for k < 0.
Rational binom_series(const Rational &phi, long k);

// Generalized binomial coefficient C(phi, k) = phi (phi-1) ... (phi-k+1) / k!.
Rational binom(const Rational &phi, long k);

} // namespace riordan

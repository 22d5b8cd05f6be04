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

#include <riordan/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace riordan {

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
    };
    Integer num(strip_plus(num_text));
    Integer den(strip_plus(den_text));
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

Rational pow(const Rational &r, long k)
{
    if (k < 0) {
        if (r == 0) {
            throw std::domain_error("negative power of zero");
        }
        return pow(Rational(1) / r, -k);
    }
    Rational result(1);
    Rational base = r;
    auto e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Rational binom_series(const Rational &phi, long k)
{
    if (k < 0) {
        return 0;
    }
    Rational result(1);
    for (long j = 1; j <= k; ++j) {
        result *= phi + (j - 1);
        result /= j;
    }
    return result;
}

Rational binom(const Rational &phi, long k)
{
    if (k < 0) {
        return 0;
    }
    Rational result(1);
    for (long j = 0; j < k; ++j) {
        result *= phi - j;
        result /= j + 1;
    }
    return result;
}

} // namespace riordan

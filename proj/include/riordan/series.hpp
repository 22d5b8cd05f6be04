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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <riordan/rational.hpp>

namespace riordan {

// Formal power series truncated at x^order. The coefficient vector always
// holds exactly order + 1 entries. Arithmetic between series of different
// orders is rejected instead of silently truncating.
class Series
{
public:
    explicit Series(std::size_t order);
    // Shorter coefficient lists are padded with zeros, longer ones truncated.
    Series(std::size_t order, std::vector<Rational> coeffs);
    Series(std::size_t order, std::initializer_list<long> coeffs);

    static Series zero(std::size_t order) { return Series(order); }
    static Series one(std::size_t order);
    static Series constant(std::size_t order, const Rational &value);
    static Series monomial(std::size_t order, std::size_t degree, const Rational &coeff = 1);
    // sum x^n
    static Series geometric(std::size_t order);
    // sum x^n / n!
    static Series exponential(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational &operator[](std::size_t k) const { return coeffs_[k]; }
    // Coefficient of x^k, zero when k lies beyond the truncation order.
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    // Index of the first nonzero coefficient, or order + 1 for the zero series.
    std::size_t valuation() const;
    bool is_zero() const;

    // Same coefficients at a different truncation order.
    Series truncated(std::size_t order) const;

    friend bool operator==(const Series &, const Series &) = default;

private:
    std::vector<Rational> coeffs_;
};

Series add(const Series &a, const Series &b);
Series sub(const Series &a, const Series &b);
Series neg(const Series &a);
Series scale(const Series &a, const Rational &r);
// Cauchy product truncated at the common order.
Series mul(const Series &a, const Series &b);
// Multiplicative inverse; requires a[0] != 0.
Series invert(const Series &a);
// Ordinary power, negative exponents through invert().
Series pow(const Series &a, long n);
// b(a(x)); requires a[0] == 0.
Series compose(const Series &b, const Series &a);
// Compositional inverse; requires a[0] == 0 and a[1] != 0.
Series reversion(const Series &a);
// log(a) for a[0] == 1.
Series log1(const Series &a);
// exp(a) for a[0] == 0.
Series exp0(const Series &a);
// x d/dx
Series theta(const Series &a);
// Coefficientwise product.
Series hadamard(const Series &a, const Series &b);
// a(x^q)
Series dilate(const Series &a, std::size_t q);
// a(r x)
Series scale_argument(const Series &a, const Rational &r);

inline Series operator+(const Series &a, const Series &b) { return add(a, b); }
inline Series operator-(const Series &a, const Series &b) { return sub(a, b); }
inline Series operator-(const Series &a) { return neg(a); }
inline Series operator*(const Series &a, const Series &b) { return mul(a, b); }
inline Series operator*(const Rational &r, const Series &a) { return scale(a, r); }

// Human readable polynomial form, e.g. "1 + 2*x - 1/2*x^3".
std::string to_string(const Series &a);

} // namespace riordan

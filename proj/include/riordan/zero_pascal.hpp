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
#include <string_view>
#include <variant>
#include <vector>

#include <riordan/lower_triangular.hpp>
#include <riordan/pascal.hpp>
#include <riordan/rational.hpp>
#include <riordan/series.hpp>

namespace riordan {

// Base-q digits n = sum n_i q^i, least significant first.
class DigitExpansion
{
public:
    DigitExpansion(std::size_t base, std::size_t value);

    std::size_t base() const noexcept { return base_; }
    // Digit i, zero beyond the most significant one.
    std::size_t digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }
    std::size_t length() const noexcept { return digits_.size(); }
    std::size_t value() const;

private:
    std::size_t base_;
    std::vector<std::size_t> digits_;
};

// The three families of zero generalized Pascal matrices built from
// indicator tables: basic 0,qP, exponential 0,qP_e and fractal [0,q]P.
enum class Family { basic, exponential, fractal };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

// 1 iff n mod q >= m mod q.
int basic_entry(std::size_t q, std::size_t n, std::size_t m);
// 1 iff every base-q digit of n is >= the matching digit of m.
int fractal_entry(std::size_t q, std::size_t n, std::size_t m);

// (q^k n + i, q^k m + j)_{0,q} == (n m)_{0,q} (i j)_{0,q} for 0 <= i, j < q^k.
bool digit_product_theorem_check(std::size_t q, std::size_t k, std::size_t n, std::size_t m, std::size_t i,
                                 std::size_t j);

// prod_i binom(n_i, m_i) over base-q digits.
Integer t_entry(std::size_t q, std::size_t n, std::size_t m);
// prod_i (1 + x^{q^i})^{n_i}, expanded to the given order.
Series t_row_poly(std::size_t q, std::size_t n, std::size_t order);

// (1 + ... + x^{q-1}) e^{x^q}: c_{qn+i} = 1 / n!.
Series exponential_weight(std::size_t q, std::size_t order);
// c_n = prod_i 1 / n_i! over base-q digits.
Series t_weight(std::size_t q, std::size_t order);

struct BasicFactor
{
    std::size_t q;
};

struct FractalFactor
{
    std::size_t q;
};

struct WeightFactor
{
    WeightSeries c;
};

using ZeroPascalFactor = std::variant<BasicFactor, FractalFactor, WeightFactor>;

// Symbolic Hadamard product of zero Pascal factors with generalized Pascal
// matrices P_{c(x)}. Entries are evaluated factor by factor on demand.
class ZeroPascalSpec
{
public:
    ZeroPascalSpec(std::vector<ZeroPascalFactor> factors, std::size_t order);

    static ZeroPascalSpec basic(std::size_t q, std::size_t order);
    static ZeroPascalSpec exponential(std::size_t q, std::size_t order);
    static ZeroPascalSpec fractal(std::size_t q, std::size_t order);
    static ZeroPascalSpec of_family(Family f, std::size_t q, std::size_t order);
    // T^{(q)} = P_{c} x [0,q]P with c = t_weight(q).
    static ZeroPascalSpec t_matrix(std::size_t q, std::size_t order);

    std::size_t order() const noexcept { return order_; }
    const std::vector<ZeroPascalFactor> &factors() const noexcept { return factors_; }

    Rational entry(std::size_t n, std::size_t m) const;
    LowerTriangular matrix() const;

private:
    std::vector<ZeroPascalFactor> factors_;
    std::size_t order_;
};

// w_n(phi, x) = sum_{m=0..n} C(phi+m-1, m) x^{n-m}.
Series w_poly(std::size_t n, const Rational &phi, std::size_t order);

// Closed-form entries of the phi-th matrix power.
LowerTriangular power_basic(std::size_t q, const Rational &phi, std::size_t order);
LowerTriangular power_exponential(std::size_t q, const Rational &phi, std::size_t order);
LowerTriangular power_fractal(std::size_t q, const Rational &phi, std::size_t order);
LowerTriangular power(Family f, std::size_t q, const Rational &phi, std::size_t order);

// Row n of the phi-th power from the w-polynomial product forms.
Series power_row(Family f, std::size_t q, const Rational &phi, std::size_t n, std::size_t order);
LowerTriangular power_from_rows(Family f, std::size_t q, const Rational &phi, std::size_t order);

// (a|b)_q, (a|b)_{q,e} and (a|b)_{q,k}: block (n, m) is the first q^k rows of
// the family's (b(x), x | P) scaled by a_{n-m} times the family block weight.
// k must be 1 for the basic and exponential families.
LowerTriangular block_matrix(const Series &a, const Series &b, std::size_t q, std::size_t k, Family f);
// ((sum_{n<Q} b_n x^n) a(x^Q), x | P) with Q = q^k.
LowerTriangular block_matrix_series_form(const Series &a, const Series &b, std::size_t q, std::size_t k, Family f);

// Closed forms of log o (1-x)^{-1} in the family's algebra.
Series log_one_minus_inv_closed(Family f, std::size_t q, std::size_t order);
// Closed forms of P^{-1} x (1-x)^{-2}.
Series inverse_applied_closed(Family f, std::size_t q, std::size_t order);

} // namespace riordan

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
#include <vector>

#include <riordan/lower_triangular.hpp>
#include <riordan/rational.hpp>
#include <riordan/series.hpp>
#include <riordan/zero_pascal.hpp>

namespace riordan {

// The algebra of formal power series attached to a table of coefficients
// (n, m) (a generalized or zero generalized Pascal matrix):
//
//     [x^n] a o b = sum_{m=0..n} (n, m) a_{n-m} b_m.
//
// The constructor checks (n, 0) = 1, (n, m) = (n, n-m) and the product
// symmetry (n+q, q)(n+p, m+p)(m+p, p) = (n+p, p)(n+q, m+q)(m+q, q) for all
// p, q <= 2, which makes the product commutative and associative.
class CircAlgebra
{
public:
    explicit CircAlgebra(LowerTriangular table);

    static CircAlgebra of_family(Family f, std::size_t q, std::size_t order);
    static CircAlgebra pascal(std::size_t order);
    static CircAlgebra t_matrix(std::size_t q, std::size_t order);

    std::size_t order() const noexcept { return table_.order(); }
    const LowerTriangular &table() const noexcept { return table_; }

    friend bool operator==(const CircAlgebra &, const CircAlgebra &) = default;

private:
    LowerTriangular table_;
};

// Returns a description of the first violated identity, or an empty string.
std::string check_pascal_identities(const LowerTriangular &table, std::size_t max_shift = 2);

Series circ_mul(const CircAlgebra &alg, const Series &a, const Series &b);
// (a(x), x | P): the matrix of multiplication by a.
LowerTriangular circ_mul_matrix(const CircAlgebra &alg, const Series &a);
// a^{(n)}, n >= 0.
Series circ_pow_int(const CircAlgebra &alg, const Series &a, std::size_t n);
// a^{(-1)}; requires a_0 != 0.
Series circ_inverse(const CircAlgebra &alg, const Series &a);
// log o a = sum (-1)^{n-1}/n (a - 1)^{(n)}; requires a_0 = 1.
Series circ_log(const CircAlgebra &alg, const Series &a);
// sum l^{(n)} / n!; requires l_0 = 0.
Series circ_exp(const CircAlgebra &alg, const Series &l);
// a^{(phi)} via circ_exp(phi log o a), cross-checked against the binomial
// series; requires a_0 = 1.
Series circ_pow_phi(const CircAlgebra &alg, const Series &a, const Rational &phi);
// a^{(phi)} = sum C(phi, n) (a - 1)^{(n)}.
Series circ_pow_phi_binomial(const CircAlgebra &alg, const Series &a, const Rational &phi);

// (a - 1) o (a - 1) == 0 with a_0 == 1.
bool is_l_series(const CircAlgebra &alg, const Series &a);
// 1 + sum_{m=1..floor(q/2)} x^{q-m} parts[floor(q/2) - m](x^q).
Series l_series_form(std::size_t q, const std::vector<Series> &parts, std::size_t order);

} // namespace riordan

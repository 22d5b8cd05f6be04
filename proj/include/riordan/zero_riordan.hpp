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
#include <memory>
#include <optional>

#include <riordan/circ.hpp>
#include <riordan/lower_triangular.hpp>
#include <riordan/series.hpp>

namespace riordan {

using AlgebraPtr = std::shared_ptr<const CircAlgebra>;

// (a(x), 1)_0 = (a(x), x | P): entry (n, m) = a_{n-m} (n, m).
LowerTriangular mult_part(const CircAlgebra &alg, const Series &a);
// (1, a(x))_0: column n is x^n o a^{(n)}. Requires a_0 != 0.
LowerTriangular comp_part(const CircAlgebra &alg, const Series &a);
// b o (a(x)) = sum b_n x^n o a^{(n)} = (1, a)_0 b.
Series circ_compose(const CircAlgebra &alg, const Series &b, const Series &a);

// Element (b(x), a(x))_0 = (b, 1)_0 (1, a)_0 of the zero generalized Riordan
// group over a fixed algebra; b_0 != 0 and a_0 != 0.
class ZeroRiordan
{
public:
    ZeroRiordan(AlgebraPtr alg, Series b, Series a);

    static ZeroRiordan identity(AlgebraPtr alg);

    const CircAlgebra &algebra() const noexcept { return *alg_; }
    const AlgebraPtr &algebra_ptr() const noexcept { return alg_; }
    const Series &b() const noexcept { return b_; }
    const Series &a() const noexcept { return a_; }

    LowerTriangular matrix() const;

    friend bool operator==(const ZeroRiordan &x, const ZeroRiordan &y)
    {
        return *x.alg_ == *y.alg_ && x.b_ == y.b_ && x.a_ == y.a_;
    }

private:
    AlgebraPtr alg_;
    Series b_;
    Series a_;
};

// (b, a)_0 (f, g)_0 = (b o f o (a), a o g o (a))_0.
ZeroRiordan group_mul(const ZeroRiordan &x, const ZeroRiordan &y);
// Solved exactly against the triangular matrix (1, a)_0.
ZeroRiordan group_inverse(const ZeroRiordan &x);

// b and a vanish on every exponent qn + m with 0 < m < q.
bool subgroup_membership_q(const ZeroRiordan &x, std::size_t q);

// For l-series a1, a2 of a common group: a2 o (a1) == a2 and
// (1, a1)_0 (1, a2)_0 == (1, a1 o a2)_0.
bool l_series_fixed_point_check(const CircAlgebra &alg, const Series &a1, const Series &a2);

// The series b with (1, b)_0 inverse to (1, a^{(-1)})_0; requires a_0 = 1.
Series lagrange_dual(const CircAlgebra &alg, const Series &a);

// [x^n] b^{(phi)} == phi / (phi + n) [x^n] a^{(phi + n)}. Returns nullopt
// when phi + n == 0, where the right side is undefined.
std::optional<bool> lagrange_check(const CircAlgebra &alg, const Series &a, const Rational &phi, std::size_t n);

// a_n(phi) = [x^n] a^{(phi)} and b_n(phi) = [x^n] b^{(phi)} are polynomials
// of degree <= degree_bound in phi with (phi + n) b_n(phi) = phi a_n(phi + n).
// Both facts are checked on degree_bound + 2 sample points phi = 1, 2, ...
bool lagrange_poly_identity_check(const CircAlgebra &alg, const Series &a, std::size_t n, std::size_t degree_bound);

} // namespace riordan

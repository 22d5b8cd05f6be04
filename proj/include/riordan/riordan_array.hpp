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
#include <string>
#include <string_view>
#include <vector>

#include <riordan/lower_triangular.hpp>
#include <riordan/rational.hpp>
#include <riordan/series.hpp>

namespace riordan {

// Generalized ((c)-)Riordan array |c|^{-1} (b(x), a(x)) |c|. The weight
// c = 1/(1-x) gives ordinary arrays and c = e^x exponential ones.
class RiordanArray
{
public:
    RiordanArray(Series b, Series a, Series weight);

    static RiordanArray ordinary(Series b, Series a);
    static RiordanArray exponential(Series b, Series a);

    const Series &b() const noexcept { return b_; }
    const Series &a() const noexcept { return a_; }
    const Series &weight() const noexcept { return weight_.series(); }
    std::size_t order() const noexcept { return b_.order(); }

    // Column n of the unweighted array is b(x) a(x)^n.
    LowerTriangular unweighted_matrix() const;
    LowerTriangular matrix() const;

    friend bool operator==(const RiordanArray &x, const RiordanArray &y)
    {
        return x.b_ == y.b_ && x.a_ == y.a_ && x.weight() == y.weight();
    }

private:
    Series b_;
    Series a_;
    DiagonalWeight weight_;
};

// (b, a)(f, g) = (b f(a), g(a)); both arrays must carry the same weight.
RiordanArray riordan_mul(const RiordanArray &x, const RiordanArray &y);
// (1 / b(abar), abar) with abar the compositional inverse of a.
RiordanArray riordan_inverse(const RiordanArray &x);

// u_n(x) = [n, ->] of the weighted matrix.
std::vector<Series> row_polynomials(const RiordanArray &r);
// sum c_n u_n(phi) x^n == b(x) c(phi a(x)).
bool gf_identity_check(const RiordanArray &r, const Rational &phi);

// P^phi = (1/(1 - phi x), x/(1 - phi x)) in ordinary weight.
RiordanArray pascal_power(const Rational &phi, std::size_t order);

// bernoulli, euler, hermite, laguerre, laguerre_boas_buck, chebyshev_t,
// chebyshev_u, pascal, pascal_exp. chebyshev_t keeps the convention T_0 = 1/2.
RiordanArray named_family(std::string_view name, std::size_t order);
std::vector<std::string> named_family_names();

} // namespace riordan

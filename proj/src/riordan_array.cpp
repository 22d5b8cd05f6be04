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

#include <riordan/riordan_array.hpp>

#include <stdexcept>
#include <utility>

namespace riordan {

RiordanArray::RiordanArray(Series b, Series a, Series weight)
    : b_(std::move(b)), a_(std::move(a)), weight_(std::move(weight))
{
    if (b_.order() != a_.order() || b_.order() != weight_.order()) {
        throw std::invalid_argument("RiordanArray: order mismatch");
    }
    if (b_[0] == 0) {
        throw std::domain_error("RiordanArray: b_0 must be nonzero");
    }
    if (a_[0] != 0) {
        throw std::domain_error("RiordanArray: a_0 must be zero");
    }
    if (a_.order() >= 1 && a_[1] == 0) {
        throw std::domain_error("RiordanArray: a_1 must be nonzero");
    }
}

RiordanArray RiordanArray::ordinary(Series b, Series a)
{
    const std::size_t order = b.order();
    return RiordanArray(std::move(b), std::move(a), Series::geometric(order));
}

RiordanArray RiordanArray::exponential(Series b, Series a)
{
    const std::size_t order = b.order();
    return RiordanArray(std::move(b), std::move(a), Series::exponential(order));
}

LowerTriangular RiordanArray::unweighted_matrix() const
{
    std::vector<Series> columns;
    columns.reserve(order() + 1);
    Series col = b_;
    for (std::size_t n = 0; n <= order(); ++n) {
        columns.push_back(col);
        col = mul(col, a_);
    }
    return LowerTriangular::from_columns(order(), [&](std::size_t n) { return columns[n]; });
}

LowerTriangular RiordanArray::matrix() const
{
    return conjugate_by_weight(unweighted_matrix(), weight_);
}

RiordanArray riordan_mul(const RiordanArray &x, const RiordanArray &y)
{
    if (x.weight() != y.weight()) {
        throw std::invalid_argument("riordan_mul: arrays carry different weights");
    }
    return RiordanArray(mul(x.b(), compose(y.b(), x.a())), compose(y.a(), x.a()), x.weight());
}

RiordanArray riordan_inverse(const RiordanArray &x)
{
    const Series abar = reversion(x.a());
    return RiordanArray(invert(compose(x.b(), abar)), abar, x.weight());
}

std::vector<Series> row_polynomials(const RiordanArray &r)
{
    const LowerTriangular m = r.matrix();
    std::vector<Series> rows;
    rows.reserve(m.size());
    for (std::size_t n = 0; n <= m.order(); ++n) {
        rows.push_back(m.row(n));
    }
    return rows;
}

bool gf_identity_check(const RiordanArray &r, const Rational &phi)
{
    const std::size_t order = r.order();
    const LowerTriangular m = r.matrix();
    std::vector<Rational> lhs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Rational u;
        Rational p(1);
        for (std::size_t k = 0; k <= n; ++k) {
            u += m(n, k) * p;
            p *= phi;
        }
        lhs[n] = r.weight()[n] * u;
    }
    const Series rhs = mul(r.b(), compose(r.weight(), scale(r.a(), phi)));
    return Series(order, std::move(lhs)) == rhs;
}

RiordanArray pascal_power(const Rational &phi, std::size_t order)
{
    const Series denom = invert(Series(order, std::vector<Rational>{Rational(1), Rational(-phi)}));
    return RiordanArray::ordinary(denom, mul(Series::monomial(order, 1), denom));
}

namespace {

// (e^x - 1) / x
Series exp_minus_one_over_x(std::size_t order)
{
    const Series e = Series::exponential(order + 1);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = e[k + 1];
    }
    return Series(order, std::move(c));
}

// sum x^n / (n!)^2
Series squared_factorial_weight(std::size_t order)
{
    const Series e = Series::exponential(order);
    return hadamard(e, e);
}

} // namespace

RiordanArray named_family(std::string_view name, std::size_t order)
{
    const Series x = Series::monomial(order, 1);
    const Series one = Series::one(order);
    const Series e = Series::exponential(order);
    const Series geom = Series::geometric(order);
    const Series one_plus_x2_inv = invert(add(one, Series::monomial(order, 2)));

    if (name == "pascal") {
        return RiordanArray::ordinary(geom, mul(x, geom));
    }
    if (name == "pascal_exp") {
        return RiordanArray::exponential(e, x);
    }
    if (name == "bernoulli") {
        return RiordanArray::exponential(invert(exp_minus_one_over_x(order)), x);
    }
    if (name == "euler") {
        return RiordanArray::exponential(scale(invert(add(e, one)), 2), x);
    }
    if (name == "hermite") {
        return RiordanArray::exponential(compose(e, neg(Series::monomial(order, 2))), scale(x, 2));
    }
    if (name == "laguerre") {
        return RiordanArray::exponential(geom, neg(mul(x, geom)));
    }
    if (name == "laguerre_boas_buck") {
        return RiordanArray(e, neg(x), squared_factorial_weight(order));
    }
    if (name == "chebyshev_t") {
        const Series b = scale(mul(sub(one, Series::monomial(order, 2)), one_plus_x2_inv), make_rational(1, 2));
        return RiordanArray::ordinary(b, scale(mul(x, one_plus_x2_inv), 2));
    }
    if (name == "chebyshev_u") {
        return RiordanArray::ordinary(one_plus_x2_inv, scale(mul(x, one_plus_x2_inv), 2));
    }
    throw std::invalid_argument("unknown Riordan family '" + std::string(name) + "'");
}

std::vector<std::string> named_family_names()
{
    return {"bernoulli", "euler", "hermite", "laguerre", "laguerre_boas_buck", "chebyshev_t", "chebyshev_u", "pascal",
            "pascal_exp"};
}

} // namespace riordan

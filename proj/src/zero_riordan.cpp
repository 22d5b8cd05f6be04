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

#include <riordan/zero_riordan.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riordan {

LowerTriangular mult_part(const CircAlgebra &alg, const Series &a)
{
    return circ_mul_matrix(alg, a);
}

LowerTriangular comp_part(const CircAlgebra &alg, const Series &a)
{
    if (a.order() != alg.order()) {
        throw std::invalid_argument("comp_part: order mismatch");
    }
    if (a[0] == 0) {
        throw std::domain_error("comp_part: a_0 must be nonzero");
    }
    const std::size_t order = alg.order();
    std::vector<Series> columns;
    columns.reserve(order + 1);
    Series power = Series::one(order);
    for (std::size_t n = 0; n <= order; ++n) {
        columns.push_back(circ_mul(alg, Series::monomial(order, n), power));
        if (n < order) {
            power = circ_mul(alg, a, power);
        }
    }
    return LowerTriangular::from_columns(order, [&](std::size_t n) { return columns[n]; });
}

Series circ_compose(const CircAlgebra &alg, const Series &b, const Series &a)
{
    return apply(comp_part(alg, a), b);
}

ZeroRiordan::ZeroRiordan(AlgebraPtr alg, Series b, Series a) : alg_(std::move(alg)), b_(std::move(b)), a_(std::move(a))
{
    if (!alg_) {
        throw std::invalid_argument("ZeroRiordan: null algebra");
    }
    if (b_.order() != alg_->order() || a_.order() != alg_->order()) {
        throw std::invalid_argument("ZeroRiordan: series order does not match algebra");
    }
    if (b_[0] == 0 || a_[0] == 0) {
        throw std::domain_error("ZeroRiordan: need b_0 != 0 and a_0 != 0");
    }
}

ZeroRiordan ZeroRiordan::identity(AlgebraPtr alg)
{
    const std::size_t order = alg->order();
    return ZeroRiordan(std::move(alg), Series::one(order), Series::one(order));
}

LowerTriangular ZeroRiordan::matrix() const
{
    return mat_mul(mult_part(*alg_, b_), comp_part(*alg_, a_));
}

namespace {

void require_same_algebra(const ZeroRiordan &x, const ZeroRiordan &y)
{
    if (x.algebra_ptr() != y.algebra_ptr() && !(x.algebra() == y.algebra())) {
        throw std::invalid_argument("group_mul: elements belong to different algebras");
    }
}

} // namespace

ZeroRiordan group_mul(const ZeroRiordan &x, const ZeroRiordan &y)
{
    require_same_algebra(x, y);
    const CircAlgebra &alg = x.algebra();
    const LowerTriangular compose_a = comp_part(alg, x.a());
    Series b = circ_mul(alg, x.b(), apply(compose_a, y.b()));
    Series a = circ_mul(alg, x.a(), apply(compose_a, y.a()));
    return ZeroRiordan(x.algebra_ptr(), std::move(b), std::move(a));
}

ZeroRiordan group_inverse(const ZeroRiordan &x)
{
    const CircAlgebra &alg = x.algebra();
    const LowerTriangular compose_a = comp_part(alg, x.a());
    Series g = solve_lower(compose_a, circ_inverse(alg, x.a()));
    Series f = solve_lower(compose_a, circ_inverse(alg, x.b()));
    return ZeroRiordan(x.algebra_ptr(), std::move(f), std::move(g));
}

bool subgroup_membership_q(const ZeroRiordan &x, std::size_t q)
{
    if (q < 2) {
        throw std::invalid_argument("subgroup_membership_q: q must be at least 2");
    }
    for (std::size_t k = 0; k <= x.b().order(); ++k) {
        if (k % q != 0 && (x.b()[k] != 0 || x.a()[k] != 0)) {
            return false;
        }
    }
    return true;
}

bool l_series_fixed_point_check(const CircAlgebra &alg, const Series &a1, const Series &a2)
{
    if (circ_compose(alg, a2, a1) != a2) {
        return false;
    }
    return mat_mul(comp_part(alg, a1), comp_part(alg, a2)) == comp_part(alg, circ_mul(alg, a1, a2));
}

Series lagrange_dual(const CircAlgebra &alg, const Series &a)
{
    if (a[0] != 1) {
        throw std::domain_error("lagrange_dual: a_0 must be 1");
    }
    const auto shared = std::make_shared<const CircAlgebra>(alg);
    const ZeroRiordan x(shared, Series::one(alg.order()), circ_inverse(alg, a));
    return group_inverse(x).a();
}

namespace {

bool lagrange_identity_with_dual(const CircAlgebra &alg, const Series &a, const Series &b, const Rational &phi,
                                 std::size_t n)
{
    const Rational shifted = phi + static_cast<unsigned long>(n);
    const Rational lhs = circ_pow_phi(alg, b, phi)[n];
    const Rational rhs = phi / shifted * circ_pow_phi(alg, a, shifted)[n];
    return lhs == rhs;
}

// Value at x of the polynomial of degree < xs.size() through (xs, ys).
Rational interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys, const Rational &x)
{
    Rational result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational basis(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j != i) {
                basis *= (x - xs[j]) / (xs[i] - xs[j]);
            }
        }
        result += basis * ys[i];
    }
    return result;
}

} // namespace

std::optional<bool> lagrange_check(const CircAlgebra &alg, const Series &a, const Rational &phi, std::size_t n)
{
    if (n > alg.order()) {
        throw std::invalid_argument("lagrange_check: n exceeds algebra order");
    }
    if (phi + static_cast<unsigned long>(n) == 0) {
        return std::nullopt;
    }
    return lagrange_identity_with_dual(alg, a, lagrange_dual(alg, a), phi, n);
}

bool lagrange_poly_identity_check(const CircAlgebra &alg, const Series &a, std::size_t n, std::size_t degree_bound)
{
    if (n > alg.order()) {
        throw std::invalid_argument("lagrange_poly_identity_check: n exceeds algebra order");
    }
    const Series b = lagrange_dual(alg, a);
    std::vector<Rational> points;
    std::vector<Rational> a_values;
    std::vector<Rational> b_values;
    // Positive sample points never hit the excluded phi = -n.
    for (std::size_t i = 1; i <= degree_bound + 2; ++i) {
        const Rational phi(static_cast<unsigned long>(i));
        points.push_back(phi);
        b_values.push_back(circ_pow_phi(alg, b, phi)[n]);
        a_values.push_back(circ_pow_phi(alg, a, phi)[n]);
    }
    // Degree bound: the first degree_bound + 1 samples predict the last one.
    const std::vector<Rational> head(points.begin(), points.end() - 1);
    const std::vector<Rational> a_head(a_values.begin(), a_values.end() - 1);
    const std::vector<Rational> b_head(b_values.begin(), b_values.end() - 1);
    if (interpolate(head, a_head, points.back()) != a_values.back()
        || interpolate(head, b_head, points.back()) != b_values.back()) {
        return false;
    }
    // (phi + n) b_n(phi) and phi a_n(phi + n) have degree <= degree_bound + 1,
    // so agreement on degree_bound + 2 points is equality of polynomials.
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational shifted = points[i] + static_cast<unsigned long>(n);
        const Rational a_shifted = circ_pow_phi(alg, a, shifted)[n];
        if (shifted * b_values[i] != points[i] * a_shifted) {
            return false;
        }
    }
    return true;
}

} // namespace riordan

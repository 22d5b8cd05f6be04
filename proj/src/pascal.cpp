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

#include <riordan/pascal.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riordan {

WeightSeries::WeightSeries(Series c) : c_(std::move(c))
{
    if (c_[0] != 1) {
        throw std::domain_error("weight series must have c_0 = 1");
    }
    for (std::size_t k = 1; k <= c_.order(); ++k) {
        if (c_[k] == 0) {
            throw std::domain_error("weight series has zero coefficient at x^" + std::to_string(k));
        }
    }
}

LowerTriangular pascal_from_c(const WeightSeries &w)
{
    const Series &c = w.series();
    return LowerTriangular(c.order(), [&](std::size_t n, std::size_t m) -> Rational { return c[m] * c[n - m] / c[n]; });
}

Series phi_q_weight(const Rational &phi, std::size_t q, std::size_t order)
{
    if (q < 2) {
        throw std::invalid_argument("phi_q_weight: q must be at least 2");
    }
    if (phi == 0) {
        throw std::domain_error("phi_q_weight: undefined for phi = 0");
    }
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = pow(phi, -static_cast<long>(k / q));
    }
    return Series(order, std::move(c));
}

LowerTriangular phi_q_pascal(const Rational &phi, std::size_t q, std::size_t order)
{
    if (q < 2) {
        throw std::invalid_argument("phi_q_pascal: q must be at least 2");
    }
    return LowerTriangular(order, [&](std::size_t n, std::size_t m) -> Rational { return n % q >= m % q ? Rational(1) : phi; });
}

namespace {

void require_nonzero_b(const Series &b, std::size_t upto)
{
    if (upto > b.order()) {
        throw std::invalid_argument("generalized binomial index beyond series order");
    }
    for (std::size_t k = 1; k <= upto; ++k) {
        if (b[k] == 0) {
            throw std::domain_error("b_" + std::to_string(k) + " is zero");
        }
    }
}

Rational b_factorial(const Series &b, std::size_t n)
{
    Rational r(1);
    for (std::size_t k = 1; k <= n; ++k) {
        r *= b[k];
    }
    return r;
}

} // namespace

Rational gen_binom(const Series &b, std::size_t n, std::size_t m)
{
    if (m > n) {
        return 0;
    }
    require_nonzero_b(b, n);
    return b_factorial(b, n) / (b_factorial(b, m) * b_factorial(b, n - m));
}

bool gen_binom_recurrence_check(const Series &b, std::size_t n, std::size_t m)
{
    if (n == 0 || m > n) {
        return gen_binom(b, n, m) == (m == 0 ? 1 : 0);
    }
    if (m == 0) {
        return gen_binom(b, n, 0) == 1;
    }
    const Rational lhs = gen_binom(b, n, m);
    if (m == n) {
        return lhs == gen_binom(b, n - 1, m - 1);
    }
    const Rational rhs = gen_binom(b, n - 1, m - 1) + (b[n] - b[m]) / b[n - m] * gen_binom(b, n - 1, m);
    return lhs == rhs;
}

Series weight_from_b(const Series &b)
{
    require_nonzero_b(b, b.order());
    std::vector<Rational> c(b.order() + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= b.order(); ++k) {
        c[k] = c[k - 1] / b[k];
    }
    return Series(b.order(), std::move(c));
}

Series first_column_b(const LowerTriangular &p)
{
    if (p.order() == 0) {
        return Series(0);
    }
    Series col = p.column(1);
    std::vector<Rational> c(col.coeffs().begin(), col.coeffs().end());
    c[0] = 0;
    return Series(p.order(), std::move(c));
}

int mobius(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("mobius(0)");
    }
    int result = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

std::map<std::size_t, Rational> hadamard_decompose(const LowerTriangular &p, std::size_t qmax)
{
    if (qmax > p.order()) {
        throw std::invalid_argument("hadamard_decompose: qmax exceeds matrix order");
    }
    const Series b = first_column_b(p);
    std::map<std::size_t, Rational> factors;
    for (std::size_t q = 2; q <= qmax; ++q) {
        Rational phi(1);
        for (std::size_t d = 1; d <= q; ++d) {
            if (q % d != 0) {
                continue;
            }
            const int mu = mobius(q / d);
            if (mu == 0) {
                continue;
            }
            if (b[d] == 0) {
                throw std::domain_error("hadamard_decompose: b_" + std::to_string(d) + " is zero");
            }
            phi = mu > 0 ? Rational(phi * b[d]) : Rational(phi / b[d]);
        }
        factors.emplace(q, phi);
    }
    return factors;
}

LowerTriangular hadamard_reconstruct(const std::map<std::size_t, Rational> &factors, std::size_t order)
{
    LowerTriangular result = LowerTriangular::ones(order);
    for (const auto &[q, phi] : factors) {
        result = hadamard(result, phi_q_pascal(phi, q, order));
    }
    return result;
}

LowerTriangular q_umbral_pascal(const Rational &q, std::size_t order)
{
    // Column n+1 is column n times x / (1 - q^{n+1} x).
    std::vector<Series> columns;
    columns.reserve(order + 1);
    Series col = invert(Series(order, {1, -1}));
    Rational qm(1);
    for (std::size_t n = 0; n <= order; ++n) {
        columns.push_back(col);
        qm *= q;
        const Series factor = mul(Series::monomial(order, 1), invert(Series(order, std::vector<Rational>{Rational(1), Rational(-qm)})));
        col = mul(col, factor);
    }
    return LowerTriangular::from_columns(order, [&](std::size_t n) { return columns[n]; });
}

LowerTriangular q_umbral_inverse_rows(const Rational &q, std::size_t order)
{
    std::vector<Series> rows;
    rows.reserve(order + 1);
    Series row = Series::one(order);
    Rational qm(1);
    for (std::size_t n = 0; n <= order; ++n) {
        rows.push_back(row);
        if (n < order) {
            row = mul(row, Series(order, std::vector<Rational>{Rational(-qm), Rational(1)}));
            qm *= q;
        }
    }
    return LowerTriangular::from_rows(order, [&](std::size_t n) { return rows[n]; });
}

} // namespace riordan

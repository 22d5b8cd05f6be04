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
#include <random>
#include <string>
#include <vector>

#include <riordan/lower_triangular.hpp>
#include <riordan/rational.hpp>
#include <riordan/series.hpp>

#include "golden_matrices.hpp"

namespace testing {

using riordan::Integer;
using riordan::LowerTriangular;
using riordan::Rational;
using riordan::Series;

inline Rational q(long p, long d = 1) { return riordan::make_rational(p, d); }

// Golden table with "phi" replaced by the given value.
inline LowerTriangular from_table(const golden::Table &t, const Rational &phi = 0)
{
    return LowerTriangular(t.size() - 1, [&](std::size_t n, std::size_t m) -> Rational {
        const std::string &cell = t.at(n).at(m);
        return cell == "phi" ? phi : riordan::parse_rational(cell);
    });
}

class Random
{
public:
    explicit Random(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    // Small rational p/d with |p| <= 4 and 1 <= d <= 3.
    Rational rational() { return q(integer(-4, 4), integer(1, 3)); }
    Rational nonzero_rational()
    {
        Rational r;
        do {
            r = rational();
        } while (r == 0);
        return r;
    }

    Series series(std::size_t order, double density = 1.0)
    {
        std::vector<Rational> c(order + 1);
        std::bernoulli_distribution keep(density);
        for (auto &x : c) {
            x = keep(gen_) ? rational() : Rational(0);
        }
        return Series(order, std::move(c));
    }
    // a_0 fixed to `lead`.
    Series series_with(std::size_t order, const Rational &lead, double density = 1.0)
    {
        const Series s = series(order, density);
        std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
        c[0] = lead;
        return Series(order, std::move(c));
    }
    // Nonzero coefficients only, c_0 = 1.
    Series weight(std::size_t order)
    {
        std::vector<Rational> c(order + 1);
        c[0] = 1;
        for (std::size_t k = 1; k <= order; ++k) {
            c[k] = nonzero_rational();
        }
        return Series(order, std::move(c));
    }
    LowerTriangular matrix(std::size_t order, bool unit_diagonal = false)
    {
        return LowerTriangular(order, [&](std::size_t n, std::size_t m) -> Rational {
            if (unit_diagonal && n == m) {
                return Rational(1);
            }
            return rational();
        });
    }

private:
    std::mt19937 gen_;
};

// Independent dense kernels used as oracles for the packed triangular code.
using Dense = std::vector<std::vector<Rational>>;

inline Dense dense(const LowerTriangular &a)
{
    Dense d(a.size(), std::vector<Rational>(a.size()));
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            d[n][m] = a(n, m);
        }
    }
    return d;
}

inline Dense dense_mul(const Dense &a, const Dense &b)
{
    const std::size_t s = a.size();
    Dense r(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            for (std::size_t k = 0; k < s; ++k) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

// Gauss-Jordan inversion with full row pivoting.
inline Dense dense_inverse(Dense a)
{
    const std::size_t s = a.size();
    Dense inv(s, std::vector<Rational>(s));
    for (std::size_t i = 0; i < s; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t pivot = col;
        while (a[pivot][col] == 0) {
            ++pivot;
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t j = 0; j < s; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < s; ++i) {
            if (i != col && a[i][col] != 0) {
                const Rational f = a[i][col];
                for (std::size_t j = 0; j < s; ++j) {
                    a[i][j] -= f * a[col][j];
                    inv[i][j] -= f * inv[col][j];
                }
            }
        }
    }
    return inv;
}

inline Dense dense_power(const Dense &a, long k)
{
    Dense base = k < 0 ? dense_inverse(a) : a;
    Dense r(a.size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i][i] = 1;
    }
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        r = dense_mul(r, base);
    }
    return r;
}

// Exact binomial coefficient by the additive recurrence.
inline Integer pascal_binom(std::size_t n, std::size_t m)
{
    if (m > n) {
        return 0;
    }
    std::vector<Integer> row{1};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next);
    }
    return row[m];
}

inline Series poly(std::size_t order, std::initializer_list<long> c) { return Series(order, c); }

inline Series mono(std::size_t order, std::size_t k, const Rational &c = 1) { return Series::monomial(order, k, c); }

} // namespace testing

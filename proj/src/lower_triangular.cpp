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

#include <riordan/lower_triangular.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace riordan {

namespace {

void require_same_size(const LowerTriangular &a, const LowerTriangular &b, const char *op)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": size mismatch (" + std::to_string(a.size()) + " vs "
                                    + std::to_string(b.size()) + ")");
    }
}

} // namespace

LowerTriangular::LowerTriangular(std::size_t order) : order_(order), entries_(index(order + 1, 0)) {}

LowerTriangular::LowerTriangular(std::size_t order, const EntryFn &entry) : LowerTriangular(order)
{
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            entries_[index(n, m)] = entry(n, m);
        }
    }
}

LowerTriangular LowerTriangular::identity(std::size_t order)
{
    return LowerTriangular(order, [](std::size_t n, std::size_t m) -> Rational { return Rational(n == m ? 1 : 0); });
}

LowerTriangular LowerTriangular::ones(std::size_t order)
{
    return LowerTriangular(order, [](std::size_t, std::size_t) -> Rational { return Rational(1); });
}

LowerTriangular LowerTriangular::from_columns(std::size_t order, const std::function<Series(std::size_t)> &column)
{
    LowerTriangular result(order);
    for (std::size_t m = 0; m <= order; ++m) {
        const Series col = column(m);
        if (col.order() != order) {
            throw std::invalid_argument("from_columns: column order mismatch");
        }
        for (std::size_t n = m; n <= order; ++n) {
            result.entries_[index(n, m)] = col[n];
        }
    }
    return result;
}

LowerTriangular LowerTriangular::from_rows(std::size_t order, const std::function<Series(std::size_t)> &row)
{
    LowerTriangular result(order);
    for (std::size_t n = 0; n <= order; ++n) {
        const Series r = row(n);
        for (std::size_t m = n + 1; m <= r.order(); ++m) {
            if (r[m] != 0) {
                throw std::invalid_argument("from_rows: row " + std::to_string(n) + " has degree above " + std::to_string(n));
            }
        }
        for (std::size_t m = 0; m <= n; ++m) {
            result.entries_[index(n, m)] = r.coeff(m);
        }
    }
    return result;
}

const Rational &LowerTriangular::at(std::size_t n, std::size_t m) const
{
    if (m > n || n > order_) {
        throw std::out_of_range("LowerTriangular::at(" + std::to_string(n) + ", " + std::to_string(m) + ")");
    }
    return entries_[index(n, m)];
}

Series LowerTriangular::row(std::size_t n) const
{
    std::vector<Rational> c(order_ + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        c[m] = entries_[index(n, m)];
    }
    return Series(order_, std::move(c));
}

Series LowerTriangular::column(std::size_t m) const
{
    std::vector<Rational> c(order_ + 1);
    for (std::size_t n = m; n <= order_; ++n) {
        c[n] = entries_[index(n, m)];
    }
    return Series(order_, std::move(c));
}

LowerTriangular LowerTriangular::leading(std::size_t order) const
{
    if (order > order_) {
        throw std::invalid_argument("leading: requested block larger than matrix");
    }
    LowerTriangular result(order);
    std::copy(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(result.entries_.size()),
              result.entries_.begin());
    return result;
}

DiagonalWeight::DiagonalWeight(Series c) : c_(std::move(c))
{
    for (std::size_t k = 0; k <= c_.order(); ++k) {
        if (c_[k] == 0) {
            throw std::domain_error("diagonal weight has zero coefficient at x^" + std::to_string(k));
        }
    }
}

LowerTriangular mat_mul(const LowerTriangular &a, const LowerTriangular &b)
{
    require_same_size(a, b, "mat_mul");
    LowerTriangular result(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational &lhs = a.entries_[LowerTriangular::index(n, k)];
            if (lhs == 0) {
                continue;
            }
            for (std::size_t m = 0; m <= k; ++m) {
                const Rational &rhs = b.entries_[LowerTriangular::index(k, m)];
                if (rhs != 0) {
                    result.entries_[LowerTriangular::index(n, m)] += lhs * rhs;
                }
            }
        }
    }
    return result;
}

LowerTriangular mat_inverse(const LowerTriangular &a)
{
    const std::size_t order = a.order();
    for (std::size_t n = 0; n <= order; ++n) {
        if (a.entries_[LowerTriangular::index(n, n)] == 0) {
            throw std::domain_error("mat_inverse: zero diagonal entry at " + std::to_string(n));
        }
    }
    LowerTriangular inv(order);
    // Column by column forward substitution of a * inv = I.
    for (std::size_t m = 0; m <= order; ++m) {
        inv.entries_[LowerTriangular::index(m, m)] = 1 / a.entries_[LowerTriangular::index(m, m)];
        for (std::size_t n = m + 1; n <= order; ++n) {
            Rational acc;
            for (std::size_t k = m; k < n; ++k) {
                const Rational &lhs = a.entries_[LowerTriangular::index(n, k)];
                if (lhs != 0) {
                    acc += lhs * inv.entries_[LowerTriangular::index(k, m)];
                }
            }
            inv.entries_[LowerTriangular::index(n, m)] = -acc / a.entries_[LowerTriangular::index(n, n)];
        }
    }
    return inv;
}

LowerTriangular hadamard(const LowerTriangular &a, const LowerTriangular &b)
{
    require_same_size(a, b, "hadamard");
    return LowerTriangular(a.order(), [&](std::size_t n, std::size_t m) -> Rational { return a(n, m) * b(n, m); });
}

Series apply(const LowerTriangular &a, const Series &g)
{
    if (a.order() != g.order()) {
        throw std::invalid_argument("apply: matrix size " + std::to_string(a.size()) + " does not match series order "
                                    + std::to_string(g.order()));
    }
    std::vector<Rational> c(a.size());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        Rational acc;
        for (std::size_t m = 0; m <= n; ++m) {
            if (g[m] != 0) {
                acc += a(n, m) * g[m];
            }
        }
        c[n] = std::move(acc);
    }
    return Series(a.order(), std::move(c));
}

Series solve_lower(const LowerTriangular &a, const Series &rhs)
{
    if (a.order() != rhs.order()) {
        throw std::invalid_argument("solve_lower: size mismatch");
    }
    std::vector<Rational> x(a.size());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        const Rational &diag = a.at(n, n);
        if (diag == 0) {
            throw std::domain_error("solve_lower: zero diagonal entry at " + std::to_string(n));
        }
        Rational acc = rhs[n];
        for (std::size_t m = 0; m < n; ++m) {
            const Rational &e = a.at(n, m);
            if (e != 0) {
                acc -= e * x[m];
            }
        }
        x[n] = acc / diag;
    }
    return Series(a.order(), std::move(x));
}

LowerTriangular conjugate_by_weight(const LowerTriangular &a, const DiagonalWeight &w)
{
    if (w.order() != a.order()) {
        throw std::invalid_argument("conjugate_by_weight: size mismatch");
    }
    const Series &c = w.series();
    return LowerTriangular(a.order(), [&](std::size_t n, std::size_t m) -> Rational { return a(n, m) * c[m] / c[n]; });
}

} // namespace riordan

namespace riordan {

LowerTriangular hadamard_toeplitz(const Series &s, const LowerTriangular &table)
{
    if (s.order() != table.order()) {
        throw std::invalid_argument("hadamard_toeplitz: size mismatch");
    }
    return LowerTriangular(table.order(), [&](std::size_t n, std::size_t m) -> Rational {
        const Rational &c = s[n - m];
        return c == 0 ? Rational(0) : Rational(c * table(n, m));
    });
}

} // namespace riordan

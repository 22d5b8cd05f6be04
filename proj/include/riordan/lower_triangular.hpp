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
#include <functional>
#include <vector>

#include <riordan/rational.hpp>
#include <riordan/series.hpp>

namespace riordan {

// Dense lower-triangular matrix of size (order + 1) x (order + 1). Only the
// entries with m <= n are stored (row-major packed); reading above the
// diagonal yields zero. A matrix of size N + 1 acts on series of order N.
class LowerTriangular
{
public:
    using EntryFn = std::function<Rational(std::size_t n, std::size_t m)>;

    // Zero matrix.
    explicit LowerTriangular(std::size_t order);
    LowerTriangular(std::size_t order, const EntryFn &entry);

    static LowerTriangular identity(std::size_t order);
    // All entries on and below the diagonal equal to one.
    static LowerTriangular ones(std::size_t order);
    // Column n has generating function b(x) a(x)^n (unweighted Riordan array).
    static LowerTriangular from_columns(std::size_t order, const std::function<Series(std::size_t)> &column);
    static LowerTriangular from_rows(std::size_t order, const std::function<Series(std::size_t)> &row);

    std::size_t order() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_ + 1; }

    Rational operator()(std::size_t n, std::size_t m) const
    {
        return m <= n ? entries_[index(n, m)] : Rational(0);
    }
    const Rational &at(std::size_t n, std::size_t m) const;

    // Row n as a polynomial in x, [n, ->].
    Series row(std::size_t n) const;
    // Column m as a generating function, [^, m].
    Series column(std::size_t m) const;

    // Leading (order + 1) x (order + 1) block.
    LowerTriangular leading(std::size_t order) const;

    friend bool operator==(const LowerTriangular &, const LowerTriangular &) = default;

private:
    static std::size_t index(std::size_t n, std::size_t m) noexcept { return n * (n + 1) / 2 + m; }

    std::size_t order_;
    std::vector<Rational> entries_;

    friend LowerTriangular mat_mul(const LowerTriangular &, const LowerTriangular &);
    friend LowerTriangular mat_inverse(const LowerTriangular &);
};

// Diagonal matrix |c(x)| with diagonal entries c_n, all nonzero.
class DiagonalWeight
{
public:
    explicit DiagonalWeight(Series c);
    const Series &series() const noexcept { return c_; }
    std::size_t order() const noexcept { return c_.order(); }

private:
    Series c_;
};

LowerTriangular mat_mul(const LowerTriangular &a, const LowerTriangular &b);
LowerTriangular mat_inverse(const LowerTriangular &a);
LowerTriangular hadamard(const LowerTriangular &a, const LowerTriangular &b);
// Matrix-vector product on coefficient vectors.
Series apply(const LowerTriangular &a, const Series &g);
// Solves a * result = rhs by forward substitution.
Series solve_lower(const LowerTriangular &a, const Series &rhs);
// |c|^{-1} A |c|: entry (n, m) becomes A(n, m) c_m / c_n.
LowerTriangular conjugate_by_weight(const LowerTriangular &a, const DiagonalWeight &w);

inline LowerTriangular operator*(const LowerTriangular &a, const LowerTriangular &b) { return mat_mul(a, b); }

} // namespace riordan

namespace riordan {

// (s(x), x) x table: entry (n, m) = s_{n-m} * table(n, m).
LowerTriangular hadamard_toeplitz(const Series &s, const LowerTriangular &table);

} // namespace riordan

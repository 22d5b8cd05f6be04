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

#include <doctest.h>

#include <stdexcept>

#include <riordan/circ.hpp>
#include <riordan/pascal.hpp>

#include "test_support.hpp"

using namespace riordan;
using testing::from_table;
using testing::poly;
using testing::q;

namespace {

// Gaussian binomial by the product formula prod_{i<k} (r^{n-i} - 1) / (r^{i+1} - 1).
Rational gaussian_binomial(const Rational &r, long n, long k)
{
    Rational result(1);
    for (long i = 0; i < k; ++i) {
        result *= (pow(r, n - i) - 1) / (pow(r, i + 1) - 1);
    }
    return result;
}

Series gaussian_b(const Rational &r, std::size_t order)
{
    std::vector<Rational> b(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        b[k] = (pow(r, static_cast<long>(k)) - 1) / (r - 1);
    }
    return Series(order, std::move(b));
}

Series ordinary_b(std::size_t order)
{
    std::vector<Rational> b(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        b[k] = static_cast<long>(k);
    }
    return Series(order, std::move(b));
}

// Moebius by trial factorisation over all divisors, independent of mobius().
int mobius_oracle(std::size_t n)
{
    int sum_check = 0;
    int value = 1;
    std::size_t rest = n;
    for (std::size_t p = 2; p <= rest; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 1) {
            return 0;
        }
        if (e == 1) {
            value = -value;
        }
    }
    (void)sum_check;
    return value;
}

} // namespace

TEST_CASE("pascal_from_c")
{
    const std::size_t N = 8;
    const LowerTriangular p = pascal_from_c(WeightSeries(Series::exponential(N)));
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            CHECK(p(n, m) == Rational(testing::pascal_binom(n, m)));
        }
    }
    CHECK(pascal_from_c(WeightSeries(Series::geometric(N))) == LowerTriangular::ones(N));

    const std::size_t M = 15;
    const Series c = poly(M, {1, 1}) * dilate(Series::exponential(M / 2).truncated(M), 2);
    const LowerTriangular pc = pascal_from_c(WeightSeries(c));
    for (std::size_t n = 0; 2 * n + 1 <= M; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    if (2 * m + j > 2 * n + i) {
                        continue;
                    }
                    const Rational expected = i >= j ? Rational(testing::pascal_binom(n, m))
                                                     : Rational(n * testing::pascal_binom(n - 1, m));
                    CHECK(pc(2 * n + i, 2 * m + j) == expected);
                }
            }
        }
    }
    CHECK_THROWS_AS(WeightSeries(poly(3, {2, 1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(WeightSeries(poly(3, {1, 1, 0, 1})), std::domain_error);
}

TEST_CASE("phi_q_pascal")
{
    CHECK(phi_q_pascal(5, 2, 8) == from_table(golden::phi2, 5));
    CHECK(phi_q_pascal(5, 3, 8) == from_table(golden::phi3, 5));
    CHECK(phi_q_pascal(q(-2, 7), 3, 8) == from_table(golden::phi3, q(-2, 7)));
    CHECK(phi_q_pascal(1, 4, 9) == LowerTriangular::ones(9));
    CHECK(phi_q_pascal(0, 2, 8) == from_table(golden::zero2));
    CHECK_THROWS_AS(phi_q_pascal(2, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(phi_q_weight(0, 2, 4), std::domain_error);
    for (long phi : {-3, -1, 2, 7}) {
        for (std::size_t qq = 2; qq <= 5; ++qq) {
            CHECK(phi_q_pascal(phi, qq, 14) == pascal_from_c(WeightSeries(phi_q_weight(phi, qq, 14))));
        }
    }
}

TEST_CASE("gen_binom")
{
    const Series b = ordinary_b(12);
    CHECK(gen_binom(b, 5, 2) == 10);
    CHECK(gen_binom(b, 2, 5) == 0);
    const Series g2 = gaussian_b(2, 8);
    CHECK(gen_binom(g2, 4, 2) == 35);
    CHECK(gen_binom(g2, 4, 2) == gaussian_binomial(2, 4, 2));
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(gen_binom(g2, n, 0) == 1);
        for (std::size_t m = 0; m <= n; ++m) {
            CHECK(gen_binom(g2, n, m) == gaussian_binomial(2, static_cast<long>(n), static_cast<long>(m)));
        }
    }
    CHECK_THROWS_AS(gen_binom(poly(4, {0, 1, 0, 1, 1}), 3, 1), std::domain_error);
}

TEST_CASE("gen_binom recurrence")
{
    const Series b = ordinary_b(12);
    const Series g3 = gaussian_b(3, 8);
    testing::Random rnd(21);
    const Series rb = first_column_b(pascal_from_c(WeightSeries(rnd.weight(10))));
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            CHECK(gen_binom_recurrence_check(b, n, m));
            if (n <= 8) {
                CHECK(gen_binom_recurrence_check(g3, n, m));
            }
            if (n <= 10) {
                CHECK(gen_binom_recurrence_check(rb, n, m));
            }
        }
    }
    CHECK(gen_binom_recurrence_check(g3, 5, 0));
}

TEST_CASE("first_column_b and weight_from_b")
{
    const std::size_t N = 10;
    CHECK(first_column_b(pascal_from_c(WeightSeries(Series::exponential(N)))) == ordinary_b(N));
    const LowerTriangular pq = phi_q_pascal(q(3, 2), 3, N);
    const Series bq = first_column_b(pq);
    for (std::size_t n = 1; n <= N; ++n) {
        CHECK(bq[n] == (n % 3 != 0 ? Rational(1) : q(3, 2)));
    }
    const Series ones = first_column_b(LowerTriangular::ones(N));
    CHECK(ones[0] == 0);
    for (std::size_t n = 1; n <= N; ++n) {
        CHECK(ones[n] == 1);
    }
    // The Pascal matrix of c_n = 1 / b_n! has first column b and entries (n m)_b.
    testing::Random rnd(22);
    std::vector<Rational> bv(N + 1);
    for (std::size_t k = 1; k <= N; ++k) {
        bv[k] = rnd.nonzero_rational();
    }
    bv[1] = 1;
    const Series b(N, bv);
    const LowerTriangular pb = pascal_from_c(WeightSeries(weight_from_b(b)));
    CHECK(first_column_b(pb) == b);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            CHECK(pb(n, m) == gen_binom(b, n, m));
        }
    }
}

TEST_CASE("mobius")
{
    for (std::size_t n = 1; n <= 200; ++n) {
        CHECK(mobius(n) == mobius_oracle(n));
    }
}

TEST_CASE("hadamard_decompose")
{
    const std::size_t N = 14;
    const auto single = hadamard_decompose(phi_q_pascal(q(5, 3), 4, N), 12);
    for (const auto &[qq, phi] : single) {
        CHECK(phi == (qq == 4 ? q(5, 3) : Rational(1)));
    }

    const auto p = hadamard_decompose(pascal_from_c(WeightSeries(Series::exponential(N))), 12);
    CHECK(p.at(2) == 2);
    CHECK(p.at(3) == 3);
    CHECK(p.at(4) == 2);
    CHECK(p.at(5) == 5);
    CHECK(p.at(6) == 1);
    CHECK(p.at(8) == 2);
    CHECK(p.at(12) == 1);

    // Generic b: each parameter is the listed quotient of b values.
    testing::Random rnd(23);
    const LowerTriangular generic = pascal_from_c(WeightSeries(rnd.weight(N)));
    const Series b = first_column_b(generic);
    const auto factors = hadamard_decompose(generic, 12);
    REQUIRE(factors.size() == golden::decomposition_list.size());
    for (const auto &entry : golden::decomposition_list) {
        Rational expected(1);
        for (std::size_t d : entry.num) {
            expected *= b[d];
        }
        for (std::size_t d : entry.den) {
            expected /= b[d];
        }
        CHECK(factors.at(entry.q) == expected);
    }
    CHECK(hadamard_reconstruct(hadamard_decompose(generic, N), N) == generic);

    CHECK_THROWS_AS(hadamard_decompose(generic, N + 1), std::invalid_argument);
    CHECK_THROWS_AS(hadamard_decompose(phi_q_pascal(0, 3, N), 6), std::domain_error);
}

TEST_CASE("q-umbral matrices")
{
    CHECK(q_umbral_pascal(-1, 6) == from_table(golden::g_minus1));
    CHECK(q_umbral_inverse_rows(-1, 6) == from_table(golden::g_minus1_inv));
    CHECK(q_umbral_pascal(1, 8) == pascal_from_c(WeightSeries(Series::exponential(8))));
    for (const Rational &r : {q(-2), q(-1), q(0), q(1, 2), q(1), q(2), q(3)}) {
        const LowerTriangular u = q_umbral_pascal(r, 12);
        CHECK(u * q_umbral_inverse_rows(r, 12) == LowerTriangular::identity(12));
        Rational sum(0);
        for (std::size_t n = 1; n <= 12; ++n) {
            sum += pow(r, static_cast<long>(n) - 1);
            CHECK(u(n, 1) == sum);
        }
    }
    // For q != 0 the q-umbral matrix is the generalized Pascal matrix of the Gaussian b.
    const LowerTriangular u2 = q_umbral_pascal(2, 8);
    const Series g2 = gaussian_b(2, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t m = 0; m <= n; ++m) {
            CHECK(u2(n, m) == gen_binom(g2, n, m));
        }
    }
}

TEST_CASE("generalized Pascal matrix properties (randomized)")
{
    const std::size_t N = 12;
    testing::Random rnd(24);
    for (int trial = 0; trial < 10; ++trial) {
        const Series c = rnd.weight(N);
        const Series g = rnd.weight(N);
        const LowerTriangular pc = pascal_from_c(WeightSeries(c));
        CHECK(check_pascal_identities(pc, 3).empty());
        CHECK(hadamard(pc, pascal_from_c(WeightSeries(g))) == pascal_from_c(WeightSeries(hadamard(c, g))));
        CHECK(pascal_from_c(WeightSeries(scale_argument(c, rnd.nonzero_rational()))) == pc);
    }
}

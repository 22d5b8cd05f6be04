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

#include <riordan/rational.hpp>
#include <riordan/series.hpp>

#include "test_support.hpp"

using namespace riordan;
using testing::poly;
using testing::q;

TEST_CASE("rationals render and parse canonically")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-3/6") == q(-1, 2));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("binomial helpers")
{
    CHECK(binom_series(1, 5) == 1);
    CHECK(binom_series(-1, 1) == -1);
    CHECK(binom_series(2, 2) == 3);
    CHECK(binom_series(q(1, 2), 2) == q(3, 8));
    CHECK(binom_series(3, -1) == 0);
    CHECK(binom_series(0, 0) == 1);
    CHECK(binom_series(0, 3) == 0);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(q(1, 2), 2) == q(-1, 8));
    CHECK(binom(-1, 3) == -1);
    CHECK(pow(q(2, 3), -2) == q(9, 4));
    CHECK(pow(Rational(0), 0) == 1);
    CHECK_THROWS(pow(Rational(0), -1));
}

TEST_CASE("add")
{
    const std::size_t N = 8;
    CHECK(poly(N, {1, 1}) + poly(N, {1, -1}) == poly(N, {2}));
    testing::Random rnd(1);
    const Series a = rnd.series(N);
    CHECK(a + Series::zero(N) == a);
    const Series e = Series::exponential(N);
    const Series sum = e + scale_argument(e, -1);
    for (std::size_t k = 0; k <= N; ++k) {
        CHECK(sum[k] == (k % 2 == 0 ? 2 * e[k] : Rational(0)));
    }
    CHECK_THROWS_AS(poly(3, {1}) + poly(4, {1}), std::invalid_argument);
}

TEST_CASE("mul")
{
    const std::size_t N = 8;
    CHECK(poly(N, {1, 1}) * poly(N, {1, 1}) == poly(N, {1, 2, 1}));
    CHECK(poly(N, {1, -1}) * Series::geometric(N) == Series::one(N));
    const Series c = poly(N, {1, 1}) * dilate(Series::exponential(N / 2).truncated(N), 2);
    const Rational expected[] = {1, 1, 1, 1, q(1, 2), q(1, 2)};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(c[k] == expected[k]);
    }
    CHECK_THROWS_AS(poly(3, {1}) * poly(4, {1}), std::invalid_argument);
}

TEST_CASE("invert")
{
    const std::size_t N = 12;
    CHECK(invert(poly(N, {1, -1})) == Series::geometric(N));
    CHECK(invert(Series::one(N)) == Series::one(N));
    const Series fib = invert(poly(N, {1, -1, -1}));
    Rational f0 = 1, f1 = 1;
    for (std::size_t k = 0; k <= N; ++k) {
        CHECK(fib[k] == f0);
        const Rational next = f0 + f1;
        f0 = f1;
        f1 = next;
    }
    CHECK_THROWS_AS(invert(poly(N, {0, 1})), std::domain_error);
    CHECK(pow(poly(N, {1, -1}), -2) == Series::geometric(N) * Series::geometric(N));
}

TEST_CASE("compose")
{
    const std::size_t N = 10;
    const Series geo = Series::geometric(N);
    // 1/(1 - x/(1-x)) = (1-x)/(1-2x) = 1 + x + 2x^2 + 4x^3 + ...
    const Series g = compose(geo, poly(N, {0, 1}) * geo);
    CHECK(g == poly(N, {1, -1}) * invert(poly(N, {1, -2})));
    CHECK(g[0] == 1);
    for (std::size_t k = 1; k <= N; ++k) {
        CHECK(g[k] == pow(Rational(2), static_cast<long>(k) - 1));
    }
    testing::Random rnd(2);
    const Series b = rnd.series(N);
    CHECK(compose(b, poly(N, {0, 1})) == b);
    CHECK(compose(Series::exponential(N), poly(N, {0, -1})) == scale_argument(Series::exponential(N), -1));
    CHECK_THROWS_AS(compose(b, poly(N, {1, 1})), std::domain_error);
}

TEST_CASE("reversion")
{
    const std::size_t N = 10;
    const Series a = poly(N, {0, 1, -1});
    const Series r = reversion(a);
    CHECK(compose(a, r) == poly(N, {0, 1}));
    CHECK(compose(r, a) == poly(N, {0, 1}));
    CHECK_THROWS_AS(reversion(poly(N, {0, 0, 1})), std::domain_error);
}

TEST_CASE("log and exp")
{
    const std::size_t N = 10;
    const Series l = log1(Series::geometric(N));
    CHECK(l[0] == 0);
    for (std::size_t k = 1; k <= N; ++k) {
        CHECK(l[k] == q(1, static_cast<long>(k)));
    }
    CHECK(exp0(poly(N, {0, 1})) == Series::exponential(N));
    const Series x2 = testing::mono(N, 2);
    CHECK(log1(exp0(x2)) == x2);
    CHECK_THROWS_AS(log1(poly(N, {2, 1})), std::domain_error);
    CHECK_THROWS_AS(exp0(poly(N, {1, 1})), std::domain_error);
}

TEST_CASE("theta")
{
    const std::size_t N = 8;
    const Series t = theta(Series::geometric(N));
    for (std::size_t k = 0; k <= N; ++k) {
        CHECK(t[k] == static_cast<long>(k));
    }
    CHECK(theta(Series::one(N)).is_zero());
    CHECK(theta(testing::mono(N, 3)) == testing::mono(N, 3, 3));
}

TEST_CASE("rendering")
{
    CHECK(to_string(Series(4, {Rational(1), Rational(2), Rational(0), q(-1, 2)})) == "1 + 2*x - 1/2*x^3");
    CHECK(to_string(Series::zero(3)) == "0");
    CHECK(to_string(poly(3, {0, -1})) == "-x");
}

TEST_CASE("accessors")
{
    const Series s = poly(5, {0, 0, 3});
    CHECK(s.order() == 5);
    CHECK(s.valuation() == 2);
    CHECK(Series::zero(5).valuation() == 6);
    CHECK(s.coeff(9) == 0);
    CHECK(s.truncated(1).is_zero());
    CHECK(s.truncated(7).order() == 7);
    CHECK(hadamard(Series::exponential(5), Series::exponential(5))[2] == q(1, 4));
}

TEST_CASE("ring axioms, composition and Leibniz rule (randomized)")
{
    const std::size_t N = 9;
    testing::Random rnd(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Series a = rnd.series(N), b = rnd.series(N), c = rnd.series(N);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Series::zero(N));
        CHECK(theta(a * b) == theta(a) * b + a * theta(b));

        const Series u = rnd.series_with(N, rnd.nonzero_rational());
        CHECK(u * invert(u) == Series::one(N));
        CHECK(invert(u) * u == Series::one(N));

        const Series s = rnd.series_with(N, 0), t = rnd.series_with(N, 0);
        const Series b0 = b - Series::constant(N, b[0]);
        CHECK(compose(compose(c, b0), s) == compose(c, compose(b0, s)));
        CHECK(compose(compose(c, s), t) == compose(c, compose(s, t)));

        const Series one_plus = rnd.series_with(N, 1);
        CHECK(exp0(log1(one_plus)) == one_plus);
        CHECK(log1(exp0(s)) == s);
    }
}

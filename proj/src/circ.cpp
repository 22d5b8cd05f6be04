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

#include <riordan/circ.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace riordan {

namespace {

void require_order(const CircAlgebra &alg, const Series &a, const char *op)
{
    if (a.order() != alg.order()) {
        throw std::invalid_argument(std::string(op) + ": series order " + std::to_string(a.order())
                                    + " does not match algebra order " + std::to_string(alg.order()));
    }
}

Series shifted_by_one(const Series &a)
{
    return sub(a, Series::one(a.order()));
}

} // namespace

std::string check_pascal_identities(const LowerTriangular &t, std::size_t max_shift)
{
    const std::size_t order = t.order();
    for (std::size_t n = 0; n <= order; ++n) {
        if (t(n, 0) != 1) {
            return "(" + std::to_string(n) + ", 0) != 1";
        }
        for (std::size_t m = 0; m <= n; ++m) {
            if (t(n, m) != t(n, n - m)) {
                return "(" + std::to_string(n) + ", " + std::to_string(m) + ") is not symmetric";
            }
        }
    }
    for (std::size_t q = 0; q <= max_shift; ++q) {
        for (std::size_t p = 0; p < q; ++p) {
            for (std::size_t n = 0; n + q <= order; ++n) {
                for (std::size_t m = 0; m <= n; ++m) {
                    const Rational lhs = t(n + q, q) * t(n + p, m + p) * t(m + p, p);
                    const Rational rhs = t(n + p, p) * t(n + q, m + q) * t(m + q, q);
                    if (lhs != rhs) {
                        return "product identity fails at n=" + std::to_string(n) + " m=" + std::to_string(m)
                               + " p=" + std::to_string(p) + " q=" + std::to_string(q);
                    }
                }
            }
        }
    }
    return {};
}

CircAlgebra::CircAlgebra(LowerTriangular table) : table_(std::move(table))
{
    if (auto failure = check_pascal_identities(table_); !failure.empty()) {
        throw std::invalid_argument("table does not define a commutative associative algebra: " + failure);
    }
}

CircAlgebra CircAlgebra::of_family(Family f, std::size_t q, std::size_t order)
{
    return CircAlgebra(ZeroPascalSpec::of_family(f, q, order).matrix());
}

CircAlgebra CircAlgebra::pascal(std::size_t order)
{
    return CircAlgebra(LowerTriangular(order, [](std::size_t n, std::size_t m) -> Rational {
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), n, m);
        return Rational(r);
    }));
}

CircAlgebra CircAlgebra::t_matrix(std::size_t q, std::size_t order)
{
    return CircAlgebra(ZeroPascalSpec::t_matrix(q, order).matrix());
}

Series circ_mul(const CircAlgebra &alg, const Series &a, const Series &b)
{
    require_order(alg, a, "circ_mul");
    require_order(alg, b, "circ_mul");
    const LowerTriangular &t = alg.table();
    const std::size_t order = alg.order();
    std::vector<Rational> g(order + 1);
    for (std::size_t i = a.valuation(); i <= order; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = b.valuation(); i + j <= order; ++j) {
            if (b[j] == 0) {
                continue;
            }
            const Rational &w = t.at(i + j, j);
            if (w != 0) {
                g[i + j] += w * a[i] * b[j];
            }
        }
    }
    return Series(order, std::move(g));
}

LowerTriangular circ_mul_matrix(const CircAlgebra &alg, const Series &a)
{
    require_order(alg, a, "circ_mul_matrix");
    return hadamard_toeplitz(a, alg.table());
}

Series circ_pow_int(const CircAlgebra &alg, const Series &a, std::size_t n)
{
    require_order(alg, a, "circ_pow_int");
    Series result = Series::one(alg.order());
    for (std::size_t k = 0; k < n; ++k) {
        result = circ_mul(alg, a, result);
    }
    return result;
}

Series circ_inverse(const CircAlgebra &alg, const Series &a)
{
    require_order(alg, a, "circ_inverse");
    if (a[0] == 0) {
        throw std::domain_error("circ_inverse: zero constant term");
    }
    const LowerTriangular &t = alg.table();
    const std::size_t order = alg.order();
    std::vector<Rational> b(order + 1);
    const Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t m = 1; m <= n; ++m) {
            if (a[m] != 0 && b[n - m] != 0) {
                acc += t.at(n, m) * a[m] * b[n - m];
            }
        }
        b[n] = -acc * inv0;
    }
    return Series(order, std::move(b));
}

Series circ_log(const CircAlgebra &alg, const Series &a)
{
    require_order(alg, a, "circ_log");
    if (a[0] != 1) {
        throw std::domain_error("circ_log: constant term must be 1");
    }
    const Series d = shifted_by_one(a);
    Series result = Series::zero(alg.order());
    Series term = d;
    for (std::size_t n = 1; n <= alg.order() && !term.is_zero(); ++n) {
        const Rational coeff = make_rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
        result = add(result, scale(term, coeff));
        term = circ_mul(alg, term, d);
    }
    return result;
}

Series circ_exp(const CircAlgebra &alg, const Series &l)
{
    require_order(alg, l, "circ_exp");
    if (l[0] != 0) {
        throw std::domain_error("circ_exp: constant term must be 0");
    }
    Series result = Series::one(alg.order());
    Series term = Series::one(alg.order());
    for (std::size_t n = 1; n <= alg.order(); ++n) {
        term = scale(circ_mul(alg, term, l), make_rational(1, static_cast<long>(n)));
        if (term.is_zero()) {
            break;
        }
        result = add(result, term);
    }
    return result;
}

Series circ_pow_phi_binomial(const CircAlgebra &alg, const Series &a, const Rational &phi)
{
    require_order(alg, a, "circ_pow_phi");
    if (a[0] != 1) {
        throw std::domain_error("circ_pow_phi: constant term must be 1");
    }
    const Series d = shifted_by_one(a);
    Series result = Series::one(alg.order());
    Series term = Series::one(alg.order());
    for (std::size_t n = 1; n <= alg.order(); ++n) {
        term = circ_mul(alg, term, d);
        if (term.is_zero()) {
            break;
        }
        result = add(result, scale(term, binom(phi, static_cast<long>(n))));
    }
    return result;
}

Series circ_pow_phi(const CircAlgebra &alg, const Series &a, const Rational &phi)
{
    require_order(alg, a, "circ_pow_phi");
    if (a[0] != 1) {
        throw std::domain_error("circ_pow_phi: constant term must be 1");
    }
    if (is_integer(phi) && phi >= 0) {
        return circ_pow_int(alg, a, phi.get_num().get_ui());
    }
    Series result = circ_exp(alg, scale(circ_log(alg, a), phi));
    if (result != circ_pow_phi_binomial(alg, a, phi)) {
        throw std::logic_error("circ_pow_phi: exponential and binomial expansions disagree");
    }
    return result;
}

bool is_l_series(const CircAlgebra &alg, const Series &a)
{
    require_order(alg, a, "is_l_series");
    if (a[0] != 1) {
        return false;
    }
    const Series d = shifted_by_one(a);
    return circ_mul(alg, d, d).is_zero();
}

Series l_series_form(std::size_t q, const std::vector<Series> &parts, std::size_t order)
{
    if (q < 2) {
        throw std::invalid_argument("l_series_form: q must be at least 2");
    }
    const std::size_t half = q / 2;
    if (parts.size() != half) {
        throw std::invalid_argument("l_series_form: expected " + std::to_string(half) + " parts");
    }
    Series result = Series::one(order);
    for (std::size_t m = 1; m <= half; ++m) {
        const Series &part = parts[half - m];
        if (part.order() != order) {
            throw std::invalid_argument("l_series_form: part order mismatch");
        }
        result = add(result, mul(Series::monomial(order, q - m), dilate(part, q)));
    }
    return result;
}

} // namespace riordan

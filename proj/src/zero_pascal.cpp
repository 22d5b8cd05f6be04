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

#include <riordan/zero_pascal.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace riordan {

namespace {

void require_base(std::size_t q)
{
    if (q < 2) {
        throw std::invalid_argument("zero Pascal modulus q must be at least 2, got " + std::to_string(q));
    }
}

std::size_t ipow(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    while (e-- > 0) {
        r *= base;
    }
    return r;
}

Integer small_binom(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

DigitExpansion::DigitExpansion(std::size_t base, std::size_t value) : base_(base)
{
    require_base(base);
    while (value != 0) {
        digits_.push_back(value % base);
        value /= base;
    }
}

std::size_t DigitExpansion::value() const
{
    std::size_t v = 0;
    for (std::size_t i = digits_.size(); i-- > 0;) {
        v = v * base_ + digits_[i];
    }
    return v;
}

Family parse_family(std::string_view name)
{
    if (name == "basic") {
        return Family::basic;
    }
    if (name == "exponential") {
        return Family::exponential;
    }
    if (name == "fractal") {
        return Family::fractal;
    }
    throw std::invalid_argument("unknown zero Pascal family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
    switch (f) {
        case Family::basic:
            return "basic";
        case Family::exponential:
            return "exponential";
        case Family::fractal:
            return "fractal";
    }
    return "?";
}

int basic_entry(std::size_t q, std::size_t n, std::size_t m)
{
    require_base(q);
    return n % q >= m % q ? 1 : 0;
}

int fractal_entry(std::size_t q, std::size_t n, std::size_t m)
{
    require_base(q);
    if (m > n) {
        return 0;
    }
    for (; m != 0; n /= q, m /= q) {
        if (n % q < m % q) {
            return 0;
        }
    }
    return 1;
}

bool digit_product_theorem_check(std::size_t q, std::size_t k, std::size_t n, std::size_t m, std::size_t i,
                                 std::size_t j)
{
    const std::size_t block = ipow(q, k);
    if (i >= block || j >= block) {
        throw std::invalid_argument("digit_product_theorem_check: i, j must be below q^k");
    }
    const int lhs = fractal_entry(q, block * n + i, block * m + j);
    const int rhs = fractal_entry(q, n, m) * fractal_entry(q, i, j);
    return lhs == rhs;
}

Integer t_entry(std::size_t q, std::size_t n, std::size_t m)
{
    require_base(q);
    Integer r(1);
    for (; n != 0 || m != 0; n /= q, m /= q) {
        const std::size_t ni = n % q;
        const std::size_t mi = m % q;
        if (mi > ni) {
            return 0;
        }
        r *= small_binom(ni, mi);
    }
    return r;
}

Series t_row_poly(std::size_t q, std::size_t n, std::size_t order)
{
    require_base(q);
    Series result = Series::one(order);
    std::size_t place = 1;
    for (std::size_t rest = n; rest != 0; rest /= q, place *= q) {
        const Series factor = add(Series::one(order), Series::monomial(order, place));
        result = mul(result, pow(factor, static_cast<long>(rest % q)));
    }
    return result;
}

Series exponential_weight(std::size_t q, std::size_t order)
{
    require_base(q);
    std::vector<Rational> c(order + 1);
    Rational inv_fact(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k % q == 0 && k != 0) {
            inv_fact /= static_cast<unsigned long>(k / q);
        }
        c[k] = inv_fact;
    }
    return Series(order, std::move(c));
}

Series t_weight(std::size_t q, std::size_t order)
{
    require_base(q);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Integer denom(1);
        for (std::size_t rest = k; rest != 0; rest /= q) {
            Integer f;
            mpz_fac_ui(f.get_mpz_t(), rest % q);
            denom *= f;
        }
        c[k] = Rational(Integer(1), denom);
    }
    return Series(order, std::move(c));
}

ZeroPascalSpec::ZeroPascalSpec(std::vector<ZeroPascalFactor> factors, std::size_t order)
    : factors_(std::move(factors)), order_(order)
{
    bool has_zero_factor = false;
    for (const auto &f : factors_) {
        if (const auto *b = std::get_if<BasicFactor>(&f)) {
            require_base(b->q);
            has_zero_factor = true;
        } else if (const auto *fr = std::get_if<FractalFactor>(&f)) {
            require_base(fr->q);
            has_zero_factor = true;
        } else if (std::get<WeightFactor>(f).c.order() < order_) {
            throw std::invalid_argument("ZeroPascalSpec: weight series shorter than matrix order");
        }
    }
    if (!has_zero_factor) {
        throw std::invalid_argument("ZeroPascalSpec needs at least one basic or fractal factor");
    }
}

ZeroPascalSpec ZeroPascalSpec::basic(std::size_t q, std::size_t order)
{
    return ZeroPascalSpec({BasicFactor{q}}, order);
}

ZeroPascalSpec ZeroPascalSpec::exponential(std::size_t q, std::size_t order)
{
    return ZeroPascalSpec({BasicFactor{q}, WeightFactor{WeightSeries(exponential_weight(q, order))}}, order);
}

ZeroPascalSpec ZeroPascalSpec::fractal(std::size_t q, std::size_t order)
{
    return ZeroPascalSpec({FractalFactor{q}}, order);
}

ZeroPascalSpec ZeroPascalSpec::of_family(Family f, std::size_t q, std::size_t order)
{
    switch (f) {
        case Family::basic:
            return basic(q, order);
        case Family::exponential:
            return exponential(q, order);
        case Family::fractal:
            return fractal(q, order);
    }
    throw std::logic_error("unreachable family");
}

ZeroPascalSpec ZeroPascalSpec::t_matrix(std::size_t q, std::size_t order)
{
    return ZeroPascalSpec({FractalFactor{q}, WeightFactor{WeightSeries(t_weight(q, order))}}, order);
}

Rational ZeroPascalSpec::entry(std::size_t n, std::size_t m) const
{
    if (m > n || n > order_) {
        throw std::out_of_range("ZeroPascalSpec::entry(" + std::to_string(n) + ", " + std::to_string(m) + ")");
    }
    Rational r(1);
    for (const auto &f : factors_) {
        if (const auto *b = std::get_if<BasicFactor>(&f)) {
            if (basic_entry(b->q, n, m) == 0) {
                return 0;
            }
        } else if (const auto *fr = std::get_if<FractalFactor>(&f)) {
            if (fractal_entry(fr->q, n, m) == 0) {
                return 0;
            }
        } else {
            const Series &c = std::get<WeightFactor>(f).c.series();
            r *= c[m] * c[n - m] / c[n];
        }
    }
    return r;
}

LowerTriangular ZeroPascalSpec::matrix() const
{
    return LowerTriangular(order_, [this](std::size_t n, std::size_t m) { return entry(n, m); });
}

Series w_poly(std::size_t n, const Rational &phi, std::size_t order)
{
    if (n > order) {
        throw std::invalid_argument("w_poly: degree exceeds order");
    }
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        c[n - m] = binom_series(phi, static_cast<long>(m));
    }
    return Series(order, std::move(c));
}

LowerTriangular power_basic(std::size_t q, const Rational &phi, std::size_t order)
{
    require_base(q);
    return LowerTriangular(order, [&](std::size_t n, std::size_t m) -> Rational {
        const long outer = static_cast<long>(n / q) - static_cast<long>(m / q);
        const long inner = static_cast<long>(n % q) - static_cast<long>(m % q);
        return binom_series(phi, outer) * binom_series(phi, inner);
    });
}

LowerTriangular power_exponential(std::size_t q, const Rational &phi, std::size_t order)
{
    require_base(q);
    return LowerTriangular(order, [&](std::size_t n, std::size_t m) -> Rational {
        const std::size_t outer_n = n / q;
        const std::size_t outer_m = m / q;
        const long inner = static_cast<long>(n % q) - static_cast<long>(m % q);
        const Rational in = binom_series(phi, inner);
        if (in == 0) {
            return Rational(0);
        }
        return pow(phi, static_cast<long>(outer_n - outer_m)) * in * Rational(small_binom(outer_n, outer_m));
    });
}

LowerTriangular power_fractal(std::size_t q, const Rational &phi, std::size_t order)
{
    require_base(q);
    return LowerTriangular(order, [&](std::size_t n, std::size_t m) -> Rational {
        Rational r(1);
        for (; n != 0 || m != 0; n /= q, m /= q) {
            r *= binom_series(phi, static_cast<long>(n % q) - static_cast<long>(m % q));
            if (r == 0) {
                break;
            }
        }
        return r;
    });
}

LowerTriangular power(Family f, std::size_t q, const Rational &phi, std::size_t order)
{
    switch (f) {
        case Family::basic:
            return power_basic(q, phi, order);
        case Family::exponential:
            return power_exponential(q, phi, order);
        case Family::fractal:
            return power_fractal(q, phi, order);
    }
    throw std::logic_error("unreachable family");
}

Series power_row(Family f, std::size_t q, const Rational &phi, std::size_t n, std::size_t order)
{
    require_base(q);
    if (n > order) {
        throw std::invalid_argument("power_row: row index exceeds order");
    }
    switch (f) {
        case Family::basic:
            return mul(w_poly(n % q, phi, order), dilate(w_poly(n / q, phi, order), q));
        case Family::exponential: {
            const Series xq_plus_phi = add(Series::monomial(order, q), Series::constant(order, phi));
            return mul(w_poly(n % q, phi, order), pow(xq_plus_phi, static_cast<long>(n / q)));
        }
        case Family::fractal: {
            Series u = Series::one(order);
            std::size_t place = 1;
            for (std::size_t rest = n; rest != 0; rest /= q, place *= q) {
                u = mul(u, dilate(w_poly(rest % q, phi, order), place));
            }
            return u;
        }
    }
    throw std::logic_error("unreachable family");
}

LowerTriangular power_from_rows(Family f, std::size_t q, const Rational &phi, std::size_t order)
{
    return LowerTriangular::from_rows(order, [&](std::size_t n) { return power_row(f, q, phi, n, order); });
}

LowerTriangular block_matrix(const Series &a, const Series &b, std::size_t q, std::size_t k, Family f)
{
    require_base(q);
    if (a.order() != b.order()) {
        throw std::invalid_argument("block_matrix: order mismatch");
    }
    if (k == 0 || (f != Family::fractal && k != 1)) {
        throw std::invalid_argument("block_matrix: k must be 1 for basic/exponential and >= 1 for fractal");
    }
    const std::size_t block = ipow(q, k);
    return LowerTriangular(a.order(), [&](std::size_t row, std::size_t col) -> Rational {
        const std::size_t n = row / block;
        const std::size_t m = col / block;
        const std::size_t i = row % block;
        const std::size_t j = col % block;
        if (i < j) {
            return Rational(0);
        }
        Rational e = a[n - m] * b[i - j];
        if (e == 0) {
            return e;
        }
        switch (f) {
            case Family::basic:
                break;
            case Family::exponential:
                e *= Rational(small_binom(n, m));
                break;
            case Family::fractal:
                e *= fractal_entry(q, n, m) * fractal_entry(q, i, j);
                break;
        }
        return e;
    });
}

LowerTriangular block_matrix_series_form(const Series &a, const Series &b, std::size_t q, std::size_t k, Family f)
{
    require_base(q);
    if (k == 0 || (f != Family::fractal && k != 1)) {
        throw std::invalid_argument("block_matrix: k must be 1 for basic/exponential and >= 1 for fractal");
    }
    const std::size_t order = a.order();
    const std::size_t block = ipow(q, k);
    std::vector<Rational> head(order + 1);
    for (std::size_t i = 0; i < block && i <= order; ++i) {
        head[i] = b[i];
    }
    const Series s = mul(Series(order, std::move(head)), dilate(a, block));
    return hadamard_toeplitz(s, ZeroPascalSpec::of_family(f, q, order).matrix());
}

Series log_one_minus_inv_closed(Family f, std::size_t q, std::size_t order)
{
    require_base(q);
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 1; m < q && m <= order; ++m) {
        c[m] = make_rational(1, static_cast<long>(m));
    }
    switch (f) {
        case Family::basic:
            // + log (1 - x^q)^{-1}
            for (std::size_t m = 1; q * m <= order; ++m) {
                c[q * m] += make_rational(1, static_cast<long>(m));
            }
            break;
        case Family::exponential:
            // + log(exp x^q)
            if (q <= order) {
                c[q] += 1;
            }
            break;
        case Family::fractal:
            // Digitwise: sum over i of sum_{0<m<q} x^{m q^i} / m.
            for (std::size_t p = q; p <= order; p *= q) {
                for (std::size_t m = 1; m < q && m * p <= order; ++m) {
                    c[m * p] += make_rational(1, static_cast<long>(m));
                }
            }
            break;
    }
    return Series(order, std::move(c));
}

Series inverse_applied_closed(Family f, std::size_t q, std::size_t order)
{
    require_base(q);
    std::vector<Rational> c(order + 1);
    for (std::size_t m = 1; m < q && m <= order; ++m) {
        c[m] = 1;
    }
    const auto qq = static_cast<unsigned long>(q);
    switch (f) {
        case Family::basic:
            for (std::size_t m = 1; q * m <= order; ++m) {
                c[q * m] += qq;
            }
            break;
        case Family::exponential:
            if (q <= order) {
                c[q] += qq;
            }
            break;
        case Family::fractal:
            // Digitwise: sum over i of sum_{0<m<q} q^i x^{m q^i}.
            for (std::size_t p = q; p <= order; p *= q) {
                for (std::size_t m = 1; m < q && m * p <= order; ++m) {
                    c[m * p] += static_cast<unsigned long>(p);
                }
            }
            break;
    }
    return Series(order, std::move(c));
}

} // namespace riordan

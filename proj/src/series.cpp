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

#include <riordan/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace riordan {

namespace {

void require_same_order(const Series &a, const Series &b, const char *op)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs "
                                    + std::to_string(b.order()) + ")");
    }
}

} // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

Series::Series(std::size_t order, std::initializer_list<long> coeffs) : coeffs_(order + 1)
{
    std::size_t k = 0;
    for (long c : coeffs) {
        if (k > order) {
            break;
        }
        coeffs_[k++] = c;
    }
}

Series Series::one(std::size_t order)
{
    return constant(order, 1);
}

Series Series::constant(std::size_t order, const Rational &value)
{
    Series s(order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::monomial(std::size_t order, std::size_t degree, const Rational &coeff)
{
    Series s(order);
    if (degree <= order) {
        s.coeffs_[degree] = coeff;
    }
    return s;
}

Series Series::geometric(std::size_t order)
{
    return Series(order, std::vector<Rational>(order + 1, Rational(1)));
}

Series Series::exponential(std::size_t order)
{
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = c[k - 1] / static_cast<unsigned long>(k);
    }
    return Series(order, std::move(c));
}

std::size_t Series::valuation() const
{
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) {
        ++k;
    }
    return k;
}

bool Series::is_zero() const
{
    return valuation() == coeffs_.size();
}

Series Series::truncated(std::size_t order) const
{
    return Series(order, std::vector<Rational>(coeffs_.begin(),
                                               coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order + 1, coeffs_.size()))));
}

Series add(const Series &a, const Series &b)
{
    require_same_order(a, b, "add");
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] + b[k];
    }
    return Series(a.order(), std::move(c));
}

Series sub(const Series &a, const Series &b)
{
    require_same_order(a, b, "sub");
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] - b[k];
    }
    return Series(a.order(), std::move(c));
}

Series neg(const Series &a)
{
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = -a[k];
    }
    return Series(a.order(), std::move(c));
}

Series scale(const Series &a, const Rational &r)
{
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] * r;
    }
    return Series(a.order(), std::move(c));
}

Series mul(const Series &a, const Series &b)
{
    require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    std::vector<Rational> c(n + 1);
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    for (std::size_t i = va; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = vb; i + j <= n; ++j) {
            if (b[j] != 0) {
                c[i + j] += a[i] * b[j];
            }
        }
    }
    return Series(n, std::move(c));
}

Series invert(const Series &a)
{
    if (a[0] == 0) {
        throw std::domain_error("invert: zero constant term");
    }
    const std::size_t n = a.order();
    std::vector<Rational> c(n + 1);
    const Rational inv0 = 1 / a[0];
    c[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) {
                acc += a[j] * c[k - j];
            }
        }
        c[k] = -acc * inv0;
    }
    return Series(n, std::move(c));
}

Series pow(const Series &a, long n)
{
    if (n < 0) {
        return pow(invert(a), -n);
    }
    Series result = Series::one(a.order());
    Series base = a;
    auto e = static_cast<unsigned long>(n);
    while (e != 0) {
        if (e & 1u) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e != 0) {
            base = mul(base, base);
        }
    }
    return result;
}

Series compose(const Series &b, const Series &a)
{
    require_same_order(a, b, "compose");
    if (a[0] != 0) {
        throw std::domain_error("compose: inner series must have zero constant term");
    }
    const std::size_t n = b.order();
    // Horner; every multiplication by a raises the valuation by at least one.
    Series result = Series::constant(n, b[n]);
    for (std::size_t k = n; k-- > 0;) {
        result = mul(result, a);
        result = add(result, Series::constant(n, b[k]));
    }
    return result;
}

Series reversion(const Series &a)
{
    if (a[0] != 0 || a.order() == 0 || a[1] == 0) {
        throw std::domain_error("reversion: need a[0] == 0 and a[1] != 0");
    }
    const std::size_t n = a.order();
    const Rational inv1 = 1 / a[1];
    // g <- g - (a(g) - x) / a1 gains at least one correct coefficient per step.
    Series g = Series::monomial(n, 1, inv1);
    const Series x = Series::monomial(n, 1);
    for (std::size_t step = 1; step < n; ++step) {
        g = sub(g, scale(sub(compose(a, g), x), inv1));
    }
    return g;
}

Series log1(const Series &a)
{
    if (a[0] != 1) {
        throw std::domain_error("log1: constant term must be 1");
    }
    const Series d = mul(theta(a), invert(a));
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        c[k] = d[k] / static_cast<unsigned long>(k);
    }
    return Series(a.order(), std::move(c));
}

Series exp0(const Series &a)
{
    if (a[0] != 0) {
        throw std::domain_error("exp0: constant term must be 0");
    }
    const std::size_t n = a.order();
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) {
                acc += static_cast<unsigned long>(j) * a[j] * e[k - j];
            }
        }
        e[k] = acc / static_cast<unsigned long>(k);
    }
    return Series(n, std::move(e));
}

Series theta(const Series &a)
{
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        c[k] = a[k] * static_cast<unsigned long>(k);
    }
    return Series(a.order(), std::move(c));
}

Series hadamard(const Series &a, const Series &b)
{
    require_same_order(a, b, "hadamard");
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] * b[k];
    }
    return Series(a.order(), std::move(c));
}

Series dilate(const Series &a, std::size_t q)
{
    if (q == 0) {
        throw std::invalid_argument("dilate: q must be positive");
    }
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k * q <= a.order(); ++k) {
        c[k * q] = a[k];
    }
    return Series(a.order(), std::move(c));
}

Series scale_argument(const Series &a, const Rational &r)
{
    std::vector<Rational> c(a.order() + 1);
    Rational p(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a[k] * p;
        p *= r;
    }
    return Series(a.order(), std::move(c));
}

std::string to_string(const Series &a)
{
    std::string out;
    for (std::size_t k = 0; k <= a.order(); ++k) {
        const Rational &c = a[k];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) {
            out += to_string(mag) + "*";
        }
        out += "x";
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace riordan

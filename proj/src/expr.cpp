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

#include <riordan/expr.hpp>

#include <cctype>
#include <string>

namespace riordan {

namespace {

class Parser
{
public:
    Parser(std::string_view text, std::size_t order) : text_(text), order_(order) {}

    Series parse()
    {
        Series s = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return s;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error("series literal \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": "
                          + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool starts_primary()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            return false;
        }
        const char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    Series expr()
    {
        Series s = term();
        for (;;) {
            if (accept('+')) {
                s = add(s, term());
            } else if (accept('-')) {
                s = sub(s, term());
            } else {
                return s;
            }
        }
    }

    Series term()
    {
        Series s = unary();
        for (;;) {
            if (accept('*')) {
                s = mul(s, unary());
            } else if (accept('/')) {
                const Series d = unary();
                if (d[0] == 0) {
                    fail("division by a series with zero constant term");
                }
                s = mul(s, invert(d));
            } else if (starts_primary()) {
                s = mul(s, power());
            } else {
                return s;
            }
        }
    }

    Series unary()
    {
        if (accept('-')) {
            return neg(unary());
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    long exponent()
    {
        char close = 0;
        if (accept('(')) {
            close = ')';
        } else if (accept('{')) {
            close = '}';
        }
        const bool negative = accept('-');
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer exponent");
        }
        const long value = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (close != 0) {
            expect(close);
        }
        return negative ? -value : value;
    }

    Series power()
    {
        Series base = primary();
        if (accept('^')) {
            const long e = exponent();
            if (e < 0 && base[0] == 0) {
                fail("negative power of a series with zero constant term");
            }
            return pow(base, e);
        }
        return base;
    }

    Series primary()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Series s = expr();
            expect(')');
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return Series::constant(order_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            return named(name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Series named(const std::string &name)
    {
        if (name == "x") {
            return Series::monomial(order_, 1);
        }
        if (name == "geom") {
            return Series::geometric(order_);
        }
        if (name == "exp" || name == "log") {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '(') {
                ++pos_;
                const Series arg = expr();
                expect(')');
                if (name == "exp") {
                    if (arg[0] != 0) {
                        fail("exp argument must have zero constant term");
                    }
                    return exp0(arg);
                }
                if (arg[0] != 1) {
                    fail("log argument must have constant term 1");
                }
                return log1(arg);
            }
            if (name == "exp") {
                return Series::exponential(order_);
            }
        }
        fail("unknown name '" + name + "'");
    }

    std::string_view text_;
    std::size_t order_;
    std::size_t pos_ = 0;
};

} // namespace

Series parse_series(std::string_view text, std::size_t order)
{
    return Parser(text, order).parse();
}

} // namespace riordan

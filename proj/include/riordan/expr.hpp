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
#include <stdexcept>
#include <string>
#include <string_view>

#include <riordan/series.hpp>

namespace riordan {

class parse_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Parses a series literal truncated at the given order. Grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= ['-'] integer | '(' ['-'] integer ')' | '{' ['-'] integer '}'
//   primary := integer | 'x' | 'exp' | 'geom' | name '(' expr ')' | '(' expr ')'
//
// Juxtaposition such as "2x" multiplies. Division and negative exponents
// invert the right operand, so "1/(1-x)" and "(1-x)^-1" are the geometric
// series and "3/5" is a rational constant. exp(f) needs f(0) = 0, log(f)
// needs f(0) = 1; bare "exp" is e^x and "geom" is 1/(1-x).
Series parse_series(std::string_view text, std::size_t order);

} // namespace riordan

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

#include <map>
#include <string>
#include <string_view>

#include <riordan/lower_triangular.hpp>
#include <riordan/series.hpp>

namespace riordan {

enum class OutputFormat { plain, csv, json, latex };

OutputFormat parse_format(std::string_view name);

// plain: right-aligned columns; csv: one row per line, the full square
// including the zeros above the diagonal; json: {"size": n, "rows": [...]}
// holding the lower triangle as "p/q" strings; latex: a pmatrix environment.
std::string render_matrix(const LowerTriangular &m, OutputFormat format);
std::string render_series(const Series &s, OutputFormat format);
std::string render_factors(const std::map<std::size_t, Rational> &factors, OutputFormat format);

LowerTriangular parse_matrix_csv(std::string_view text);
LowerTriangular parse_matrix_json(std::string_view text);

} // namespace riordan

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

#include <riordan/format.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace riordan {

OutputFormat parse_format(std::string_view name)
{
    if (name == "plain") {
        return OutputFormat::plain;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "latex") {
        return OutputFormat::latex;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

namespace {

std::string latex_rational(const Rational &r)
{
    if (is_integer(r)) {
        return r.get_num().get_str();
    }
    const bool negative = r < 0;
    return std::string(negative ? "-" : "") + "\\frac{" + Integer(abs(r.get_num())).get_str() + "}{"
           + r.get_den().get_str() + "}";
}

} // namespace

std::string render_matrix(const LowerTriangular &m, OutputFormat format)
{
    const std::size_t size = m.size();
    std::ostringstream out;
    switch (format) {
        case OutputFormat::plain: {
            std::vector<std::string> cells(size * size);
            std::size_t width = 1;
            for (std::size_t n = 0; n < size; ++n) {
                for (std::size_t k = 0; k < size; ++k) {
                    cells[n * size + k] = to_string(m(n, k));
                    width = std::max(width, cells[n * size + k].size());
                }
            }
            for (std::size_t n = 0; n < size; ++n) {
                for (std::size_t k = 0; k < size; ++k) {
                    const std::string &c = cells[n * size + k];
                    out << (k == 0 ? "" : " ") << std::string(width - c.size(), ' ') << c;
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::csv:
            for (std::size_t n = 0; n < size; ++n) {
                for (std::size_t k = 0; k < size; ++k) {
                    out << (k == 0 ? "" : ",") << to_string(m(n, k));
                }
                out << '\n';
            }
            break;
        case OutputFormat::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t n = 0; n < size; ++n) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t k = 0; k <= n; ++k) {
                    row.push_back(to_string(m(n, k)));
                }
                rows.push_back(std::move(row));
            }
            out << nlohmann::json{{"size", size}, {"rows", rows}}.dump() << '\n';
            break;
        }
        case OutputFormat::latex:
            out << "\\begin{pmatrix}\n";
            for (std::size_t n = 0; n < size; ++n) {
                for (std::size_t k = 0; k < size; ++k) {
                    out << (k == 0 ? "" : " & ") << latex_rational(m(n, k));
                }
                out << " \\\\\n";
            }
            out << "\\end{pmatrix}\n";
            break;
    }
    return out.str();
}

std::string render_series(const Series &s, OutputFormat format)
{
    std::ostringstream out;
    switch (format) {
        case OutputFormat::plain:
            out << to_string(s) << '\n';
            break;
        case OutputFormat::csv:
            for (std::size_t k = 0; k <= s.order(); ++k) {
                out << (k == 0 ? "" : ",") << to_string(s[k]);
            }
            out << '\n';
            break;
        case OutputFormat::json: {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto &c : s.coeffs()) {
                coeffs.push_back(to_string(c));
            }
            out << nlohmann::json{{"order", s.order()}, {"coeffs", coeffs}}.dump() << '\n';
            break;
        }
        case OutputFormat::latex: {
            bool first = true;
            for (std::size_t k = 0; k <= s.order(); ++k) {
                if (s[k] == 0) {
                    continue;
                }
                const Rational mag = abs(s[k]);
                out << (s[k] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
                if (k == 0 || mag != 1) {
                    out << latex_rational(mag);
                }
                if (k == 1) {
                    out << "x";
                } else if (k > 1) {
                    out << "x^{" << k << "}";
                }
                first = false;
            }
            out << (first ? "0" : "") << '\n';
            break;
        }
    }
    return out.str();
}

std::string render_factors(const std::map<std::size_t, Rational> &factors, OutputFormat format)
{
    std::ostringstream out;
    if (format == OutputFormat::json) {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto &[q, phi] : factors) {
            obj[std::to_string(q)] = to_string(phi);
        }
        out << obj.dump() << '\n';
        return out.str();
    }
    for (const auto &[q, phi] : factors) {
        if (format == OutputFormat::csv) {
            out << q << ',' << to_string(phi) << '\n';
        } else {
            out << "q=" << q << " phi=" << to_string(phi) << '\n';
        }
    }
    return out.str();
}

LowerTriangular parse_matrix_csv(std::string_view text)
{
    std::vector<std::vector<Rational>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(parse_rational(cell));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::invalid_argument("parse_matrix_csv: empty input");
    }
    const std::size_t size = rows.size();
    for (std::size_t n = 0; n < size; ++n) {
        if (rows[n].size() != size) {
            throw std::invalid_argument("parse_matrix_csv: matrix is not square");
        }
        for (std::size_t k = n + 1; k < size; ++k) {
            if (rows[n][k] != 0) {
                throw std::invalid_argument("parse_matrix_csv: matrix is not lower triangular");
            }
        }
    }
    return LowerTriangular(size - 1, [&](std::size_t n, std::size_t m) -> Rational { return rows[n][m]; });
}

LowerTriangular parse_matrix_json(std::string_view text)
{
    const auto doc = nlohmann::json::parse(text);
    const auto size = doc.at("size").get<std::size_t>();
    const auto &rows = doc.at("rows");
    if (size == 0 || rows.size() != size) {
        throw std::invalid_argument("parse_matrix_json: row count does not match size");
    }
    for (std::size_t n = 0; n < size; ++n) {
        if (rows[n].size() != n + 1) {
            throw std::invalid_argument("parse_matrix_json: row " + std::to_string(n) + " has wrong length");
        }
    }
    return LowerTriangular(size - 1, [&](std::size_t n, std::size_t m) -> Rational {
        return parse_rational(rows[n][m].get<std::string>());
    });
}

} // namespace riordan

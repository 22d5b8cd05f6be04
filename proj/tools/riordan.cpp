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

// Command-line front end: build and print matrices, run series operations in
// a circ-algebra, and run the identity suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <riordan/circ.hpp>
#include <riordan/expr.hpp>
#include <riordan/format.hpp>
#include <riordan/pascal.hpp>
#include <riordan/riordan_array.hpp>
#include <riordan/zero_pascal.hpp>
#include <riordan/zero_riordan.hpp>

using namespace riordan;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

constexpr const char *grammar = R"text(Series literals:
  integers and p/q rationals, the variable x, + - * / ^ and parentheses.
  Juxtaposition multiplies (3x^2). Exponents are integers, optionally
  parenthesized or braced: (1-x)^-1, (1-x)^(-2), x^{3}. Division needs a
  nonzero constant term in the divisor. Names: exp (e^x), geom (1/(1-x)),
  exp(s) for s(0) = 0, log(s) for s(0) = 1.
  Examples: "1/(1-x)", "1+x+x^3", "exp(2x)", "(1-x^2)/(1+x^2)".

Exit status: 0 success, 1 verification failure, 2 usage or domain error.)text";

struct Options
{
    std::string what;
    std::string q = "2";
    std::string phi = "1";
    std::string c;
    std::string a;
    std::string b = "1";
    std::string input;
    std::string alg = "pascal";
    std::string name;
    std::string format = "plain";
    std::size_t k = 1;
    std::size_t size = 8;
    std::size_t order = 16;
    std::size_t n_max = 12;
    std::size_t qmax = 12;
    unsigned seed = 1;
    bool inverse = false;
};

class Rng
{
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Rational nonzero()
    {
        const long p = std::uniform_int_distribution<long>(1, 5)(gen_);
        const long d = std::uniform_int_distribution<long>(1, 3)(gen_);
        return make_rational(std::bernoulli_distribution(0.5)(gen_) ? p : -p, d);
    }
    Rational any() { return std::bernoulli_distribution(0.2)(gen_) ? Rational(0) : nonzero(); }

    Series series(std::size_t order, const Rational &lead)
    {
        std::vector<Rational> c(order + 1);
        c[0] = lead;
        for (std::size_t k = 1; k <= order; ++k) {
            c[k] = any();
        }
        return Series(order, std::move(c));
    }
    Series weight(std::size_t order)
    {
        std::vector<Rational> c(order + 1);
        c[0] = 1;
        for (std::size_t k = 1; k <= order; ++k) {
            c[k] = nonzero();
        }
        return Series(order, std::move(c));
    }

private:
    std::mt19937 gen_;
};

std::size_t base_of(const std::string &text)
{
    const Rational r = parse_rational(text);
    if (!is_integer(r) || r < 2) {
        throw std::invalid_argument("--q must be an integer >= 2 here, got " + text);
    }
    return r.get_num().get_ui();
}

Series weight_of(const std::string &text, std::size_t order, unsigned seed)
{
    if (text == "random") {
        return Rng(seed).weight(order);
    }
    return WeightSeries(parse_series(text, order)).series();
}

CircAlgebra algebra_of(const Options &o, std::size_t order)
{
    if (o.alg == "pascal") {
        return CircAlgebra(pascal_from_c(WeightSeries(weight_of(o.c.empty() ? "exp" : o.c, order, o.seed))));
    }
    if (o.alg == "tq") {
        return CircAlgebra::t_matrix(base_of(o.q), order);
    }
    return CircAlgebra::of_family(parse_family(o.alg), base_of(o.q), order);
}

std::string algebra_label(const Options &o)
{
    return o.alg == "pascal" ? "pascal c=" + (o.c.empty() ? std::string("exp") : o.c) : o.alg + " q=" + o.q;
}

std::string read_input(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

LowerTriangular build_matrix(const Options &o)
{
    if (o.size == 0) {
        throw std::invalid_argument("--size must be positive");
    }
    const std::size_t order = o.size - 1;
    const std::string &f = o.what;
    if (f == "pascal") {
        return pascal_from_c(WeightSeries(weight_of(o.c.empty() ? "exp" : o.c, order, o.seed)));
    }
    if (f == "phi_q") {
        return phi_q_pascal(parse_rational(o.phi), base_of(o.q), order);
    }
    if (f == "basic" || f == "exponential" || f == "fractal") {
        return power(parse_family(f), base_of(o.q), parse_rational(o.phi), order);
    }
    if (f == "tq") {
        return ZeroPascalSpec::t_matrix(base_of(o.q), order).matrix();
    }
    if (f == "q_umbral") {
        return q_umbral_pascal(parse_rational(o.q), order);
    }
    if (f == "riordan") {
        if (!o.name.empty()) {
            return named_family(o.name, order).matrix();
        }
        if (o.a.empty()) {
            throw std::invalid_argument("riordan needs --name or --a (with optional --b, --c)");
        }
        const Series weight = o.c.empty() ? Series::geometric(order) : weight_of(o.c, order, o.seed);
        return RiordanArray(parse_series(o.b, order), parse_series(o.a, order), weight).matrix();
    }
    if (f == "zero_riordan") {
        if (o.a.empty()) {
            throw std::invalid_argument("zero_riordan needs --a (and optional --b, --alg, --q)");
        }
        const auto alg = std::make_shared<const CircAlgebra>(algebra_of(o, order));
        return ZeroRiordan(alg, parse_series(o.b, order), parse_series(o.a, order)).matrix();
    }
    // file
    if (o.input.empty()) {
        throw std::invalid_argument("file needs --input");
    }
    const std::string text = read_input(o.input);
    const auto brace = text.find_first_not_of(" \t\r\n");
    return brace != std::string::npos && text[brace] == '{' ? parse_matrix_json(text) : parse_matrix_csv(text);
}

int cmd_matrix(const Options &o)
{
    LowerTriangular m = build_matrix(o);
    if (o.inverse) {
        m = o.what == "q_umbral" ? q_umbral_inverse_rows(parse_rational(o.q), m.order()) : mat_inverse(m);
    }
    std::cout << render_matrix(m, parse_format(o.format));
    return exit_ok;
}

Series required_series(const std::string &text, const char *flag, std::size_t order)
{
    if (text.empty()) {
        throw std::invalid_argument(std::string("missing ") + flag);
    }
    return parse_series(text, order);
}

int cmd_series(const Options &o)
{
    const OutputFormat format = parse_format(o.format);
    if (o.what == "decompose") {
        const LowerTriangular p = pascal_from_c(WeightSeries(weight_of(o.c.empty() ? "exp" : o.c, o.qmax, o.seed)));
        std::cout << render_factors(hadamard_decompose(p, o.qmax), format);
        return exit_ok;
    }
    const std::size_t N = o.order;
    const CircAlgebra alg = algebra_of(o, N);
    Series result = Series::zero(N);
    if (o.what == "circ-mul") {
        result = circ_mul(alg, required_series(o.a, "--a", N), required_series(o.b, "--b", N));
    } else if (o.what == "circ-pow") {
        const Series a = required_series(o.input, "--input", N);
        const Rational phi = parse_rational(o.phi);
        if (is_integer(phi)) {
            const long n = phi.get_num().get_si();
            result = n >= 0 ? circ_pow_int(alg, a, static_cast<std::size_t>(n))
                            : circ_pow_int(alg, circ_inverse(alg, a), static_cast<std::size_t>(-n));
        } else {
            result = circ_pow_phi(alg, a, phi);
        }
    } else if (o.what == "circ-log") {
        result = circ_log(alg, required_series(o.input, "--input", N));
    } else if (o.what == "circ-inverse") {
        result = circ_inverse(alg, required_series(o.input, "--input", N));
    } else {
        // compose: b o (a)
        result = circ_compose(alg, required_series(o.b, "--b", N), required_series(o.a, "--a", N));
    }
    std::cout << render_series(result, format);
    return exit_ok;
}

// Collects named checks and prints one line per check.
class Verifier
{
public:
    explicit Verifier(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string &name, bool ok) { checks_.push_back({name, ok}); }

    int finish(OutputFormat format) const
    {
        std::size_t failed = 0;
        for (const auto &c : checks_) {
            failed += c.ok ? 0 : 1;
        }
        if (format == OutputFormat::json) {
            nlohmann::json report{{"suite", suite_}, {"passed", failed == 0}, {"checks", nlohmann::json::array()}};
            for (const auto &c : checks_) {
                report["checks"].push_back({{"name", c.name}, {"pass", c.ok}});
            }
            std::cout << report.dump() << '\n';
        } else {
            for (const auto &c : checks_) {
                std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << '\n';
            }
            std::cout << suite_ << ": " << checks_.size() - failed << "/" << checks_.size() << " checks passed\n";
        }
        return failed == 0 ? exit_ok : exit_failed;
    }

private:
    struct Check
    {
        std::string name;
        bool ok;
    };
    std::string suite_;
    std::vector<Check> checks_;
};

void verify_identities(const Options &o, Verifier &v)
{
    const std::size_t N = o.order;
    const WeightSeries w(weight_of(o.c.empty() ? "random" : o.c, N, o.seed));
    const auto table_ok = [](const LowerTriangular &t) { return check_pascal_identities(t, 3).empty(); };
    v.check("P_c", table_ok(pascal_from_c(w)));
    for (std::size_t q = 2; q <= 4; ++q) {
        const std::string tag = " q=" + std::to_string(q);
        v.check("(0,q)P x P_c" + tag, table_ok(ZeroPascalSpec({BasicFactor{q}, WeightFactor{w}}, N).matrix()));
        v.check("([0,q])P x P_c" + tag, table_ok(ZeroPascalSpec({FractalFactor{q}, WeightFactor{w}}, N).matrix()));
        v.check("(0,q)P_e" + tag, table_ok(ZeroPascalSpec::exponential(q, N).matrix()));
        v.check("T^(q)" + tag, table_ok(ZeroPascalSpec::t_matrix(q, N).matrix()));
    }
}

void verify_power_laws(const Options &o, Verifier &v)
{
    const std::size_t N = o.order;
    const CircAlgebra alg = algebra_of(o, N);
    Rng rnd(o.seed);
    for (int trial = 0; trial < 8; ++trial) {
        const Series u = rnd.series(N, 1), w = rnd.series(N, 1);
        const Rational phi = rnd.nonzero(), beta = rnd.nonzero();
        const std::string tag = " phi=" + to_string(phi) + " beta=" + to_string(beta);
        const Series up = circ_pow_phi(alg, u, phi);
        const Series lu = circ_log(alg, u);
        v.check("a^(phi) o a^(beta) = a^(phi+beta)" + tag,
                circ_mul(alg, up, circ_pow_phi(alg, u, beta)) == circ_pow_phi(alg, u, phi + beta));
        v.check("(a^(phi))^(beta) = a^(phi beta)" + tag, circ_pow_phi(alg, up, beta) == circ_pow_phi(alg, u, phi * beta));
        v.check("a^(phi) o b^(phi) = (a o b)^(phi)" + tag,
                circ_mul(alg, up, circ_pow_phi(alg, w, phi)) == circ_pow_phi(alg, circ_mul(alg, u, w), phi));
        v.check("log a^(phi) = phi log a" + tag, circ_log(alg, up) == phi * lu);
        v.check("log(a o b) = log a + log b" + tag, circ_log(alg, circ_mul(alg, u, w)) == lu + circ_log(alg, w));
        v.check("exp(phi log a) = binomial series" + tag, up == circ_pow_phi_binomial(alg, u, phi));
    }
}

void verify_eq3_eq4(const Options &o, Verifier &v)
{
    const std::size_t N = o.order;
    const CircAlgebra alg = algebra_of(o, N);
    Rng rnd(o.seed);
    for (int trial = 0; trial < 8; ++trial) {
        const std::string tag = " #" + std::to_string(trial + 1);
        const Series a = rnd.series(N, rnd.any()), b = rnd.series(N, rnd.any());
        v.check("theta(a o b) = a o theta b + theta a o b" + tag,
                theta(circ_mul(alg, a, b)) == circ_mul(alg, a, theta(b)) + circ_mul(alg, theta(a), b));
        bool powers = true;
        Series prev = Series::one(N);
        for (std::size_t n = 1; n <= 8; ++n) {
            const Series cur = circ_mul(alg, a, prev);
            powers = powers && theta(cur) == scale(circ_mul(alg, prev, theta(a)), static_cast<long>(n));
            prev = cur;
        }
        v.check("theta a^(n) = n a^(n-1) o theta a, n <= 8" + tag, powers);
        const Series u = rnd.series(N, 1);
        v.check("theta log a = theta a o a^(-1)" + tag,
                theta(circ_log(alg, u)) == circ_mul(alg, theta(u), circ_inverse(alg, u)));
    }
}

void verify_log_closed_forms(const Options &o, Verifier &v)
{
    const std::size_t N = o.order;
    const std::size_t q = base_of(o.q);
    const Series target = Series::monomial(N, 1) * pow(Series(N, {1, -1}), -2);
    for (Family f : {Family::basic, Family::exponential, Family::fractal}) {
        const std::string tag = std::string(family_name(f)) + " q=" + std::to_string(q);
        const CircAlgebra alg = CircAlgebra::of_family(f, q, N);
        v.check(tag + ": log o (1-x)^-1 closed form",
                circ_log(alg, Series::geometric(N)) == log_one_minus_inv_closed(f, q, N));
        v.check(tag + ": P^-1 x (1-x)^-2 closed form", apply(power(f, q, -1, N), target) == inverse_applied_closed(f, q, N));
    }
}

void verify_block_laws(const Options &o, Verifier &v)
{
    const std::size_t q = base_of(o.q);
    const std::size_t N = o.order;
    const CircAlgebra ordinary = CircAlgebra::pascal(N);
    const CircAlgebra fractal = CircAlgebra::of_family(Family::fractal, q, N);
    Rng rnd(o.seed);
    for (int trial = 0; trial < 4; ++trial) {
        const std::string tag = " #" + std::to_string(trial + 1);
        const Series a = rnd.series(N, rnd.any()), b = rnd.series(N, rnd.any());
        const Series g = rnd.series(N, rnd.any()), c = rnd.series(N, rnd.any());
        if (o.k == 1) {
            v.check("(a|b)(g|c) = (ag|bc) basic" + tag,
                    block_matrix(a, b, q, 1, Family::basic) * block_matrix(g, c, q, 1, Family::basic)
                        == block_matrix(a * g, b * c, q, 1, Family::basic));
            v.check("(a|b)(g|c) = (a o g|bc) exponential" + tag,
                    block_matrix(a, b, q, 1, Family::exponential) * block_matrix(g, c, q, 1, Family::exponential)
                        == block_matrix(circ_mul(ordinary, a, g), b * c, q, 1, Family::exponential));
        }
        v.check("(a|b)(g|c) = (a o g|b o c) fractal k=" + std::to_string(o.k) + tag,
                block_matrix(a, b, q, o.k, Family::fractal) * block_matrix(g, c, q, o.k, Family::fractal)
                    == block_matrix(circ_mul(fractal, a, g), circ_mul(fractal, b, c), q, o.k, Family::fractal));
    }
}

void verify_digit_theorem(const Options &o, Verifier &v)
{
    const std::size_t q = base_of(o.q);
    std::size_t block = 1;
    for (std::size_t i = 0; i < o.k; ++i) {
        block *= q;
    }
    const std::size_t limit = q * q * q;
    for (std::size_t i = 0; i < block; ++i) {
        for (std::size_t j = 0; j < block; ++j) {
            bool ok = true;
            for (std::size_t n = 0; n < limit && ok; ++n) {
                for (std::size_t m = 0; m < limit && ok; ++m) {
                    ok = digit_product_theorem_check(q, o.k, n, m, i, j);
                }
            }
            v.check("i=" + std::to_string(i) + " j=" + std::to_string(j) + ", all n,m < " + std::to_string(limit), ok);
        }
    }
}

void verify_group_law(const Options &o, Verifier &v)
{
    const std::size_t N = o.order;
    const auto alg = std::make_shared<const CircAlgebra>(algebra_of(o, N));
    const ZeroRiordan id = ZeroRiordan::identity(alg);
    Rng rnd(o.seed);
    const auto element = [&] { return ZeroRiordan(alg, rnd.series(N, rnd.nonzero()), rnd.series(N, rnd.nonzero())); };
    for (int trial = 0; trial < 5; ++trial) {
        const std::string tag = " #" + std::to_string(trial + 1);
        const ZeroRiordan x = element(), y = element(), z = element();
        v.check("matrix(x y) = matrix(x) matrix(y)" + tag, group_mul(x, y).matrix() == x.matrix() * y.matrix());
        v.check("(x y) z = x (y z)" + tag, group_mul(group_mul(x, y), z) == group_mul(x, group_mul(y, z)));
        const ZeroRiordan xi = group_inverse(x);
        v.check("x x^-1 = x^-1 x = (1,1)_0" + tag, group_mul(x, xi) == id && group_mul(xi, x) == id);
    }
}

void verify_lagrange(const Options &o, Verifier &v)
{
    const std::size_t N = o.n_max;
    const CircAlgebra alg = algebra_of(o, N);
    Rng rnd(o.seed);
    const std::vector<std::pair<std::string, Series>> inputs = {
        {"1/(1-x)", Series::geometric(N)}, {"1+x+x^3", parse_series("1+x+x^3", N)}, {"random", rnd.series(N, 1)}};
    for (const auto &[a_name, a] : inputs) {
        for (const Rational &phi : {Rational(1), Rational(2), make_rational(-1, 2), make_rational(3, 5)}) {
            bool ok = true;
            for (std::size_t n = 0; n <= N; ++n) {
                // phi + n = 0 is excluded from the identity.
                const std::optional<bool> r = lagrange_check(alg, a, phi, n);
                ok = ok && r.value_or(true);
            }
            v.check("a=" + a_name + " phi=" + to_string(phi) + ", n <= " + std::to_string(N), ok);
        }
        bool poly_ok = true;
        for (std::size_t n = 0; n <= std::min<std::size_t>(8, N); ++n) {
            poly_ok = poly_ok && lagrange_poly_identity_check(alg, a, n, n);
        }
        v.check("a=" + a_name + ": polynomial identity in phi", poly_ok);
    }
}

int cmd_verify(const Options &o)
{
    std::string label = algebra_label(o);
    if (o.what == "identities-1-2") {
        label = "c=" + (o.c.empty() ? std::string("random") : o.c) + " seed=" + std::to_string(o.seed);
    } else if (o.what == "digit-theorem" || o.what == "block-laws") {
        label = "q=" + o.q + " k=" + std::to_string(o.k);
    } else if (o.what == "log-closed-forms") {
        label = "q=" + o.q;
    }
    Verifier v(o.what + " (" + label + ")");
    if (o.what == "identities-1-2") {
        verify_identities(o, v);
    } else if (o.what == "power-laws") {
        verify_power_laws(o, v);
    } else if (o.what == "eq3-eq4") {
        verify_eq3_eq4(o, v);
    } else if (o.what == "log-closed-forms") {
        verify_log_closed_forms(o, v);
    } else if (o.what == "block-laws") {
        verify_block_laws(o, v);
    } else if (o.what == "digit-theorem") {
        verify_digit_theorem(o, v);
    } else if (o.what == "group-law") {
        verify_group_law(o, v);
    } else {
        verify_lagrange(o, v);
    }
    return v.finish(parse_format(o.format));
}

void add_common(CLI::App *cmd, Options &o)
{
    cmd->add_option("--q", o.q, "Base q (rational for q_umbral)")->capture_default_str();
    cmd->add_option("--phi", o.phi, "Rational parameter phi")->capture_default_str();
    cmd->add_option("--c", o.c, "Weight series c(x), or 'random'");
    cmd->add_option("--a", o.a, "Series a(x)");
    cmd->add_option("--b", o.b, "Series b(x)")->capture_default_str();
    cmd->add_option("--input", o.input, "Input series (series ops) or matrix file (matrix file)");
    cmd->add_option("--alg", o.alg, "Circ-algebra: pascal (with --c), basic, exponential, fractal, tq")
        ->capture_default_str()
        ->check(CLI::IsMember({"pascal", "basic", "exponential", "fractal", "tq"}));
    cmd->add_option("--k", o.k, "Block exponent k (block size q^k)")->capture_default_str()->check(CLI::Range(1, 6));
    cmd->add_option("--size", o.size, "Number of matrix rows")->capture_default_str()->check(CLI::Range(1, 4096));
    cmd->add_option("--order", o.order, "Truncation order")
        ->capture_default_str()
        ->envname("RIORDAN_ORDER")
        ->check(CLI::Range(0, 4096));
    cmd->add_option("--format", o.format, "Output format: plain, csv, json, latex")
        ->capture_default_str()
        ->check(CLI::IsMember({"plain", "csv", "json", "latex"}));
    cmd->add_option("--seed", o.seed, "Seed for random inputs")->capture_default_str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact generalized Pascal, zero Pascal and Riordan matrices"};
    app.footer(grammar);
    app.require_subcommand(1);
    Options o;

    CLI::App *matrix = app.add_subcommand("matrix", "Print a matrix");
    matrix
        ->add_option("family", o.what,
                     "pascal (--c), phi_q (--phi --q), basic|exponential|fractal (power --phi of the zero Pascal "
                     "matrix), tq, q_umbral (--q), riordan (--name or --b --a --c), zero_riordan (--alg --b --a), "
                     "file (--input csv/json)")
        ->required()
        ->check(CLI::IsMember(
            {"pascal", "phi_q", "basic", "exponential", "fractal", "tq", "q_umbral", "riordan", "zero_riordan", "file"}));
    matrix->add_option("--name", o.name, "Named Riordan family");
    matrix->add_flag("--inverse", o.inverse, "Print the inverse matrix");
    add_common(matrix, o);

    CLI::App *series = app.add_subcommand("series", "Series operations in a circ-algebra");
    series->add_option("op", o.what, "circ-mul, circ-pow, circ-log, circ-inverse, compose (b o (a)), decompose (--c)")
        ->required()
        ->check(CLI::IsMember({"circ-mul", "circ-pow", "circ-log", "circ-inverse", "compose", "decompose"}));
    series->add_option("--qmax", o.qmax, "Largest q in the decomposition")->capture_default_str()->check(CLI::Range(2, 4096));
    add_common(series, o);

    CLI::App *verify = app.add_subcommand("verify", "Run an identity suite");
    verify
        ->add_option("suite", o.what,
                     "identities-1-2, power-laws, eq3-eq4, log-closed-forms, block-laws, digit-theorem, group-law, lagrange")
        ->required()
        ->check(CLI::IsMember({"identities-1-2", "power-laws", "eq3-eq4", "log-closed-forms", "block-laws",
                               "digit-theorem", "group-law", "lagrange"}));
    verify->add_option("--n-max", o.n_max, "Largest n for the Lagrange suite")->capture_default_str()->check(CLI::Range(0, 64));
    add_common(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (matrix->parsed()) {
            return cmd_matrix(o);
        }
        if (series->parsed()) {
            return cmd_series(o);
        }
        return cmd_verify(o);
    } catch (const std::exception &e) {
        std::cerr << "riordan: " << e.what() << '\n';
        return exit_usage;
    }
}

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
#include <map>

#include <riordan/lower_triangular.hpp>
#include <riordan/rational.hpp>
#include <riordan/series.hpp>

namespace riordan {

// A series c(x) with c_0 = 1 and no zero coefficient up to its order. It
// determines the generalized Pascal matrix with entries c_m c_{n-m} / c_n.
class WeightSeries
{
public:
    explicit WeightSeries(Series c);
    const Series &series() const noexcept { return c_; }
    std::size_t order() const noexcept { return c_.order(); }

private:
    Series c_;
};

LowerTriangular pascal_from_c(const WeightSeries &c);

// c(phi, q, x) = (1 + x + ... + x^{q-1}) / (1 - x^q / phi), i.e. c_{qn+i} = phi^{-n}.
Series phi_q_weight(const Rational &phi, std::size_t q, std::size_t order);

// Entry 1 when n mod q >= m mod q, phi otherwise. phi = 0 is allowed.
LowerTriangular phi_q_pascal(const Rational &phi, std::size_t q, std::size_t order);

// b_n! / (b_m! b_{n-m}!), zero for m > n. b_0 is ignored (taken as 0).
Rational gen_binom(const Series &b, std::size_t n, std::size_t m);

// (n m)_b == (n-1 m-1)_b + (b_n - b_m) / b_{n-m} (n-1 m)_b. For m == 0 the
// identity reads 1 == 1; m == n uses (n-1 n)_b = 0.
bool gen_binom_recurrence_check(const Series &b, std::size_t n, std::size_t m);

// c_n = 1 / b_n!, the weight with c_1 = 1 whose Pascal matrix has column one b.
Series weight_from_b(const Series &b);

// Column one of a generalized Pascal matrix with b_0 := 0.
Series first_column_b(const LowerTriangular &p);

// Moebius function.
int mobius(std::size_t n);

// Parameters phi_q, 2 <= q <= qmax, such that P is the Hadamard product of
// the matrices phi_q_pascal(phi_q, q): phi_q = prod_{d | q} b_d^{mu(q/d)}.
std::map<std::size_t, Rational> hadamard_decompose(const LowerTriangular &p, std::size_t qmax);

// Hadamard product of phi_q_pascal(phi_q, q) over the given factors.
LowerTriangular hadamard_reconstruct(const std::map<std::size_t, Rational> &factors, std::size_t order);

// Column n is x^n prod_{m=0..n} (1 - q^m x)^{-1}.
LowerTriangular q_umbral_pascal(const Rational &q, std::size_t order);
// Row n is prod_{m=0..n-1} (x - q^m).
LowerTriangular q_umbral_inverse_rows(const Rational &q, std::size_t order);

} // namespace riordan

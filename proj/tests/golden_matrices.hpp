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

// Reference matrices, lower triangle only.
// The symbolic parameter is spelled "phi" and substituted by the test.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace golden {

using Table = std::vector<std::vector<std::string>>;

inline const Table phi2 = {
    {"1"},
    {"1", "1"},
    {"1", "phi", "1"},
    {"1", "1", "1", "1"},
    {"1", "phi", "1", "phi", "1"},
    {"1", "1", "1", "1", "1", "1"},
    {"1", "phi", "1", "phi", "1", "phi", "1"},
    {"1", "1", "1", "1", "1", "1", "1", "1"},
    {"1", "phi", "1", "phi", "1", "phi", "1", "phi", "1"},
};

inline const Table phi3 = {
    {"1"},
    {"1", "1"},
    {"1", "1", "1"},
    {"1", "phi", "phi", "1"},
    {"1", "1", "phi", "1", "1"},
    {"1", "1", "1", "1", "1", "1"},
    {"1", "phi", "phi", "1", "phi", "phi", "1"},
    {"1", "1", "phi", "1", "1", "phi", "1", "1"},
    {"1", "1", "1", "1", "1", "1", "1", "1", "1"},
};

inline const Table g_minus1 = {
    {"1"},
    {"1", "1"},
    {"1", "0", "1"},
    {"1", "1", "1", "1"},
    {"1", "0", "2", "0", "1"},
    {"1", "1", "2", "2", "1", "1"},
    {"1", "0", "3", "0", "3", "0", "1"},
};

inline const Table g_minus1_inv = {
    {"1"},
    {"-1", "1"},
    {"-1", "0", "1"},
    {"1", "-1", "-1", "1"},
    {"1", "0", "-2", "0", "1"},
    {"-1", "1", "2", "-2", "-1", "1"},
    {"-1", "0", "3", "0", "-3", "0", "1"},
};

inline const Table zero2 = {
    {"1"},
    {"1", "1"},
    {"1", "0", "1"},
    {"1", "1", "1", "1"},
    {"1", "0", "1", "0", "1"},
    {"1", "1", "1", "1", "1", "1"},
    {"1", "0", "1", "0", "1", "0", "1"},
    {"1", "1", "1", "1", "1", "1", "1", "1"},
    {"1", "0", "1", "0", "1", "0", "1", "0", "1"},
};

inline const Table zero3 = {
    {"1"},
    {"1", "1"},
    {"1", "1", "1"},
    {"1", "0", "0", "1"},
    {"1", "1", "0", "1", "1"},
    {"1", "1", "1", "1", "1", "1"},
    {"1", "0", "0", "1", "0", "0", "1"},
    {"1", "1", "0", "1", "1", "0", "1", "1"},
    {"1", "1", "1", "1", "1", "1", "1", "1", "1"},
};

inline const Table zero3_inv = {
    {"1"},
    {"-1", "1"},
    {"0", "-1", "1"},
    {"-1", "0", "0", "1"},
    {"1", "-1", "0", "-1", "1"},
    {"0", "1", "-1", "0", "-1", "1"},
    {"0", "0", "0", "-1", "0", "0", "1"},
    {"0", "0", "0", "1", "-1", "0", "-1", "1"},
    {"0", "0", "0", "0", "1", "-1", "0", "-1", "1"},
};

inline const Table zero4 = {
    {"1"},
    {"1", "1"},
    {"1", "1", "1"},
    {"1", "1", "1", "1"},
    {"1", "0", "0", "0", "1"},
    {"1", "1", "0", "0", "1", "1"},
    {"1", "1", "1", "0", "1", "1", "1"},
    {"1", "1", "1", "1", "1", "1", "1", "1"},
};

inline const Table zero3_e = {
    {"1"},
    {"1", "1"},
    {"1", "1", "1"},
    {"1", "0", "0", "1"},
    {"1", "1", "0", "1", "1"},
    {"1", "1", "1", "1", "1", "1"},
    {"1", "0", "0", "2", "0", "0", "1"},
    {"1", "1", "0", "2", "2", "0", "1", "1"},
    {"1", "1", "1", "2", "2", "2", "1", "1", "1"},
};

inline const Table zero3_e_inv = {
    {"1"},
    {"-1", "1"},
    {"0", "-1", "1"},
    {"-1", "0", "0", "1"},
    {"1", "-1", "0", "-1", "1"},
    {"0", "1", "-1", "0", "-1", "1"},
    {"1", "0", "0", "-2", "0", "0", "1"},
    {"-1", "1", "0", "2", "-2", "0", "-1", "1"},
    {"0", "-1", "1", "0", "2", "-2", "0", "-1", "1"},
};

inline const Table fractal2 = {
    {"1"},
    {"1", "1"},
    {"1", "0", "1"},
    {"1", "1", "1", "1"},
    {"1", "0", "0", "0", "1"},
    {"1", "1", "0", "0", "1", "1"},
    {"1", "0", "1", "0", "1", "0", "1"},
    {"1", "1", "1", "1", "1", "1", "1", "1"},
    {"1", "0", "0", "0", "0", "0", "0", "0", "1"},
    {"1", "1", "0", "0", "0", "0", "0", "0", "1", "1"},
    {"1", "0", "1", "0", "0", "0", "0", "0", "1", "0", "1"},
    {"1", "1", "1", "1", "0", "0", "0", "0", "1", "1", "1", "1"},
    {"1", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "1"},
    {"1", "1", "0", "0", "1", "1", "0", "0", "1", "1", "0", "0", "1", "1"},
    {"1", "0", "1", "0", "1", "0", "1", "0", "1", "0", "1", "0", "1", "0", "1"},
    {"1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"},
};

inline const Table fractal2_sq = {
    {"1"},
    {"2", "1"},
    {"2", "0", "1"},
    {"4", "2", "2", "1"},
    {"2", "0", "0", "0", "1"},
    {"4", "2", "0", "0", "2", "1"},
    {"4", "0", "2", "0", "2", "0", "1"},
    {"8", "4", "4", "2", "4", "2", "2", "1"},
    {"2", "0", "0", "0", "0", "0", "0", "0", "1"},
    {"4", "2", "0", "0", "0", "0", "0", "0", "2", "1"},
    {"4", "0", "2", "0", "0", "0", "0", "0", "2", "0", "1"},
    {"8", "4", "4", "2", "0", "0", "0", "0", "4", "2", "2", "1"},
    {"4", "0", "0", "0", "2", "0", "0", "0", "2", "0", "0", "0", "1"},
    {"8", "4", "0", "0", "4", "2", "0", "0", "4", "2", "0", "0", "2", "1"},
    {"8", "0", "4", "0", "4", "0", "2", "0", "4", "0", "2", "0", "2", "0", "1"},
    {"16", "8", "8", "4", "8", "4", "4", "2", "8", "4", "4", "2", "4", "2", "2", "1"},
};

inline const Table fractal2_inv = {
    {"1"},
    {"-1", "1"},
    {"-1", "0", "1"},
    {"1", "-1", "-1", "1"},
    {"-1", "0", "0", "0", "1"},
    {"1", "-1", "0", "0", "-1", "1"},
    {"1", "0", "-1", "0", "-1", "0", "1"},
    {"-1", "1", "1", "-1", "1", "-1", "-1", "1"},
    {"-1", "0", "0", "0", "0", "0", "0", "0", "1"},
    {"1", "-1", "0", "0", "0", "0", "0", "0", "-1", "1"},
    {"1", "0", "-1", "0", "0", "0", "0", "0", "-1", "0", "1"},
};

inline const Table r1_a = {
    {"1"},
    {"0", "1"},
    {"0", "0", "1"},
    {"0", "1", "0", "1"},
    {"0", "0", "2", "0", "1"},
    {"0", "1", "0", "3", "0", "1"},
};

inline const Table r1_a2 = {
    {"1"},
    {"0", "1"},
    {"0", "0", "1"},
    {"0", "1", "0", "1"},
    {"0", "0", "2", "0", "1"},
    {"0", "1", "0", "3", "0", "1"},
};

inline const Table r1_sq = {
    {"1"},
    {"0", "1"},
    {"0", "0", "1"},
    {"0", "2", "0", "1"},
    {"0", "0", "4", "0", "1"},
    {"0", "5", "0", "6", "0", "1"},
};

inline const Table r1_c = {
    {"1"},
    {"0", "1"},
    {"0", "0", "1"},
    {"0", "1", "0", "1"},
    {"0", "0", "2", "0", "1"},
    {"0", "1", "0", "3", "0", "1"},
};

inline const Table r1_b = {
    {"1"},
    {"0", "1"},
    {"0", "0", "1"},
    {"0", "1", "2", "1"},
    {"0", "0", "2", "0", "1"},
    {"0", "1", "4", "3", "4", "1"},
};

inline const Table r1_ab = {
    {"1"},
    {"0", "1"},
    {"0", "0", "1"},
    {"0", "2", "2", "1"},
    {"0", "0", "4", "0", "1"},
    {"0", "5", "10", "6", "4", "1"},
};


// Block layouts (a|b): cell "a1b0" stands for a_1 b_0.
inline const Table block2 = {
    {"a0b0"},
    {"a0b1", "a0b0"},
    {"a1b0", "0", "a0b0"},
    {"a1b1", "a1b0", "a0b1", "a0b0"},
    {"a2b0", "0", "a1b0", "0", "a0b0"},
    {"a2b1", "a2b0", "a1b1", "a1b0", "a0b1", "a0b0"},
};

inline const Table block3 = {
    {"a0b0"},
    {"a0b1", "a0b0"},
    {"a0b2", "a0b1", "a0b0"},
    {"a1b0", "0", "0", "a0b0"},
    {"a1b1", "a1b0", "0", "a0b1", "a0b0"},
    {"a1b2", "a1b1", "a1b0", "a0b2", "a0b1", "a0b0"},
};

inline const Table block22 = {
    {"a0b0"},
    {"a0b1", "a0b0"},
    {"a0b2", "0", "a0b0"},
    {"a0b3", "a0b2", "a0b1", "a0b0"},
    {"a1b0", "0", "0", "0", "a0b0"},
    {"a1b1", "a1b0", "0", "0", "a0b1", "a0b0"},
    {"a1b2", "0", "a1b0", "0", "a0b2", "0", "a0b0"},
    {"a1b3", "a1b2", "a1b1", "a1b0", "a0b3", "a0b2", "a0b1", "a0b0"},
};

// Factor parameters of the Hadamard decomposition of a generalized Pascal
// matrix with first column b, as listed: phi_q = prod b_num / prod b_den.
struct FactorParameter
{
    std::size_t q;
    std::vector<std::size_t> num;
    std::vector<std::size_t> den;
};

inline const std::vector<FactorParameter> decomposition_list = {
    {2, {2}, {}},       {3, {3}, {}},       {4, {4}, {2}},       {5, {5}, {}},
    {6, {6}, {2, 3}},   {7, {7}, {}},       {8, {8}, {4}},       {9, {9}, {3}},
    {10, {10}, {2, 5}}, {11, {11}, {}},     {12, {12, 2}, {4, 6}},
};

} // namespace golden

// Copyright 2026 The qgf4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <vector>

#include "qgf4/code.hpp"

namespace testing_util {

inline qgf4::SymplecticVector random_vector(size_t n, std::mt19937_64 &rng) {
    qgf4::SymplecticVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, qgf4::Gf4(uint8_t(rng() & 3)));
    }
    return v;
}

/// Word number x of GF(4)^n: bits 2i, 2i+1 of x are (a_i, b_i).
inline qgf4::SymplecticVector vector_from_index(size_t n, uint64_t x) {
    qgf4::SymplecticVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, qgf4::Gf4(uint8_t((x >> (2 * i)) & 3)));
    }
    return v;
}

inline qgf4::AdditiveCode random_code(size_t n, size_t rows, std::mt19937_64 &rng) {
    std::vector<qgf4::SymplecticVector> g;
    for (size_t i = 0; i < rows; i++) {
        g.push_back(random_vector(n, rng));
    }
    return qgf4::AdditiveCode(n, g);
}

/// Random self-orthogonal code: greedily keeps random words orthogonal to
/// everything chosen so far.
inline qgf4::AdditiveCode random_self_orthogonal(size_t n, size_t target_rank, std::mt19937_64 &rng) {
    qgf4::AdditiveCode c(n);
    for (int tries = 0; tries < 2000 && c.rank() < target_rank; tries++) {
        auto v = random_vector(n, rng);
        bool ok = true;
        for (const auto &g : c.generators()) {
            if (qgf4::symplectic_inner(g, v)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            c.add_generator(v);
        }
    }
    return c;
}

/// Weight counts by listing every codeword explicitly (no Gray code).
inline std::vector<uint64_t> naive_weights(const qgf4::AdditiveCode &c) {
    std::vector<uint64_t> a(c.n() + 1, 0);
    size_t r = c.rank();
    for (uint64_t m = 0; m < (uint64_t{1} << r); m++) {
        qgf4::SymplecticVector v(c.n());
        for (size_t i = 0; i < r; i++) {
            if ((m >> i) & 1) {
                v ^= c.generators()[i];
            }
        }
        a[v.weight()]++;
    }
    return a;
}

}  // namespace testing_util

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

#include "qgf4/gf4.hpp"

#include <random>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace qgf4;

TEST(gf4, field_axioms) {
    Gf4 w = Gf4::w(), W = Gf4::wbar(), one = Gf4::one(), zero = Gf4::zero();
    ASSERT_EQ(w * w, w + one);
    ASSERT_EQ(w * w * w, one);
    ASSERT_EQ(w.conj(), w * w);
    ASSERT_EQ(W, w * w);
    ASSERT_EQ(w + W, one);
    for (uint8_t x = 0; x < 4; x++) {
        Gf4 a(x);
        ASSERT_EQ(a.conj(), a * a);
        ASSERT_EQ(a * one, a);
        ASSERT_EQ(a * zero, zero);
        if (x) {
            ASSERT_EQ(a * a.inverse(), one);
        }
        for (uint8_t y = 0; y < 4; y++) {
            ASSERT_EQ(Gf4(x) * Gf4(y), Gf4(y) * Gf4(x));
        }
    }
}

TEST(gf4, trace_values) {
    ASSERT_FALSE(Gf4::zero().trace());
    ASSERT_FALSE(Gf4::one().trace());
    ASSERT_TRUE(Gf4::w().trace());
    ASSERT_TRUE(Gf4::wbar().trace());
    // Tr(x) = x + x^2 lands in {0, 1}.
    for (uint8_t x = 0; x < 4; x++) {
        Gf4 a(x);
        Gf4 t = a + a * a;
        ASSERT_EQ(t, a.trace() ? Gf4::one() : Gf4::zero());
    }
}

TEST(gf4, text_symbols) {
    ASSERT_EQ(Gf4::from_char('0'), Gf4::zero());
    ASSERT_EQ(Gf4::from_char('1'), Gf4::one());
    ASSERT_EQ(Gf4::from_char('w'), Gf4::w());
    ASSERT_EQ(Gf4::from_char('W'), Gf4::wbar());
    ASSERT_THROW(Gf4::from_char('x'), PreconditionError);
    ASSERT_THROW(Gf4::from_char('2'), PreconditionError);
    ASSERT_EQ(SymplecticVector::from_string("01wW").str(), "01wW");
}

TEST(gf4, symplectic_inner_examples) {
    auto x = SymplecticVector::from_ab("1", "0");
    auto z = SymplecticVector::from_ab("0", "1");
    ASSERT_TRUE(symplectic_inner(x, z));
    auto u = SymplecticVector::from_ab("110", "011");
    auto v = SymplecticVector::from_ab("101", "110");
    ASSERT_TRUE(symplectic_inner(u, v));
    ASSERT_FALSE(symplectic_inner(u, u));
    ASSERT_THROW(symplectic_inner(x, u), PreconditionError);
}

TEST(gf4, trace_inner_examples) {
    ASSERT_TRUE(trace_inner(Gf4Vector::from_string("w"), Gf4Vector::from_string("W")));
    ASSERT_FALSE(trace_inner(Gf4Vector::from_string("1w"), Gf4Vector::from_string("w1")));
    ASSERT_THROW(trace_inner(Gf4Vector::from_string("1"), Gf4Vector::from_string("11")), PreconditionError);
}

TEST(gf4, phi_examples) {
    ASSERT_EQ(phi(SymplecticVector::from_ab("1", "0")).str(), "w");
    ASSERT_EQ(phi(SymplecticVector::from_ab("0", "1")).str(), "W");
    ASSERT_EQ(phi(SymplecticVector::from_ab("1", "1")).str(), "1");
    ASSERT_EQ(weight(SymplecticVector::from_ab("000", "000")), 0u);
    ASSERT_EQ(weight(SymplecticVector::from_ab("110", "011")), 3u);
}

TEST(gf4, phi_round_trip_and_weight) {
    std::mt19937_64 rng(7);
    for (size_t n : {1, 5, 63, 64, 65, 130}) {
        for (int t = 0; t < 20; t++) {
            auto v = testing_util::random_vector(n, rng);
            auto u = phi(v);
            ASSERT_EQ(phi_inv(u), v);
            ASSERT_EQ(phi(phi_inv(u)), u);
            ASSERT_EQ(v.weight(), u.hamming_weight());
            ASSERT_FALSE(symplectic_inner(v, v));
        }
    }
}

TEST(gf4, inner_products_agree) {
    std::mt19937_64 rng(11);
    for (size_t n : {1, 3, 70}) {
        for (int t = 0; t < 200; t++) {
            auto u = testing_util::random_vector(n, rng);
            auto v = testing_util::random_vector(n, rng);
            auto w = testing_util::random_vector(n, rng);
            ASSERT_EQ(trace_inner(phi(u), phi(v)), symplectic_inner(u, v));
            ASSERT_EQ(symplectic_inner(u, v), symplectic_inner(v, u));
            ASSERT_EQ(trace_inner(phi(u + v), phi(w)), trace_inner(phi(u), phi(w)) ^ trace_inner(phi(v), phi(w)));
        }
    }
}

TEST(gf4, scalar_multiples) {
    auto v = SymplecticVector::from_string("01wW");
    ASSERT_EQ(v.times(Gf4::w()).str(), "0wW1");
    ASSERT_EQ(v.times(Gf4::wbar()).str(), "0W1w");
    ASSERT_EQ(v.times(Gf4::one()), v);
    ASSERT_TRUE(v.times(Gf4::zero()).is_zero());
    ASSERT_EQ(v.conj().str(), "01Ww");
}

namespace {

// Eq. (11) and (12) checked for every pair of words of length n.
void check_parity_identities_exhaustive(size_t n) {
    uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t x = 0; x < total; x++) {
        auto u = testing_util::vector_from_index(n, x);
        bool uw = symplectic_inner(u, u.times(Gf4::w()));
        ASSERT_EQ(uw, bool(u.weight() & 1));
        for (uint64_t y = 0; y < total; y++) {
            auto v = testing_util::vector_from_index(n, y);
            size_t lhs = (u + v).weight() & 1;
            size_t rhs = (u.weight() + v.weight() + symplectic_inner(u, v)) & 1;
            ASSERT_EQ(lhs, rhs);
        }
    }
}

}  // namespace

TEST(gf4, weight_parity_identities_exhaustive) {
    for (size_t n = 1; n <= 4; n++) {
        check_parity_identities_exhaustive(n);
    }
}

TEST(gf4, weight_parity_identities_random) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; t++) {
        size_t n = 5 + rng() % 120;
        auto u = testing_util::random_vector(n, rng);
        auto v = testing_util::random_vector(n, rng);
        ASSERT_EQ((u + v).weight() & 1, (u.weight() + v.weight() + symplectic_inner(u, v)) & 1);
        ASSERT_EQ(symplectic_inner(u, u.times(Gf4::w())), bool(u.weight() & 1));
    }
}

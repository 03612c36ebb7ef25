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

#include <set>

#include "gtest/gtest.h"

#include "qgf4/selfdual.hpp"
#include "test_util.h"

using namespace qgf4;

namespace {

AdditiveCode hexacode() {
    return AdditiveCode::linear_span({"001111", "0101wW", "1001Ww"});
}

// Words of the hexacode with first symbol in {0, 1}, first coordinate removed.
AdditiveCode hexacode_shortened() {
    AdditiveCode h = hexacode();
    AdditiveCode sub(6);
    const auto &g = h.rref();
    SymplecticVector w(6);
    for (uint64_t t = 1; t < (uint64_t{1} << g.size()); t++) {
        w ^= g[std::countr_zero(t)];
        if (w.get(0) == Gf4::zero() || w.get(0) == Gf4::one()) {
            sub.add_generator(w);
        }
    }
    return delete_coordinates(sub, {0});
}

std::vector<AdditiveCode> listed_indecomposables(size_t n) {
    std::vector<AdditiveCode> out;
    if (n == 1) {
        out.push_back(AdditiveCode::from_strings({"1"}));
        return out;
    }
    out.push_back(dn_plus(n));
    if (n == 4) {
        out.push_back(AdditiveCode::from_strings({"1100", "0011", "wwww", "01wW"}));
    }
    if (n == 5) {
        out.push_back(AdditiveCode::from_strings({"11000", "00110", "00101", "01www", "ww001"}));
        out.push_back(AdditiveCode::from_strings({"11000", "00110", "10101", "ww00w", "00www"}));
        out.push_back(hexacode_shortened());
    }
    return out;
}

}  // namespace

TEST(selfdual, enumeration_counts) {
    const long expect[] = {0, 3, 15, 135, 2295, 75735};
    for (size_t n = 1; n <= 5; n++) {
        std::set<uint64_t> keys;
        uint64_t count = 0;
        for_each_selfdual_packed(n, [&](const std::vector<uint32_t> &g) {
            count++;
            EXPECT_EQ(g.size(), n);
            keys.insert(detail::packed_key(g, n));
        });
        EXPECT_EQ(BigInt(long(count)), selfdual_count(n));
        EXPECT_EQ(long(count), expect[n]);
        EXPECT_EQ(keys.size(), count) << "duplicate at n=" << n;
    }
}

TEST(selfdual, enumerated_codes_are_self_dual) {
    for (size_t n = 1; n <= 4; n++) {
        enumerate_selfdual(n, [&](const AdditiveCode &c) {
            EXPECT_EQ(c.rank(), n);
            EXPECT_TRUE(c == dual(c));
        });
    }
    // Sampled at n = 5.
    size_t i = 0;
    enumerate_selfdual(5, [&](const AdditiveCode &c) {
        if (i++ % 97 == 0) {
            EXPECT_TRUE(is_self_dual(c));
        }
    });
}

TEST(selfdual, enumeration_n6_count) {
    uint64_t count = 0;
    for_each_selfdual_packed(6, [&](const std::vector<uint32_t> &) { count++; });
    EXPECT_EQ(BigInt(long(count)), selfdual_count(6));
    EXPECT_EQ(count, 4922775u);
    EXPECT_THROW(for_each_selfdual_packed(7, [](const auto &) {}), PreconditionError);
}

TEST(selfdual, classification) {
    const size_t t[] = {0, 1, 2, 3, 6, 11};
    const size_t in[] = {0, 1, 1, 1, 2, 4};
    for (size_t n = 1; n <= 5; n++) {
        SelfDualClassification cl = classify_selfdual(n);
        EXPECT_EQ(cl.classes.size(), t[n]) << n;
        EXPECT_EQ(cl.indecomposable_count(), in[n]) << n;
        EXPECT_EQ(cl.total, selfdual_count(n));
        EXPECT_EQ(cl.mass(), mass_formula(n)) << n;
        BigInt orbits = 0;
        for (const auto &c : cl.classes) {
            orbits += c.orbit_size;
            EXPECT_EQ(c.params.k, 0u);
            EXPECT_EQ(c.params.n, n);
            EXPECT_LE(c.params.d, selfdual_distance_bound(n, c.even));
            EXPECT_TRUE(is_self_dual(c.representative));
        }
        EXPECT_EQ(orbits, selfdual_count(n));
        // Pairwise inequivalent.
        for (size_t i = 0; i < cl.classes.size(); i++) {
            for (size_t j = i + 1; j < cl.classes.size(); j++) {
                EXPECT_FALSE(are_equivalent(cl.classes[i].representative, cl.classes[j].representative));
            }
        }
    }
}

TEST(selfdual, automorphism_orders_agree) {
    for (size_t n = 1; n <= 4; n++) {
        for (const auto &c : classify_selfdual(n).classes) {
            EXPECT_EQ(c.aut_order, automorphism_order(c.representative));
        }
    }
}

TEST(selfdual, indecomposables_match_list) {
    for (size_t n = 1; n <= 5; n++) {
        auto listed = listed_indecomposables(n);
        for (const auto &c : listed) {
            ASSERT_TRUE(is_self_dual(c)) << c.rows_str()[0];
            EXPECT_FALSE(is_decomposable(c));
        }
        std::vector<bool> used(listed.size(), false);
        for (const auto &c : classify_selfdual(n).classes) {
            if (!c.indecomposable) {
                continue;
            }
            bool matched = false;
            for (size_t i = 0; i < listed.size(); i++) {
                if (!used[i] && are_equivalent(c.representative, listed[i])) {
                    used[i] = true;
                    matched = true;
                    break;
                }
            }
            EXPECT_TRUE(matched) << "n=" << n;
        }
        EXPECT_EQ(std::count(used.begin(), used.end(), true), long(listed.size()));
    }
    EXPECT_EQ(quantum_params(hexacode_shortened()).d, 3u);
}

TEST(selfdual, decomposability) {
    EXPECT_TRUE(is_decomposable(direct_sum(dn_plus(2), dn_plus(3))));
    EXPECT_TRUE(is_decomposable(AdditiveCode::from_strings({"10", "01"})));
    EXPECT_FALSE(is_decomposable(hexacode()));
    EXPECT_FALSE(is_decomposable(dn_plus(6)));
    // Randomly permuted direct sums stay decomposable.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; i++) {
        AdditiveCode c = direct_sum(testing_util::random_self_orthogonal(3, 2, rng), testing_util::random_self_orthogonal(3, 3, rng));
        EXPECT_TRUE(is_decomposable(MonomialMap::random(6, rng).apply(c)));
    }
}

TEST(selfdual, weight2) {
    auto d4 = weight2_decomposition(dn_code(4));
    ASSERT_EQ(d4.size(), 1u);
    EXPECT_EQ(d4[0].name(), "d4");

    auto two = weight2_decomposition(direct_sum(dn_plus(2), dn_code(2)));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].name(), "d2+");
    EXPECT_EQ(two[1].name(), "d2");

    std::mt19937_64 rng(6);
    AdditiveCode mix = direct_sum(direct_sum(dn_code(3), dn_plus(2)), direct_sum(dn_code(5), dn_plus(2)));
    for (int i = 0; i < 10; i++) {
        auto parts = weight2_decomposition(MonomialMap::random(mix.n(), rng).apply(mix));
        std::multiset<std::string> names;
        for (const auto &p : parts) {
            names.insert(p.name());
        }
        EXPECT_EQ(names, (std::multiset<std::string>{"d2+", "d2+", "d3", "d5"}));
    }
    EXPECT_THROW(weight2_decomposition(hexacode()), PreconditionError);
    EXPECT_THROW(weight2_decomposition(AdditiveCode::from_strings({"110"})), PreconditionError);
    EXPECT_EQ(weight2_decomposition(AdditiveCode::from_strings({"1w"}))[0].name(), "d2");
}

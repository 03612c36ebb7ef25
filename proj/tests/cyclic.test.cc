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

#include "gtest/gtest.h"

#include "qgf4/constructions.hpp"
#include "qgf4/cyclic.hpp"
#include "test_util.h"

using namespace qgf4;

namespace {

QuantumParams qp(size_t n, size_t k, size_t d, bool pure) {
    return QuantumParams{n, k, d, pure};
}

const Gf4 kappas[] = {Gf4::one(), Gf4::w(), Gf4::wbar()};

std::vector<Gf4Poly> all_divisors(const Gf4Factorization &fz, std::vector<std::vector<size_t>> *which = nullptr) {
    auto fs = fz.all();
    std::vector<Gf4Poly> out;
    for (uint64_t m = 0; m < (uint64_t{1} << fs.size()); m++) {
        Gf4Poly g = Gf4Poly::constant(Gf4::one());
        std::vector<size_t> idx;
        for (size_t i = 0; i < fs.size(); i++) {
            if ((m >> i) & 1) {
                g = g * fs[i].poly;
                idx.push_back(i);
            }
        }
        out.push_back(g);
        if (which) {
            which->push_back(idx);
        }
    }
    return out;
}

}  // namespace

TEST(cyclic, factorization_multiplies_back) {
    for (size_t n = 1; n <= 31; n += 2) {
        for (Gf4 kappa : kappas) {
            Gf4Factorization fz = factor_xn_minus_kappa(n, kappa);
            EXPECT_EQ(fz.product(), Gf4Poly::xn_minus(n, kappa));
            size_t total = 0;
            for (const auto &f : fz.all()) {
                EXPECT_EQ(f.poly.leading(), Gf4::one());
                EXPECT_EQ(size_t(f.poly.degree()), f.coset.members.size());
                total += f.coset.members.size();
            }
            EXPECT_EQ(total, n);
            for (const auto &[q, qd] : fz.pairs) {
                EXPECT_EQ(dagger_divisor(q.poly), qd.poly);
                EXPECT_FALSE(q.poly == qd.poly);
            }
            for (const auto &p : fz.self_dagger) {
                EXPECT_EQ(dagger_divisor(p.poly), p.poly);
            }
        }
    }
    EXPECT_THROW(factor_xn_minus_kappa(4, Gf4::one()), PreconditionError);
    EXPECT_THROW(factor_xn_minus_kappa(5, Gf4::zero()), PreconditionError);
}

TEST(cyclic, factor_x5_minus_1) {
    Gf4Factorization fz = factor_xn_minus_kappa(5, Gf4::one());
    ASSERT_EQ(fz.self_dagger.size(), 1u);
    EXPECT_EQ(fz.self_dagger[0].poly, Gf4Poly::from_string("11"));
    ASSERT_EQ(fz.pairs.size(), 1u);
    std::set<std::string> quad{fz.pairs[0].first.poly.str(), fz.pairs[0].second.poly.str()};
    EXPECT_EQ(quad, (std::set<std::string>{"1w1", "1W1"}));

    bool found = false;
    for (const auto &f : factor_xn_minus_kappa(21, Gf4::w()).all()) {
        found = found || f.poly == Gf4Poly::from_string("w111");
    }
    EXPECT_TRUE(found);
}

TEST(cyclic, dagger_is_an_involution_on_divisors) {
    for (size_t n : {5, 7, 9, 15}) {
        for (Gf4 kappa : kappas) {
            Gf4Poly xn = Gf4Poly::xn_minus(n, kappa);
            for (const auto &g : all_divisors(factor_xn_minus_kappa(n, kappa))) {
                Gf4Poly r = g % xn;
                if (r.is_zero()) {
                    continue;
                }
                Gf4Poly d = dagger(r, n, kappa);
                EXPECT_EQ(dagger(d, n, kappa) % xn, r);
                // The dagger of a divisor generates the same ideal as its
                // normalized conjugate reciprocal.
                Gf4Poly gd = dagger_divisor(g);
                EXPECT_TRUE(gd.divides(xn));
                EXPECT_TRUE(gd.divides(d));
            }
        }
    }
    EXPECT_EQ(dagger(Gf4Poly::constant(Gf4::one()), 7, Gf4::w()), Gf4Poly::constant(Gf4::w()));
    EXPECT_THROW(dagger(Gf4Poly::monomial(5), 5, Gf4::one()), PreconditionError);
}

TEST(cyclic, full_code_is_not_self_orthogonal) {
    for (size_t n : {1, 3, 5}) {
        AdditiveCode c = constacyclic_code(Gf4Poly::constant(Gf4::one()), n, Gf4::one());
        EXPECT_EQ(c.rank(), 2 * n);
        EXPECT_FALSE(is_self_orthogonal(c));
        EXPECT_FALSE(is_cc_self_orthogonal(Gf4Poly::constant(Gf4::one()), n, Gf4::one()));
    }
}

TEST(cyclic, dagger_matches_reciprocal_conjugate) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; t++) {
        size_t n = 3 + 2 * (rng() % 6);
        Gf4 kappa = kappas[rng() % 3];
        std::vector<Gf4> v(n);
        for (auto &x : v) {
            x = Gf4(uint8_t(rng() & 3));
        }
        Gf4Poly g(v);
        // conj(g_j) x^{-j} with x^{-1} = kappa^{-1} x^{n-1}; equal to g^dagger up
        // to the unit kappa.
        Gf4Poly expect;
        for (size_t j = 0; j < n; j++) {
            Gf4 c = g[j].conj();
            if (j == 0) {
                expect = expect + Gf4Poly::constant(c);
            } else {
                expect = expect + Gf4Poly::monomial(n - j, c * kappa.inverse());
            }
        }
        EXPECT_EQ(dagger(g, n, kappa), expect.scaled(kappa));
    }
}

TEST(cyclic, self_orthogonality_criterion_is_exact) {
    for (size_t n = 3; n <= 15; n += 2) {
        for (Gf4 kappa : kappas) {
            Gf4Factorization fz = factor_xn_minus_kappa(n, kappa);
            auto fs = fz.all();
            std::vector<std::vector<size_t>> which;
            auto divs = all_divisors(fz, &which);
            for (size_t i = 0; i < divs.size(); i++) {
                AdditiveCode c = constacyclic_code(divs[i], n, kappa);
                ASSERT_EQ(c.rank(), 2 * (n - size_t(divs[i].degree())));
                ASSERT_TRUE(is_linear(c));
                bool so = is_self_orthogonal(c);
                EXPECT_EQ(is_cc_self_orthogonal(divs[i], n, kappa), so) << n << " " << divs[i].str();
                // Divisible by every self-dagger factor and by one of each pair.
                std::set<uint64_t> reps;
                for (size_t j : which[i]) {
                    reps.insert(fs[j].coset.representative);
                }
                bool crit = true;
                for (const auto &p : fz.self_dagger) {
                    crit = crit && reps.count(p.coset.representative);
                }
                for (const auto &[q, qd] : fz.pairs) {
                    crit = crit && (reps.count(q.coset.representative) || reps.count(qd.coset.representative));
                }
                EXPECT_EQ(crit, so) << n << " " << divs[i].str();
            }
        }
    }
}

TEST(cyclic, constacyclic_shift_invariance) {
    for (Gf4 kappa : kappas) {
        Gf4Factorization fz = factor_xn_minus_kappa(9, kappa);
        for (const auto &g : all_divisors(fz)) {
            AdditiveCode c = constacyclic_code(g, 9, kappa);
            for (const auto &v : c.generators()) {
                SymplecticVector s(9);
                for (size_t i = 0; i + 1 < 9; i++) {
                    s.set(i + 1, v.get(i));
                }
                s.set(0, kappa * v.get(8));
                EXPECT_TRUE(c.contains(s));
            }
        }
    }
    EXPECT_THROW(constacyclic_code(Gf4Poly::from_string("11"), 5, Gf4::w()), PreconditionError);
}

TEST(cyclic, hamming_generators) {
    Gf4Poly g5 = Gf4Poly::from_string("1w1");
    EXPECT_TRUE(g5.divides(Gf4Poly::xn_minus(5, Gf4::one())));
    AdditiveCode c5 = dual(constacyclic_code(g5, 5, Gf4::one()));
    EXPECT_TRUE(is_self_orthogonal(c5));
    EXPECT_EQ(quantum_params(c5), qp(5, 1, 3, true));

    Gf4Poly g21 = Gf4Poly::from_string("w111");
    EXPECT_TRUE(g21.divides(Gf4Poly::xn_minus(21, Gf4::w())));
    AdditiveCode c21 = dual(constacyclic_code(g21, 21, Gf4::w()));
    EXPECT_TRUE(is_self_orthogonal(c21));
    EXPECT_EQ(quantum_params(c21), qp(21, 15, 3, true));
}

TEST(cyclic, bch_small) {
    auto b5 = bch_search(5, Gf4::one(), 3);
    ASSERT_EQ(b5.size(), 1u);
    EXPECT_EQ(b5[0].g.degree(), 2);
    EXPECT_EQ(b5[0].k, 1u);
    EXPECT_TRUE(is_self_orthogonal(b5[0].code));
    EXPECT_EQ(quantum_params(b5[0].code), qp(5, 1, 3, true));

    auto b21 = bch_search(21, Gf4::w(), 3, 10);
    ASSERT_FALSE(b21.empty());
    bool has_printed = false;
    for (const auto &b : b21) {
        EXPECT_EQ(b.g.degree(), 3);
        EXPECT_EQ(b.k, 15u);
        has_printed = has_printed || b.g == Gf4Poly::from_string("w111");
    }
    EXPECT_TRUE(has_printed);
    EXPECT_EQ(quantum_params(b21[0].code), qp(21, 15, 3, true));
    EXPECT_THROW(bch_search(5, Gf4::one(), 5), PreconditionError);
}

TEST(cyclic, bch_design_distance_holds) {
    // Every BCH code found for small lengths has distance >= its design.
    for (size_t n : {9, 11, 13, 15, 17, 21}) {
        for (Gf4 kappa : kappas) {
            for (size_t d = 2; d <= 5; d++) {
                std::vector<BchCode> found;
                try {
                    found = bch_search(n, kappa, d, 3);
                } catch (const PreconditionError &) {
                    continue;
                }
                for (const auto &b : found) {
                    ASSERT_TRUE(is_self_orthogonal(b.code));
                    QuantumParams p = quantum_params(b.code);
                    EXPECT_EQ(p.k, b.k);
                    if (b.k > 0) {
                        EXPECT_GE(p.d, d) << n << " " << b.g.str();
                    }
                }
            }
        }
    }
}

TEST(cyclic, bch_85_family) {
    size_t expect_k[] = {77, 69, 61, 53};
    size_t design[] = {3, 4, 5, 7};
    for (int i = 0; i < 4; i++) {
        auto b = bch_search(85, Gf4::one(), design[i]);
        ASSERT_EQ(b.size(), 1u);
        EXPECT_EQ(b[0].k, expect_k[i]);
        EXPECT_EQ(size_t(b[0].g.degree()), 4u * (i + 1));
        EXPECT_TRUE(is_self_orthogonal(b[0].code));
    }
    auto b3 = bch_search(85, Gf4::one(), 3);
    EXPECT_EQ(quantum_params(b3[0].code), qp(85, 77, 3, true));
}

TEST(cyclic, binary_divisors) {
    EXPECT_EQ(binary_divisors_xn1(7).size(), 8u);
    EXPECT_EQ(binary_divisors_xn1(15).size(), 32u);
    for (size_t n : {5, 6, 12, 23}) {
        for (uint64_t d : binary_divisors_xn1(n)) {
            EXPECT_TRUE(f2poly_divides(d, f2poly_xn1(n)));
        }
    }
    EXPECT_EQ(binary_divisors_xn1(6).size(), 9u);  // (x+1)^2 (x^2+x+1)^2
}

TEST(cyclic, additive_cyclic_forms_exhaustive) {
    // Every valid (p, q mod r, r) gives a code of the stated rank whose
    // canonical form is recovered, and the congruences decide
    // self-orthogonality.
    for (size_t n = 1; n <= 9; n += 2) {
        auto divs = binary_divisors_xn1(n);
        uint64_t xn1 = f2poly_xn1(n);
        std::set<AdditiveCyclicForm> forms;
        for (uint64_t p : divs) {
            for (uint64_t r : divs) {
                int dr = f2poly_degree(r);
                for (uint64_t q = 0; q < (uint64_t{1} << std::max(dr, 0)); q++) {
                    uint64_t h = f2poly_div(xn1, p);
                    if (dr > 0 && f2poly_mulmod(q, f2poly_mod(h, r), r) != 0) {
                        continue;
                    }
                    AdditiveCode c = additive_cyclic(p, q, r, n);
                    EXPECT_TRUE(is_cyclic(c));
                    AdditiveCyclicForm f = additive_cyclic_form(c);
                    EXPECT_EQ(f, (AdditiveCyclicForm{n, p, q, r})) << n << " " << p << " " << q << " " << r;
                    EXPECT_EQ(ac_self_orthogonal(p, q, r, n), is_self_orthogonal(c));
                    forms.insert(f);
                }
            }
        }
        // Distinct forms give distinct codes.
        std::vector<AdditiveCode> codes;
        for (const auto &f : forms) {
            codes.push_back(additive_cyclic(f.p, f.q, f.r, n));
        }
        for (size_t i = 0; i < codes.size(); i++) {
            for (size_t j = i + 1; j < codes.size(); j++) {
                EXPECT_FALSE(codes[i] == codes[j]);
            }
        }
    }
}

TEST(cyclic, every_cyclic_code_has_a_form) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; t++) {
        size_t n = 3 + 2 * (rng() % 7);
        std::vector<std::string> gens;
        for (size_t g = 0; g < 1 + rng() % 3; g++) {
            gens.push_back(testing_util::random_vector(n, rng).str());
        }
        AdditiveCode c = cyclic_orbit_code(gens);
        AdditiveCyclicForm f = additive_cyclic_form(c);
        AdditiveCode back = additive_cyclic(f.p, f.q, f.r, n);
        EXPECT_EQ(back, c);
        EXPECT_EQ(long(c.rank()), 2 * long(n) - f2poly_degree(f.p) - f2poly_degree(f.r));
    }
    EXPECT_THROW(additive_cyclic_form(AdditiveCode::from_strings({"w00"})), PreconditionError);
}

TEST(cyclic, search_finds_15_0_6) {
    auto found = search_additive_cyclic(15, 6, 15, 15);
    ASSERT_FALSE(found.empty());
    for (const auto &r : found) {
        EXPECT_EQ(r.params, qp(15, 0, 6, true));
        EXPECT_TRUE(is_self_orthogonal(r.code));
    }
    EXPECT_TRUE(search_additive_cyclic(15, 7, 15, 15).empty());
    AdditiveCode printed = cyclic_orbit_code({"w11010100101011"});
    EXPECT_EQ(printed.rank(), 15u);
    EXPECT_EQ(quantum_params(printed), qp(15, 0, 6, true));
    AdditiveCyclicForm f = additive_cyclic_form(printed);
    EXPECT_TRUE(ac_self_orthogonal(f.p, f.q, f.r, 15));
    bool listed = false;
    for (const auto &r : found) {
        listed = listed || r.form == f;
    }
    EXPECT_TRUE(listed);
}

TEST(cyclic, search_finds_23_codes) {
    auto a = search_additive_cyclic(23, 8, 23, 23);
    ASSERT_FALSE(a.empty());
    EXPECT_EQ(a[0].params, qp(23, 0, 8, true));
    auto b = search_additive_cyclic(23, 4, 11, 11);
    ASSERT_FALSE(b.empty());
    bool k12 = false;
    for (const auto &r : b) {
        k12 = k12 || r.params == qp(23, 12, 4, true);
    }
    EXPECT_TRUE(k12);
}

TEST(cyclic, table_of_cyclic_codes) {
    struct Row {
        std::vector<std::string> gens;
        QuantumParams params;
    };
    std::vector<Row> rows = {
        {{"w11010100101011"}, qp(15, 0, 6, true)},
        {{"WW1w00111101011011000", "101110010111001011100"}, qp(21, 0, 8, true)},
        {{"w0101111000000001111010"}, qp(23, 0, 8, true)},
        {{"WWwWw11W11w1w1011000000"}, qp(23, 12, 4, true)},
        {{"111010w010111000000000000"}, qp(25, 0, 8, true)},
    };
    for (const auto &row : rows) {
        AdditiveCode c = cyclic_orbit_code(row.gens);
        EXPECT_TRUE(is_self_orthogonal(c)) << row.gens[0];
        EXPECT_EQ(quantum_params(c), row.params) << row.gens[0];
        AdditiveCyclicForm f = additive_cyclic_form(c);
        EXPECT_TRUE(ac_self_orthogonal(f.p, f.q, f.r, c.n()));
    }
}

TEST(cyclic, dodecacode_orbit) {
    AdditiveCode c = cyclic_orbit_code({"w10100100101"});
    EXPECT_EQ(c.rank(), 12u);
    EXPECT_TRUE(is_self_dual(c));
    EXPECT_EQ(quantum_params(c), qp(12, 0, 6, true));
    EXPECT_FALSE(is_linear(c));
}

TEST(cyclic, conjucyclic_round_trip) {
    for (size_t n = 2; n <= 9; n++) {
        for (uint64_t g : binary_divisors_xn1(2 * n)) {
            // Binary cyclic code <g> of length 2n.
            BinaryCode b(2 * n);
            for (int i = 0; i + f2poly_degree(g) < int(2 * n); i++) {
                BitVector v(2 * n);
                for (int j = 0; j <= f2poly_degree(g); j++) {
                    v.set(i + j, (g >> j) & 1);
                }
                b.insert(v);
            }
            AdditiveCode c = binary_to_conjucyclic(b);
            ASSERT_TRUE(is_conjucyclic(c));
            EXPECT_EQ(conjucyclic_to_binary(c), b);
            EXPECT_EQ(c.rank(), b.dim());
            bool binary_so = b.dual().contains(b);
            EXPECT_EQ(binary_so, is_self_orthogonal(c)) << n << " " << g;
        }
    }
    EXPECT_THROW(conjucyclic_to_binary(AdditiveCode::from_strings({"w00"})), PreconditionError);
}

TEST(cyclic, conjucyclic_shift_order) {
    SymplecticVector u = SymplecticVector::from_string("w1W0");
    EXPECT_EQ(conjucyclic_shift(u).str(), "0w1W");
    SymplecticVector v = u;
    for (int i = 0; i < 8; i++) {
        v = conjucyclic_shift(v);
    }
    EXPECT_EQ(v, u);
}

TEST(cyclic, quasicyclic_table) {
    struct Row {
        std::vector<std::string> blocks;
        QuantumParams params;
    };
    std::vector<Row> rows = {
        {{"1000000", "W1Ww00w"}, qp(14, 0, 6, true)},
        {{"1011100", "1Www10W"}, qp(14, 8, 3, true)},
        {{"10000", "11W00", "11ww0"}, qp(15, 5, 4, true)},
        {{"110000", "101W00", "11w1w0"}, qp(18, 6, 5, true)},
        {{"10000", "1W100", "1111w", "11WwW"}, qp(20, 10, 4, true)},
        {{"10000", "1w1w0", "0101W", "1wWw1", "10ww0"}, qp(25, 15, 4, true)},
        {{"wwW1000", "W0W1000", "1WW1wW0", "WwWww00"}, qp(28, 14, 5, true)},
        {{"11100", "10w00", "11Ww0", "1w1wW", "10w10", "1w100"}, qp(30, 20, 4, true)},
        {{"001ww", "011w1", "0010W", "001w1", "00101", "1w1wW", "111Ww", "01w1W"}, qp(40, 30, 4, true)},
    };
    for (const auto &row : rows) {
        AdditiveCode c = quasicyclic_code(row.blocks);
        EXPECT_TRUE(is_linear(c));
        EXPECT_TRUE(is_self_orthogonal(c)) << row.blocks[0];
        EXPECT_EQ(quantum_params(c), row.params) << row.blocks[0];
    }
    EXPECT_THROW(quasicyclic_code({"100", "10"}), PreconditionError);
    EXPECT_EQ(quasicyclic_code({"000", "000"}).rank(), 0u);
}

TEST(cyclic, uuv_28_8_6) {
    AdditiveCode c1 = quasicyclic_code({"1011100", "1Www10W"});
    AdditiveCode c2 = quasicyclic_code({"1000000", "W1Ww00w"});
    ASSERT_TRUE(c2.contains(c1));
    EXPECT_EQ(quantum_params(uuv(c1, c2)), qp(28, 8, 6, true));
}

TEST(cyclic, search_is_independent_of_thread_count) {
    auto one = search_additive_cyclic(15, 4, 9, 15, DEFAULT_BUDGET, 30, 1);
    auto three = search_additive_cyclic(15, 4, 9, 15, DEFAULT_BUDGET, 30, 3);
    ASSERT_EQ(one.size(), three.size());
    ASSERT_FALSE(one.empty());
    for (size_t i = 0; i < one.size(); i++) {
        EXPECT_EQ(one[i].form, three[i].form);
        EXPECT_EQ(one[i].params, three[i].params);
        EXPECT_TRUE(ac_self_orthogonal(one[i].form.p, one[i].form.q, one[i].form.r, 15));
        EXPECT_GE(one[i].params.d, 4u);
    }
    EXPECT_THROW(search_additive_cyclic(33, 4, 9, 15), PreconditionError);
    EXPECT_THROW(search_additive_cyclic(14, 4, 9, 15), PreconditionError);
}

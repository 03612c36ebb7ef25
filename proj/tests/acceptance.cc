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

// End-to-end checks. One PASS/FAIL line per criterion; exits 1 if any
// failed. Every check is exact; the only tolerances are the wall-clock
// limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "qgf4/bounds.hpp"
#include "qgf4/catalog.hpp"
#include "qgf4/constructions.hpp"
#include "qgf4/cyclic.hpp"
#include "qgf4/lp.hpp"
#include "qgf4/selfdual.hpp"
#include "qgf4/table.hpp"
#include "test_util.h"

using namespace qgf4;

namespace {

// Wall-clock limits in seconds.
constexpr double LIMIT_HAMMING = 1;
constexpr double LIMIT_DODECACODE = 1;
constexpr double LIMIT_CONCATENATION = 60;
constexpr double LIMIT_MACWILLIAMS = 10;
constexpr double LIMIT_LP = 300;
constexpr double LIMIT_TABLE = 600;
constexpr double LIMIT_SELFDUAL = 300;
constexpr double LIMIT_GOTTESMAN = 30;
constexpr double LIMIT_BCH = 300;
constexpr double LIMIT_PROPERTIES = 120;

constexpr size_t MACWILLIAMS_SAMPLES = 200;
constexpr size_t RANDOM_CODE_SAMPLES = 1000;

// Collects failure reasons; a criterion passes when none were recorded.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string &what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

int failed = 0;

void criterion(int id, const char *title, double limit, const std::function<void(Check &)> &body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception &e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit) {
        std::ostringstream s;
        s << "took " << secs << " s, limit " << limit << " s";
        c.failures.push_back(s.str());
    }
    bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s %2d %-48s %9.3f s\n", ok ? "PASS" : "FAIL", id, title, secs);
    for (const auto &f : c.failures) {
        std::printf("       - %s\n", f.c_str());
    }
    std::fflush(stdout);
}

std::vector<long> to_long(const WeightEnumerator &w) {
    std::vector<long> out;
    for (const auto &x : w.coeffs) {
        out.push_back(x.get_si());
    }
    return out;
}

bool linear_f(const BinaryMatrix &f) {
    for (uint32_t y = 0; y < (uint32_t{1} << f.size()); y++) {
        if ((apply_matrix(f, apply_matrix(f, y)) ^ apply_matrix(f, y) ^ y) != 0) {
            return false;
        }
    }
    return true;
}

void hamming(Check &c) {
    const auto &h = catalog_get("hamming_5").code;
    QuantumParams p = quantum_params(h);
    c.expect(p == (QuantumParams{5, 1, 3, true}), "params " + p.str());
    c.expect(sphere_packing_volume(5, 3) == 16, "sphere volume " + sphere_packing_volume(5, 3).get_str());
    c.expect(sphere_packing_volume(5, 3) == pow2(5 - 1), "volume differs from 2^(n-k)");
    c.expect(sphere_packing_ok(5, 1, 3) && !sphere_packing_ok(5, 1, 5), "sphere-packing predicate");
}

void dodecacode(Check &c) {
    const auto &d = catalog_get("dodecacode").code;
    c.expect(is_self_dual(d), "not self-dual");
    WeightEnumerator w = weight_distribution(d);
    c.expect(to_long(w) == std::vector<long>{1, 0, 0, 0, 0, 0, 396, 0, 1485, 0, 1980, 0, 234},
             "distribution " + w.str());
    c.expect(is_even(d), "not even");
    c.expect(quantum_params(d).d == 6, "d != 6");
    c.expect(selfdual_distance_bound(12, true) == 6, "even bound != 6");
}

void concatenation(Check &c) {
    Concatenation cc = concatenate(hamming_5_code(), hamming_5_code());
    QuantumReport r = quantum_report(cc.code);
    c.expect(cc.code.rank() == 24 && dual(cc.code).rank() == 26, "ranks");
    c.expect(!r.enumerated_dual_side, "distance not taken from the 2^24 side");
    c.expect(r.params == (QuantumParams{25, 1, 9, false}), "params " + r.params.str());
    c.expect(quantum_params(catalog_get("concatenated_25_24").code) == r.params, "catalog pair disagrees");
}

void macwilliams_oracle(Check &c) {
    std::mt19937_64 rng(2026);
    for (size_t t = 0; t < MACWILLIAMS_SAMPLES; t++) {
        size_t n = 1 + rng() % 10;
        AdditiveCode code = testing_util::random_code(n, rng() % (2 * n + 1), rng);
        WeightEnumerator w = weight_distribution(code);
        if (!(macwilliams(w, code.rank()) == weight_distribution(dual(code)))) {
            c.expect(false, "sample " + std::to_string(t) + " n=" + std::to_string(n));
        }
    }
}

void lp_set(Check &c) {
    for (size_t n = 5; n <= 10; n++) {
        c.expect(!lp_feasible(n, 1, 5).feasible(), "(" + std::to_string(n) + ",1,5) feasible");
    }
    c.expect(lp_feasible(11, 1, 5).feasible(), "(11,1,5) infeasible");
    c.expect(!lp_feasible(6, 2, 3).feasible(), "(6,2,3) feasible");
    LpOutcome o = lp_feasible(24, 0, 10);
    const LpBranchResult *even = o.branch(LpBranch::even);
    const LpBranchResult *odd = o.branch(LpBranch::odd);
    c.expect(even && even->result.feasible, "(24,0,10) even branch infeasible");
    c.expect(odd && !odd->result.feasible, "(24,0,10) odd branch feasible");
    for (const auto &b : o.branches) {
        if (b.result.feasible) {
            c.expect(check_witness(b.system, b.result.witness), "witness does not satisfy the system");
        } else {
            c.expect(check_certificate(b.system, b.result.certificate), "certificate does not verify");
        }
    }
}

void table_rows(Check &c) {
    Table t = build_table(10);
    size_t compared = 0;
    for (const auto &cell : t.cells) {
        if (cell.n < 3) {
            continue;
        }
        compared++;
        if (!cell.matches()) {
            std::ostringstream s;
            s << "(" << cell.n << "," << cell.k << ") computed " << cell.lower << "-" << cell.upper;
            c.expect(false, s.str());
        }
        if (cell.external) {
            c.expect(cell.stored && cell.stored->upper_mark != 0, "external bound on an unmarked cell");
        }
    }
    c.expect(compared == 60, "compared " + std::to_string(compared) + " cells");
}

void selfdual(Check &c) {
    const size_t t[] = {0, 1, 2, 3, 6, 11};
    const size_t in[] = {0, 1, 1, 1, 2, 4};
    for (size_t n = 1; n <= 5; n++) {
        std::string at = " at n=" + std::to_string(n);
        uint64_t count = 0;
        for_each_selfdual_packed(n, [&](const std::vector<uint32_t> &) { count++; });
        BigInt product = 1;
        for (size_t j = 1; j <= n; j++) {
            product *= pow2(j) + 1;
        }
        c.expect(BigInt(std::to_string(count)) == product, "enumeration count" + at);
        SelfDualClassification cl = classify_selfdual(n);
        c.expect(cl.classes.size() == t[n], "class count" + at);
        c.expect(cl.indecomposable_count() == in[n], "indecomposable count" + at);
        c.expect(cl.mass() == mass_formula(n), "mass formula" + at);
    }
}

void gottesman(Check &c) {
    AdditiveCode g8 = gottesman_code(3, companion_matrix(0b1011));
    c.expect(quantum_params(g8) == (QuantumParams{8, 3, 3, true}), "m=3 params");
    c.expect(to_long(weight_distribution(g8)) == std::vector<long>{1, 0, 0, 0, 0, 0, 28, 0, 3}, "m=3 enumerator");
    c.expect(are_equivalent(g8, gottesman_8_code(), 8), "m=3 not equivalent to the listed code");
    BinaryMatrix classes[] = {block_diagonal(companion_matrix(0b111), companion_matrix(0b111)),
                              companion_matrix(0b10101), companion_matrix(0b10011)};
    for (const auto &f : classes) {
        AdditiveCode g = gottesman_code(4, f);
        c.expect(quantum_params(g) == (QuantumParams{16, 10, 3, true}), "m=4 params");
        c.expect(is_linear(g) == linear_f(f), "m=4 linearity disagrees with f^2+f+1");
    }
}

void bch(Check &c) {
    const size_t design[] = {3, 4, 5, 7};
    const size_t k[] = {77, 69, 61, 53};
    for (int i = 0; i < 4; i++) {
        auto found = bch_search(85, Gf4::one(), design[i]);
        std::string tag = "design " + std::to_string(design[i]);
        if (found.size() != 1) {
            c.expect(false, tag + ": no code");
            continue;
        }
        const BchCode &b = found[0];
        c.expect(b.k == k[i], tag + ": k = " + std::to_string(b.k));
        c.expect(is_self_orthogonal(b.code), tag + ": not self-orthogonal");
        // The small side has 2^(n-k) <= 2^32 words, so all four are verified.
        QuantumParams p = quantum_params(b.code, uint64_t{1} << 32);
        c.expect(p == (QuantumParams{85, k[i], design[i], true}), tag + ": true params " + p.str());
    }
}

void properties(Check &c) {
    // Weight parity identities, exhaustive for n <= 4.
    for (size_t n = 1; n <= 4; n++) {
        uint64_t total = uint64_t{1} << (2 * n);
        for (uint64_t x = 0; x < total; x++) {
            auto u = testing_util::vector_from_index(n, x);
            if (symplectic_inner(u, u.times(Gf4::w())) != bool(u.weight() & 1)) {
                c.expect(false, "u * wu parity at n=" + std::to_string(n));
            }
            for (uint64_t y = 0; y < total; y++) {
                auto v = testing_util::vector_from_index(n, y);
                if (((u + v).weight() & 1) != ((u.weight() + v.weight() + symplectic_inner(u, v)) & 1)) {
                    c.expect(false, "wt(u+v) parity at n=" + std::to_string(n));
                }
            }
        }
    }
    std::mt19937_64 rng(7);
    // Even codes are self-orthogonal; linear self-orthogonal codes are even.
    for (int t = 0; t < 300; t++) {
        size_t n = 2 + rng() % 7;
        AdditiveCode code = testing_util::random_code(n, 1 + rng() % n, rng);
        if (is_even(code)) {
            c.expect(is_self_orthogonal(code), "even code not self-orthogonal");
        }
        AdditiveCode so = testing_util::random_self_orthogonal(n, 1 + rng() % n, rng).linear_closure();
        if (is_self_orthogonal(so)) {
            c.expect(is_even(so), "linear self-orthogonal code not even");
        }
    }
    // Constacyclic congruence vs brute force, every divisor for odd n <= 15.
    for (size_t n = 1; n <= 15; n += 2) {
        for (Gf4 kappa : {Gf4::one(), Gf4::w(), Gf4::wbar()}) {
            auto fs = factor_xn_minus_kappa(n, kappa).all();
            for (uint64_t m = 0; m < (uint64_t{1} << fs.size()); m++) {
                Gf4Poly g = Gf4Poly::constant(Gf4::one());
                for (size_t i = 0; i < fs.size(); i++) {
                    if ((m >> i) & 1) {
                        g = g * fs[i].poly;
                    }
                }
                if (is_cc_self_orthogonal(g, n, kappa) != is_self_orthogonal(constacyclic_code(g, n, kappa))) {
                    c.expect(false, "constacyclic congruence at n=" + std::to_string(n) + " g=" + g.str());
                }
            }
        }
    }
    // Additive cyclic congruences vs brute force, exhaustive for odd n <= 9.
    for (size_t n = 1; n <= 9; n += 2) {
        auto divs = binary_divisors_xn1(n);
        uint64_t xn1 = f2poly_xn1(n);
        for (uint64_t p : divs) {
            for (uint64_t r : divs) {
                int dr = f2poly_degree(r);
                for (uint64_t q = 0; q < (uint64_t{1} << std::max(dr, 0)); q++) {
                    if (dr > 0 && f2poly_mulmod(q, f2poly_mod(f2poly_div(xn1, p), r), r) != 0) {
                        continue;
                    }
                    if (ac_self_orthogonal(p, q, r, n) != is_self_orthogonal(additive_cyclic(p, q, r, n))) {
                        c.expect(false, "additive cyclic congruence at n=" + std::to_string(n));
                    }
                }
            }
        }
    }
    // Duality, biduality and rank on random codes.
    for (size_t t = 0; t < RANDOM_CODE_SAMPLES; t++) {
        size_t n = 1 + rng() % 12;
        AdditiveCode code = testing_util::random_code(n, rng() % (2 * n + 1), rng);
        AdditiveCode d = dual(code);
        bool ok = code.rank() + d.rank() == 2 * n && dual(d) == code &&
                  is_self_orthogonal(code) == d.contains(code);
        for (const auto &g : code.generators()) {
            for (const auto &h : d.generators()) {
                ok = ok && !symplectic_inner(g, h);
            }
        }
        if (!ok) {
            c.expect(false, "duality invariant on sample " + std::to_string(t));
        }
    }
}

}  // namespace

int main() {
    criterion(1, "[[5,1,3]] and sphere-packing equality", LIMIT_HAMMING, hamming);
    criterion(2, "dodecacode distribution and even bound", LIMIT_DODECACODE, dodecacode);
    criterion(3, "concatenation gives [[25,1,9]] impure", LIMIT_CONCATENATION, concatenation);
    criterion(4, "MacWilliams on 200 random codes", LIMIT_MACWILLIAMS, macwilliams_oracle);
    criterion(5, "linear-programming cells", LIMIT_LP, lp_set);
    criterion(6, "bounds table rows 3-10", LIMIT_TABLE, table_rows);
    criterion(7, "self-dual classification n <= 5", LIMIT_SELFDUAL, selfdual);
    criterion(8, "Gottesman codes m = 3, 4", LIMIT_GOTTESMAN, gottesman);
    criterion(9, "BCH family at n = 85", LIMIT_BCH, bch);
    criterion(10, "property suites", LIMIT_PROPERTIES, properties);
    std::printf("%d of 10 criteria failed\n", failed);
    return failed ? 1 : 0;
}

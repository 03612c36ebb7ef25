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

#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgf4/code.hpp"
#include "qgf4/constructions.hpp"
#include "qgf4/cyclic.hpp"
#include "qgf4/io.hpp"
#include "qgf4/params.hpp"

namespace qgf4 {

/// A named code with the parameters it is claimed to have.
struct CatalogEntry {
    std::string name;
    std::string source;     // where the generators come from
    AdditiveCode code;
    std::optional<QuantumParams> claimed;  // absent for dual-side entries
    std::optional<bool> claimed_pure;      // only when stated
    std::string dual_of;    // for (n, 2^{n+k}) entries: the name of the small side
    std::string metadata;   // unverified remarks (|Aut| claims, equivalences)
    bool verified = false;

    std::vector<std::string> header() const {
        std::vector<std::string> h{" " + name, " source: " + source};
        if (claimed) {
            h.push_back(" claimed: [[" + std::to_string(claimed->n) + "," + std::to_string(claimed->k) + "," +
                        std::to_string(claimed->d) + "]]" +
                        (claimed_pure ? (*claimed_pure ? " pure" : " impure") : ""));
        }
        if (!dual_of.empty()) {
            h.push_back(" dual of: " + dual_of);
        }
        if (!metadata.empty()) {
            h.push_back(" note (unverified): " + metadata);
        }
        return h;
    }
    /// Code-file text with the header as comments.
    std::string file_text() const {
        return format_code(code, header());
    }
};

/// An upper bound that the linear program alone does not give.
struct ExternalBound {
    size_t n, k;
    size_t upper;
    char mark;  // 'a': a code meeting it must be impure, 'b': special argument, 'g': needs the parity split
};

namespace detail {

inline AdditiveCode rows(const std::vector<std::string> &r) {
    return AdditiveCode::from_strings(r);
}

inline QuantumParams claim(size_t n, size_t k, size_t d) {
    QuantumParams p;
    p.n = n;
    p.k = k;
    p.d = d;
    return p;
}

inline AdditiveCode hexacode_shortened() {
    AdditiveCode h = AdditiveCode::linear_span({"001111", "0101wW", "1001Ww"});
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

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, std::string source, AdditiveCode code, std::optional<QuantumParams> claimed,
                   std::optional<bool> pure = std::nullopt, std::string metadata = "") {
        CatalogEntry e;
        e.name = std::move(name);
        e.source = std::move(source);
        e.code = std::move(code);
        e.claimed = claimed;
        e.claimed_pure = pure;
        e.metadata = std::move(metadata);
        c.push_back(std::move(e));
    };

    add("hexacode", "GF(4)-span of 001111, 0101wW, 1001Ww", AdditiveCode::linear_span({"001111", "0101wW", "1001Ww"}),
        claim(6, 0, 4), true, "|Aut| = 2160 as a linear code (3.S6)");
    add("dodecacode", "(12,2^12) additive generator matrix",
        rows({"000000111111", "000000wwwwww", "111111000000", "wwwwww000000", "0001wW0001wW", "000wW1000wW1",
              "1Ww0001Ww000", "w1W000w1W000", "0001WwwW1000", "000w1W1wW000", "1wW000000Ww1", "W1w0000001Ww"}),
        claim(12, 0, 6), true, "|Aut| = 648");
    add("hamming_5", "GF(4)-span of 01111, 101wW", AdditiveCode::linear_span({"01111", "101wW"}), claim(5, 1, 3),
        true);
    {
        // ((01wwW1W))0 plus the two constant words.
        std::vector<std::string> r;
        std::string s = "01wwW1W";
        for (size_t i = 0; i < s.size(); i++) {
            r.push_back(s.substr(s.size() - i) + s.substr(0, s.size() - i) + "0");
        }
        r.push_back("11111111");
        r.push_back("wwwwwwww");
        add("code_8_3_3", "cyclic shifts of 01wwW1W followed by 0, with 11111111 and wwwwwwww", rows(r), claim(8, 3, 3),
            std::nullopt, "unique up to equivalence; |Aut| = 168");
    }
    std::vector<std::string> concat_rows = {
        "0000000000000000000001111", "00000000000000000000101wW", "0000000000000000111100000",
        "000000000000000101wW00000", "0000000000011110000000000", "0000000000101wW0000000000",
        "0000001111000000000000000", "00000101wW000000000000000", "0111100000000000000000000",
        "101wW00000000000000000000", "00000001Ww001Ww001Ww001Ww", "001Ww00000001Ww00w1W00Ww1",
    };
    add("concatenated_25_24", "concatenated Hamming code, (25,2^24) linear generator matrix", AdditiveCode::linear_span(concat_rows),
        claim(25, 1, 9), false);
    concat_rows.push_back("0000000000001Ww00Ww100w1W");
    add("concatenated_25_26", "concatenated Hamming code, (25,2^26) linear generator matrix", AdditiveCode::linear_span(concat_rows),
        std::nullopt);
    c.back().dual_of = "concatenated_25_24";
    add("extended_40_7", "(40,2^7) additive generator matrix",
        rows({"0000000011111111111111111111111111111111", "00000000wwwwwwwwwwwwwwwwwwwwwwwwwwwwwwww",
              "001WwwW1w0101WwwW1010wW10wWwW1001WwWw01W", "01ww10WW0w00w0wW1W11W1WW1W11W1Ww0w00w0ww",
              "0w0W1W1w0110011wwWWwwWW00110011wwWWwwWW0", "10w0wW1W000wwww1111WWWW0000wwww1111WWWW0",
              "w0w1W1W0000111100001111wwwwWWWWwwwwWWWW0"}),
        claim(40, 33, 3));

    struct Cyc {
        const char *name;
        std::vector<std::string> gens;
        size_t n, k, d;
    };
    for (const auto &t : std::vector<Cyc>{
             {"cyclic_15_0_6", {"w11010100101011"}, 15, 0, 6},
             {"cyclic_21_0_8", {"WW1w00111101011011000", "101110010111001011100"}, 21, 0, 8},
             {"cyclic_23_0_8", {"w0101111000000001111010"}, 23, 0, 8},
             {"cyclic_23_12_4", {"WWwWw11W11w1w1011000000"}, 23, 12, 4},
             {"cyclic_25_0_8", {"111010w010111000000000000"}, 25, 0, 8},
         }) {
        std::string src = "all cyclic shifts of";
        for (const auto &g : t.gens) {
            src += " " + g;
        }
        add(t.name, src, cyclic_orbit_code(t.gens), claim(t.n, t.k, t.d));
    }
    struct Qc {
        const char *name;
        std::vector<std::string> blocks;
        size_t n, k, d;
    };
    for (const auto &t : std::vector<Qc>{
             {"quasicyclic_14_0_6", {"1000000", "W1Ww00w"}, 14, 0, 6},
             {"quasicyclic_14_8_3", {"1011100", "1Www10W"}, 14, 8, 3},
             {"quasicyclic_15_5_4", {"10000", "11W00", "11ww0"}, 15, 5, 4},
             {"quasicyclic_18_6_5", {"110000", "101W00", "11w1w0"}, 18, 6, 5},
             {"quasicyclic_20_10_4", {"10000", "1W100", "1111w", "11WwW"}, 20, 10, 4},
             {"quasicyclic_25_15_4", {"10000", "1w1w0", "0101W", "1wWw1", "10ww0"}, 25, 15, 4},
             {"quasicyclic_28_14_5", {"wwW1000", "W0W1000", "1WW1wW0", "WwWww00"}, 28, 14, 5},
             {"quasicyclic_30_20_4", {"11100", "10w00", "11Ww0", "1w1wW", "10w10", "1w100"}, 30, 20, 4},
             {"quasicyclic_40_30_4",
              {"001ww", "011w1", "0010W", "001w1", "00101", "1w1wW", "111Ww", "01w1W"},
              40,
              30,
              4},
         }) {
        std::string src = "GF(4)-span of simultaneous cyclic shifts of blocks";
        for (const auto &g : t.blocks) {
            src += " " + g;
        }
        add(t.name, src, quasicyclic_code(t.blocks), claim(t.n, t.k, t.d));
    }
    add("uuv_12_4_4", "(12,2^8) linear generator matrix",
        AdditiveCode::linear_span({"000000111111", "0011110011ww", "0101wW010w1w", "1001Ww01w0w1"}),
        claim(12, 4, 4), std::nullopt, "|Aut| = 720, transitive");
    add("code_14_6_4", "(14,2^8) linear generator matrix",
        AdditiveCode::linear_span({"00000011111111", "00111100001111", "0101wW01wW01wW", "1001Ww01Ww10wW"}),
        claim(14, 6, 4), std::nullopt, "|Aut| = 8064, transitive");
    add("ovoid_17_9_4", "dual of the linear cyclic code generated by 1w1w1 0^12",
        dual(cyclic_orbit_code({"1w1w1" + std::string(12, '0')}, true)), claim(17, 9, 4), std::nullopt,
        "two-weight ovoid code; |Aut| = 48960");
    add("code_17_11_3", "(17,2^6) additive generator matrix",
        rows({"0010wWwW11wW0011W", "00w10w0WWW11wWW11", "01001w1wWWW0W1w0W", "0w0ww0W1W1wWw1ww1",
              "100wW001wwW1Ww0W1", "w001WWW0W0W1011wW"}),
        claim(17, 11, 3), std::nullopt, "trivial automorphism group");
    add("c1", "the trivial self-dual code {0, 1}", rows({"1"}), claim(1, 0, 1), true);
    add("selfdual_4_indecomposable", "generators 1100, 0011, wwww, 01wW", rows({"1100", "0011", "wwww", "01wW"}),
        claim(4, 0, 2), true);
    add("selfdual_5_indecomposable_a", "generators 11000, 00110, 00101, 01www, ww001",
        rows({"11000", "00110", "00101", "01www", "ww001"}), claim(5, 0, 2), true);
    add("selfdual_5_indecomposable_b", "generators 11000, 00110, 10101, ww00w, 00www",
        rows({"11000", "00110", "10101", "ww00w", "00www"}), claim(5, 0, 2), true);
    add("selfdual_5_3", "hexacode words with first symbol 0 or 1, first coordinate deleted", hexacode_shortened(),
        claim(5, 0, 3), true);
    add("second_6_1_3", "generators 000011, 011110, 0wwwww, 101wWw, w0wW10",
        rows({"000011", "011110", "0wwwww", "101wWw", "w0wW10"}), claim(6, 1, 3), false,
        "not equivalent to the lengthened Hamming code");
    for (auto &e : c) {
        if (e.claimed && e.claimed_pure) {
            e.claimed->pure = *e.claimed_pure;
        }
    }
    return c;
}

}  // namespace detail

/// All entries, in a fixed order.
inline const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> c = detail::build_catalog();
    return c;
}

inline const CatalogEntry &catalog_get(const std::string &name) {
    for (const auto &e : catalog()) {
        if (e.name == name) {
            return e;
        }
    }
    throw PreconditionError("catalog: unknown entry '" + name + "'");
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto &e : catalog()) {
        out.push_back(e.name);
    }
    return out;
}

/// Outcome of re-checking an entry.
struct EntryCheck {
    bool ok = false;
    std::optional<QuantumParams> computed;
    std::string message;
};

/// Recomputes an entry's parameters (or dual relation) and compares them
/// with the claim. The purity flag is compared only when it was stated.
inline EntryCheck verify_entry(const CatalogEntry &e, uint64_t budget = DEFAULT_BUDGET) {
    EntryCheck r;
    if (!e.dual_of.empty()) {
        const auto &small = catalog_get(e.dual_of);
        r.ok = dual(small.code) == e.code;
        r.message = r.ok ? "equals the dual of " + e.dual_of : "is not the dual of " + e.dual_of;
        return r;
    }
    if (!is_self_orthogonal(e.code)) {
        r.message = "not self-orthogonal";
        return r;
    }
    QuantumParams p = quantum_params(e.code, budget);
    r.computed = p;
    const auto &c = *e.claimed;
    r.ok = p.n == c.n && p.k == c.k && p.d == c.d && (!e.claimed_pure || p.pure == *e.claimed_pure);
    r.message = p.str();
    return r;
}

/// Upper bounds that come from arguments beyond the linear program,
/// keyed by (n, k), for n <= 30.
inline const std::vector<ExternalBound> &external_bounds() {
    static const std::vector<ExternalBound> b = {
        {6, 1, 3, 'a'},   {12, 1, 5, 'a'},  {21, 7, 6, 'a'},  {24, 1, 9, 'a'},  {30, 1, 11, 'a'},
        {7, 0, 3, 'b'},   {13, 0, 5, 'b'},  {15, 4, 4, 'b'},  {15, 7, 3, 'b'},  {16, 8, 3, 'b'},
        {18, 12, 2, 'b'}, {19, 13, 2, 'b'}, {22, 14, 3, 'b'}, {25, 0, 9, 'b'},  {19, 8, 4, 'g'},
    };
    return b;
}

inline std::optional<ExternalBound> external_bound(size_t n, size_t k) {
    for (const auto &b : external_bounds()) {
        if (b.n == n && b.k == k) {
            return b;
        }
    }
    return std::nullopt;
}

}  // namespace qgf4

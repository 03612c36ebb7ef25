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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "qgf4/bounds.hpp"
#include "qgf4/code.hpp"
#include "qgf4/constructions.hpp"
#include "qgf4/group.hpp"
#include "qgf4/params.hpp"

namespace qgf4 {

/// prod_{j=1}^n (2^j + 1): the number of self-dual codes of length n.
inline BigInt selfdual_count(size_t n) {
    BigInt r = 1;
    for (size_t j = 1; j <= n; j++) {
        r *= pow2(j) + 1;
    }
    return r;
}

namespace detail {

inline bool packed_symplectic(uint32_t x, uint32_t y, size_t n) {
    uint32_t mask = (uint32_t{1} << n) - 1;
    return std::popcount(((x & mask) & (y >> n)) ^ ((x >> n) & (y & mask))) & 1;
}

/// Fully reduced echelon form of packed rows, sorted by descending pivot.
inline std::vector<uint32_t> packed_rref(std::vector<uint32_t> rows) {
    std::vector<uint32_t> out;
    for (uint32_t r : rows) {
        for (uint32_t b : out) {
            r = std::min(r, r ^ b);
        }
        if (r == 0) {
            continue;
        }
        for (auto &b : out) {
            b = std::min(b, b ^ r);
        }
        out.push_back(r);
        std::sort(out.begin(), out.end(), std::greater<>());
    }
    return out;
}

/// Injective key of a packed subspace with 2n * rank <= 64.
inline uint64_t packed_key(const std::vector<uint32_t> &rows, size_t n) {
    uint64_t k = 0;
    for (uint32_t r : packed_rref(rows)) {
        k = (k << (2 * n)) | r;
    }
    return k;
}

/// Lagrangians of the coordinates i..n-1, built from those of i+1..n-1.
/// With e = a_i and f = b_i, either e is in L and L = <e> + L', or
/// L = <f + alpha e + w> + {u + <w,u> e : u in L'} with w running over a
/// complement of L' in the later coordinates. That gives 1 + 2^{n-i}
/// lifts per L', each produced once.
inline void lagrangians_from(size_t i, size_t n, std::vector<uint32_t> &basis,
                             const std::function<void(const std::vector<uint32_t> &)> &fn) {
    if (i == n) {
        fn(basis);
        return;
    }
    lagrangians_from(i + 1, n, basis, [&](const std::vector<uint32_t> &lp) {
        uint32_t e = uint32_t{1} << i;
        uint32_t f = uint32_t{1} << (n + i);
        std::vector<uint32_t> cur = lp;
        cur.push_back(e);
        fn(cur);

        // Complement of L' inside the later coordinates: unit vectors at
        // the non-pivot positions of its echelon form.
        std::vector<uint32_t> red = packed_rref(lp);
        uint32_t pivots = 0;
        for (uint32_t r : red) {
            pivots |= uint32_t{1} << (31 - std::countl_zero(r));
        }
        std::vector<uint32_t> comp;
        for (size_t j = i + 1; j < n; j++) {
            for (uint32_t bit : {uint32_t{1} << j, uint32_t{1} << (n + j)}) {
                if (!(pivots & bit)) {
                    comp.push_back(bit);
                }
            }
        }
        uint32_t w = 0;
        for (uint64_t t = 0; t < (uint64_t{1} << comp.size()); t++) {
            if (t) {
                w ^= comp[std::countr_zero(t)];
            }
            std::vector<uint32_t> lifted(lp.size());
            for (size_t q = 0; q < lp.size(); q++) {
                lifted[q] = lp[q] ^ (packed_symplectic(w, lp[q], n) ? e : 0);
            }
            lifted.push_back(f ^ w);
            fn(lifted);
            lifted.back() ^= e;
            fn(lifted);
        }
    });
}

inline void check_selfdual_n(size_t n, size_t limit, const char *who) {
    if (n < 1 || n > limit) {
        throw PreconditionError(std::string(who) + ": requires 1 <= n <= " + std::to_string(limit));
    }
}

}  // namespace detail

/// Calls fn on every self-dual code of length n exactly once, as packed
/// generators (a bits in 0..n-1, b bits in n..2n-1).
inline void for_each_selfdual_packed(size_t n, const std::function<void(const std::vector<uint32_t> &)> &fn,
                                     size_t limit = 6) {
    detail::check_selfdual_n(n, std::min<size_t>(limit, 15), "enumerate_selfdual");
    std::vector<uint32_t> basis;
    detail::lagrangians_from(0, n, basis, fn);
}

/// Calls fn on every self-dual code of length n exactly once.
inline void enumerate_selfdual(size_t n, const std::function<void(const AdditiveCode &)> &fn, size_t limit = 6) {
    for_each_selfdual_packed(
        n,
        [&](const std::vector<uint32_t> &g) {
            std::vector<SymplecticVector> rows;
            for (uint32_t x : g) {
                rows.push_back(detail::unpack_small(x, n));
            }
            fn(AdditiveCode(n, rows));
        },
        limit);
}

/// True if the coordinates split into two nonempty parts S, S' with
/// C = C_S + C_S' (C_S the subcode supported inside S). n <= 20.
inline bool is_decomposable(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    size_t n = c.n();
    if (n > 20) {
        throw PreconditionError("is_decomposable: requires n <= 20");
    }
    if (n < 2) {
        return false;
    }
    detail::check_budget(c.rank(), budget);
    std::vector<uint64_t> f(size_t{1} << n, 0);
    std::vector<SymplecticVector> g = c.rref();
    // Supports need the full word, so walk the span with Gray code.
    SymplecticVector cur(n);
    f[0]++;
    for (uint64_t t = 1; t < (uint64_t{1} << g.size()); t++) {
        cur ^= g[std::countr_zero(t)];
        uint32_t s = 0;
        for (size_t i = 0; i < n; i++) {
            s |= uint32_t(cur.a(i) || cur.b(i)) << i;
        }
        f[s]++;
    }
    // Subset sums: f[S] = #codewords with support inside S.
    for (size_t i = 0; i < n; i++) {
        for (size_t s = 0; s < f.size(); s++) {
            if (s >> i & 1) {
                f[s] += f[s ^ (size_t{1} << i)];
            }
        }
    }
    size_t full = f.size() - 1;
    uint64_t total = uint64_t{1} << g.size();
    // S contains coordinate 0 to visit each split once.
    for (size_t s = 1; s < full; s += 2) {
        if (f[s] * f[full ^ s] == total) {
            return true;
        }
    }
    return false;
}

struct SelfDualClass {
    AdditiveCode representative;
    BigInt aut_order;
    BigInt orbit_size;
    bool indecomposable = false;
    bool even = false;
    QuantumParams params;
};

struct SelfDualClassification {
    size_t n = 0;
    BigInt total;  // codes enumerated
    std::vector<SelfDualClass> classes;

    size_t indecomposable_count() const {
        return size_t(std::count_if(classes.begin(), classes.end(), [](const auto &c) { return c.indecomposable; }));
    }
    /// sum 1/|Aut| over the classes.
    Rational mass() const {
        Rational m = 0;
        for (const auto &c : classes) {
            m += Rational(BigInt(1), c.aut_order);
        }
        m.canonicalize();
        return m;
    }
};

/// prod (2^j+1) / (6^n n!).
inline Rational mass_formula(size_t n) {
    Rational r(selfdual_count(n), monomial_group_order(n));
    r.canonicalize();
    return r;
}

/// Splits the self-dual codes of length n into G_n orbits by walking the
/// whole group from one code of each orbit. The representative of each
/// class is the member with the smallest key; classes are ordered by
/// (d, even, |Aut|) descending d first.
inline SelfDualClassification classify_selfdual(size_t n) {
    detail::check_selfdual_n(n, 5, "classify_selfdual");
    std::vector<std::vector<uint32_t>> codes;
    for_each_selfdual_packed(n, [&](const std::vector<uint32_t> &g) { codes.push_back(g); });

    SelfDualClassification out;
    out.n = n;
    mpz_set_ui(out.total.get_mpz_t(), codes.size());
    std::unordered_set<uint64_t> seen;
    BigInt group = monomial_group_order(n);
    for (const auto &g : codes) {
        uint64_t self = detail::packed_key(g, n);
        if (seen.count(self)) {
            continue;
        }
        uint64_t aut = 0, orbit = 0;
        uint64_t best = self;
        std::vector<uint32_t> best_rows = g;
        std::vector<uint32_t> img_rows(g.size());
        detail::for_each_monomial(n, [&](const auto &img, const auto &, const auto &) {
            for (size_t q = 0; q < g.size(); q++) {
                img_rows[q] = detail::apply_packed(img, g[q], n);
            }
            uint64_t key = detail::packed_key(img_rows, n);
            if (key == self) {
                aut++;
            }
            if (seen.insert(key).second) {
                orbit++;
                if (key < best) {
                    best = key;
                    best_rows = img_rows;
                }
            }
            return true;
        });
        SelfDualClass cls;
        std::vector<SymplecticVector> rows;
        for (uint32_t x : detail::packed_rref(best_rows)) {
            rows.push_back(detail::unpack_small(x, n));
        }
        cls.representative = AdditiveCode(n, rows);
        mpz_set_ui(cls.aut_order.get_mpz_t(), aut);
        mpz_set_ui(cls.orbit_size.get_mpz_t(), orbit);
        if (cls.aut_order * cls.orbit_size != group) {
            throw std::logic_error("classify_selfdual: orbit-stabilizer mismatch");
        }
        cls.indecomposable = !is_decomposable(cls.representative);
        cls.even = is_even(cls.representative);
        cls.params = quantum_params(cls.representative);
        out.classes.push_back(std::move(cls));
    }
    std::stable_sort(out.classes.begin(), out.classes.end(), [](const auto &x, const auto &y) {
        if (x.params.d != y.params.d) {
            return x.params.d > y.params.d;
        }
        if (x.even != y.even) {
            return x.even;
        }
        return x.aut_order < y.aut_order;
    });
    return out;
}

/// One summand of a code generated by weight-2 words.
struct Weight2Component {
    bool plus = false;  // d_2^+ rather than d_m
    size_t length = 0;
    std::vector<size_t> coords;

    std::string name() const {
        return "d" + std::to_string(length) + (plus ? "+" : "");
    }
};

/// Splits a self-orthogonal code generated by weight-2 words, with no
/// identically-zero coordinate, into its d_2^+ and d_m summands.
inline std::vector<Weight2Component> weight2_decomposition(const AdditiveCode &c) {
    size_t n = c.n();
    if (!is_self_orthogonal(c)) {
        throw PreconditionError("weight2_decomposition: code is not self-orthogonal");
    }
    for (size_t i = 0; i < n; i++) {
        if (detail::projection_rank(c, i) == 0) {
            throw PreconditionError("weight2_decomposition: coordinate " + std::to_string(i) + " is identically zero");
        }
    }
    // Weight-2 words and the coordinate graph they span.
    AdditiveCode w2(n);
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> root = [&](size_t x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            for (uint8_t x = 1; x < 4; x++) {
                for (uint8_t y = 1; y < 4; y++) {
                    SymplecticVector v(n);
                    v.set(i, Gf4(x));
                    v.set(j, Gf4(y));
                    if (c.contains(v)) {
                        w2.add_generator(v);
                        parent[root(i)] = root(j);
                    }
                }
            }
        }
    }
    if (w2.rank() != c.rank()) {
        throw PreconditionError("weight2_decomposition: code is not generated by weight-2 words");
    }
    std::vector<Weight2Component> out;
    std::vector<bool> done(n, false);
    for (size_t i = 0; i < n; i++) {
        if (done[i]) {
            continue;
        }
        Weight2Component comp;
        for (size_t j = i; j < n; j++) {
            if (root(j) == root(i)) {
                comp.coords.push_back(j);
                done[j] = true;
            }
        }
        comp.length = comp.coords.size();
        if (comp.length < 2) {
            throw PreconditionError("weight2_decomposition: isolated coordinate");
        }
        // Rank of the subcode on this component.
        std::vector<bool> outside(n, true);
        for (size_t j : comp.coords) {
            outside[j] = false;
        }
        size_t r = 0;
        {
            AdditiveCode sub(n);
            for (const auto &g : w2.generators()) {
                bool inside = true;
                for (size_t j = 0; j < n && inside; j++) {
                    if (outside[j] && !g.get(j).is_zero()) {
                        inside = false;
                    }
                }
                if (inside) {
                    sub.add_generator(g);
                }
            }
            r = sub.rank();
        }
        if (comp.length == 2 && r == 2) {
            comp.plus = true;
        } else if (r != comp.length - 1) {
            throw std::logic_error("weight2_decomposition: component of unexpected rank");
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace qgf4

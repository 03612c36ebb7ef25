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
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "qgf4/enumerator.hpp"

namespace qgf4 {

/// The six coordinate maps that preserve the trace inner product, in the
/// fixed order x, wx, Wx, conj(x), w conj(x), W conj(x).
inline Gf4 s3_apply(uint8_t action, Gf4 x) {
    static constexpr uint8_t scale[6] = {3, 1, 2, 3, 1, 2};
    Gf4 y = action >= 3 ? x.conj() : x;
    return y * Gf4(scale[action % 6]);
}

inline uint8_t s3_inverse(uint8_t action) {
    for (uint8_t t = 0; t < 6; t++) {
        bool ok = true;
        for (uint8_t x = 0; x < 4; x++) {
            if (s3_apply(t, s3_apply(action, Gf4(x))) != Gf4(x)) {
                ok = false;
            }
        }
        if (ok) {
            return t;
        }
    }
    return 0;
}

/// An element of G_n: coordinate i is sent to position perm[i] after the
/// S3 action action[i] is applied to its symbol.
struct MonomialMap {
    std::vector<size_t> perm;
    std::vector<uint8_t> action;

    static MonomialMap identity(size_t n) {
        MonomialMap g;
        g.perm.resize(n);
        std::iota(g.perm.begin(), g.perm.end(), size_t{0});
        g.action.assign(n, 0);
        return g;
    }
    static MonomialMap random(size_t n, std::mt19937_64 &rng) {
        MonomialMap g = identity(n);
        std::shuffle(g.perm.begin(), g.perm.end(), rng);
        for (auto &a : g.action) {
            a = uint8_t(rng() % 6);
        }
        return g;
    }
    size_t n() const {
        return perm.size();
    }

    SymplecticVector apply(const SymplecticVector &u) const {
        u.check_same_n(n());
        SymplecticVector r(n());
        for (size_t i = 0; i < n(); i++) {
            r.set(perm[i], s3_apply(action[i], u.get(i)));
        }
        return r;
    }
    AdditiveCode apply(const AdditiveCode &c) const {
        std::vector<SymplecticVector> rows;
        for (const auto &g : c.generators()) {
            rows.push_back(apply(g));
        }
        return AdditiveCode(c.n(), rows);
    }
    MonomialMap inverse() const {
        MonomialMap g;
        g.perm.assign(n(), 0);
        g.action.assign(n(), 0);
        for (size_t i = 0; i < n(); i++) {
            g.perm[perm[i]] = i;
            g.action[perm[i]] = s3_inverse(action[i]);
        }
        return g;
    }
};

/// 6^n n!.
inline BigInt monomial_group_order(size_t n) {
    BigInt f = 1;
    for (size_t i = 2; i <= n; i++) {
        f *= (unsigned long)i;
    }
    return f * pow_ui(6, n);
}

namespace detail {

/// Packs a length-n word (n <= 16) into a | b << n.
inline uint32_t pack_small(const SymplecticVector &v) {
    uint32_t x = 0;
    for (size_t i = 0; i < v.n(); i++) {
        x |= uint32_t(v.a(i)) << i;
        x |= uint32_t(v.b(i)) << (v.n() + i);
    }
    return x;
}

inline SymplecticVector unpack_small(uint32_t x, size_t n) {
    SymplecticVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set_a(i, (x >> i) & 1);
        v.set_b(i, (x >> (n + i)) & 1);
    }
    return v;
}

/// Membership bitmap over all 2^{2n} packed words.
struct SmallCodeSet {
    std::vector<uint64_t> bits;
    explicit SmallCodeSet(size_t n, const std::vector<uint32_t> &gens) : bits(((size_t{1} << (2 * n)) + 63) / 64, 0) {
        uint32_t cur = 0;
        bits[0] |= 1;
        for (uint64_t i = 1; i < (uint64_t{1} << gens.size()); i++) {
            cur ^= gens[std::countr_zero(i)];
            bits[cur >> 6] |= uint64_t{1} << (cur & 63);
        }
    }
    bool has(uint32_t x) const {
        return (bits[x >> 6] >> (x & 63)) & 1;
    }
};

/// Walks all of G_n. For each element the callback receives the per-coordinate
/// image table img[i][sym] (packed contribution of symbol sym at coordinate i)
/// and returns false to stop the walk.
inline void for_each_monomial(size_t n,
                              const std::function<bool(const std::vector<std::array<uint32_t, 4>> &,
                                                       const std::vector<size_t> &,
                                                       const std::vector<uint8_t> &)> &fn) {
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    // contrib[i][p][t][sym]: packed contribution of symbol sym at coordinate
    // i under action t when sent to position p. Only p and t vary.
    std::vector<std::array<std::array<uint32_t, 4>, 6>> at_pos(n);
    for (size_t p = 0; p < n; p++) {
        for (uint8_t t = 0; t < 6; t++) {
            for (uint8_t s = 0; s < 4; s++) {
                Gf4 y = s3_apply(t, Gf4(s));
                at_pos[p][t][s] = (uint32_t(y.a()) << p) | (uint32_t(y.b()) << (n + p));
            }
        }
    }
    std::vector<std::array<uint32_t, 4>> img(n);
    std::vector<uint8_t> action(n, 0);
    do {
        std::fill(action.begin(), action.end(), 0);
        for (size_t i = 0; i < n; i++) {
            img[i] = at_pos[perm[i]][0];
        }
        while (true) {
            if (!fn(img, perm, action)) {
                return;
            }
            size_t i = 0;
            while (i < n && action[i] == 5) {
                action[i] = 0;
                img[i] = at_pos[perm[i]][0];
                i++;
            }
            if (i == n) {
                break;
            }
            action[i]++;
            img[i] = at_pos[perm[i]][action[i]];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline uint32_t apply_packed(const std::vector<std::array<uint32_t, 4>> &img, uint32_t x, size_t n) {
    uint32_t r = 0;
    for (size_t i = 0; i < n; i++) {
        r |= img[i][((x >> i) & 1) | (((x >> (n + i)) & 1) << 1)];
    }
    return r;
}

inline std::vector<uint32_t> packed_generators(const AdditiveCode &c) {
    std::vector<uint32_t> g;
    for (const auto &v : c.generators()) {
        g.push_back(pack_small(v));
    }
    return g;
}

inline void check_small(size_t n, size_t limit_n) {
    if (n > limit_n) {
        throw PreconditionError("n=" + std::to_string(n) + " exceeds the brute-force limit " + std::to_string(limit_n));
    }
    if (n > 12) {
        throw PreconditionError("brute-force group walks support n <= 12");
    }
}

}  // namespace detail

/// Finds g in G_n with g(c1) = c2, by brute force.
inline std::optional<MonomialMap> find_equivalence(const AdditiveCode &c1, const AdditiveCode &c2,
                                                   size_t limit_n = 6) {
    if (c1.n() != c2.n() || c1.rank() != c2.rank()) {
        return std::nullopt;
    }
    size_t n = c1.n();
    detail::check_small(n, limit_n);
    if (!(weight_distribution(c1) == weight_distribution(c2))) {
        return std::nullopt;
    }
    auto g1 = detail::packed_generators(c1);
    detail::SmallCodeSet target(n, detail::packed_generators(c2));
    std::optional<MonomialMap> found;
    detail::for_each_monomial(n, [&](const auto &img, const auto &perm, const auto &action) {
        for (uint32_t x : g1) {
            if (!target.has(detail::apply_packed(img, x, n))) {
                return true;
            }
        }
        found = MonomialMap{perm, action};
        return false;
    });
    return found;
}

inline bool are_equivalent(const AdditiveCode &c1, const AdditiveCode &c2, size_t limit_n = 6) {
    return find_equivalence(c1, c2, limit_n).has_value();
}

/// |Aut(C)|: the number of g in G_n with g(C) = C.
inline BigInt automorphism_order(const AdditiveCode &c, size_t limit_n = 6) {
    size_t n = c.n();
    detail::check_small(n, limit_n);
    auto g = detail::packed_generators(c);
    detail::SmallCodeSet set(n, g);
    uint64_t count = 0;
    detail::for_each_monomial(n, [&](const auto &img, const auto &, const auto &) {
        for (uint32_t x : g) {
            if (!set.has(detail::apply_packed(img, x, n))) {
                return true;
            }
        }
        count++;
        return true;
    });
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), count);
    return r;
}

/// Number of distinct codes equivalent to C: 6^n n! / |Aut(C)|.
inline BigInt orbit_size(const AdditiveCode &c, size_t limit_n = 6) {
    return monomial_group_order(c.n()) / automorphism_order(c, limit_n);
}

}  // namespace qgf4

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
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qgf4/binary.hpp"
#include "qgf4/group.hpp"
#include "qgf4/params.hpp"
#include "qgf4/poly.hpp"
#include "qgf4/standard_form.hpp"

namespace qgf4 {

namespace detail {

inline void require_self_orthogonal(const AdditiveCode &c, const char *who) {
    if (!is_self_orthogonal(c)) {
        throw PreconditionError(std::string(who) + ": input code is not self-orthogonal");
    }
}

/// Copies u into a word of length n starting at offset.
inline void place(SymplecticVector &dst, const SymplecticVector &u, size_t offset) {
    for (size_t i = 0; i < u.n(); i++) {
        dst.set(offset + i, u.get(i));
    }
}

inline SymplecticVector slice(const SymplecticVector &u, size_t from, size_t len) {
    SymplecticVector r(len);
    for (size_t i = 0; i < len; i++) {
        r.set(i, u.get(from + i));
    }
    return r;
}

inline SymplecticVector delete_coords(const SymplecticVector &u, const std::vector<bool> &drop) {
    size_t m = std::count(drop.begin(), drop.end(), false);
    SymplecticVector r(m);
    size_t j = 0;
    for (size_t i = 0; i < u.n(); i++) {
        if (!drop[i]) {
            r.set(j++, u.get(i));
        }
    }
    return r;
}

/// Kernel of the F2-linear functionals fns (each maps a codeword to a bit),
/// by elimination on the generator list.
inline std::vector<SymplecticVector> subcode_kernel(
    std::vector<SymplecticVector> gens, const std::vector<std::function<bool(const SymplecticVector &)>> &fns) {
    for (const auto &f : fns) {
        size_t p = SIZE_MAX;
        for (size_t i = 0; i < gens.size(); i++) {
            if (f(gens[i])) {
                p = i;
                break;
            }
        }
        if (p == SIZE_MAX) {
            continue;
        }
        for (size_t i = 0; i < gens.size(); i++) {
            if (i != p && f(gens[i])) {
                gens[i] ^= gens[p];
            }
        }
        gens.erase(gens.begin() + p);
    }
    return gens;
}

/// Generators of {c in C : c_col = 0}.
inline std::vector<SymplecticVector> zero_at(const AdditiveCode &c, size_t col) {
    return subcode_kernel(c.generators(), {[col](const SymplecticVector &v) { return v.a(col); },
                                           [col](const SymplecticVector &v) { return v.b(col); }});
}

/// Number of F2-independent symbols among all codewords at coordinate col.
inline size_t projection_rank(const AdditiveCode &c, size_t col) {
    std::vector<size_t> all(c.rank());
    std::iota(all.begin(), all.end(), size_t{0});
    return column_rank(c.generators(), all, col);
}

}  // namespace detail

/// Deletes the given coordinates from every codeword.
inline AdditiveCode delete_coordinates(const AdditiveCode &c, const std::vector<size_t> &cols) {
    std::vector<bool> drop(c.n(), false);
    for (size_t i : cols) {
        detail::require(i < c.n(), "coordinate out of range");
        drop[i] = true;
    }
    AdditiveCode r(c.n() - std::count(drop.begin(), drop.end(), true));
    for (const auto &g : c.generators()) {
        SymplecticVector v = detail::delete_coords(g, drop);
        if (!v.is_zero()) {
            r.add_generator(v);
        }
    }
    return r;
}

inline AdditiveCode direct_sum(const AdditiveCode &c1, const AdditiveCode &c2) {
    detail::require_self_orthogonal(c1, "direct_sum");
    detail::require_self_orthogonal(c2, "direct_sum");
    size_t n = c1.n() + c2.n();
    AdditiveCode r(n);
    for (const auto &g : c1.generators()) {
        SymplecticVector v(n);
        detail::place(v, g, 0);
        r.add_generator(v);
    }
    for (const auto &g : c2.generators()) {
        SymplecticVector v(n);
        detail::place(v, g, c1.n());
        r.add_generator(v);
    }
    return r;
}

/// [[n,k,d]] -> [[n+1,k,d]] (impure): direct sum with the length-1 code {0,1}.
inline AdditiveCode lengthen(const AdditiveCode &c) {
    detail::require_self_orthogonal(c, "lengthen");
    if (c.k() <= 0) {
        throw PreconditionError("lengthen: requires k > 0");
    }
    AdditiveCode one(1);
    one.add_generator(SymplecticVector::from_string("1"));
    return direct_sum(c, one);
}

/// Pure [[n,k,d]] -> pure [[n-1,k+1,d-1]]: the subcode vanishing at
/// coordinate 0, with that coordinate deleted (so the dual is punctured).
inline AdditiveCode shorten_pure(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    detail::require_self_orthogonal(c, "shorten_pure");
    if (c.n() < 2) {
        throw PreconditionError("shorten_pure: requires n >= 2");
    }
    QuantumParams p = quantum_params(c, budget);
    if (!p.pure) {
        throw PreconditionError("shorten_pure: input code is not pure");
    }
    if (p.d < 2) {
        throw PreconditionError("shorten_pure: requires d >= 2");
    }
    return delete_coordinates(AdditiveCode(c.n(), detail::zero_at(c, 0)), {0});
}

/// [[n,k,d]] -> [[n,k-1,d]]: adds the first canonical dual basis vector not
/// already in C. For a pure input the new dual still has no nonzero word of
/// weight below d.
inline AdditiveCode reduce_k(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    detail::require_self_orthogonal(c, "reduce_k");
    if (c.k() <= 0) {
        throw PreconditionError("reduce_k: requires k > 0");
    }
    if (c.k() == 1 && !quantum_params(c, budget).pure) {
        throw PreconditionError("reduce_k: k = 1 requires a pure code");
    }
    AdditiveCode r = c;
    AdditiveCode cd = dual(c);
    for (const auto &v : cd.rref()) {
        if (r.add_generator(v)) {
            return r;
        }
    }
    throw PreconditionError("reduce_k: dual adds nothing");
}

/// [[n,k,d]] -> [[n-1,k,d-1]]: B = {u : 0u or 1u in C}. When coordinate 0
/// carries a single nonzero symbol it is first mapped to w, so B is the
/// subcode vanishing there.
inline AdditiveCode puncture(const AdditiveCode &c) {
    detail::require_self_orthogonal(c, "puncture");
    if (c.n() < 2) {
        throw PreconditionError("puncture: requires n >= 2");
    }
    size_t pr = detail::projection_rank(c, 0);
    if (pr == 0) {
        throw PreconditionError("puncture: coordinate 0 is identically zero");
    }
    std::vector<SymplecticVector> sub;
    if (pr == 1) {
        sub = detail::zero_at(c, 0);
    } else {
        sub = detail::subcode_kernel(c.generators(),
                                     {[](const SymplecticVector &v) { return v.a(0) != v.b(0); }});
    }
    return delete_coordinates(AdditiveCode(c.n(), sub), {0});
}

/// The first weight-1 codeword, scanning coordinates then the values w, W, 1.
inline std::optional<SymplecticVector> first_weight1_word(const AdditiveCode &c) {
    for (size_t i = 0; i < c.n(); i++) {
        for (uint8_t x : {1, 2, 3}) {
            SymplecticVector v(c.n());
            v.set(i, Gf4(x));
            if (c.contains(v)) {
                return v;
            }
        }
    }
    return std::nullopt;
}

/// [[n,k,d]] -> [[n-1,k,d]] when C contains a weight-1 word.
inline AdditiveCode drop_weight1(const AdditiveCode &c) {
    detail::require_self_orthogonal(c, "drop_weight1");
    if (c.n() < 2) {
        throw PreconditionError("drop_weight1: requires n >= 2");
    }
    auto w = first_weight1_word(c);
    if (!w) {
        throw PreconditionError("drop_weight1: code has no weight-1 word");
    }
    size_t col = 0;
    while (w->get(col).is_zero()) {
        col++;
    }
    return delete_coordinates(c, {col});
}

/// The binary code spanned by the supports of all codewords of C.
inline BinaryCode support_code(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    detail::check_budget(c.rank(), budget);
    BinaryCode s(c.n());
    SymplecticVector cur(c.n());
    auto support = [&](const SymplecticVector &v) {
        BitVector b(c.n());
        for (size_t i = 0; i < c.n(); i++) {
            b.set(i, !v.get(i).is_zero());
        }
        return b;
    };
    for (uint64_t i = 1; i < (uint64_t{1} << c.rank()); i++) {
        cur ^= c.generators()[std::countr_zero(i)];
        if (s.dim() < c.n()) {
            s.insert(support(cur));
        }
    }
    return s;
}

/// Looks for a word of weight m in a binary code. Small codes are searched
/// exhaustively; larger ones by information-set style sampling (seeded).
inline std::optional<BitVector> find_binary_word_of_weight(const BinaryCode &code, size_t m, uint64_t seed = 1,
                                                           size_t rounds = 400) {
    size_t n = code.n();
    if (m == 0) {
        return BitVector(n);
    }
    if (code.dim() <= 22) {
        BitVector cur(n);
        for (uint64_t i = 1; i < (uint64_t{1} << code.dim()); i++) {
            cur ^= code.rows()[std::countr_zero(i)];
            if (cur.weight() == m) {
                return cur;
            }
        }
        return std::nullopt;
    }
    bool has_ones = code.contains(BitVector::ones(n));
    std::mt19937_64 rng(seed);
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    if (has_ones && m == n) {
        return BitVector::ones(n);
    }
    auto check = [&](const BitVector &w) -> std::optional<BitVector> {
        size_t wt = w.weight();
        if (wt == m) {
            return w;
        }
        if (has_ones && n - wt == m) {
            return w ^ BitVector::ones(n);
        }
        return std::nullopt;
    };
    for (size_t round = 0; round < rounds; round++) {
        std::shuffle(perm.begin(), perm.end(), rng);
        // Row-reduce in the permuted coordinate order, then map back.
        BinaryCode pc(n);
        for (const auto &r : code.rows()) {
            BitVector v(n);
            for (size_t i = 0; i < n; i++) {
                v.set(perm[i], r.get(i));
            }
            pc.insert(v);
        }
        std::vector<BitVector> rows;
        for (const auto &r : pc.rows()) {
            BitVector v(n);
            for (size_t i = 0; i < n; i++) {
                v.set(i, r.get(perm[i]));
            }
            rows.push_back(v);
        }
        size_t k = rows.size();
        for (size_t a = 0; a < k; a++) {
            if (auto w = check(rows[a])) {
                return w;
            }
            for (size_t b = a + 1; b < k; b++) {
                BitVector ab = rows[a] ^ rows[b];
                if (auto w = check(ab)) {
                    return w;
                }
                if (k <= 80) {
                    for (size_t c = b + 1; c < k; c++) {
                        if (auto w = check(ab ^ rows[c])) {
                            return w;
                        }
                    }
                }
            }
        }
        for (size_t t = 0; t < 2000; t++) {
            BitVector w(n);
            for (size_t i = 0; i < k; i++) {
                if (rng() & 1) {
                    w ^= rows[i];
                }
            }
            if (auto r = check(w)) {
                return r;
            }
        }
    }
    return std::nullopt;
}

/// Deletes the support of a weight-m word of the binary dual of the support
/// code. The input must be GF(4)-linear and self-orthogonal.
inline AdditiveCode shorten_by_support(const AdditiveCode &c, size_t m, uint64_t seed = 1,
                                       uint64_t budget = DEFAULT_BUDGET) {
    detail::require_self_orthogonal(c, "shorten_by_support");
    if (!is_linear(c)) {
        throw PreconditionError("shorten_by_support: code is not GF(4)-linear");
    }
    if (m > c.n()) {
        throw PreconditionError("shorten_by_support: m exceeds n");
    }
    BinaryCode d = support_code(c, budget).dual();
    auto w = find_binary_word_of_weight(d, m, seed);
    if (!w) {
        throw PreconditionError("shorten_by_support: no word of weight " + std::to_string(m) +
                                " found in the dual of the support code");
    }
    std::vector<size_t> cols;
    for (size_t i = 0; i < c.n(); i++) {
        if (w->get(i)) {
            cols.push_back(i);
        }
    }
    return delete_coordinates(c, cols);
}

/// A symplectic basis of C-perp / C: pairs with <x_i,z_j> = delta_ij and all
/// other pairings zero. Encoding maps w at position i to x_i, W to z_i.
struct LogicalBasis {
    std::vector<SymplecticVector> x, z;

    size_t size() const {
        return x.size();
    }
    /// The lift of a length-k word t.
    SymplecticVector lift(const SymplecticVector &t, size_t n) const {
        SymplecticVector r(n);
        for (size_t i = 0; i < t.n(); i++) {
            if (t.a(i)) {
                r ^= x[i];
            }
            if (t.b(i)) {
                r ^= z[i];
            }
        }
        return r;
    }
};

/// Symplectic Gram-Schmidt on the canonical complement of C in C-perp.
inline LogicalBasis logical_basis(const AdditiveCode &c) {
    detail::require_self_orthogonal(c, "logical_basis");
    F2Span span = c.span();
    std::vector<SymplecticVector> cand;
    AdditiveCode cd = dual(c);
    for (const auto &v : cd.rref()) {
        if (span.insert(v)) {
            cand.push_back(v);
        }
    }
    LogicalBasis lb;
    while (!cand.empty()) {
        SymplecticVector x = cand[0];
        size_t j = 1;
        while (j < cand.size() && !symplectic_inner(x, cand[j])) {
            j++;
        }
        if (j == cand.size()) {
            throw PreconditionError("logical_basis: degenerate quotient");
        }
        SymplecticVector z = cand[j];
        cand.erase(cand.begin() + j);
        cand.erase(cand.begin());
        for (auto &v : cand) {
            bool vz = symplectic_inner(v, z), vx = symplectic_inner(v, x);
            if (vz) {
                v ^= x;
            }
            if (vx) {
                v ^= z;
            }
        }
        lb.x.push_back(x);
        lb.z.push_back(z);
    }
    return lb;
}

/// Checks that lb is a symplectic basis of C-perp modulo C.
inline void check_logical_basis(const AdditiveCode &c, const LogicalBasis &lb) {
    size_t k = lb.x.size();
    detail::require(lb.z.size() == k && long(k) == c.k(), "logical basis has the wrong size");
    AdditiveCode cd = dual(c);
    for (size_t i = 0; i < k; i++) {
        detail::require(lb.x[i].n() == c.n() && lb.z[i].n() == c.n(), "logical basis length mismatch");
        detail::require(cd.contains(lb.x[i]) && cd.contains(lb.z[i]), "logical operator outside the dual");
        for (size_t j = 0; j < k; j++) {
            detail::require(!symplectic_inner(lb.x[i], lb.x[j]) && !symplectic_inner(lb.z[i], lb.z[j]) &&
                                symplectic_inner(lb.x[i], lb.z[j]) == (i == j),
                            "logical basis is not symplectic");
        }
    }
}

/// Pastes C2 into C1: the k2 coordinates [at, at+k2) of C1 are replaced by
/// an encoding through C2, giving [[n1+n2-k2, k1, d]] with
/// d >= min(d1, d1+d2-k2). at defaults to n1-k2.
inline AdditiveCode paste(const AdditiveCode &c1, const AdditiveCode &c2, std::optional<size_t> at = std::nullopt,
                          const std::optional<LogicalBasis> &lifts = std::nullopt) {
    detail::require_self_orthogonal(c1, "paste");
    detail::require_self_orthogonal(c2, "paste");
    size_t k2 = size_t(c2.k());
    if (k2 > c1.n()) {
        throw PreconditionError("paste: k2 exceeds n1");
    }
    size_t pos = at.value_or(c1.n() - k2);
    if (pos + k2 > c1.n()) {
        throw PreconditionError("paste: block position out of range");
    }
    LogicalBasis lb = lifts ? *lifts : logical_basis(c2);
    if (lifts) {
        check_logical_basis(c2, lb);
    }
    size_t n2 = c2.n();
    size_t n = c1.n() + n2 - k2;
    AdditiveCode r(n);
    for (const auto &g : c1.generators()) {
        SymplecticVector v(n);
        detail::place(v, detail::slice(g, 0, pos), 0);
        detail::place(v, lb.lift(detail::slice(g, pos, k2), n2), pos);
        detail::place(v, detail::slice(g, pos + k2, c1.n() - pos - k2), pos + n2);
        r.add_generator(v);
    }
    for (const auto &g : c2.generators()) {
        SymplecticVector v(n);
        detail::place(v, g, pos);
        r.add_generator(v);
    }
    return r;
}

/// Minimum number of nonzero m-blocks over the nonzero words of C.
inline size_t block_distance(const AdditiveCode &c, size_t m, uint64_t budget = DEFAULT_BUDGET) {
    detail::require(m > 0 && c.n() % m == 0, "block size must divide n");
    detail::check_budget(c.rank(), budget);
    size_t best = SIZE_MAX;
    SymplecticVector cur(c.n());
    for (uint64_t i = 1; i < (uint64_t{1} << c.rank()); i++) {
        cur ^= c.generators()[std::countr_zero(i)];
        size_t blocks = 0;
        for (size_t b = 0; b < c.n(); b += m) {
            for (size_t j = b; j < b + m; j++) {
                if (!cur.get(j).is_zero()) {
                    blocks++;
                    break;
                }
            }
        }
        best = std::min(best, blocks);
    }
    return best;
}

struct Concatenation {
    AdditiveCode code;
    size_t block_distance = 0;  // outer dual, counted in blocks
    size_t inner_distance = 0;
    size_t promised_distance = 0;
    bool verified = false;  // set when quantum_params was run
    QuantumParams params;
};

/// Encodes each m-qubit block of the outer code with the inner [[n2,m,d2]]
/// code by pasting, last block first. Generators come out as the inner
/// blocks (last to first) followed by the lifted outer generators.
inline Concatenation concatenate(const AdditiveCode &outer, const AdditiveCode &inner,
                                 const std::optional<LogicalBasis> &lifts = std::nullopt, bool verify = false,
                                 uint64_t budget = DEFAULT_BUDGET) {
    detail::require_self_orthogonal(outer, "concatenate");
    detail::require_self_orthogonal(inner, "concatenate");
    size_t m = size_t(std::max<long>(inner.k(), 0));
    if (m == 0 || outer.n() % m != 0) {
        throw PreconditionError("concatenate: inner k must be positive and divide the outer length");
    }
    LogicalBasis lb = lifts ? *lifts : logical_basis(inner);
    if (lifts) {
        check_logical_basis(inner, lb);
    }
    size_t blocks = outer.n() / m;
    AdditiveCode cur = outer;
    for (size_t b = blocks; b-- > 0;) {
        cur = paste(cur, inner, b * m, lb);
    }
    const auto &g = cur.generators();
    size_t r_outer = outer.rank();
    std::vector<SymplecticVector> rows(g.begin() + r_outer, g.end());
    rows.insert(rows.end(), g.begin(), g.begin() + r_outer);

    Concatenation out;
    out.code = AdditiveCode(cur.n(), rows);
    out.block_distance = block_distance(dual(outer), m, budget);
    out.inner_distance = quantum_params(inner, budget).d;
    out.promised_distance = out.block_distance * out.inner_distance;
    if (verify) {
        out.params = quantum_params(out.code, budget);
        out.verified = true;
    }
    return out;
}

/// C = w C1 + W C2-perp for binary C1 within C2: an [[n, k2-k1]] code.
inline AdditiveCode css(const BinaryCode &c1, const BinaryCode &c2) {
    if (c1.n() != c2.n()) {
        throw PreconditionError("css: codes have different lengths");
    }
    if (!c2.contains(c1)) {
        throw PreconditionError("css: C1 is not contained in C2");
    }
    size_t n = c1.n();
    AdditiveCode r(n);
    for (const auto &row : c1.rows()) {
        SymplecticVector v(n);
        for (size_t i = 0; i < n; i++) {
            v.set_a(i, row.get(i));
        }
        r.add_generator(v);
    }
    BinaryCode c2d = c2.dual();
    for (const auto &row : c2d.rows()) {
        SymplecticVector v(n);
        for (size_t i = 0; i < n; i++) {
            v.set_b(i, row.get(i));
        }
        r.add_generator(v);
    }
    detail::require_self_orthogonal(r, "css");
    return r;
}

/// An m x m binary matrix; row i is the image of the i-th unit vector.
using BinaryMatrix = std::vector<uint32_t>;

inline uint32_t apply_matrix(const BinaryMatrix &f, uint32_t y) {
    uint32_t r = 0;
    for (size_t i = 0; i < f.size(); i++) {
        if ((y >> i) & 1) {
            r ^= f[i];
        }
    }
    return r;
}

/// Companion matrix of p (bitmask, degree m): e_i -> e_{i-1} + p_i e_{m-1}.
inline BinaryMatrix companion_matrix(uint64_t p) {
    int m = f2poly_degree(p);
    detail::require(m >= 1 && m <= 31, "companion polynomial degree out of range");
    BinaryMatrix f(m, 0);
    for (int i = 0; i < m; i++) {
        f[i] = (i > 0 ? uint32_t{1} << (i - 1) : 0) | (((p >> i) & 1) ? uint32_t{1} << (m - 1) : 0);
    }
    return f;
}

/// Block-diagonal sum of two matrices.
inline BinaryMatrix block_diagonal(const BinaryMatrix &f, const BinaryMatrix &g) {
    BinaryMatrix r = f;
    for (uint32_t row : g) {
        r.push_back(row << f.size());
    }
    return r;
}

namespace detail {

inline void check_gottesman_matrix(size_t m, const BinaryMatrix &f) {
    if (m < 2 || m > 20) {
        throw PreconditionError("gottesman_code: m must be in [2, 20]");
    }
    if (f.size() != m) {
        throw PreconditionError("gottesman_code: f must be m x m");
    }
    for (uint32_t y = 1; y < (uint32_t{1} << m); y++) {
        uint32_t fy = apply_matrix(f, y);
        if (fy >> m) {
            throw PreconditionError("gottesman_code: f has entries outside m columns");
        }
        if (fy == 0) {
            throw PreconditionError("gottesman_code: f is not invertible");
        }
        if (fy == y) {
            throw PreconditionError("gottesman_code: f has a nonzero fixed point");
        }
    }
}

/// u + w f(u) with a 0 appended, for u the simplex word with message y.
inline SymplecticVector gottesman_row(size_t m, const BinaryMatrix &f, uint32_t y) {
    size_t n = size_t{1} << m;
    uint32_t fy = apply_matrix(f, y);
    SymplecticVector v(n);
    for (uint32_t x = 1; x < n; x++) {
        bool u = std::popcount(y & x) & 1;
        bool w = std::popcount(fy & x) & 1;
        // u + w*w has symplectic image (u ^ w | u).
        v.set_a(x - 1, u ^ w);
        v.set_b(x - 1, u);
    }
    return v;
}

inline SymplecticVector constant_word(size_t n, Gf4 x) {
    SymplecticVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, x);
    }
    return v;
}

}  // namespace detail

/// The (2^m, 2^{m+2}) code built from a fixed-point-free automorphism f of
/// the simplex code; an [[2^m, 2^m-m-2, 3]] code.
inline AdditiveCode gottesman_code(size_t m, const BinaryMatrix &f) {
    detail::check_gottesman_matrix(m, f);
    size_t n = size_t{1} << m;
    AdditiveCode c(n);
    for (size_t i = 0; i < m; i++) {
        c.add_generator(detail::gottesman_row(m, f, uint32_t{1} << i));
    }
    c.add_generator(detail::constant_word(n, Gf4::one()));
    c.add_generator(detail::constant_word(n, Gf4::w()));
    return c;
}

/// gottesman_code with f the companion matrix of the smallest irreducible
/// polynomial of degree m.
inline AdditiveCode gottesman_code(size_t m) {
    detail::require(m >= 2 && m <= 20, "gottesman_code: m must be in [2, 20]");
    return gottesman_code(m, companion_matrix(smallest_irreducible(int(m))));
}

/// The (5, 2^4) code of the [[5,1,3]] code: dual of a linear [5,3] code.
inline AdditiveCode hamming_5_code() {
    return dual(AdditiveCode::linear_span({"1w100", "01w10", "001w1"}));
}

/// The GF(4)-linear simplex code of dimension m, one column per projective
/// point of GF(4)^m (leading nonzero entry 1, points in lexicographic order
/// of their symbol index). For m >= 2 it is the (n, 2^{2m}) code of an
/// [[n, n-2m, 3]] Hamming code, n = (4^m - 1)/3.
inline AdditiveCode quaternary_hamming_code(size_t m) {
    if (m < 2 || m > 8) {
        throw PreconditionError("quaternary_hamming_code: m must be in [2, 8]");
    }
    std::vector<std::string> rows(m);
    for (uint64_t x = 1; x < (uint64_t{1} << (2 * m)); x++) {
        std::string col(m, '0');
        for (size_t i = 0; i < m; i++) {
            col[m - 1 - i] = Gf4(uint8_t((x >> (2 * i)) & 3)).to_char();
        }
        if (col[col.find_first_not_of('0')] != '1') {
            continue;
        }
        for (size_t i = 0; i < m; i++) {
            rows[i].push_back(col[i]);
        }
    }
    return AdditiveCode::linear_span(rows);
}

/// The (8, 2^5) code of the [[8,3,3]] code: cyclic shifts of 01wwW1W with a
/// 0 appended, plus the all-1 and all-w words.
inline AdditiveCode gottesman_8_code() {
    std::string s = "01wwW1W";
    std::vector<std::string> rows;
    for (size_t i = 0; i < 7; i++) {
        rows.push_back(s.substr(7 - i) + s.substr(0, 7 - i) + "0");
    }
    rows.push_back("11111111");
    rows.push_back("wwwwwwww");
    return AdditiveCode::from_strings(rows);
}

/// C_m = {v1 v2 : v1 in C_{m-2}, phi(v1) = v2 + G'_m}, recursively from
/// C_2 = (5,2^4) and C_3 = (8,2^5); an [[n, n-m-2, 3]] code.
inline AdditiveCode extend_gottesman(size_t m) {
    if (m < 2) {
        throw PreconditionError("extend_gottesman: requires m >= 2");
    }
    if (m == 2) {
        return hamming_5_code();
    }
    if (m == 3) {
        return gottesman_8_code();
    }
    AdditiveCode prev = extend_gottesman(m - 2);
    BinaryMatrix f = companion_matrix(smallest_irreducible(int(m)));
    size_t n1 = prev.n(), n2 = size_t{1} << m;
    const auto &basis = prev.rref();
    detail::require(basis.size() == m, "extend_gottesman: rank mismatch in recursion");
    AdditiveCode c(n1 + n2);
    for (size_t i = 0; i < m; i++) {
        SymplecticVector v(n1 + n2);
        detail::place(v, basis[i], 0);
        detail::place(v, detail::gottesman_row(m, f, uint32_t{1} << i), n1);
        c.add_generator(v);
    }
    SymplecticVector ones(n1 + n2), ws(n1 + n2);
    detail::place(ones, detail::constant_word(n2, Gf4::one()), n1);
    detail::place(ws, detail::constant_word(n2, Gf4::w()), n1);
    c.add_generator(ones);
    c.add_generator(ws);
    return c;
}

/// u|u+v: C = {(u, u+v) : u in C2-perp, v in C1} for pure C1 within C2,
/// giving a pure [[2n, k1-k2, min(2 d1, dist C2)]] code.
inline AdditiveCode uuv(const AdditiveCode &c1, const AdditiveCode &c2, uint64_t budget = DEFAULT_BUDGET) {
    detail::require_self_orthogonal(c1, "uuv");
    detail::require_self_orthogonal(c2, "uuv");
    if (c1.n() != c2.n()) {
        throw PreconditionError("uuv: codes have different lengths");
    }
    if (!c2.contains(c1)) {
        throw PreconditionError("uuv: C1 is not contained in C2");
    }
    if (!quantum_params(c1, budget).pure || !quantum_params(c2, budget).pure) {
        throw PreconditionError("uuv: both codes must be pure");
    }
    size_t n = c1.n();
    AdditiveCode r(2 * n);
    AdditiveCode c2d = dual(c2);
    for (const auto &u : c2d.rref()) {
        SymplecticVector v(2 * n);
        detail::place(v, u, 0);
        detail::place(v, u, n);
        r.add_generator(v);
    }
    for (const auto &g : c1.generators()) {
        SymplecticVector v(2 * n);
        detail::place(v, g, n);
        r.add_generator(v);
    }
    return r;
}

/// d_n: binary even-weight words of length n (n >= 2), as a code over GF(4).
inline AdditiveCode dn_code(size_t n) {
    if (n < 2) {
        throw PreconditionError("dn_code: requires n >= 2");
    }
    AdditiveCode c(n);
    for (size_t i = 1; i < n; i++) {
        SymplecticVector v(n);
        v.set(0, Gf4::one());
        v.set(i, Gf4::one());
        c.add_generator(v);
    }
    return c;
}

/// d_n^+ = <d_n, ww...w>, a self-dual code with d = 2.
inline AdditiveCode dn_plus(size_t n) {
    AdditiveCode c = dn_code(n);
    c.add_generator(detail::constant_word(n, Gf4::w()));
    return c;
}

/// An [[n,k,d]] code with d in {1, 2}.
inline AdditiveCode trivial_code(size_t n, size_t k, size_t d) {
    if (d == 1) {
        if (n == 0 || k > n) {
            throw PreconditionError("trivial_code: d = 1 requires 0 <= k <= n, n >= 1");
        }
        AdditiveCode c(n);
        for (size_t i = 0; i < n - k; i++) {
            SymplecticVector v(n);
            v.set(i, Gf4::wbar());
            c.add_generator(v);
        }
        return c;
    }
    if (d != 2) {
        throw PreconditionError("trivial_code: d must be 1 or 2");
    }
    if (n % 2 == 0) {
        if (n < 2 || k > n - 2) {
            throw PreconditionError("trivial_code: even n requires k <= n-2");
        }
        AdditiveCode c(n);
        c.add_generator(detail::constant_word(n, Gf4::one()));
        c.add_generator(detail::constant_word(n, Gf4::w()));
        while (size_t(c.k()) > k) {
            c = reduce_k(c);
        }
        return c;
    }
    if (n < 3 || k > n - 3) {
        throw PreconditionError("trivial_code: odd n requires n >= 3 and k <= n-3");
    }
    if (k == 0) {
        return dn_plus(n);
    }
    return lengthen(trivial_code(n - 1, k, 2));
}

}  // namespace qgf4

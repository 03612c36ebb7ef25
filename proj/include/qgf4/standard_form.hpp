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

#include <string>
#include <vector>

#include "qgf4/group.hpp"

namespace qgf4 {

/// Generator matrix in the three-block form
///
///     [ I    w.B1  A1 ]   k0 rows
///     [ wI   w.B2  A2 ]   k0 rows
///     [ 0    I     B3 ]   k1 rows
///
/// for the code transform(C). Blocks are stored as rows of symbols; the B
/// blocks only contain 0/1. transform is the G_n element that moves the
/// chosen columns to the front and normalizes the symbols.
struct StandardForm {
    size_t n = 0;
    size_t k0 = 0;
    size_t k1 = 0;
    MonomialMap transform;
    std::vector<std::string> A1, A2, B1, B2, B3;

    /// The full generator matrix assembled from the blocks.
    std::vector<std::string> rows() const {
        std::vector<std::string> out;
        size_t rest = n - k0 - k1;
        auto wb = [](const std::string &b) {
            std::string s = b;
            for (char &c : s) {
                c = c == '1' ? 'w' : '0';
            }
            return s;
        };
        for (size_t i = 0; i < k0; i++) {
            std::string id(k0, '0');
            id[i] = '1';
            out.push_back(id + wb(B1[i]) + A1[i]);
        }
        for (size_t i = 0; i < k0; i++) {
            std::string id(k0, '0');
            id[i] = 'w';
            out.push_back(id + wb(B2[i]) + A2[i]);
        }
        for (size_t i = 0; i < k1; i++) {
            std::string id(k1, '0');
            id[i] = '1';
            out.push_back(std::string(k0, '0') + id + B3[i]);
        }
        (void)rest;
        return out;
    }
    /// The code spanned by rows(), i.e. transform(C).
    AdditiveCode code() const {
        if (k0 + k1 == 0) {
            return AdditiveCode(n);
        }
        return AdditiveCode::from_strings(rows());
    }
    /// Maps the block matrix back onto the original coordinates: equals C.
    AdditiveCode reassemble() const {
        return transform.inverse().apply(code());
    }
};

namespace detail {

inline uint8_t action_sending_to_one(Gf4 x) {
    for (uint8_t t = 0; t < 6; t++) {
        if (s3_apply(t, x) == Gf4::one()) {
            return t;
        }
    }
    return 0;
}

/// Number of F2-independent values among the symbols at coordinate c.
inline size_t column_rank(const std::vector<SymplecticVector> &rows, const std::vector<size_t> &which, size_t c) {
    uint8_t first = 0;
    for (size_t r : which) {
        uint8_t v = rows[r].get(c).v;
        if (!v) {
            continue;
        }
        if (!first) {
            first = v;
        } else if (v != first) {
            return 2;
        }
    }
    return first ? 1 : 0;
}

}  // namespace detail

/// Brings C into standard form. Column choice scans left to right: first the
/// columns on which the remaining rows project onto all of GF(4) (k0 block),
/// then columns with a one-dimensional projection (k1 block). Within a
/// column the first row (in current order) with a suitable value is the pivot.
inline StandardForm standard_form(const AdditiveCode &c) {
    size_t n = c.n();
    std::vector<SymplecticVector> rows = c.generators();
    std::vector<size_t> remaining(rows.size());
    std::iota(remaining.begin(), remaining.end(), size_t{0});
    std::vector<bool> chosen(n, false);
    std::vector<uint8_t> action(n, 0);
    std::vector<size_t> cols0, cols1;
    std::vector<std::pair<size_t, size_t>> pairs;  // (row with 1, row with w)
    std::vector<size_t> singles;

    auto apply_column_action = [&](size_t col, uint8_t t) {
        for (auto &r : rows) {
            r.set(col, s3_apply(t, r.get(col)));
        }
        action[col] = t;
    };

    // k0 phase.
    for (size_t col = 0; col < n; col++) {
        if (detail::column_rank(rows, remaining, col) != 2) {
            continue;
        }
        size_t p = SIZE_MAX, q = SIZE_MAX;
        for (size_t r : remaining) {
            Gf4 v = rows[r].get(col);
            if (v.is_zero()) {
                continue;
            }
            if (p == SIZE_MAX) {
                p = r;
            } else if (v != rows[p].get(col)) {
                q = r;
                break;
            }
        }
        // Among p, q, p+q the three nonzero values appear once each.
        SymplecticVector cand[3] = {rows[p], rows[q], rows[p] ^ rows[q]};
        SymplecticVector one_row, w_row;
        for (auto &v : cand) {
            if (v.get(col) == Gf4::one()) {
                one_row = v;
            } else if (v.get(col) == Gf4::w()) {
                w_row = v;
            }
        }
        rows[p] = one_row;
        rows[q] = w_row;
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == p || r == q) {
                continue;
            }
            Gf4 v = rows[r].get(col);
            if (v == Gf4::one() || v == Gf4::wbar()) {
                rows[r] ^= rows[p];
            }
            if (v == Gf4::w() || v == Gf4::wbar()) {
                rows[r] ^= rows[q];
            }
        }
        remaining.erase(std::find(remaining.begin(), remaining.end(), p));
        remaining.erase(std::find(remaining.begin(), remaining.end(), q));
        chosen[col] = true;
        cols0.push_back(col);
        pairs.emplace_back(p, q);
    }

    // k1 phase.
    for (size_t col = 0; col < n && !remaining.empty(); col++) {
        if (chosen[col] || detail::column_rank(rows, remaining, col) == 0) {
            continue;
        }
        size_t p = SIZE_MAX;
        for (size_t r : remaining) {
            if (!rows[r].get(col).is_zero()) {
                p = r;
                break;
            }
        }
        apply_column_action(col, detail::action_sending_to_one(rows[p].get(col)));
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == p) {
                continue;
            }
            Gf4 v = rows[r].get(col);
            if (v == Gf4::one() || v == Gf4::wbar()) {
                rows[r] ^= rows[p];
            }
        }
        remaining.erase(std::find(remaining.begin(), remaining.end(), p));
        chosen[col] = true;
        cols1.push_back(col);
        singles.push_back(p);
    }

    // Make B3 binary: each remaining column carries at most one nonzero value
    // across the k1 rows.
    std::vector<size_t> rest;
    for (size_t col = 0; col < n; col++) {
        if (chosen[col]) {
            continue;
        }
        rest.push_back(col);
        for (size_t r : singles) {
            Gf4 v = rows[r].get(col);
            if (!v.is_zero()) {
                apply_column_action(col, detail::action_sending_to_one(v));
                break;
            }
        }
    }

    StandardForm sf;
    sf.n = n;
    sf.k0 = cols0.size();
    sf.k1 = cols1.size();
    std::vector<size_t> order = cols0;
    order.insert(order.end(), cols1.begin(), cols1.end());
    order.insert(order.end(), rest.begin(), rest.end());
    sf.transform.perm.assign(n, 0);
    sf.transform.action = action;
    for (size_t pos = 0; pos < n; pos++) {
        sf.transform.perm[order[pos]] = pos;
    }
    auto slice = [&](const SymplecticVector &v, const std::vector<size_t> &cols, bool binary_w) {
        std::string s;
        for (size_t col : cols) {
            char ch = v.get(col).to_char();
            if (binary_w) {
                ch = ch == 'w' ? '1' : '0';
            }
            s.push_back(ch);
        }
        return s;
    };
    for (auto [p, q] : pairs) {
        sf.B1.push_back(slice(rows[p], cols1, true));
        sf.A1.push_back(slice(rows[p], rest, false));
        sf.B2.push_back(slice(rows[q], cols1, true));
        sf.A2.push_back(slice(rows[q], rest, false));
    }
    for (size_t p : singles) {
        sf.B3.push_back(slice(rows[p], rest, false));
    }
    return sf;
}

}  // namespace qgf4

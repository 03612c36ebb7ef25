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
#include <vector>

#include "qgf4/gf4.hpp"

namespace qgf4 {

namespace detail {

inline size_t lowest_bit(const std::vector<uint64_t> &w) {
    for (size_t k = 0; k < w.size(); k++) {
        if (w[k]) {
            return 64 * k + std::countr_zero(w[k]);
        }
    }
    return SIZE_MAX;
}

}  // namespace detail

/// Fully reduced echelon basis of an F2-subspace of symplectic vectors.
///
/// Each stored row has a distinct pivot (its lowest flat bit) and no other
/// row has that bit set, so the stored rows are the reduced row echelon form
/// for the flat column order a_0..a_{n-1}, b_0..b_{n-1}.
class F2Span {
   public:
    explicit F2Span(size_t n = 0) : n_(n) {
    }

    size_t n() const {
        return n_;
    }
    size_t rank() const {
        return rows_.size();
    }
    const std::vector<SymplecticVector> &rows() const {
        return rows_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

    /// Reduces v against the basis (in place).
    void reduce(SymplecticVector &v) const {
        for (size_t i = 0; i < rows_.size(); i++) {
            if (v.bit(pivots_[i])) {
                v ^= rows_[i];
            }
        }
    }
    bool contains(SymplecticVector v) const {
        reduce(v);
        return v.is_zero();
    }

    /// Adds v to the span; returns false if v was already in it.
    bool insert(SymplecticVector v) {
        v.check_same_n(n_);
        reduce(v);
        if (v.is_zero()) {
            return false;
        }
        size_t p = detail::lowest_bit(v.data());
        for (auto &r : rows_) {
            if (r.bit(p)) {
                r ^= v;
            }
        }
        // Keep rows sorted by pivot for a canonical layout.
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        size_t pos = it - pivots_.begin();
        pivots_.insert(it, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    bool operator==(const F2Span &o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

   private:
    size_t n_;
    std::vector<SymplecticVector> rows_;
    std::vector<size_t> pivots_;
};

/// Basis of {x : <x, r> = 0 (ordinary dot product) for all rows r}, over the
/// valid flat positions of length-n symplectic vectors.
inline std::vector<SymplecticVector> f2_kernel(const std::vector<SymplecticVector> &rows, size_t n) {
    F2Span span(n);
    for (const auto &r : rows) {
        span.insert(r);
    }
    size_t nw = SymplecticVector::words_for(n);
    std::vector<size_t> valid;
    for (size_t i = 0; i < n; i++) {
        valid.push_back(i);
    }
    for (size_t i = 0; i < n; i++) {
        valid.push_back(64 * nw + i);
    }
    std::vector<bool> is_pivot(128 * std::max<size_t>(nw, 1), false);
    for (size_t p : span.pivots()) {
        is_pivot[p] = true;
    }
    std::vector<SymplecticVector> out;
    for (size_t f : valid) {
        if (is_pivot[f]) {
            continue;
        }
        SymplecticVector v(n);
        v.flip_bit(f);
        for (size_t i = 0; i < span.rank(); i++) {
            if (span.rows()[i].bit(f)) {
                v.flip_bit(span.pivots()[i]);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace qgf4

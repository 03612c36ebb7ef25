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
#include <string>
#include <vector>

#include "qgf4/errors.hpp"

namespace qgf4 {

/// A binary word of length n, packed 64 coordinates per word.
struct BitVector {
    size_t n = 0;
    std::vector<uint64_t> w;

    BitVector() = default;
    explicit BitVector(size_t n) : n(n), w((n + 63) / 64, 0) {
    }
    static BitVector from_string(const std::string &s) {
        BitVector v(s.size());
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] == '1') {
                v.set(i, true);
            } else if (s[i] != '0') {
                throw PreconditionError("binary word must use 0/1");
            }
        }
        return v;
    }
    static BitVector ones(size_t n) {
        BitVector v(n);
        for (size_t i = 0; i < n; i++) {
            v.set(i, true);
        }
        return v;
    }
    bool get(size_t i) const {
        return (w[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool b) {
        uint64_t m = uint64_t{1} << (i & 63);
        w[i >> 6] = b ? (w[i >> 6] | m) : (w[i >> 6] & ~m);
    }
    size_t weight() const {
        size_t s = 0;
        for (uint64_t x : w) {
            s += std::popcount(x);
        }
        return s;
    }
    bool is_zero() const {
        for (uint64_t x : w) {
            if (x) {
                return false;
            }
        }
        return true;
    }
    bool dot(const BitVector &o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w.size(); k++) {
            acc ^= w[k] & o.w[k];
        }
        return std::popcount(acc) & 1;
    }
    BitVector &operator^=(const BitVector &o) {
        for (size_t k = 0; k < w.size(); k++) {
            w[k] ^= o.w[k];
        }
        return *this;
    }
    BitVector operator^(const BitVector &o) const {
        BitVector r = *this;
        r ^= o;
        return r;
    }
    size_t lowest() const {
        for (size_t k = 0; k < w.size(); k++) {
            if (w[k]) {
                return 64 * k + std::countr_zero(w[k]);
            }
        }
        return SIZE_MAX;
    }
    std::string str() const {
        std::string s(n, '0');
        for (size_t i = 0; i < n; i++) {
            s[i] = get(i) ? '1' : '0';
        }
        return s;
    }
    bool operator==(const BitVector &o) const = default;
};

/// A binary linear code, kept in reduced row echelon form.
class BinaryCode {
   public:
    explicit BinaryCode(size_t n = 0) : n_(n) {
    }
    BinaryCode(size_t n, const std::vector<BitVector> &rows) : n_(n) {
        for (const auto &r : rows) {
            insert(r);
        }
    }
    static BinaryCode from_strings(const std::vector<std::string> &rows, size_t n = 0) {
        if (!rows.empty()) {
            n = rows[0].size();
        }
        BinaryCode c(n);
        for (const auto &s : rows) {
            detail::require(s.size() == n, "binary rows differ in length");
            c.insert(BitVector::from_string(s));
        }
        return c;
    }
    static BinaryCode full(size_t n) {
        BinaryCode c(n);
        for (size_t i = 0; i < n; i++) {
            BitVector v(n);
            v.set(i, true);
            c.insert(v);
        }
        return c;
    }

    size_t n() const {
        return n_;
    }
    size_t dim() const {
        return rows_.size();
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    const std::vector<size_t> &pivots() const {
        return piv_;
    }

    void reduce(BitVector &v) const {
        for (size_t i = 0; i < rows_.size(); i++) {
            if (v.get(piv_[i])) {
                v ^= rows_[i];
            }
        }
    }
    bool contains(BitVector v) const {
        reduce(v);
        return v.is_zero();
    }
    bool contains(const BinaryCode &o) const {
        for (const auto &r : o.rows_) {
            if (!contains(r)) {
                return false;
            }
        }
        return true;
    }
    bool insert(BitVector v) {
        detail::require(v.n == n_, "binary word length mismatch");
        reduce(v);
        if (v.is_zero()) {
            return false;
        }
        size_t p = v.lowest();
        for (auto &r : rows_) {
            if (r.get(p)) {
                r ^= v;
            }
        }
        auto it = std::lower_bound(piv_.begin(), piv_.end(), p);
        rows_.insert(rows_.begin() + (it - piv_.begin()), v);
        piv_.insert(it, p);
        return true;
    }

    BinaryCode dual() const {
        std::vector<bool> is_piv(n_, false);
        for (size_t p : piv_) {
            is_piv[p] = true;
        }
        BinaryCode d(n_);
        for (size_t f = 0; f < n_; f++) {
            if (is_piv[f]) {
                continue;
            }
            BitVector v(n_);
            v.set(f, true);
            for (size_t i = 0; i < rows_.size(); i++) {
                if (rows_[i].get(f)) {
                    v.set(piv_[i], true);
                }
            }
            d.insert(v);
        }
        return d;
    }

    /// Weight counts by Gray-code walk; dim must be small.
    std::vector<uint64_t> weight_counts(uint64_t budget = DEFAULT_BUDGET) const {
        if (dim() >= 63 || (uint64_t{1} << dim()) > budget) {
            throw BudgetExceeded("binary code too large to enumerate");
        }
        std::vector<uint64_t> a(n_ + 1, 0);
        BitVector cur(n_);
        a[0] = 1;
        for (uint64_t i = 1; i < (uint64_t{1} << dim()); i++) {
            cur ^= rows_[std::countr_zero(i)];
            a[cur.weight()]++;
        }
        return a;
    }

    bool operator==(const BinaryCode &o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

   private:
    size_t n_;
    std::vector<BitVector> rows_;
    std::vector<size_t> piv_;
};

}  // namespace qgf4

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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgf4/f2.hpp"
#include "qgf4/gf4.hpp"

namespace qgf4 {

/// An (n, 2^r) additive code over GF(4): the F2-span of its generators.
///
/// Generators keep the order they were given in; rows that depend on earlier
/// rows are dropped (and counted in dropped_rows()).
class AdditiveCode {
   public:
    AdditiveCode() : AdditiveCode(0) {
    }
    explicit AdditiveCode(size_t n) : n_(n), span_(n) {
    }
    AdditiveCode(size_t n, const std::vector<SymplecticVector> &rows) : n_(n), span_(n) {
        for (const auto &r : rows) {
            add_generator(r);
        }
    }

    static AdditiveCode from_strings(const std::vector<std::string> &rows) {
        detail::require(!rows.empty(), "from_strings needs at least one row to fix n");
        size_t n = rows[0].size();
        std::vector<SymplecticVector> vs;
        for (const auto &s : rows) {
            detail::require(s.size() == n, "rows differ in length");
            vs.push_back(SymplecticVector::from_string(s));
        }
        return AdditiveCode(n, vs);
    }
    /// The GF(4)-linear span of the rows (each row together with w times it).
    static AdditiveCode linear_span(const std::vector<std::string> &rows) {
        AdditiveCode c = from_strings(rows);
        return c.linear_closure();
    }

    /// Adds a generator; returns false (and counts it) if it was dependent.
    bool add_generator(const SymplecticVector &v) {
        v.check_same_n(n_);
        if (span_.insert(v)) {
            gens_.push_back(v);
            return true;
        }
        dropped_++;
        return false;
    }

    size_t n() const {
        return n_;
    }
    size_t rank() const {
        return gens_.size();
    }
    /// n - r; the number of encoded qubits when the code is self-orthogonal.
    long k() const {
        return long(n_) - long(rank());
    }
    size_t dropped_rows() const {
        return dropped_;
    }
    const std::vector<SymplecticVector> &generators() const {
        return gens_;
    }
    const F2Span &span() const {
        return span_;
    }
    /// Canonical basis (reduced row echelon form in flat column order).
    const std::vector<SymplecticVector> &rref() const {
        return span_.rows();
    }
    bool contains(const SymplecticVector &v) const {
        return span_.contains(v);
    }
    bool contains(const AdditiveCode &sub) const {
        if (sub.n_ != n_) {
            return false;
        }
        for (const auto &g : sub.gens_) {
            if (!contains(g)) {
                return false;
            }
        }
        return true;
    }
    /// Same set of codewords.
    bool operator==(const AdditiveCode &o) const {
        return n_ == o.n_ && span_ == o.span_;
    }

    AdditiveCode linear_closure() const {
        AdditiveCode r(n_);
        for (const auto &g : gens_) {
            r.add_generator(g);
            r.add_generator(g.times(Gf4::w()));
        }
        return r;
    }

    /// Generator rows rendered over {0,1,w,W}.
    std::vector<std::string> rows_str() const {
        std::vector<std::string> out;
        for (const auto &g : gens_) {
            out.push_back(g.str());
        }
        return out;
    }

   private:
    size_t n_;
    std::vector<SymplecticVector> gens_;
    F2Span span_;
    size_t dropped_ = 0;
};

/// The trace dual, as the F2 kernel of the symplectic pairing.
inline AdditiveCode dual(const AdditiveCode &c) {
    std::vector<SymplecticVector> swapped;
    for (const auto &g : c.generators()) {
        swapped.push_back(g.conj());
    }
    return AdditiveCode(c.n(), f2_kernel(swapped, c.n()));
}

/// First pair of generators (i < j) with nonzero trace inner product.
inline std::optional<std::pair<size_t, size_t>> first_non_orthogonal_pair(const AdditiveCode &c) {
    const auto &g = c.generators();
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t j = i + 1; j < g.size(); j++) {
            if (symplectic_inner(g[i], g[j])) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

inline bool is_self_orthogonal(const AdditiveCode &c) {
    return !first_non_orthogonal_pair(c).has_value();
}

inline bool is_self_dual(const AdditiveCode &c) {
    return c.rank() == c.n() && is_self_orthogonal(c);
}

/// Every codeword has even weight. Even codes are self-orthogonal, and on a
/// self-orthogonal code the weight parity is additive, so the generators decide.
inline bool is_even(const AdditiveCode &c) {
    if (!is_self_orthogonal(c)) {
        return false;
    }
    for (const auto &g : c.generators()) {
        if (g.weight() & 1) {
            return false;
        }
    }
    return true;
}

/// The subcode of even-weight words; requires a self-orthogonal code so that
/// the even words form a subcode of index 1 or 2.
inline AdditiveCode even_subcode(const AdditiveCode &c) {
    detail::require(is_self_orthogonal(c), "even_subcode needs a self-orthogonal code");
    AdditiveCode r(c.n());
    std::optional<SymplecticVector> odd;
    for (const auto &g : c.generators()) {
        if (g.weight() & 1) {
            if (!odd) {
                odd = g;
            } else {
                r.add_generator(g ^ *odd);
            }
        } else {
            r.add_generator(g);
        }
    }
    return r;
}

inline bool is_linear(const AdditiveCode &c) {
    for (const auto &g : c.generators()) {
        if (!c.contains(g.times(Gf4::w()))) {
            return false;
        }
    }
    return true;
}

/// sum_i u_i conj(v_i) over GF(4).
inline Gf4 hermitian_inner(const SymplecticVector &u, const SymplecticVector &v) {
    u.check_same(v);
    Gf4 s;
    for (size_t i = 0; i < u.n(); i++) {
        s += u.get(i) * v.get(i).conj();
    }
    return s;
}

inline bool hermitian_self_orthogonal(const AdditiveCode &c) {
    detail::require(is_linear(c), "hermitian check needs a GF(4)-linear code");
    const auto &g = c.generators();
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t j = i; j < g.size(); j++) {
            if (!hermitian_inner(g[i], g[j]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qgf4

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

#include <gmpxx.h>

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qgf4/code.hpp"

namespace qgf4 {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

inline BigInt pow_ui(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline BigInt pow2(unsigned long e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

/// A_0..A_n with exact integer coefficients.
struct WeightEnumerator {
    size_t n = 0;
    std::vector<BigInt> coeffs;

    WeightEnumerator() = default;
    explicit WeightEnumerator(size_t n) : n(n), coeffs(n + 1, 0) {
    }
    WeightEnumerator(size_t n, const std::vector<long> &a) : n(n), coeffs(n + 1, 0) {
        for (size_t j = 0; j < a.size() && j <= n; j++) {
            coeffs[j] = a[j];
        }
    }

    const BigInt &operator[](size_t j) const {
        return coeffs[j];
    }
    BigInt &operator[](size_t j) {
        return coeffs[j];
    }
    BigInt total() const {
        BigInt s = 0;
        for (const auto &c : coeffs) {
            s += c;
        }
        return s;
    }
    /// Smallest j > 0 with A_j != 0, or 0 if none.
    size_t min_nonzero_weight() const {
        for (size_t j = 1; j <= n; j++) {
            if (coeffs[j] != 0) {
                return j;
            }
        }
        return 0;
    }
    bool operator==(const WeightEnumerator &o) const {
        return n == o.n && coeffs == o.coeffs;
    }
    /// "1 + 396 y^6 + ..." style rendering of the nonzero terms (x omitted).
    std::string str() const {
        std::string s;
        for (size_t j = 0; j <= n; j++) {
            if (coeffs[j] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += " ";
            }
            s += "A" + std::to_string(j) + "=" + coeffs[j].get_str();
        }
        return s;
    }
};

namespace detail {

template <size_t W>
void gray_counts_fixed(const std::vector<SymplecticVector> &gens, std::vector<uint64_t> &counts) {
    size_t r = gens.size();
    std::vector<std::array<uint64_t, 2 * W>> g(r);
    for (size_t i = 0; i < r; i++) {
        for (size_t k = 0; k < 2 * W; k++) {
            g[i][k] = gens[i].data()[k];
        }
    }
    std::array<uint64_t, 2 * W> cur{};
    counts[0]++;
    uint64_t total = uint64_t{1} << r;
    for (uint64_t i = 1; i < total; i++) {
        const auto &gi = g[std::countr_zero(i)];
        size_t w = 0;
        for (size_t k = 0; k < W; k++) {
            cur[k] ^= gi[k];
            cur[W + k] ^= gi[W + k];
            w += std::popcount(cur[k] | cur[W + k]);
        }
        counts[w]++;
    }
}

inline void gray_counts_dynamic(const std::vector<SymplecticVector> &gens, size_t n,
                                std::vector<uint64_t> &counts) {
    size_t r = gens.size();
    SymplecticVector cur(n);
    counts[0]++;
    uint64_t total = uint64_t{1} << r;
    for (uint64_t i = 1; i < total; i++) {
        cur ^= gens[std::countr_zero(i)];
        counts[cur.weight()]++;
    }
}

inline void check_budget(size_t r, uint64_t budget) {
    if (r >= 63 || (uint64_t{1} << r) > budget) {
        throw BudgetExceeded("enumerating 2^" + std::to_string(r) + " codewords exceeds budget of " +
                             std::to_string(budget));
    }
}

}  // namespace detail

/// Weight counts of the F2-span of independent generators, by Gray-code walk.
inline std::vector<uint64_t> span_weight_counts(const std::vector<SymplecticVector> &gens, size_t n,
                                                uint64_t budget = DEFAULT_BUDGET) {
    detail::check_budget(gens.size(), budget);
    std::vector<uint64_t> counts(n + 1, 0);
    switch (SymplecticVector::words_for(n)) {
        case 0:
        case 1:
            if (n == 0) {
                counts[0] = uint64_t{1} << gens.size();
                return counts;
            }
            detail::gray_counts_fixed<1>(gens, counts);
            break;
        case 2:
            detail::gray_counts_fixed<2>(gens, counts);
            break;
        case 3:
            detail::gray_counts_fixed<3>(gens, counts);
            break;
        case 4:
            detail::gray_counts_fixed<4>(gens, counts);
            break;
        default:
            detail::gray_counts_dynamic(gens, n, counts);
    }
    return counts;
}

inline WeightEnumerator weight_distribution(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    auto counts = span_weight_counts(c.generators(), c.n(), budget);
    WeightEnumerator w(c.n());
    for (size_t j = 0; j <= c.n(); j++) {
        mpz_set_ui(w.coeffs[j].get_mpz_t(), counts[j]);
    }
    return w;
}

/// True iff some nonzero word of the span has weight < bound. Stops at the
/// first hit, so it is cheap for codes that are far from the bound.
inline bool has_word_below(const std::vector<SymplecticVector> &gens, size_t n, size_t bound,
                           uint64_t budget = DEFAULT_BUDGET) {
    detail::check_budget(gens.size(), budget);
    size_t r = gens.size();
    for (const auto &g : gens) {
        if (g.weight() < bound) {
            return true;
        }
    }
    SymplecticVector cur(n);
    uint64_t total = uint64_t{1} << r;
    for (uint64_t i = 1; i < total; i++) {
        cur ^= gens[std::countr_zero(i)];
        if (cur.weight() < bound) {
            return true;
        }
    }
    return false;
}

/// 2^{-r} W(x + 3y, x - y), expanded as polynomials. Throws if the result
/// is not integral, which means (W, r) cannot come from a code.
inline WeightEnumerator macwilliams(const WeightEnumerator &w, size_t r) {
    size_t n = w.n;
    // plus[m][t]: coefficient of y^t in (x+3y)^m; minus[m][s]: in (x-y)^m.
    std::vector<std::vector<BigInt>> plus(n + 1), minus(n + 1);
    plus[0] = {1};
    minus[0] = {1};
    for (size_t m = 1; m <= n; m++) {
        plus[m].assign(m + 1, 0);
        minus[m].assign(m + 1, 0);
        for (size_t t = 0; t < m; t++) {
            plus[m][t] += plus[m - 1][t];
            plus[m][t + 1] += 3 * plus[m - 1][t];
            minus[m][t] += minus[m - 1][t];
            minus[m][t + 1] -= minus[m - 1][t];
        }
    }
    WeightEnumerator out(n);
    for (size_t i = 0; i <= n; i++) {
        if (w.coeffs[i] == 0) {
            continue;
        }
        const auto &p = plus[n - i];
        const auto &q = minus[i];
        for (size_t t = 0; t < p.size(); t++) {
            for (size_t s = 0; s < q.size(); s++) {
                out.coeffs[t + s] += w.coeffs[i] * p[t] * q[s];
            }
        }
    }
    for (auto &c : out.coeffs) {
        if (!mpz_divisible_2exp_p(c.get_mpz_t(), r)) {
            throw PreconditionError("MacWilliams transform is not integral for this (W, r)");
        }
        mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), r);
    }
    return out;
}

}  // namespace qgf4

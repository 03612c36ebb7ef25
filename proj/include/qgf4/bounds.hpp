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

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "qgf4/code.hpp"
#include "qgf4/enumerator.hpp"

namespace qgf4 {

/// P_j(x, n) = sum_s (-1)^s 3^{j-s} C(x, s) C(n-x, j-s).
inline BigInt krawtchouk(size_t j, size_t x, size_t n) {
    detail::require(j <= n && x <= n, "krawtchouk: arguments out of range");
    BigInt r = 0;
    for (size_t s = 0; s <= j; s++) {
        BigInt t = binomial(long(x), long(s)) * binomial(long(n - x), long(j - s)) * pow_ui(3, j - s);
        if (s & 1) {
            r -= t;
        } else {
            r += t;
        }
    }
    return r;
}

/// The (n+1) x (n+1) table P[j][r] = P_j(r, n).
inline std::vector<std::vector<BigInt>> krawtchouk_table(size_t n) {
    std::vector<std::vector<BigInt>> p(n + 1, std::vector<BigInt>(n + 1));
    for (size_t j = 0; j <= n; j++) {
        for (size_t r = 0; r <= n; r++) {
            p[j][r] = krawtchouk(j, r, n);
        }
    }
    return p;
}

/// A'_j = (1 / size) sum_r P_j(r, n) A_r over the rationals.
inline std::vector<Rational> dual_distribution(const std::vector<Rational> &a, const Rational &size) {
    size_t n = a.size() - 1;
    std::vector<Rational> out(n + 1, 0);
    for (size_t j = 0; j <= n; j++) {
        for (size_t r = 0; r <= n; r++) {
            out[j] += Rational(krawtchouk(j, r, n)) * a[r];
        }
        out[j] /= size;
    }
    return out;
}

/// sum_{j <= t} 3^j C(n, j) with t = floor((d-1)/2).
inline BigInt sphere_packing_volume(size_t n, size_t d) {
    BigInt v = 0;
    size_t t = d >= 1 ? (d - 1) / 2 : 0;
    for (size_t j = 0; j <= t && j <= n; j++) {
        v += pow_ui(3, j) * binomial(long(n), long(j));
    }
    return v;
}

/// The sphere-packing bound for nondegenerate codes: volume <= 2^{n-k}.
inline bool sphere_packing_ok(size_t n, size_t k, size_t d) {
    return k <= n && sphere_packing_volume(n, d) <= pow2(n - k);
}

/// n >= 4 floor((d-1)/2) + k for all codes; k <= n - 2d + 2 for pure ones.
inline bool singleton_ok(size_t n, size_t k, size_t d, bool pure) {
    long e = d >= 1 ? long(d - 1) / 2 : 0;
    if (long(n) < 4 * e + long(k)) {
        return false;
    }
    return !pure || long(k) <= long(n) - 2 * long(d) + 2;
}

/// S(x, y) = 2^k W((x+3y)/2, (y-x)/2), i.e. S_j = 2^{k-n} sum_r (-1)^r P_j(r) A_r.
inline std::vector<Rational> shadow_enumerator(const WeightEnumerator &w, size_t k) {
    size_t n = w.n;
    std::vector<Rational> s(n + 1, 0);
    Rational scale(pow2(k), pow2(n));
    scale.canonicalize();
    for (size_t j = 0; j <= n; j++) {
        for (size_t r = 0; r <= n; r++) {
            if (w.coeffs[r] == 0) {
                continue;
            }
            BigInt t = krawtchouk(j, r, n) * w.coeffs[r];
            s[j] += (r & 1) ? Rational(-t) : Rational(t);
        }
        s[j] *= scale;
    }
    return s;
}

namespace detail {

/// Coefficients (lowest power of y first) of a homogeneous product
/// prod f_i^{e_i}, each f_i given by its y-coefficients.
inline std::vector<BigInt> poly_power_product(const std::vector<std::pair<std::vector<long>, size_t>> &fs,
                                              size_t degree) {
    std::vector<BigInt> r{1};
    for (const auto &[f, e] : fs) {
        for (size_t t = 0; t < e; t++) {
            std::vector<BigInt> nr(r.size() + f.size() - 1, 0);
            for (size_t i = 0; i < r.size(); i++) {
                for (size_t j = 0; j < f.size(); j++) {
                    nr[i + j] += r[i] * f[j];
                }
            }
            r = nr;
        }
    }
    r.resize(degree + 1, 0);
    return r;
}

/// Solves M c = w exactly; nullopt if inconsistent. M is (rows x cols).
inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> w) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<size_t> pivcol;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) {
            p++;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        std::swap(w[p], w[r]);
        for (size_t i = 0; i < rows; i++) {
            if (i != r && m[i][c] != 0) {
                Rational f = m[i][c] / m[r][c];
                for (size_t j = c; j < cols; j++) {
                    m[i][j] -= f * m[r][j];
                }
                w[i] -= f * w[r];
            }
        }
        pivcol.push_back(c);
        r++;
    }
    for (size_t i = r; i < rows; i++) {
        if (w[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> c(cols, 0);
    for (size_t i = 0; i < r; i++) {
        c[pivcol[i]] = w[i] / m[i][pivcol[i]];
    }
    return c;
}

}  // namespace detail

/// Writes W as sum_i c_i (x+y)^{n-2i} (x^2+3y^2)^i, or for even codes as
/// sum_i c_i (x^2+3y^2)^{n/2-3i} (y^2 (x^2-y^2)^2)^i. nullopt means W is not
/// in that ring.
inline std::optional<std::vector<Rational>> gleason_decompose(const WeightEnumerator &w, bool even) {
    size_t n = w.n;
    std::vector<std::vector<BigInt>> basis;
    if (!even) {
        for (size_t i = 0; 2 * i <= n; i++) {
            basis.push_back(detail::poly_power_product({{{1, 1}, n - 2 * i}, {{1, 0, 3}, i}}, n));
        }
    } else {
        if (n % 2) {
            return std::nullopt;
        }
        for (size_t i = 0; 6 * i <= n; i++) {
            basis.push_back(detail::poly_power_product({{{1, 0, 3}, n / 2 - 3 * i}, {{0, 0, 1, 0, -2, 0, 1}, i}}, n));
        }
    }
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(basis.size()));
    std::vector<Rational> rhs(n + 1);
    for (size_t j = 0; j <= n; j++) {
        for (size_t i = 0; i < basis.size(); i++) {
            m[j][i] = Rational(basis[i][j]);
        }
        rhs[j] = Rational(w.coeffs[j]);
    }
    return detail::solve_exact(m, rhs);
}

/// floor(n/2) + 1 for self-dual codes, 2 floor(n/6) + 2 for even ones.
inline size_t selfdual_distance_bound(size_t n, bool even) {
    detail::require(n >= 1, "selfdual_distance_bound: n must be positive");
    return even ? 2 * (n / 6) + 2 : n / 2 + 1;
}

/// gcd of the nonzero codeword weights of a self-dual code.
inline size_t divisibility_constant(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    if (!is_self_dual(c)) {
        throw PreconditionError("divisibility_constant: code is not self-dual");
    }
    WeightEnumerator w = weight_distribution(c, budget);
    size_t g = 0;
    for (size_t j = 1; j <= c.n(); j++) {
        if (w.coeffs[j] != 0) {
            g = std::gcd(g, j);
        }
    }
    return g;
}

/// Orders of the Clifford group L and of its real subgroup L_R on n qubits.
inline std::pair<BigInt, BigInt> clifford_orders(size_t n) {
    detail::require(n >= 1, "clifford_orders: n must be positive");
    BigInt l = pow2(n * n + 2 * n + 3);
    for (size_t j = 1; j <= n; j++) {
        l *= pow2(2 * j) - 1;
    }
    BigInt lr = pow2(n * n + n + 2) * (pow2(n) - 1);
    for (size_t j = 1; j < n; j++) {
        lr *= pow2(2 * j) - 1;
    }
    return {l, lr};
}

}  // namespace qgf4

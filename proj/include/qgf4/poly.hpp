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
#include <ostream>
#include <string>
#include <vector>

#include "qgf4/errors.hpp"
#include "qgf4/gf4.hpp"

namespace qgf4 {

// Binary polynomials of degree < 64, bit i = coefficient of x^i.

inline int f2poly_degree(uint64_t p) {
    return p ? 63 - std::countl_zero(p) : -1;
}

inline uint64_t f2poly_mod(uint64_t a, uint64_t m) {
    int dm = f2poly_degree(m);
    detail::require(dm >= 0, "division by the zero polynomial");
    for (int d = f2poly_degree(a); d >= dm; d = f2poly_degree(a)) {
        a ^= m << (d - dm);
    }
    return a;
}

/// a*b mod m, for deg m <= 62.
inline uint64_t f2poly_mulmod(uint64_t a, uint64_t b, uint64_t m) {
    int dm = f2poly_degree(m);
    a = f2poly_mod(a, m);
    uint64_t r = 0;
    while (b) {
        if (b & 1) {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if ((a >> dm) & 1) {
            a ^= m;
        }
    }
    return r;
}

inline bool f2poly_is_irreducible(uint64_t p) {
    int d = f2poly_degree(p);
    if (d <= 0) {
        return false;
    }
    // x^(2^i) mod p for i = 1..d/2; irreducible iff gcd(x^(2^i) - x, p) = 1.
    uint64_t x = 2, t = 2;
    for (int i = 1; i <= d / 2; i++) {
        t = f2poly_mulmod(t, t, p);
        uint64_t g = p, h = t ^ f2poly_mod(x, p);
        while (h) {
            uint64_t r = f2poly_mod(g, h);
            g = h;
            h = r;
        }
        if (f2poly_degree(g) > 0) {
            return false;
        }
    }
    return true;
}

/// The irreducible polynomial of degree m with the smallest bitmask.
inline uint64_t smallest_irreducible(int m) {
    detail::require(m >= 1 && m <= 62, "degree out of range");
    for (uint64_t p = uint64_t{1} << m; p < (uint64_t{2} << m); p++) {
        if (f2poly_is_irreducible(p)) {
            return p;
        }
    }
    return 0;
}

/// Full product; the degrees must sum to at most 63.
inline uint64_t f2poly_mul(uint64_t a, uint64_t b) {
    detail::require(a == 0 || b == 0 || f2poly_degree(a) + f2poly_degree(b) <= 63, "product degree exceeds 63");
    uint64_t r = 0;
    for (int i = 0; b >> i; i++) {
        if ((b >> i) & 1) {
            r ^= a << i;
        }
    }
    return r;
}

inline uint64_t f2poly_div(uint64_t a, uint64_t m) {
    int dm = f2poly_degree(m);
    detail::require(dm >= 0, "division by the zero polynomial");
    uint64_t q = 0;
    for (int d = f2poly_degree(a); d >= dm; d = f2poly_degree(a)) {
        q |= uint64_t{1} << (d - dm);
        a ^= m << (d - dm);
    }
    return q;
}

inline uint64_t f2poly_gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t r = f2poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

inline bool f2poly_divides(uint64_t d, uint64_t a) {
    return f2poly_mod(a, d) == 0;
}

/// x^n - 1 over GF(2), n <= 62.
inline uint64_t f2poly_xn1(size_t n) {
    detail::require(n >= 1 && n <= 62, "length out of range for binary cyclic polynomials");
    return (uint64_t{1} << n) | 1;
}

/// a(x) mod x^n - 1.
inline uint64_t f2poly_mod_xn1(uint64_t a, size_t n) {
    uint64_t r = 0;
    for (size_t i = 0; a >> i; i++) {
        if ((a >> i) & 1) {
            r ^= uint64_t{1} << (i % n);
        }
    }
    return r;
}

/// a(x) b(x) mod x^n - 1, inputs of degree < n.
inline uint64_t f2poly_mul_xn1(uint64_t a, uint64_t b, size_t n) {
    uint64_t r = 0;
    for (size_t i = 0; i < n; i++) {
        if ((b >> i) & 1) {
            uint64_t mask = (uint64_t{1} << n) - 1;
            r ^= ((a << i) | (a >> (n - i))) & mask;
        }
    }
    return r;
}

/// a(x^{n-1}) mod x^n - 1 (the reciprocal modulo x^n - 1).
inline uint64_t f2poly_reverse_xn1(uint64_t a, size_t n) {
    uint64_t r = 0;
    for (size_t i = 0; i < n; i++) {
        if ((a >> i) & 1) {
            r |= uint64_t{1} << ((n - i) % n);
        }
    }
    return r;
}

inline std::string f2poly_str(uint64_t p) {
    if (!p) {
        return "0";
    }
    std::string s;
    for (int i = f2poly_degree(p); i >= 0; i--) {
        if (!((p >> i) & 1)) {
            continue;
        }
        if (!s.empty()) {
            s += "+";
        }
        s += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s;
}

/// A polynomial over GF(4), dense and little-endian, with no trailing zero
/// coefficients (the zero polynomial is empty).
struct Gf4Poly {
    std::vector<Gf4> c;

    Gf4Poly() = default;
    explicit Gf4Poly(std::vector<Gf4> coeffs) : c(std::move(coeffs)) {
        trim();
    }
    static Gf4Poly constant(Gf4 x) {
        return Gf4Poly(std::vector<Gf4>{x});
    }
    static Gf4Poly monomial(size_t j, Gf4 x = Gf4::one()) {
        std::vector<Gf4> v(j + 1, Gf4::zero());
        v[j] = x;
        return Gf4Poly(v);
    }
    /// x^n - kappa.
    static Gf4Poly xn_minus(size_t n, Gf4 kappa) {
        std::vector<Gf4> v(n + 1, Gf4::zero());
        v[0] = kappa;
        v[n] = Gf4::one();
        return Gf4Poly(v);
    }
    /// Coefficients lowest degree first over {0,1,w,W}.
    static Gf4Poly from_string(const std::string &s) {
        std::vector<Gf4> v;
        for (char ch : s) {
            v.push_back(Gf4::from_char(ch));
        }
        return Gf4Poly(v);
    }
    std::string str() const {
        if (c.empty()) {
            return "0";
        }
        std::string s;
        for (Gf4 x : c) {
            s.push_back(x.to_char());
        }
        return s;
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) {
            c.pop_back();
        }
    }
    bool is_zero() const {
        return c.empty();
    }
    long degree() const {
        return long(c.size()) - 1;
    }
    Gf4 operator[](size_t j) const {
        return j < c.size() ? c[j] : Gf4::zero();
    }
    Gf4 leading() const {
        return c.empty() ? Gf4::zero() : c.back();
    }
    Gf4Poly monic() const {
        if (c.empty()) {
            return *this;
        }
        return scaled(leading().inverse());
    }
    Gf4Poly scaled(Gf4 x) const {
        std::vector<Gf4> v = c;
        for (auto &y : v) {
            y = y * x;
        }
        return Gf4Poly(v);
    }
    Gf4Poly conj() const {
        std::vector<Gf4> v = c;
        for (auto &y : v) {
            y = y.conj();
        }
        return Gf4Poly(v);
    }

    Gf4Poly operator+(const Gf4Poly &o) const {
        std::vector<Gf4> v(std::max(c.size(), o.c.size()), Gf4::zero());
        for (size_t i = 0; i < v.size(); i++) {
            v[i] = (*this)[i] + o[i];
        }
        return Gf4Poly(v);
    }
    Gf4Poly operator-(const Gf4Poly &o) const {
        return *this + o;
    }
    Gf4Poly operator*(const Gf4Poly &o) const {
        if (is_zero() || o.is_zero()) {
            return Gf4Poly();
        }
        std::vector<Gf4> v(c.size() + o.c.size() - 1, Gf4::zero());
        for (size_t i = 0; i < c.size(); i++) {
            if (c[i].is_zero()) {
                continue;
            }
            for (size_t j = 0; j < o.c.size(); j++) {
                v[i + j] = v[i + j] + c[i] * o.c[j];
            }
        }
        return Gf4Poly(v);
    }
    /// Quotient and remainder.
    std::pair<Gf4Poly, Gf4Poly> divmod(const Gf4Poly &d) const {
        detail::require(!d.is_zero(), "division by the zero polynomial");
        std::vector<Gf4> r = c;
        long dd = d.degree();
        std::vector<Gf4> q(c.size() >= d.c.size() ? c.size() - d.c.size() + 1 : 0, Gf4::zero());
        Gf4 inv = d.leading().inverse();
        for (long i = long(r.size()) - 1; i >= dd; i--) {
            if (r[i].is_zero()) {
                continue;
            }
            Gf4 f = r[i] * inv;
            q[i - dd] = f;
            for (long j = 0; j <= dd; j++) {
                r[i - dd + j] = r[i - dd + j] + f * d.c[j];
            }
        }
        return {Gf4Poly(q), Gf4Poly(r)};
    }
    Gf4Poly operator%(const Gf4Poly &d) const {
        return divmod(d).second;
    }
    Gf4Poly operator/(const Gf4Poly &d) const {
        return divmod(d).first;
    }
    bool divides(const Gf4Poly &a) const {
        return (a % *this).is_zero();
    }
    bool operator==(const Gf4Poly &o) const {
        return c == o.c;
    }
    bool operator<(const Gf4Poly &o) const {
        if (c.size() != o.c.size()) {
            return c.size() < o.c.size();
        }
        for (size_t i = c.size(); i-- > 0;) {
            if (c[i].v != o.c[i].v) {
                return c[i].v < o.c[i].v;
            }
        }
        return false;
    }
};

inline std::ostream &operator<<(std::ostream &os, const Gf4Poly &p) {
    return os << p.str();
}

}  // namespace qgf4

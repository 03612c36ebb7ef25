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

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgf4/errors.hpp"

namespace qgf4 {

/// An element of GF(4) stored as two bits (a, b), bit0 = a, bit1 = b.
///
/// 0 = (0,0), w = (1,0), W = conj(w) = (0,1), 1 = (1,1). With this layout
/// addition is xor, conjugation swaps the bits and the trace is a xor b.
struct Gf4 {
    uint8_t v = 0;

    constexpr Gf4() = default;
    constexpr explicit Gf4(uint8_t bits) : v(bits & 3) {
    }

    static constexpr Gf4 zero() {
        return Gf4(0);
    }
    static constexpr Gf4 one() {
        return Gf4(3);
    }
    static constexpr Gf4 w() {
        return Gf4(1);
    }
    static constexpr Gf4 wbar() {
        return Gf4(2);
    }

    constexpr bool a() const {
        return v & 1;
    }
    constexpr bool b() const {
        return (v >> 1) & 1;
    }
    constexpr bool is_zero() const {
        return v == 0;
    }

    constexpr Gf4 operator+(Gf4 o) const {
        return Gf4(v ^ o.v);
    }
    constexpr Gf4 operator-(Gf4 o) const {
        return Gf4(v ^ o.v);
    }
    constexpr Gf4 &operator+=(Gf4 o) {
        v ^= o.v;
        return *this;
    }
    constexpr Gf4 operator*(Gf4 o) const {
        // Rows/cols indexed by the 2-bit code: 0, w, W, 1.
        constexpr uint8_t table[4][4] = {
            {0, 0, 0, 0},
            {0, 2, 3, 1},
            {0, 3, 1, 2},
            {0, 1, 2, 3},
        };
        return Gf4(table[v][o.v]);
    }
    constexpr Gf4 &operator*=(Gf4 o) {
        *this = *this * o;
        return *this;
    }
    constexpr Gf4 conj() const {
        return Gf4(uint8_t(((v & 1) << 1) | (v >> 1)));
    }
    constexpr Gf4 inverse() const {
        return conj();  // x^-1 = x^2 for x != 0.
    }
    /// Tr(x) = x + x^2, landing in GF(2).
    constexpr bool trace() const {
        return (v ^ (v >> 1)) & 1;
    }
    constexpr bool operator==(const Gf4 &o) const = default;

    char to_char() const {
        return "0wW1"[v];
    }
    static Gf4 from_char(char c) {
        switch (c) {
            case '0':
                return Gf4(0);
            case 'w':
                return Gf4(1);
            case 'W':
                return Gf4(2);
            case '1':
                return Gf4(3);
            default:
                throw PreconditionError(std::string("not a GF(4) symbol: '") + c + "'");
        }
    }
    static bool is_symbol(char c) {
        return c == '0' || c == '1' || c == 'w' || c == 'W';
    }
};

/// A word of GF(4)^n in its binary symplectic image (a|b).
///
/// Storage is 2*W words: the a-part in words [0, W), the b-part in [W, 2W),
/// coordinate i at bit i%64 of word i/64. Bits past n are always zero, so the
/// whole buffer can be treated as one F2 vector of length 128*W.
class SymplecticVector {
   public:
    SymplecticVector() = default;
    explicit SymplecticVector(size_t n) : n_(n), words_(2 * words_for(n), 0) {
    }

    static constexpr size_t words_for(size_t n) {
        return (n + 63) / 64;
    }

    size_t n() const {
        return n_;
    }
    size_t num_words() const {
        return words_.size() / 2;
    }
    const std::vector<uint64_t> &data() const {
        return words_;
    }
    std::vector<uint64_t> &data() {
        return words_;
    }
    const uint64_t *a_words() const {
        return words_.data();
    }
    const uint64_t *b_words() const {
        return words_.data() + num_words();
    }

    bool a(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool b(size_t i) const {
        return (words_[num_words() + (i >> 6)] >> (i & 63)) & 1;
    }
    void set_a(size_t i, bool bit) {
        set_bit(i >> 6, i & 63, bit);
    }
    void set_b(size_t i, bool bit) {
        set_bit(num_words() + (i >> 6), i & 63, bit);
    }
    Gf4 get(size_t i) const {
        return Gf4(uint8_t(a(i) | (b(i) << 1)));
    }
    void set(size_t i, Gf4 x) {
        set_a(i, x.a());
        set_b(i, x.b());
    }

    /// Flat F2 bit access: positions [0, 64W) are a, [64W, 128W) are b.
    bool bit(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void flip_bit(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    size_t flat_a(size_t i) const {
        return i;
    }
    size_t flat_b(size_t i) const {
        return 64 * num_words() + i;
    }

    bool is_zero() const {
        for (uint64_t w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }
    size_t weight() const {
        size_t w = 0;
        size_t nw = num_words();
        for (size_t k = 0; k < nw; k++) {
            w += std::popcount(words_[k] | words_[nw + k]);
        }
        return w;
    }

    SymplecticVector &operator^=(const SymplecticVector &o) {
        check_same(o);
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= o.words_[k];
        }
        return *this;
    }
    SymplecticVector operator^(const SymplecticVector &o) const {
        SymplecticVector r = *this;
        r ^= o;
        return r;
    }
    SymplecticVector &operator+=(const SymplecticVector &o) {
        return *this ^= o;
    }
    SymplecticVector operator+(const SymplecticVector &o) const {
        return *this ^ o;
    }
    bool operator==(const SymplecticVector &o) const = default;
    bool operator<(const SymplecticVector &o) const {
        if (n_ != o.n_) {
            return n_ < o.n_;
        }
        return words_ < o.words_;
    }

    /// Scalar multiple: w.(a|b) = (b | a^b); W = w^2.
    SymplecticVector times(Gf4 c) const {
        SymplecticVector r(n_);
        size_t nw = num_words();
        for (size_t k = 0; k < nw; k++) {
            uint64_t a = words_[k], b = words_[nw + k];
            switch (c.v) {
                case 0:
                    break;
                case 1:
                    r.words_[k] = b;
                    r.words_[nw + k] = a ^ b;
                    break;
                case 2:
                    r.words_[k] = a ^ b;
                    r.words_[nw + k] = a;
                    break;
                default:
                    r.words_[k] = a;
                    r.words_[nw + k] = b;
            }
        }
        return r;
    }
    /// Componentwise conjugate: swaps the a and b halves.
    SymplecticVector conj() const {
        SymplecticVector r(n_);
        size_t nw = num_words();
        for (size_t k = 0; k < nw; k++) {
            r.words_[k] = words_[nw + k];
            r.words_[nw + k] = words_[k];
        }
        return r;
    }

    /// Parses a string over {0,1,w,W}; coordinate 0 is the leftmost symbol.
    static SymplecticVector from_string(std::string_view s) {
        SymplecticVector r(s.size());
        for (size_t i = 0; i < s.size(); i++) {
            r.set(i, Gf4::from_char(s[i]));
        }
        return r;
    }
    std::string str() const {
        std::string s(n_, '0');
        for (size_t i = 0; i < n_; i++) {
            s[i] = get(i).to_char();
        }
        return s;
    }
    /// Binary (a|b) rendering, e.g. "110|011".
    std::string ab_str() const {
        std::string s;
        for (size_t i = 0; i < n_; i++) {
            s.push_back(a(i) ? '1' : '0');
        }
        s.push_back('|');
        for (size_t i = 0; i < n_; i++) {
            s.push_back(b(i) ? '1' : '0');
        }
        return s;
    }
    static SymplecticVector from_ab(std::string_view a, std::string_view b) {
        detail::require(a.size() == b.size(), "a and b parts differ in length");
        SymplecticVector r(a.size());
        for (size_t i = 0; i < a.size(); i++) {
            r.set_a(i, a[i] == '1');
            r.set_b(i, b[i] == '1');
        }
        return r;
    }

    void check_same(const SymplecticVector &o) const {
        check_same_n(o.n_);
    }
    void check_same_n(size_t n) const {
        if (n_ != n) {
            throw PreconditionError("length mismatch");
        }
    }

   private:
    void set_bit(size_t word, size_t bit, bool on) {
        uint64_t m = uint64_t{1} << bit;
        words_[word] = on ? (words_[word] | m) : (words_[word] & ~m);
    }

    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// A word of GF(4)^n as an explicit symbol list.
struct Gf4Vector {
    std::vector<Gf4> coords;

    Gf4Vector() = default;
    explicit Gf4Vector(size_t n) : coords(n) {
    }
    explicit Gf4Vector(std::vector<Gf4> c) : coords(std::move(c)) {
    }
    size_t n() const {
        return coords.size();
    }
    size_t hamming_weight() const {
        size_t w = 0;
        for (Gf4 x : coords) {
            w += !x.is_zero();
        }
        return w;
    }
    static Gf4Vector from_string(std::string_view s) {
        Gf4Vector r(s.size());
        for (size_t i = 0; i < s.size(); i++) {
            r.coords[i] = Gf4::from_char(s[i]);
        }
        return r;
    }
    std::string str() const {
        std::string s;
        for (Gf4 x : coords) {
            s.push_back(x.to_char());
        }
        return s;
    }
    bool operator==(const Gf4Vector &o) const = default;
};

/// phi(a|b) = w a + W b, coordinatewise.
inline Gf4Vector phi(const SymplecticVector &v) {
    Gf4Vector r(v.n());
    for (size_t i = 0; i < v.n(); i++) {
        Gf4 x = Gf4::zero();
        if (v.a(i)) {
            x += Gf4::w();
        }
        if (v.b(i)) {
            x += Gf4::wbar();
        }
        r.coords[i] = x;
    }
    return r;
}

inline SymplecticVector phi_inv(const Gf4Vector &u) {
    SymplecticVector r(u.n());
    for (size_t i = 0; i < u.n(); i++) {
        r.set(i, u.coords[i]);
    }
    return r;
}

/// a.b' + a'.b mod 2.
inline bool symplectic_inner(const SymplecticVector &u, const SymplecticVector &v) {
    u.check_same(v);
    size_t nw = u.num_words();
    const uint64_t *ua = u.a_words(), *ub = u.b_words();
    const uint64_t *va = v.a_words(), *vb = v.b_words();
    uint64_t acc = 0;
    for (size_t k = 0; k < nw; k++) {
        acc ^= (ua[k] & vb[k]) ^ (va[k] & ub[k]);
    }
    return std::popcount(acc) & 1;
}

/// Tr(u . conj(v)) summed over coordinates, computed symbol by symbol.
inline bool trace_inner(const Gf4Vector &u, const Gf4Vector &v) {
    if (u.n() != v.n()) {
        throw PreconditionError("length mismatch");
    }
    bool t = false;
    for (size_t i = 0; i < u.n(); i++) {
        t ^= (u.coords[i] * v.coords[i].conj()).trace();
    }
    return t;
}

inline size_t weight(const SymplecticVector &v) {
    return v.weight();
}

}  // namespace qgf4

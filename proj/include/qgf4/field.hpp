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

#include <cstdint>
#include <vector>

#include "qgf4/poly.hpp"

namespace qgf4 {

/// Multiplicative order of a modulo n (gcd(a, n) = 1).
inline size_t multiplicative_order(uint64_t a, uint64_t n) {
    detail::require(n >= 1, "modulus must be positive");
    if (n == 1) {
        return 1;
    }
    uint64_t x = a % n;
    for (size_t k = 1; k <= n; k++) {
        if (x == 1) {
            return k;
        }
        x = (x * a) % n;
    }
    throw PreconditionError("element is not invertible modulo n");
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        ps.push_back(n);
    }
    return ps;
}

/// GF(2^m), m <= 62, as binary polynomials modulo the smallest irreducible
/// polynomial of degree m.
class Gf2m {
   public:
    explicit Gf2m(int m) : m_(m), mod_(smallest_irreducible(m)) {
        detail::require(m >= 1 && m <= 62, "extension degree out of range");
    }
    int m() const {
        return m_;
    }
    uint64_t order() const {
        return (uint64_t{1} << m_) - 1;
    }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return f2poly_mulmod(a, b, mod_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /// An element of multiplicative order exactly n (n must divide 2^m - 1).
    uint64_t element_of_order(uint64_t n) const {
        detail::require(order() % n == 0, "order does not divide the group order");
        if (n == 1) {
            return 1;
        }
        auto ps = prime_factors(n);
        for (uint64_t a = 2; a <= order(); a++) {
            uint64_t e = pow(a, order() / n);
            bool ok = true;
            for (uint64_t p : ps) {
                if (pow(e, n / p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                return e;
            }
        }
        throw PreconditionError("no element of the requested order");
    }

   private:
    int m_;
    uint64_t mod_;
};

}  // namespace qgf4

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

#include "qgf4/enumerator.hpp"

namespace qgf4 {

/// [[n,k,d]] plus the purity flag.
struct QuantumParams {
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    bool pure = false;

    bool operator==(const QuantumParams &o) const = default;
    std::string str() const {
        return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]" +
               (pure ? " pure" : " impure");
    }
};

/// Params together with both weight distributions used to derive them.
struct QuantumReport {
    QuantumParams params;
    WeightEnumerator code;  // A_j of C
    WeightEnumerator dual;  // A'_j of C-perp
    bool enumerated_dual_side = false;
};

inline QuantumReport quantum_report(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    if (auto bad = first_non_orthogonal_pair(c)) {
        throw PreconditionError("code is not self-orthogonal: generators " + std::to_string(bad->first) +
                                " and " + std::to_string(bad->second) + " have nonzero trace inner product");
    }
    size_t n = c.n();
    size_t r = c.rank();
    QuantumReport rep;
    if (r <= 2 * n - r) {
        rep.code = weight_distribution(c, budget);
        rep.dual = macwilliams(rep.code, r);
    } else {
        AdditiveCode cd = dual(c);
        rep.dual = weight_distribution(cd, budget);
        rep.code = macwilliams(rep.dual, 2 * n - r);
        rep.enumerated_dual_side = true;
    }
    QuantumParams &p = rep.params;
    p.n = n;
    p.k = n - r;
    if (p.k == 0) {
        // Self-dual: d is the minimum nonzero weight, pure by convention.
        p.d = rep.code.min_nonzero_weight();
        p.pure = true;
        return rep;
    }
    for (size_t j = 1; j <= n; j++) {
        if (rep.dual[j] > rep.code[j]) {
            p.d = j;
            break;
        }
    }
    p.pure = rep.dual.min_nonzero_weight() == p.d;
    return rep;
}

inline QuantumParams quantum_params(const AdditiveCode &c, uint64_t budget = DEFAULT_BUDGET) {
    return quantum_report(c, budget).params;
}

}  // namespace qgf4

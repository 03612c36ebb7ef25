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
#include <vector>

#include "qgf4/bounds.hpp"

namespace qgf4 {

enum class Sense { EQ, GE, LE };

/// sum_j a_j x_j (sense) b, over variables x >= 0.
struct LinearConstraint {
    std::vector<Rational> a;
    Sense sense = Sense::EQ;
    Rational b;
    std::string label;
};

struct LinearSystem {
    std::vector<std::string> var_names;
    std::vector<LinearConstraint> rows;

    size_t vars() const {
        return var_names.size();
    }
    void add(std::vector<Rational> a, Sense s, Rational b, std::string label) {
        detail::require(a.size() == vars(), "constraint has the wrong number of coefficients");
        rows.push_back({std::move(a), s, std::move(b), std::move(label)});
    }
};

/// Either a point x >= 0 satisfying every row, or Farkas multipliers y
/// (free on EQ rows, >= 0 on GE rows, <= 0 on LE rows) with
/// sum_i y_i a_i <= 0 componentwise and sum_i y_i b_i > 0.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> witness;
    std::vector<Rational> certificate;
};

inline bool check_witness(const LinearSystem &sys, const std::vector<Rational> &x) {
    if (x.size() != sys.vars()) {
        return false;
    }
    for (const auto &v : x) {
        if (v < 0) {
            return false;
        }
    }
    for (const auto &row : sys.rows) {
        Rational lhs = 0;
        for (size_t j = 0; j < x.size(); j++) {
            lhs += row.a[j] * x[j];
        }
        bool ok = row.sense == Sense::EQ ? lhs == row.b : row.sense == Sense::GE ? lhs >= row.b : lhs <= row.b;
        if (!ok) {
            return false;
        }
    }
    return true;
}

inline bool check_certificate(const LinearSystem &sys, const std::vector<Rational> &y) {
    if (y.size() != sys.rows.size()) {
        return false;
    }
    std::vector<Rational> comb(sys.vars(), 0);
    Rational rhs = 0;
    for (size_t i = 0; i < y.size(); i++) {
        const auto &row = sys.rows[i];
        if ((row.sense == Sense::GE && y[i] < 0) || (row.sense == Sense::LE && y[i] > 0)) {
            return false;
        }
        for (size_t j = 0; j < comb.size(); j++) {
            comb[j] += y[i] * row.a[j];
        }
        rhs += y[i] * row.b;
    }
    for (const auto &c : comb) {
        if (c > 0) {
            return false;
        }
    }
    return rhs > 0;
}

/// Exact phase-one simplex with Bland's rule.
inline FeasibilityResult solve_feasibility(const LinearSystem &sys) {
    size_t m = sys.rows.size(), nv = sys.vars();
    size_t ns = 0;
    for (const auto &row : sys.rows) {
        ns += row.sense != Sense::EQ;
    }
    // Columns: structural | slacks | artificials.
    size_t cols = nv + ns + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, 0));
    std::vector<int> sign(m, 1);
    std::vector<size_t> basis(m);
    size_t s = nv;
    for (size_t i = 0; i < m; i++) {
        const auto &row = sys.rows[i];
        for (size_t j = 0; j < nv; j++) {
            t[i][j] = row.a[j];
        }
        if (row.sense == Sense::GE) {
            t[i][s++] = -1;
        } else if (row.sense == Sense::LE) {
            t[i][s++] = 1;
        }
        t[i][cols] = row.b;
        if (row.b < 0) {
            sign[i] = -1;
            for (auto &v : t[i]) {
                v = -v;
            }
        }
        t[i][nv + ns + i] = 1;
        basis[i] = nv + ns + i;
    }
    // Reduced costs of the phase-one objective sum(artificials).
    std::vector<Rational> z(cols + 1, 0);
    for (size_t j = 0; j <= cols; j++) {
        if (j >= nv + ns && j < cols) {
            continue;
        }
        for (size_t i = 0; i < m; i++) {
            z[j] -= t[i][j];
        }
    }
    while (true) {
        size_t enter = cols;
        for (size_t j = 0; j < cols; j++) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) {
            break;
        }
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; i++) {
            if (t[i][enter] > 0) {
                Rational ratio = t[i][cols] / t[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        detail::require(leave < m, "phase-one simplex is unbounded");
        Rational piv = t[leave][enter];
        for (auto &v : t[leave]) {
            v /= piv;
        }
        for (size_t i = 0; i < m; i++) {
            if (i != leave && t[i][enter] != 0) {
                Rational f = t[i][enter];
                for (size_t j = 0; j <= cols; j++) {
                    if (t[leave][j] != 0) {
                        t[i][j] -= f * t[leave][j];
                    }
                }
            }
        }
        if (z[enter] != 0) {
            Rational f = z[enter];
            for (size_t j = 0; j <= cols; j++) {
                if (t[leave][j] != 0) {
                    z[j] -= f * t[leave][j];
                }
            }
        }
        basis[leave] = enter;
    }
    FeasibilityResult res;
    // z[cols] is minus the phase-one optimum.
    if (z[cols] == 0) {
        res.feasible = true;
        res.witness.assign(nv, 0);
        for (size_t i = 0; i < m; i++) {
            if (basis[i] < nv) {
                res.witness[basis[i]] = t[i][cols];
            }
        }
        return res;
    }
    // Duals of the phase-one problem: y_i = 1 - (reduced cost of artificial i).
    res.certificate.resize(m);
    for (size_t i = 0; i < m; i++) {
        res.certificate[i] = (1 - z[nv + ns + i]) * sign[i];
    }
    return res;
}

// ---------------------------------------------------------------------------
// The linear programming bound.

enum class LpBranch {
    odd,   // the even-weight words form half of C; shadow-type inequalities apply
    even,  // every word of C has even weight
    enumerator,  // weight-enumerator form with a real parameter K
};

inline const char *lp_branch_name(LpBranch b) {
    return b == LpBranch::odd ? "odd" : b == LpBranch::even ? "even" : "enumerator";
}

struct LpBranchResult {
    LpBranch branch;
    LinearSystem system;
    FeasibilityResult result;
    std::vector<Rational> distribution;  // A_0..A_n of a feasible point
};

struct LpOutcome {
    size_t n = 0, k = 0, d = 0;
    bool pure = false;
    std::optional<Rational> K;
    std::vector<LpBranchResult> branches;

    bool feasible() const {
        for (const auto &b : branches) {
            if (b.result.feasible) {
                return true;
            }
        }
        return false;
    }
    const LpBranchResult *branch(LpBranch b) const {
        for (const auto &x : branches) {
            if (x.branch == b) {
                return &x;
            }
        }
        return nullptr;
    }
};

namespace detail {

/// Variables A_{first}..A_n.
inline LinearSystem lp_skeleton(size_t n, size_t first) {
    LinearSystem sys;
    for (size_t j = first; j <= n; j++) {
        sys.var_names.push_back("A" + std::to_string(j));
    }
    return sys;
}

/// Distribution-form system with A_0 = 1, A_1 = 0 and |C| = size.
inline LinearSystem lp_distribution_system(size_t n, size_t d, bool pure, const Rational &size, LpBranch branch,
                                           const std::vector<std::vector<BigInt>> &P) {
    LinearSystem sys = lp_skeleton(n, 2);
    size_t nv = n - 1;
    auto var = [](size_t r) { return r - 2; };
    {
        std::vector<Rational> a(nv, 1);
        sys.add(a, Sense::EQ, size - 1, "sum A_j = |C|");
    }
    for (size_t j = 1; j <= n; j++) {
        // sum_r P_j(r) A_r - |C| A_j  (= 0 below d, >= 0 from d), A_0 moved right.
        std::vector<Rational> a(nv, 0);
        for (size_t r = 2; r <= n; r++) {
            a[var(r)] = Rational(P[j][r]);
        }
        if (j >= 2) {
            a[var(j)] -= size;
        }
        Rational rhs = -Rational(P[j][0]);
        sys.add(a, j < d ? Sense::EQ : Sense::GE, rhs, "A'_" + std::to_string(j) + (j < d ? " = A_" : " >= A_") + std::to_string(j));
    }
    if (pure) {
        for (size_t j = 2; j < d && j <= n; j++) {
            std::vector<Rational> a(nv, 0);
            a[var(j)] = 1;
            sys.add(a, Sense::EQ, 0, "pure A_" + std::to_string(j) + " = 0");
        }
    }
    std::vector<Rational> even(nv, 0);
    for (size_t r = 2; r <= n; r += 2) {
        even[var(r)] = 1;
    }
    if (branch == LpBranch::even) {
        sys.add(even, Sense::EQ, size - 1, "even weights = |C|");
    } else {
        sys.add(even, Sense::EQ, size / 2 - 1, "even weights = |C|/2");
        for (size_t j = 0; j <= n; j++) {
            // sum_{r even} P_j(r) A_r - sum_{r odd} P_j(r) A_r >= 0.
            std::vector<Rational> a(nv, 0);
            for (size_t r = 2; r <= n; r++) {
                a[var(r)] = (r % 2 == 0) ? Rational(P[j][r]) : Rational(-P[j][r]);
            }
            sys.add(a, Sense::GE, -Rational(P[j][0]), "shadow " + std::to_string(j) + " >= 0");
        }
    }
    return sys;
}

/// Enumerator-form system: W(1,0) = W'(1,0) = 1, W' = K W((x+3y)/2, (x-y)/2),
/// W' - W = O(y^d), W, W' - W, S >= 0. Variables A_1..A_n.
inline LinearSystem lp_enumerator_system(size_t n, size_t d, bool pure, const Rational &K,
                                         const std::vector<std::vector<BigInt>> &P) {
    LinearSystem sys = lp_skeleton(n, 1);
    size_t nv = n;
    auto var = [](size_t r) { return r - 1; };
    BigInt two_n = pow2(n);
    {
        std::vector<Rational> a(nv, 1);
        sys.add(a, Sense::EQ, Rational(two_n) / K - 1, "W'(1,0) = 1");
    }
    for (size_t j = 1; j <= n; j++) {
        // K sum_r P_j(r) A_r - 2^n A_j.
        std::vector<Rational> a(nv, 0);
        for (size_t r = 1; r <= n; r++) {
            a[var(r)] = K * Rational(P[j][r]);
        }
        a[var(j)] -= Rational(two_n);
        sys.add(a, j < d ? Sense::EQ : Sense::GE, -K * Rational(P[j][0]),
                "W'_" + std::to_string(j) + (j < d ? " = W_" : " >= W_") + std::to_string(j));
    }
    for (size_t j = 0; j <= n; j++) {
        std::vector<Rational> a(nv, 0);
        for (size_t r = 1; r <= n; r++) {
            a[var(r)] = (r % 2 == 0) ? Rational(P[j][r]) : Rational(-P[j][r]);
        }
        sys.add(a, Sense::GE, -Rational(P[j][0]), "S_" + std::to_string(j) + " >= 0");
    }
    if (pure) {
        for (size_t j = 1; j < d && j <= n; j++) {
            std::vector<Rational> a(nv, 0);
            a[var(j)] = 1;
            sys.add(a, Sense::EQ, 0, "pure A_" + std::to_string(j) + " = 0");
        }
    }
    return sys;
}

}  // namespace detail

/// Decides the linear programming bound for [[n,k,d]]. Without K the
/// distribution form runs once per evenness branch (A_1 = 0 assumed); with
/// K the enumerator form runs with 2^k replaced by K. At k = 0 (or K = 1)
/// d is the minimum weight of C, so A_1..A_{d-1} = 0 is imposed.
inline LpOutcome lp_feasible(size_t n, size_t k, size_t d, bool pure = false,
                             const std::optional<Rational> &K_override = std::nullopt) {
    detail::require(n >= 1 && k <= n, "lp_feasible: need 1 <= n and k <= n");
    LpOutcome out;
    out.n = n;
    out.k = k;
    out.d = d;
    out.pure = pure;
    out.K = K_override;
    auto P = krawtchouk_table(n);
    auto record = [&](LpBranch b, LinearSystem sys, size_t first) {
        LpBranchResult br{b, std::move(sys), {}, {}};
        br.result = solve_feasibility(br.system);
        if (br.result.feasible) {
            br.distribution.assign(n + 1, 0);
            br.distribution[0] = 1;
            for (size_t j = 0; j < br.result.witness.size(); j++) {
                br.distribution[first + j] = br.result.witness[j];
            }
        }
        out.branches.push_back(std::move(br));
    };
    if (K_override) {
        detail::require(*K_override > 0, "lp_feasible: K must be positive");
        bool force_pure = pure || *K_override == 1;
        record(LpBranch::enumerator, detail::lp_enumerator_system(n, d, force_pure, *K_override, P), 1);
        return out;
    }
    detail::require(d >= 1 && d <= n + 1, "lp_feasible: d out of range");
    Rational size(pow2(n - k));
    bool force_pure = pure || k == 0;
    record(LpBranch::even, detail::lp_distribution_system(n, d, force_pure, size, LpBranch::even, P), 2);
    if (n > k) {
        record(LpBranch::odd, detail::lp_distribution_system(n, d, force_pure, size, LpBranch::odd, P), 2);
    }
    return out;
}

/// Largest d in [1, n+1] with lp_feasible(n, k, d); infeasibility is
/// monotone in d, so this scans upward until the first infeasible d.
inline size_t lp_max_distance(size_t n, size_t k, bool pure = false) {
    size_t best = 1;
    for (size_t d = 2; d <= n + 1; d++) {
        if (!lp_feasible(n, k, d, pure).feasible()) {
            break;
        }
        best = d;
    }
    return best;
}

/// Exact-fraction text rendering: one "name = p/q" per line for a witness,
/// one "y[label] = p/q" per row for a certificate.
inline std::string lp_report(const LpOutcome &o) {
    std::string s = o.feasible() ? "FEASIBLE\n" : "INFEASIBLE\n";
    for (const auto &b : o.branches) {
        s += "branch " + std::string(lp_branch_name(b.branch)) + ": " +
             (b.result.feasible ? "feasible" : "infeasible") + "\n";
        if (b.result.feasible) {
            for (size_t j = 0; j < b.distribution.size(); j++) {
                if (b.distribution[j] != 0) {
                    s += "  A" + std::to_string(j) + " = " + b.distribution[j].get_str() + "\n";
                }
            }
        } else {
            for (size_t i = 0; i < b.result.certificate.size(); i++) {
                if (b.result.certificate[i] != 0) {
                    s += "  y[" + b.system.rows[i].label + "] = " + b.result.certificate[i].get_str() + "\n";
                }
            }
        }
    }
    return s;
}

}  // namespace qgf4

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
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "qgf4/binary.hpp"
#include "qgf4/field.hpp"
#include "qgf4/params.hpp"
#include "qgf4/poly.hpp"

namespace qgf4 {

/// The orbit of a residue under s -> q s modulo `modulus`.
struct CyclotomicCoset {
    uint64_t modulus = 0;
    uint64_t representative = 0;  // smallest member
    std::vector<uint64_t> members;

    bool operator==(const CyclotomicCoset &o) const = default;
};

/// Cosets of the residues s (mod N) with allowed[s], under s -> q s.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(uint64_t N, uint64_t q, const std::vector<bool> &allowed) {
    std::vector<bool> seen(N, false);
    std::vector<CyclotomicCoset> out;
    for (uint64_t s = 0; s < N; s++) {
        if (seen[s] || !allowed[s]) {
            continue;
        }
        CyclotomicCoset c;
        c.modulus = N;
        c.representative = s;
        for (uint64_t x = s; !seen[x]; x = (x * q) % N) {
            seen[x] = true;
            c.members.push_back(x);
        }
        out.push_back(c);
    }
    return out;
}

namespace detail {

/// prod_{s in coset} (x - xi^s) with coefficients in GF(2^m), little-endian.
inline std::vector<uint64_t> root_product(const Gf2m &F, uint64_t xi, const CyclotomicCoset &c) {
    std::vector<uint64_t> p{1};
    for (uint64_t s : c.members) {
        uint64_t root = F.pow(xi, s);
        std::vector<uint64_t> np(p.size() + 1, 0);
        for (size_t i = 0; i < p.size(); i++) {
            np[i + 1] ^= p[i];
            np[i] ^= F.mul(p[i], root);
        }
        p = np;
    }
    return p;
}

}  // namespace detail

/// Monic irreducible factor of x^n - kappa together with its zero set.
struct Gf4Factor {
    Gf4Poly poly;
    CyclotomicCoset coset;
};

/// x^n - kappa = prod_i p_i prod_j q_j q_j^dagger over GF(4).
struct Gf4Factorization {
    size_t n = 0;
    Gf4 kappa;
    uint64_t root_order = 0;  // n for kappa = 1, 3n otherwise
    std::vector<Gf4Factor> self_dagger;
    std::vector<std::pair<Gf4Factor, Gf4Factor>> pairs;

    std::vector<Gf4Factor> all() const {
        std::vector<Gf4Factor> out = self_dagger;
        for (const auto &[a, b] : pairs) {
            out.push_back(a);
            out.push_back(b);
        }
        std::sort(out.begin(), out.end(), [](const Gf4Factor &a, const Gf4Factor &b) {
            return a.coset.representative < b.coset.representative;
        });
        return out;
    }
    Gf4Poly product() const {
        Gf4Poly r = Gf4Poly::constant(Gf4::one());
        for (const auto &f : all()) {
            r = r * f.poly;
        }
        return r;
    }
};

/// g^dagger(x) = kappa conj(g_0) + sum_{j=1}^{n-1} conj(g_{n-j}) x^j.
inline Gf4Poly dagger(const Gf4Poly &g, size_t n, Gf4 kappa) {
    if (g.degree() >= long(n)) {
        throw PreconditionError("dagger: degree must be below n");
    }
    std::vector<Gf4> v(n, Gf4::zero());
    v[0] = kappa * g[0].conj();
    for (size_t j = 1; j < n; j++) {
        v[j] = g[n - j].conj();
    }
    return Gf4Poly(v);
}

/// The monic divisor of x^n - kappa associated with g under dagger: the
/// conjugate reciprocal of g, normalized.
inline Gf4Poly dagger_divisor(const Gf4Poly &g) {
    std::vector<Gf4> v(g.c.rbegin(), g.c.rend());
    return Gf4Poly(v).conj().monic();
}

inline Gf4Factorization factor_xn_minus_kappa(size_t n, Gf4 kappa) {
    if (n == 0 || n % 2 == 0) {
        throw PreconditionError("factor_xn_minus_kappa: n must be odd");
    }
    if (kappa.is_zero()) {
        throw PreconditionError("factor_xn_minus_kappa: kappa must be nonzero");
    }
    uint64_t N = kappa == Gf4::one() ? n : 3 * n;
    size_t t = multiplicative_order(4, N);
    if (2 * t > 62) {
        throw PreconditionError("factor_xn_minus_kappa: splitting field too large");
    }
    Gf2m F{int(2 * t)};
    uint64_t xi = F.element_of_order(N);
    uint64_t beta = F.element_of_order(3);
    uint64_t beta2 = F.mul(beta, beta);
    uint64_t kf = kappa == Gf4::one() ? 1 : kappa == Gf4::w() ? beta : beta2;
    std::vector<bool> allowed(N);
    for (uint64_t s = 0; s < N; s++) {
        allowed[s] = F.pow(xi, (s * n) % N) == kf;
    }
    auto to_gf4 = [&](uint64_t x) {
        if (x == 0) {
            return Gf4::zero();
        }
        if (x == 1) {
            return Gf4::one();
        }
        if (x == beta) {
            return Gf4::w();
        }
        if (x == beta2) {
            return Gf4::wbar();
        }
        throw PreconditionError("factor_xn_minus_kappa: coefficient outside GF(4)");
    };
    std::map<uint64_t, Gf4Factor> by_rep;
    std::map<uint64_t, uint64_t> member_rep;
    for (const auto &c : cyclotomic_cosets(N, 4, allowed)) {
        std::vector<Gf4> coeffs;
        for (uint64_t x : detail::root_product(F, xi, c)) {
            coeffs.push_back(to_gf4(x));
        }
        by_rep[c.representative] = Gf4Factor{Gf4Poly(coeffs), c};
        for (uint64_t s : c.members) {
            member_rep[s] = c.representative;
        }
    }
    Gf4Factorization out;
    out.n = n;
    out.kappa = kappa;
    out.root_order = N;
    std::set<uint64_t> done;
    for (const auto &[rep, f] : by_rep) {
        if (done.count(rep)) {
            continue;
        }
        uint64_t image = member_rep.at((N - (2 * rep) % N) % N);
        done.insert(rep);
        done.insert(image);
        if (image == rep) {
            out.self_dagger.push_back(f);
        } else {
            out.pairs.emplace_back(f, by_rep.at(image));
        }
    }
    detail::require(out.product() == Gf4Poly::xn_minus(n, kappa), "factorization does not multiply back");
    return out;
}

/// The linear code of all multiples of g modulo x^n - kappa.
inline AdditiveCode constacyclic_code(const Gf4Poly &g, size_t n, Gf4 kappa) {
    if (g.is_zero() || !g.divides(Gf4Poly::xn_minus(n, kappa))) {
        throw PreconditionError("constacyclic_code: g does not divide x^n - kappa");
    }
    AdditiveCode c(n);
    for (size_t i = 0; i + size_t(g.degree()) < n; i++) {
        SymplecticVector v(n);
        for (size_t j = 0; j <= size_t(g.degree()); j++) {
            v.set(i + j, g[j]);
        }
        c.add_generator(v);
        c.add_generator(v.times(Gf4::w()));
    }
    return c;
}

/// g g^dagger == 0 modulo x^n - kappa.
inline bool is_cc_self_orthogonal(const Gf4Poly &g, size_t n, Gf4 kappa) {
    Gf4Poly xn = Gf4Poly::xn_minus(n, kappa);
    Gf4Poly r = g % xn;
    return r.is_zero() || ((r * dagger(r, n, kappa)) % xn).is_zero();
}

/// A quantum BCH code: B = <g> contains its dual and C = B-perp.
struct BchCode {
    size_t n = 0;
    Gf4 kappa;
    size_t design_distance = 0;
    Gf4Poly g;
    std::vector<uint64_t> representatives;  // zero-set coset representatives
    size_t k = 0;
    AdditiveCode code;  // the self-orthogonal (n, 2^{2 deg g}) code
};

namespace detail {

/// Longest run (circular) of an arithmetic progression with step coprime to
/// n inside zeros is at least len.
inline bool has_progression(const std::vector<bool> &zeros, size_t n, size_t len) {
    if (len == 0) {
        return true;
    }
    if (len > n) {
        return false;
    }
    for (size_t step = 1; step <= std::max<size_t>(1, n / 2); step++) {
        if (std::gcd(step, n) != 1) {
            continue;
        }
        // The walk 0, step, 2 step, ... visits every residue once.
        size_t run = 0, best = 0, first_run = 0;
        bool all = true;
        for (size_t i = 0, x = 0; i < n; i++, x = (x + step) % n) {
            if (zeros[x]) {
                run++;
                best = std::max(best, run);
            } else {
                if (all) {
                    first_run = run;
                }
                all = false;
                run = 0;
            }
        }
        if (all) {
            return true;
        }
        best = std::max(best, run + first_run);
        if (best >= len) {
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Chooses a minimal set of dagger-pair factors whose zero sets contain an
/// arithmetic progression of length target_d - 1 (step coprime to n),
/// never both members of a pair. Ties: fewer factors, smaller degree, then
/// lexicographic representatives.
inline std::vector<BchCode> bch_search(size_t n, Gf4 kappa, size_t target_d, size_t max_results = 1,
                                       uint64_t budget = DEFAULT_BUDGET) {
    Gf4Factorization fz = factor_xn_minus_kappa(n, kappa);
    uint64_t N = fz.root_order;
    auto index_of = [&](uint64_t s) -> size_t { return N == n ? s : (s - s % 3) / 3; };
    std::vector<const Gf4Factor *> sides;  // 2i, 2i+1 = q_i, q_i^dagger
    for (const auto &[a, b] : fz.pairs) {
        sides.push_back(&a);
        sides.push_back(&b);
    }
    size_t m = fz.pairs.size();
    struct Candidate {
        size_t degree;
        std::vector<uint64_t> reps;
        std::vector<size_t> chosen;
    };
    std::vector<Candidate> found;
    uint64_t examined = 0;
    for (size_t s = 0; s <= m && found.empty(); s++) {
        std::vector<size_t> combo(s);
        std::iota(combo.begin(), combo.end(), size_t{0});
        while (true) {
            for (uint64_t side = 0; side < (uint64_t{1} << s); side++) {
                if (++examined > budget) {
                    throw BudgetExceeded("bch_search: too many factor subsets");
                }
                std::vector<bool> zeros(n, false);
                Candidate cand{0, {}, {}};
                for (size_t i = 0; i < s; i++) {
                    const Gf4Factor *f = sides[2 * combo[i] + ((side >> i) & 1)];
                    cand.degree += f->coset.members.size();
                    cand.reps.push_back(f->coset.representative);
                    cand.chosen.push_back(2 * combo[i] + ((side >> i) & 1));
                    for (uint64_t x : f->coset.members) {
                        zeros[index_of(x)] = true;
                    }
                }
                if (detail::has_progression(zeros, n, target_d >= 1 ? target_d - 1 : 0)) {
                    std::sort(cand.reps.begin(), cand.reps.end());
                    found.push_back(cand);
                }
            }
            // Next combination.
            size_t i = s;
            while (i > 0 && combo[i - 1] == m - s + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            combo[i - 1]++;
            for (size_t j = i; j < s; j++) {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    if (found.empty()) {
        throw PreconditionError("bch_search: no valid selection of factors");
    }
    std::sort(found.begin(), found.end(), [](const Candidate &a, const Candidate &b) {
        return std::tie(a.degree, a.reps) < std::tie(b.degree, b.reps);
    });
    std::vector<BchCode> out;
    for (size_t i = 0; i < found.size() && out.size() < max_results; i++) {
        BchCode b;
        b.n = n;
        b.kappa = kappa;
        b.design_distance = target_d;
        b.g = Gf4Poly::constant(Gf4::one());
        for (size_t idx : found[i].chosen) {
            b.g = b.g * sides[idx]->poly;
        }
        b.representatives = found[i].reps;
        b.k = n - 2 * size_t(b.g.degree());
        b.code = dual(constacyclic_code(b.g, n, kappa));
        out.push_back(std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Additive cyclic codes <w p(x) + q(x), r(x)> with binary p, q, r.

/// (p, q, r) with q reduced modulo r.
struct AdditiveCyclicForm {
    size_t n = 0;
    uint64_t p = 0, q = 0, r = 0;

    bool operator==(const AdditiveCyclicForm &o) const = default;
    bool operator<(const AdditiveCyclicForm &o) const {
        return std::tie(n, p, q, r) < std::tie(o.n, o.p, o.q, o.r);
    }
};

namespace detail {

inline SymplecticVector cyclic_shift(const SymplecticVector &u, size_t by = 1) {
    size_t n = u.n();
    SymplecticVector r(n);
    for (size_t i = 0; i < n; i++) {
        r.set((i + by) % n, u.get(i));
    }
    return r;
}

/// w p + q as a word: a = p ^ q, b = q (coefficients mod x^n - 1).
inline SymplecticVector wpq_word(uint64_t p, uint64_t q, size_t n) {
    p = f2poly_mod_xn1(p, n);
    q = f2poly_mod_xn1(q, n);
    SymplecticVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set_a(i, ((p ^ q) >> i) & 1);
        v.set_b(i, (q >> i) & 1);
    }
    return v;
}

inline uint64_t trace_bits(const SymplecticVector &v) {
    uint64_t t = 0;
    for (size_t i = 0; i < v.n(); i++) {
        t |= uint64_t(v.a(i) ^ v.b(i)) << i;
    }
    return t;
}

inline void check_cyclic_length(size_t n) {
    if (n < 1 || n > 62) {
        throw PreconditionError("additive cyclic codes are supported for 1 <= n <= 62");
    }
}

}  // namespace detail

inline bool is_cyclic(const AdditiveCode &c) {
    for (const auto &g : c.generators()) {
        if (!c.contains(detail::cyclic_shift(g))) {
            return false;
        }
    }
    return true;
}

/// The span of all cyclic shifts of the given words (optionally also of w
/// times them).
inline AdditiveCode cyclic_orbit_code(const std::vector<std::string> &gens, bool linear = false) {
    detail::require(!gens.empty(), "cyclic_orbit_code needs a generator");
    size_t n = gens[0].size();
    AdditiveCode c(n);
    for (const auto &s : gens) {
        detail::require(s.size() == n, "generators differ in length");
        SymplecticVector v = SymplecticVector::from_string(s);
        for (size_t i = 0; i < n; i++) {
            SymplecticVector sh = detail::cyclic_shift(v, i);
            c.add_generator(sh);
            if (linear) {
                c.add_generator(sh.times(Gf4::w()));
            }
        }
    }
    return c;
}

inline void check_additive_cyclic(uint64_t p, uint64_t q, uint64_t r, size_t n) {
    detail::check_cyclic_length(n);
    uint64_t xn1 = f2poly_xn1(n);
    if (p == 0 || !f2poly_divides(p, xn1)) {
        throw PreconditionError("additive_cyclic: p does not divide x^n - 1");
    }
    if (r == 0 || !f2poly_divides(r, xn1)) {
        throw PreconditionError("additive_cyclic: r does not divide x^n - 1");
    }
    uint64_t h = f2poly_div(xn1, p);
    if (f2poly_mulmod(f2poly_mod(q, r), f2poly_mod(h, r), r) != 0 && f2poly_degree(r) > 0) {
        throw PreconditionError("additive_cyclic: r does not divide q (x^n - 1) / p");
    }
}

/// <w p + q, r>: shifts of w p(x) + q(x) and of r(x).
inline AdditiveCode additive_cyclic(uint64_t p, uint64_t q, uint64_t r, size_t n) {
    check_additive_cyclic(p, q, r, n);
    AdditiveCode c(n);
    SymplecticVector g = detail::wpq_word(p, q, n);
    SymplecticVector rr = detail::wpq_word(0, r, n);
    for (size_t i = 0; i < n; i++) {
        c.add_generator(detail::cyclic_shift(g, i));
    }
    for (size_t i = 0; i < n; i++) {
        c.add_generator(detail::cyclic_shift(rr, i));
    }
    long expect = 2 * long(n) - f2poly_degree(p) - f2poly_degree(r);
    detail::require(long(c.rank()) == expect, "additive_cyclic: unexpected rank");
    return c;
}

/// The self-orthogonality congruences for <w p + q, r>.
inline bool ac_self_orthogonal(uint64_t p, uint64_t q, uint64_t r, size_t n) {
    detail::check_cyclic_length(n);
    p = f2poly_mod_xn1(p, n);
    q = f2poly_mod_xn1(q, n);
    r = f2poly_mod_xn1(r, n);
    uint64_t pr = f2poly_reverse_xn1(p, n), qr = f2poly_reverse_xn1(q, n), rr = f2poly_reverse_xn1(r, n);
    return f2poly_mul_xn1(p, rr, n) == 0 && f2poly_mul_xn1(pr, r, n) == 0 &&
           f2poly_mul_xn1(p, qr, n) == f2poly_mul_xn1(pr, q, n);
}

/// Recovers the canonical (p, q mod r, r) of an additive cyclic code.
inline AdditiveCyclicForm additive_cyclic_form(const AdditiveCode &c) {
    size_t n = c.n();
    detail::check_cyclic_length(n);
    if (!is_cyclic(c)) {
        throw PreconditionError("additive_cyclic_form: code is not cyclic");
    }
    uint64_t xn1 = f2poly_xn1(n);
    // Eliminate on the trace image, carrying codewords.
    std::vector<std::pair<uint64_t, SymplecticVector>> image;
    uint64_t r = xn1, p = xn1;
    for (const auto &g0 : c.generators()) {
        uint64_t t = detail::trace_bits(g0);
        SymplecticVector g = g0;
        for (const auto &[pt, pw] : image) {
            if ((t >> std::countr_zero(pt)) & 1) {
                t ^= pt;
                g ^= pw;
            }
        }
        if (t == 0) {
            uint64_t bin = 0;
            for (size_t i = 0; i < n; i++) {
                bin |= uint64_t(g.a(i)) << i;
            }
            r = f2poly_gcd(r, bin);
        } else {
            for (auto &[pt, pw] : image) {
                if ((pt >> std::countr_zero(t)) & 1) {
                    pt ^= t;
                    pw ^= g;
                }
            }
            image.emplace_back(t, g);
            p = f2poly_gcd(p, t);
        }
    }
    AdditiveCyclicForm f;
    f.n = n;
    f.p = p;
    f.r = r;
    if (p == xn1) {
        f.q = 0;
        return f;
    }
    uint64_t t = p;
    SymplecticVector u(n);
    for (const auto &[pt, pw] : image) {
        if ((t >> std::countr_zero(pt)) & 1) {
            t ^= pt;
            u ^= pw;
        }
    }
    detail::require(t == 0, "additive_cyclic_form: p is not in the trace image");
    uint64_t q = 0;
    for (size_t i = 0; i < n; i++) {
        q |= uint64_t(u.b(i)) << i;
    }
    f.q = f2poly_mod(q, r);
    return f;
}

/// Monic binary divisors of x^n - 1 (including 1 and x^n - 1), sorted.
inline std::vector<uint64_t> binary_divisors_xn1(size_t n) {
    detail::check_cyclic_length(n);
    std::vector<uint64_t> factors;
    size_t odd = n;
    size_t twos = 1;
    while (odd % 2 == 0) {
        odd /= 2;
        twos *= 2;
    }
    // x^n - 1 = (x^odd - 1)^twos; factor x^odd - 1 over GF(2).
    size_t t = multiplicative_order(2, odd);
    detail::require(t <= 62, "binary splitting field too large");
    Gf2m F{int(t)};
    uint64_t xi = F.element_of_order(odd);
    for (const auto &c : cyclotomic_cosets(odd, 2, std::vector<bool>(odd, true))) {
        uint64_t f = 0;
        auto coeffs = detail::root_product(F, xi, c);
        for (size_t i = 0; i < coeffs.size(); i++) {
            detail::require(coeffs[i] <= 1, "binary factor has a non-binary coefficient");
            f |= coeffs[i] << i;
        }
        for (size_t k = 0; k < twos; k++) {
            factors.push_back(f);
        }
    }
    std::set<uint64_t> divs{1};
    for (uint64_t f : factors) {
        std::set<uint64_t> next = divs;
        for (uint64_t d : divs) {
            next.insert(f2poly_mul(d, f));
        }
        divs = next;
    }
    return std::vector<uint64_t>(divs.begin(), divs.end());
}

struct AdditiveCyclicResult {
    AdditiveCyclicForm form;
    AdditiveCode code;
    QuantumParams params;
};

namespace detail {

/// Symmetric multiples of p modulo x^n - 1: the kernel of
/// pi -> (pi_j + pi_{n-j})_{j=1..(n-1)/2} on the multiples of p.
inline std::vector<uint64_t> symmetric_multiples(uint64_t p, size_t n) {
    std::vector<uint64_t> gens;
    for (long i = 0; i + f2poly_degree(p) < long(n); i++) {
        gens.push_back(p << i);
    }
    for (size_t j = 1; j <= (n - 1) / 2; j++) {
        auto f = [&](uint64_t x) { return ((x >> j) ^ (x >> (n - j))) & 1; };
        auto piv = std::find_if(gens.begin(), gens.end(), f);
        if (piv == gens.end()) {
            continue;
        }
        uint64_t pv = *piv;
        gens.erase(piv);
        for (auto &g : gens) {
            if (f(g)) {
                g ^= pv;
            }
        }
    }
    return gens;
}

/// All admissible q for one (p, r) pair, filtered by distance.
inline std::vector<AdditiveCyclicResult> search_pair(size_t n, uint64_t p, uint64_t r, size_t min_d,
                                                     std::atomic<uint64_t> &examined, uint64_t budget) {
    uint64_t xn1 = f2poly_xn1(n);
    std::vector<uint64_t> basis = symmetric_multiples(p, n);
    // q = (pi / p)* + h* tau, and only q mod r matters.
    uint64_t h = f2poly_div(xn1, p);
    uint64_t hrev = f2poly_reverse_xn1(f2poly_mod_xn1(h, n), n);
    long tau_deg_bound = f2poly_degree(r) + f2poly_degree(p) - long(n);
    uint64_t tau_count = tau_deg_bound > 0 ? uint64_t{1} << tau_deg_bound : 1;
    uint64_t pi_count = uint64_t{1} << basis.size();
    std::set<uint64_t> seen_q;
    std::vector<AdditiveCyclicResult> out;
    for (uint64_t pm = 0; pm < pi_count; pm++) {
        uint64_t pi = 0;
        for (size_t i = 0; i < basis.size(); i++) {
            if ((pm >> i) & 1) {
                pi ^= basis[i];
            }
        }
        uint64_t q0 = f2poly_reverse_xn1(f2poly_mod_xn1(f2poly_div(pi, p), n), n);
        for (uint64_t tau = 0; tau < tau_count; tau++) {
            if (++examined > budget) {
                throw BudgetExceeded("search_additive_cyclic: candidate budget exceeded");
            }
            uint64_t q = q0 ^ f2poly_mul_xn1(hrev, tau, n);
            if (f2poly_degree(r) > 0) {
                if (f2poly_mulmod(f2poly_mod(q, r), f2poly_mod(h, r), r) != 0) {
                    continue;
                }
                q = f2poly_mod(q, r);
            } else {
                q = 0;
            }
            if (!seen_q.insert(q).second || !ac_self_orthogonal(p, q, r, n)) {
                continue;
            }
            AdditiveCode c = additive_cyclic(p, q, r, n);
            if (c.k() == 0 && has_word_below(c.generators(), n, min_d, budget)) {
                continue;
            }
            QuantumParams qp = quantum_params(c, budget);
            if (qp.d < min_d) {
                continue;
            }
            out.push_back({AdditiveCyclicForm{n, p, q, r}, c, qp});
        }
    }
    return out;
}

}  // namespace detail

/// Exhaustive search of self-orthogonal additive cyclic codes of length n
/// whose rank lies in [rank_lo, rank_hi] and whose distance is >= min_d.
/// r runs over divisors of x^n - 1, p over the divisors allowed by r, and q
/// over q(x^{n-1}) = pi/p + sigma (x^n - 1)/p with pi symmetric and
/// divisible by p. The (r, p) pairs are split across `threads` workers; the
/// result is sorted by (rank, p, q, r) regardless.
inline std::vector<AdditiveCyclicResult> search_additive_cyclic(size_t n, size_t min_d, size_t rank_lo,
                                                                size_t rank_hi, uint64_t budget = DEFAULT_BUDGET,
                                                                size_t max_n = 30, size_t threads = 0) {
    if (n % 2 == 0 || n < 1) {
        throw PreconditionError("search_additive_cyclic: n must be odd");
    }
    if (n > max_n || n > 31) {
        throw PreconditionError("search_additive_cyclic: n exceeds the search limit");
    }
    uint64_t xn1 = f2poly_xn1(n);
    auto divisors = binary_divisors_xn1(n);
    std::vector<std::pair<uint64_t, uint64_t>> jobs;
    for (uint64_t r : divisors) {
        // p r* = 0 mod x^n - 1 forces (x^n - 1) / gcd(r*, x^n - 1) | p.
        uint64_t D = f2poly_div(xn1, f2poly_gcd(f2poly_reverse_xn1(f2poly_mod_xn1(r, n), n), xn1));
        for (uint64_t p : divisors) {
            if (!f2poly_divides(D, p) ||
                f2poly_mul_xn1(f2poly_reverse_xn1(f2poly_mod_xn1(p, n), n), f2poly_mod_xn1(r, n), n) != 0) {
                continue;
            }
            long rank = 2 * long(n) - f2poly_degree(p) - f2poly_degree(r);
            if (rank >= long(rank_lo) && rank <= long(rank_hi)) {
                jobs.emplace_back(p, r);
            }
        }
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, std::max<size_t>(jobs.size(), 1));
    std::atomic<uint64_t> examined{0};
    std::vector<std::vector<AdditiveCyclicResult>> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](size_t t) {
        try {
            for (size_t j = t; j < jobs.size(); j += threads) {
                auto res = detail::search_pair(n, jobs[j].first, jobs[j].second, min_d, examined, budget);
                parts[t].insert(parts[t].end(), res.begin(), res.end());
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<AdditiveCyclicResult> out;
    for (auto &part : parts) {
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return std::make_tuple(a.code.rank(), a.form) < std::make_tuple(b.code.rank(), b.form);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Conjucyclic codes.

/// (u_0..u_{n-1}) -> (conj u_{n-1}, u_0, ..., u_{n-2}).
inline SymplecticVector conjucyclic_shift(const SymplecticVector &u) {
    size_t n = u.n();
    SymplecticVector r(n);
    for (size_t i = 0; i + 1 < n; i++) {
        r.set(i + 1, u.get(i));
    }
    if (n) {
        r.set(0, u.get(n - 1).conj());
    }
    return r;
}

inline bool is_conjucyclic(const AdditiveCode &c) {
    for (const auto &g : c.generators()) {
        if (!c.contains(conjucyclic_shift(g))) {
            return false;
        }
    }
    return true;
}

/// C' = {Tr(w u) | Tr(W u)}, a binary cyclic code of length 2n. In the
/// symplectic representation Tr(w u) = a and Tr(W u) = b.
inline BinaryCode conjucyclic_to_binary(const AdditiveCode &c) {
    if (!is_conjucyclic(c)) {
        throw PreconditionError("conjucyclic_to_binary: code is not conjucyclic");
    }
    size_t n = c.n();
    BinaryCode out(2 * n);
    for (const auto &g : c.generators()) {
        BitVector v(2 * n);
        for (size_t i = 0; i < n; i++) {
            v.set(i, g.a(i));
            v.set(n + i, g.b(i));
        }
        out.insert(v);
    }
    return out;
}

/// Inverse of conjucyclic_to_binary: u = w Tr(w u) + W Tr(W u).
inline AdditiveCode binary_to_conjucyclic(const BinaryCode &b) {
    detail::require(b.n() % 2 == 0, "binary code length must be even");
    size_t n = b.n() / 2;
    AdditiveCode c(n);
    for (const auto &row : b.rows()) {
        SymplecticVector v(n);
        for (size_t i = 0; i < n; i++) {
            v.set_a(i, row.get(i));
            v.set_b(i, row.get(n + i));
        }
        c.add_generator(v);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Quasicyclic codes.

/// One generator made of a blocks of length b; the code is spanned by its
/// simultaneous cyclic shifts within every block (and w times them when
/// linear).
inline AdditiveCode quasicyclic_code(const std::vector<std::string> &blocks, bool linear = true) {
    if (blocks.empty()) {
        throw PreconditionError("quasicyclic_code: no blocks");
    }
    size_t b = blocks[0].size();
    for (const auto &s : blocks) {
        if (s.size() != b) {
            throw PreconditionError("quasicyclic_code: blocks differ in length");
        }
    }
    size_t n = b * blocks.size();
    std::vector<SymplecticVector> seeds;
    for (const auto &s : blocks) {
        seeds.push_back(SymplecticVector::from_string(s));
    }
    AdditiveCode c(n);
    for (size_t sh = 0; sh < b; sh++) {
        SymplecticVector v(n);
        for (size_t k = 0; k < seeds.size(); k++) {
            SymplecticVector s = detail::cyclic_shift(seeds[k], sh);
            for (size_t i = 0; i < b; i++) {
                v.set(k * b + i, s.get(i));
            }
        }
        if (v.is_zero()) {
            continue;
        }
        c.add_generator(v);
        if (linear) {
            c.add_generator(v.times(Gf4::w()));
        }
    }
    return c;
}

}  // namespace qgf4

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
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qgf4/bounds.hpp"
#include "qgf4/catalog.hpp"
#include "qgf4/constructions.hpp"
#include "qgf4/cyclic.hpp"
#include "qgf4/lp.hpp"

namespace qgf4 {

/// A published cell: lo..hi with optional marks.
struct StoredCell {
    size_t lo = 0, hi = 0;
    char lower_mark = 0;  // letter explaining the lower bound, 0 if none
    char upper_mark = 0;  // 'a', 'b', 'g' or 0
};

namespace detail {

// Rows n = 3..30, columns k = 0..min(n, 23). Tokens are [x:]lo[-hi][@m].
inline const std::vector<std::string> &stored_rows() {
    static const std::vector<std::string> r = {
        "2 1 1 1",
        "2 2 2 1 1",
        "3 h:3 2 1 1 1",
        "a:4 3@a 2 2 2 1 1",
        "3@b s:3 2 2 2 1 1 1",
        "b:4 s:3 s:3 f:3 2 2 2 1 1",
        "4 s:3 s:3 s:3 2 2 2 1 1 1",
        "b:4 4 4 s:3 s:3 2 2 2 2 1 1",
        "5 5 4 s:3 s:3 s:3 2 2 2 1 1 1",
        "e:6 5@a 4 4 i:4 s:3 s:3 2 2 2 2 1 1",
        "5@b 5 4 4 4 3-4 s:3 s:3 2 2 2 1 1 1",
        "b:6 5 4-5 4-5 4 4 i:4 s:3 s:3 2 2 2 2 1 1",
        "c:6 5 5 5 g:4@b 4 4 s:3@b s:3 s:3 2 2 2 1 1 1",
        "b:6 6 6 5 4-5 4-5 4 3-4 s:3@b s:3 s:3 2 2 2 2 1 1",
        "7 7 6 5-6 4-5 4-5 4-5 4 4 j:4 s:3 v:3 2 2 2 1 1 1",
        "b:8 7 6 5-6 5-6 5 g:5 4 4 4 s:3 s:3 2@b 2 2 2 2 1 1",
        "7-8 7 6 5-6 5-6 5-6 5 4-5 4@g 4 3-4 s:3 s:3 2@b 2 2 2 1 1 1",
        "b:8 7 6-7 5-7 5-6 5-6 5-6 4-5 4-5 4 g:4 3-4 s:3 s:3 2 2 2 2 2 1 1",
        "c:8 7 6-7 5-7 5-7 5-6 5-6 4-6@a 4-5 4-5 4 s:4 3-4 s:3 s:3 h:3 2 2 2 1 1 1",
        "b:8 7-8 6-8 5-7 5-7 5-7 5-6 4-6 4-6 4-5 4-5 4 s:4 3-4 s:3@b s:3 2 2 2 2 2 1 1",
        "c:8-9 7-9 6-8 5-8 5-7 5-7 5-7 5-6 4-6 4-6 4-5 4-5 c:4 s:4 3-4 s:3 s:3 2 2 2 2 1 1 1",
        "b:8-10 8-9@a 6-8 6-8 6-8 6-7 6-7 5-7 4-6 4-6 4-6 4-5 4-5 4 s:4 3-4 s:3 s:3 2 2 2 2 2 1",
        "c:8-9@b d:9 7-8 7-8 7-8 7-8 6-7 5-7 4-7 4-6 4-6 4-6 4-5 4-5 4 g:4 3-4 s:3 s:3 2 2 2 2 1",
        "8-10 9 8-9 8-9 8 7-8 6-8 5-8 4-7 4-7 4-6 4-6 4-6 4-5 4-5 4 s:4 3-4 s:3 s:3 2 2 2 2",
        "9-10 9 9 9 8-9 7-8 6-8 5-8 4-8 5-7 4-7 4-6 4-6 4-5 4-5 4-5 4 s:4 3-4 s:3 s:3 2 2 2",
        "10 10 10 9 8-9 7-9 6-8 6-8 u:6-8 5-8 5-7 5-7 5-6 5-6 g:5-6 4-5 4 4 s:4 3-4 s:3 s:3 2 2",
        "11 11 10 9-10 8-9 7-9 6-9 6-8 6-8 5-8 5-7 5-7 5-6 5-6 5-6 4-5 4-5 4 4 3-4 3-4 s:3 s:3 2",
        "b:12 11@a 10 9-10 8-10 7-9 6-9 6-9 6-8 5-8 5-8 5-7 5-7 5-6 5-6 4-6 4-5 4-5 4 4 g:4 3-4 s:3 s:3",
    };
    return r;
}

inline StoredCell parse_stored(const std::string &tok) {
    StoredCell c;
    std::string t = tok;
    if (t.size() > 2 && t[1] == ':') {
        c.lower_mark = t[0];
        t = t.substr(2);
    }
    if (auto at = t.find('@'); at != std::string::npos) {
        c.upper_mark = t[at + 1];
        t = t.substr(0, at);
    }
    if (auto dash = t.find('-'); dash != std::string::npos) {
        c.lo = std::stoul(t.substr(0, dash));
        c.hi = std::stoul(t.substr(dash + 1));
    } else {
        c.lo = c.hi = std::stoul(t);
    }
    return c;
}

}  // namespace detail

/// Published value for (n, k), 3 <= n <= 30, k <= min(n, 23).
inline std::optional<StoredCell> stored_cell(size_t n, size_t k) {
    if (n < 3 || n > 30 || k > std::min<size_t>(n, 23)) {
        return std::nullopt;
    }
    std::istringstream in(detail::stored_rows()[n - 3]);
    std::string tok;
    for (size_t i = 0; in >> tok; i++) {
        if (i == k) {
            return detail::parse_stored(tok);
        }
    }
    return std::nullopt;
}

/// Known (n, k, d) points with purity and where they came from.
class AchievableSet {
   public:
    explicit AchievableSet(size_t max_n) : max_n_(max_n), any_(max_n + 2), pure_(max_n + 2) {
        for (size_t n = 0; n <= max_n + 1; n++) {
            any_[n].assign(n + 1, Point{});
            pure_[n].assign(n + 1, Point{});
        }
    }

    struct Point {
        size_t d = 0;
        std::string source;
    };

    size_t max_n() const {
        return max_n_;
    }
    /// Records an [[n,k,d]] code; ignores points outside the grid.
    bool add(size_t n, size_t k, size_t d, bool pure, const std::string &source) {
        if (n == 0 || n > max_n_ || k > n || d == 0) {
            return false;
        }
        bool changed = false;
        if (d > any_[n][k].d) {
            any_[n][k] = {d, source};
            changed = true;
        }
        if (pure && d > pure_[n][k].d) {
            pure_[n][k] = {d, source};
            changed = true;
        }
        return changed;
    }
    void add(const QuantumParams &p, const std::string &source) {
        add(p.n, p.k, p.d, p.pure, source);
    }
    const Point &best(size_t n, size_t k) const {
        return any_[n][k];
    }
    const Point &best_pure(size_t n, size_t k) const {
        return pure_[n][k];
    }

    /// Closes the set under the standard modifications: lengthening (k > 0),
    /// puncturing a pure code, lowering k, and shortening with distance loss.
    void close() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t n = 1; n <= max_n_; n++) {
                for (size_t k = 0; k <= n; k++) {
                    size_t d = any_[n][k].d, dp = pure_[n][k].d;
                    std::string nk = "[[" + std::to_string(n) + "," + std::to_string(k) + "]]";
                    if (d && k > 0) {
                        changed |= add(n + 1, k, d, false, "lengthen " + nk);
                    }
                    if (dp > 1 && n >= 2) {
                        changed |= add(n - 1, k + 1, dp - 1, true, "puncture pure " + nk);
                    }
                    if (d && k > 1) {
                        changed |= add(n, k - 1, d, false, "subcode of " + nk);
                    }
                    if (dp && k >= 1) {
                        changed |= add(n, k - 1, dp, true, "subcode of pure " + nk);
                    }
                    if (d > 1 && n >= 2) {
                        changed |= add(n - 1, k, d - 1, false, "shorten " + nk);
                    }
                }
            }
        }
    }

   private:
    size_t max_n_;
    std::vector<std::vector<Point>> any_, pure_;
};

namespace detail {

inline void add_code(AchievableSet &s, const AdditiveCode &c, const std::string &source, uint64_t budget) {
    if (c.n() == 0 || c.n() > s.max_n() || !is_self_orthogonal(c)) {
        return;
    }
    s.add(quantum_params(c, budget), source);
}

/// Best self-dual double circulant code <[I | A]> with A circulant, n = 2m.
inline std::optional<AdditiveCode> best_double_circulant(size_t m) {
    std::string id(m, '0');
    id[0] = '1';
    std::optional<AdditiveCode> best;
    size_t best_d = 0;
    for (uint64_t t = 0; t < (uint64_t{1} << (2 * m)); t++) {
        std::string b;
        for (size_t i = 0; i < m; i++) {
            b += "0wW1"[(t >> (2 * i)) & 3];
        }
        AdditiveCode c = quasicyclic_code({id, b});
        if (c.rank() != 2 * m || !is_self_orthogonal(c)) {
            continue;
        }
        size_t d = quantum_params(c).d;
        if (d > best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

}  // namespace detail

/// Lower-bound seeds: the catalog, trivial codes, Hamming and Gottesman
/// families with their shortenings, and small self-dual searches. Points are
/// kept up to length 40 so that longer codes can be punctured into the grid.
inline AchievableSet achievable_codes(size_t max_n, uint64_t budget = DEFAULT_BUDGET) {
    size_t grid = std::max<size_t>(max_n, 40);
    AchievableSet s(grid);
    for (const auto &e : catalog()) {
        if (e.claimed) {
            detail::add_code(s, e.code, e.name, budget);
        }
    }
    for (size_t n = 1; n <= max_n; n++) {
        for (size_t k = 0; k <= n; k++) {
            s.add(n, k, 1, false, "trivial");
        }
        for (size_t k = 0; k + 2 <= n; k++) {
            if (n % 2 == 0 || k + 3 <= n) {
                detail::add_code(s, trivial_code(n, k, 2), "trivial d=2", budget);
            }
        }
    }
    for (size_t m = 2; m <= 4; m++) {
        AdditiveCode h = quaternary_hamming_code(m);
        detail::add_code(s, h, "hamming", budget);
        if (m == 3) {
            for (size_t cut = 2; cut < h.n(); cut++) {
                if (h.n() - cut > grid) {
                    continue;
                }
                try {
                    detail::add_code(s, shorten_by_support(h, cut), "shortened hamming 21", budget);
                } catch (const PreconditionError &) {
                }
            }
        }
    }
    for (size_t m = 3; m <= 5; m++) {
        if (pow2(m) <= grid) {
            detail::add_code(s, gottesman_code(m), "gottesman", budget);
        }
    }
    for (size_t n = 3; n <= std::min<size_t>(max_n, 13); n += 2) {
        for (const auto &r : search_additive_cyclic(n, 2, n, n, budget, 30, 1)) {
            s.add(r.params, "cyclic self-dual search");
        }
    }
    for (size_t m = 1; 2 * m <= std::min<size_t>(max_n, 12); m++) {
        if (auto c = detail::best_double_circulant(m)) {
            detail::add_code(s, *c, "double circulant", budget);
        }
    }
    s.close();
    return s;
}

/// One computed cell, side by side with the published one.
struct TableCell {
    size_t n = 0, k = 0;
    size_t lower = 0, upper = 0;
    std::string lower_source, upper_source;
    size_t lp_upper = 0;
    bool external = false;  // an external bound was substituted
    std::optional<StoredCell> stored;

    bool matches() const {
        return stored && stored->lo == lower && stored->hi == upper;
    }
};

struct Table {
    size_t max_n = 0;
    std::vector<TableCell> cells;  // row-major by n then k

    const TableCell &at(size_t n, size_t k) const {
        for (const auto &c : cells) {
            if (c.n == n && c.k == k) {
                return c;
            }
        }
        throw PreconditionError("table: no cell (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    std::vector<TableCell> mismatches() const {
        std::vector<TableCell> out;
        for (const auto &c : cells) {
            if (c.stored && !c.matches()) {
                out.push_back(c);
            }
        }
        return out;
    }
};

/// Upper bound for one cell: LP, Singleton and (k = 0) the self-dual bound,
/// then any external bound.
inline TableCell upper_cell(size_t n, size_t k) {
    TableCell c;
    c.n = n;
    c.k = k;
    c.lp_upper = lp_max_distance(n, k);
    c.upper = c.lp_upper;
    c.upper_source = "lp";
    size_t single = 1;
    while (singleton_ok(n, k, single + 1, false) && single < n + 1) {
        single++;
    }
    if (single < c.upper) {
        c.upper = single;
        c.upper_source = "singleton";
    }
    if (k == 0 && selfdual_distance_bound(n, false) < c.upper) {
        c.upper = selfdual_distance_bound(n, false);
        c.upper_source = "self-dual";
    }
    if (auto e = external_bound(n, k); e && e->upper < c.upper) {
        c.upper = e->upper;
        c.upper_source = std::string("external ") + e->mark;
        c.external = true;
    }
    return c;
}

/// Builds rows 1..max_n for k <= n. Upper bounds run on `threads` workers
/// (0 = hardware concurrency); the result does not depend on the count.
inline Table build_table(size_t max_n, size_t threads = 0, uint64_t budget = DEFAULT_BUDGET) {
    detail::require(max_n >= 1 && max_n <= 30, "table: max_n must be in 1..30");
    Table t;
    t.max_n = max_n;
    for (size_t n = 1; n <= max_n; n++) {
        for (size_t k = 0; k <= n; k++) {
            TableCell c;
            c.n = n;
            c.k = k;
            t.cells.push_back(c);
        }
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        while (true) {
            size_t i = next++;
            if (i >= t.cells.size()) {
                return;
            }
            try {
                t.cells[i] = upper_cell(t.cells[i].n, t.cells[i].k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) {
                    err = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t i = 1; i < threads; i++) {
        pool.emplace_back(work);
    }
    work();
    for (auto &th : pool) {
        th.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
    AchievableSet a = achievable_codes(max_n, budget);
    for (auto &c : t.cells) {
        c.lower = a.best(c.n, c.k).d;
        c.lower_source = a.best(c.n, c.k).source;
        c.stored = stored_cell(c.n, c.k);
    }
    return t;
}

inline std::string cell_text(size_t lo, size_t hi) {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

/// Grid of computed cells from n = 3. A trailing '*' marks a substituted
/// external bound and '!' a difference from the published value, which is
/// then shown in brackets.
inline std::string format_table(const Table &t) {
    std::ostringstream out;
    for (size_t n = 3; n <= t.max_n; n++) {
        out << (n < 10 ? " " : "") << n << " |";
        for (size_t k = 0; k <= n; k++) {
            const auto &c = t.at(n, k);
            std::string s = cell_text(c.lower, c.upper);
            if (c.external) {
                s += "*";
            }
            if (c.stored && !c.matches()) {
                s += "!(" + cell_text(c.stored->lo, c.stored->hi) + ")";
            }
            out << " " << s;
        }
        out << "\n";
    }
    auto mm = t.mismatches();
    out << "cells compared: ";
    size_t compared = 0;
    for (const auto &c : t.cells) {
        compared += c.stored ? 1 : 0;
    }
    out << compared << ", mismatches: " << mm.size() << "\n";
    for (const auto &c : mm) {
        out << "  (" << c.n << "," << c.k << ") computed " << cell_text(c.lower, c.upper) << " [" << c.lower_source
            << " / " << c.upper_source << "], published " << cell_text(c.stored->lo, c.stored->hi) << "\n";
    }
    return out.str();
}

}  // namespace qgf4

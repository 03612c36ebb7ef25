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

// qgf4: command-line front end.
//
// Exit codes: 0 success, 1 negative result (infeasible, not self-orthogonal,
// precondition violated), 2 usage or input error, 3 budget exceeded.
//
// --format records prints one record per line:
//   record := '{' pair (',' pair)* '}'
//   pair   := '"' key '"' ':' value
//   value  := integer | '"' string '"' | true | false | '[' item (',' item)* ']'
//   item   := integer | '"' p/q '"'
// Integers are exact decimal and may exceed 64 bits; rationals are quoted.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qgf4/catalog.hpp"
#include "qgf4/constructions.hpp"
#include "qgf4/cyclic.hpp"
#include "qgf4/io.hpp"
#include "qgf4/lp.hpp"
#include "qgf4/selfdual.hpp"
#include "qgf4/table.hpp"

using namespace qgf4;

namespace {

enum Exit { OK = 0, NEGATIVE = 1, USAGE = 2, BUDGET = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    unsigned budget_log2 = 28;
    uint64_t seed = 1;
    std::string format = "text";
    size_t threads = 0;

    uint64_t budget() const {
        return budget_log2 >= 63 ? UINT64_MAX : uint64_t{1} << budget_log2;
    }
    bool records() const {
        return format == "records";
    }
};

Options opt;

class Record {
   public:
    Record &add(const std::string &k, const std::string &v) {
        std::string e;
        for (char c : v) {
            if (c == '"' || c == '\\') {
                e += '\\';
            }
            e += c == '\n' ? ' ' : c;
        }
        return raw(k, "\"" + e + "\"");
    }
    Record &add(const std::string &k, const char *v) {
        return add(k, std::string(v));
    }
    Record &add(const std::string &k, bool v) {
        return raw(k, v ? "true" : "false");
    }
    Record &add(const std::string &k, size_t v) {
        return raw(k, std::to_string(v));
    }
    Record &add(const std::string &k, const BigInt &v) {
        return raw(k, v.get_str());
    }
    Record &add(const std::string &k, const std::vector<BigInt> &v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); i++) {
            s += (i ? "," : "") + v[i].get_str();
        }
        return raw(k, s + "]");
    }
    Record &add(const std::string &k, const std::vector<Rational> &v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); i++) {
            s += (i ? ",\"" : "\"") + v[i].get_str() + "\"";
        }
        return raw(k, s + "]");
    }
    std::string str() const {
        return "{" + body_ + "}";
    }

   private:
    Record &raw(const std::string &k, const std::string &v) {
        body_ += (body_.empty() ? "\"" : ",\"") + k + "\":" + v;
        return *this;
    }
    std::string body_;
};

void emit(const Record &r) {
    std::cout << r.str() << "\n";
}

AdditiveCode load(const std::string &path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return parse_code(ss.str()).code;
    }
    if (!std::filesystem::exists(path)) {
        throw UsageError("no such file: " + path);
    }
    return read_code(path).code;
}

BinaryCode load_binary(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw UsageError("no such file: " + path);
    }
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.find_first_not_of("01") != std::string::npos) {
            throw UsageError("binary row must be 0/1 only: " + line);
        }
        rows.push_back(line);
    }
    if (rows.empty()) {
        throw UsageError("empty binary code file: " + path);
    }
    return BinaryCode::from_strings(rows);
}

Gf4 parse_kappa(const std::string &s) {
    if (s.size() != 1 || std::string("1wW").find(s[0]) == std::string::npos) {
        throw UsageError("kappa must be one of 1, w, W");
    }
    return Gf4::from_char(s[0]);
}

// Binary polynomial from its coefficient string, lowest degree first.
uint64_t parse_f2poly(const std::string &s) {
    if (s.empty() || s.size() > 63 || s.find_first_not_of("01") != std::string::npos) {
        throw UsageError("binary polynomial must be a 0/1 string, lowest degree first: " + s);
    }
    uint64_t p = 0;
    for (size_t i = 0; i < s.size(); i++) {
        p |= uint64_t(s[i] == '1') << i;
    }
    return p;
}

Rational parse_rational(const std::string &s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw UsageError("not a rational number: " + s);
    }
    q.canonicalize();
    return q;
}

void print_params(const std::string &verb, const QuantumParams &p, const AdditiveCode &c) {
    if (opt.records()) {
        emit(Record()
                 .add("verb", verb)
                 .add("n", p.n)
                 .add("k", p.k)
                 .add("d", p.d)
                 .add("pure", p.pure)
                 .add("linear", is_linear(c))
                 .add("self_dual", p.k == 0));
        return;
    }
    std::cout << p.str() << (is_linear(c) ? " linear" : " additive") << "\n";
}

int cmd_verify(const std::string &path) {
    AdditiveCode c = load(path);
    if (auto bad = first_non_orthogonal_pair(c)) {
        if (opt.records()) {
            emit(Record()
                     .add("verb", "verify")
                     .add("self_orthogonal", false)
                     .add("generator_i", bad->first)
                     .add("generator_j", bad->second));
        } else {
            std::cout << "not self-orthogonal: generators " << bad->first << " and " << bad->second
                      << " have nonzero trace inner product\n";
            std::cout << "  " << c.generators()[bad->first].str() << "\n  " << c.generators()[bad->second].str()
                      << "\n";
        }
        return NEGATIVE;
    }
    print_params("verify", quantum_params(c, opt.budget()), c);
    return OK;
}

int cmd_distance(const std::string &path) {
    AdditiveCode c = load(path);
    WeightEnumerator w = weight_distribution(c, opt.budget());
    size_t d = w.min_nonzero_weight();
    if (opt.records()) {
        emit(Record().add("verb", "distance").add("n", c.n()).add("rank", c.rank()).add("d", d));
    } else {
        std::cout << "(" << c.n() << ",2^" << c.rank() << ") d=" << d << "\n";
    }
    return OK;
}

int cmd_dual(const std::string &path) {
    AdditiveCode c = load(path);
    std::cout << format_code(dual(c), {" dual of " + path});
    return OK;
}

int cmd_macwilliams(const std::string &path) {
    AdditiveCode c = load(path);
    WeightEnumerator w = weight_distribution(c, opt.budget());
    WeightEnumerator t = macwilliams(w, c.rank());
    if (opt.records()) {
        emit(Record().add("verb", "macwilliams").add("n", c.n()).add("rank", c.rank()).add("A", w.coeffs).add(
            "dual_A", t.coeffs));
        return OK;
    }
    std::cout << "A:      " << w.str() << "\n";
    std::cout << "dual A: " << t.str() << "\n";
    return OK;
}

int cmd_lp(size_t n, size_t k, size_t d, bool pure, const std::string &K) {
    if (n < 1 || k > n || d < 1 || d > n + 1) {
        throw UsageError("lp: need 1 <= n, k <= n, 1 <= d <= n+1");
    }
    std::optional<Rational> Kq;
    if (!K.empty()) {
        Kq = parse_rational(K);
        if (*Kq <= 0) {
            throw UsageError("lp: K must be positive");
        }
    }
    LpOutcome o = lp_feasible(n, k, d, pure, Kq);
    if (opt.records()) {
        Record r;
        r.add("verb", "lp").add("n", n).add("k", k).add("d", d).add("pure", pure).add("feasible", o.feasible());
        for (const auto &b : o.branches) {
            r.add(std::string("branch_") + lp_branch_name(b.branch), b.result.feasible);
            if (b.result.feasible) {
                r.add(std::string("witness_") + lp_branch_name(b.branch), b.distribution);
            }
        }
        emit(r);
    } else {
        std::cout << lp_report(o);
    }
    return o.feasible() ? OK : NEGATIVE;
}

int write_result(const AdditiveCode &c, const std::string &what, bool params, const std::string &out) {
    std::vector<std::string> comments{" " + what};
    if (params) {
        comments.push_back(" " + quantum_params(c, opt.budget()).str());
    }
    if (out.empty()) {
        std::cout << format_code(c, comments);
    } else {
        write_code(c, out, comments);
    }
    return OK;
}

int cmd_bch(size_t n, const std::string &kappa, size_t design, size_t max_results, bool verify) {
    auto codes = bch_search(n, parse_kappa(kappa), design, max_results, opt.budget());
    if (codes.empty()) {
        if (!opt.records()) {
            std::cout << "no code\n";
        }
        return NEGATIVE;
    }
    for (const auto &b : codes) {
        std::optional<QuantumParams> p;
        if (verify) {
            p = quantum_params(b.code, opt.budget());
        }
        if (opt.records()) {
            Record r;
            r.add("verb", "bch").add("n", b.n).add("k", b.k).add("design_distance", b.design_distance).add(
                "g", b.g.str());
            if (p) {
                r.add("d", p->d).add("pure", p->pure);
            }
            emit(r);
        } else {
            std::cout << "[[" << b.n << "," << b.k << ",>=" << b.design_distance << "]] g=" << b.g.str();
            if (p) {
                std::cout << " verified " << p->str();
            }
            std::cout << "\n";
        }
    }
    return OK;
}

int cmd_search_cyclic(size_t n, size_t min_d, size_t rank_lo, size_t rank_hi) {
    auto res = search_additive_cyclic(n, min_d, rank_lo, rank_hi, opt.budget(), 31, opt.threads);
    for (const auto &r : res) {
        if (opt.records()) {
            emit(Record()
                     .add("verb", "search-cyclic")
                     .add("n", r.params.n)
                     .add("k", r.params.k)
                     .add("d", r.params.d)
                     .add("pure", r.params.pure)
                     .add("p", f2poly_str(r.form.p))
                     .add("q", f2poly_str(r.form.q))
                     .add("r", f2poly_str(r.form.r)));
        } else {
            std::cout << r.params.str() << " p=" << f2poly_str(r.form.p) << " q=" << f2poly_str(r.form.q)
                      << " r=" << f2poly_str(r.form.r) << "\n";
        }
    }
    return res.empty() ? NEGATIVE : OK;
}

int cmd_enum_selfdual(size_t n, bool classify) {
    if (!classify) {
        if (n < 1 || n > 6) {
            throw UsageError("enum-selfdual: n must be in 1..6");
        }
        uint64_t count = 0;
        for_each_selfdual_packed(n, [&](const std::vector<uint32_t> &) { count++; });
        BigInt c(std::to_string(count));
        if (opt.records()) {
            emit(Record().add("verb", "enum-selfdual").add("n", n).add("count", c).add("formula", selfdual_count(n)));
        } else {
            std::cout << "n=" << n << " self-dual codes: " << count << " (product formula " << selfdual_count(n)
                      << ")\n";
        }
        return OK;
    }
    if (n < 1 || n > 5) {
        throw UsageError("enum-selfdual --classify: n must be in 1..5");
    }
    SelfDualClassification cl = classify_selfdual(n);
    for (const auto &c : cl.classes) {
        if (opt.records()) {
            emit(Record()
                     .add("verb", "enum-selfdual")
                     .add("n", n)
                     .add("d", c.params.d)
                     .add("even", c.even)
                     .add("indecomposable", c.indecomposable)
                     .add("aut", c.aut_order)
                     .add("orbit", c.orbit_size));
        } else {
            std::cout << "d=" << c.params.d << (c.even ? " even" : " odd ")
                      << (c.indecomposable ? " indecomposable" : " decomposable  ") << " |Aut|=" << c.aut_order
                      << " orbit=" << c.orbit_size << "  ";
            for (const auto &g : c.representative.generators()) {
                std::cout << g.str() << " ";
            }
            std::cout << "\n";
        }
    }
    if (!opt.records()) {
        std::cout << "classes: " << cl.classes.size() << ", indecomposable: " << cl.indecomposable_count()
                  << ", mass: " << cl.mass() << " (formula " << mass_formula(n) << ")\n";
    }
    return OK;
}

int cmd_catalog_list() {
    for (const auto &e : catalog()) {
        if (opt.records()) {
            Record r;
            r.add("verb", "catalog").add("name", e.name).add("n", e.code.n()).add("rank", e.code.rank());
            if (e.claimed) {
                r.add("k", e.claimed->k).add("d", e.claimed->d);
            }
            emit(r.add("source", e.source));
        } else {
            std::cout << e.name << "  (" << e.code.n() << ",2^" << e.code.rank() << ")";
            if (e.claimed) {
                std::cout << "  " << e.claimed->str();
            }
            std::cout << "\n";
        }
    }
    return OK;
}

int cmd_catalog_verify() {
    bool all = true;
    for (const auto &e : catalog()) {
        EntryCheck c = verify_entry(e, opt.budget());
        all = all && c.ok;
        if (opt.records()) {
            emit(Record().add("verb", "catalog").add("name", e.name).add("ok", c.ok).add("message", c.message));
        } else {
            std::cout << (c.ok ? "ok   " : "FAIL ") << e.name << "  " << c.message << "\n";
        }
    }
    return all ? OK : NEGATIVE;
}

int cmd_catalog_export(const std::string &dir) {
    std::filesystem::create_directories(dir);
    for (const auto &e : catalog()) {
        std::ofstream f(std::filesystem::path(dir) / (e.name + ".code"), std::ios::binary);
        f << e.file_text();
    }
    std::cout << "wrote " << catalog().size() << " files to " << dir << "\n";
    return OK;
}

int cmd_table(size_t max_n) {
    if (max_n < 3 || max_n > 30) {
        throw UsageError("table: --max-n must be in 3..30");
    }
    Table t = build_table(max_n, opt.threads, opt.budget());
    if (!opt.records()) {
        std::cout << format_table(t);
        return OK;
    }
    for (const auto &c : t.cells) {
        Record r;
        r.add("verb", "table").add("n", c.n).add("k", c.k).add("lower", c.lower).add("upper", c.upper).add(
            "lower_source", c.lower_source);
        r.add("upper_source", c.upper_source).add("lp_upper", c.lp_upper).add("external", c.external);
        if (c.stored) {
            r.add("stored_lower", c.stored->lo).add("stored_upper", c.stored->hi).add("match", c.matches());
        }
        emit(r);
    }
    return OK;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qgf4: additive GF(4) codes and quantum error correction"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--budget", opt.budget_log2, "log2 of the enumeration budget in codewords")
        ->envname("QGF4_BUDGET")
        ->check(CLI::Range(1u, 63u));
    app.add_option("--seed", opt.seed, "seed for randomized choices");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "records"}));
    app.add_option("--threads", opt.threads, "worker threads (0 = hardware)");

    std::function<int()> action;
    std::string file, file2, out, kappa = "1", K;
    size_t n = 0, k = 0, d = 0, m = 0, at_pos = 0, max_results = 1, rank_lo = 0, rank_hi = 0;
    bool pure = false, flag = false, params = false;

    auto *verify = app.add_subcommand("verify", "print [[n,k,d]] and purity of a code file");
    verify->add_option("file", file)->required();
    verify->callback([&] { action = [&] { return cmd_verify(file); }; });

    auto *distance = app.add_subcommand("distance", "minimum nonzero weight of the additive code");
    distance->add_option("file", file)->required();
    distance->callback([&] { action = [&] { return cmd_distance(file); }; });

    auto *dualc = app.add_subcommand("dual", "print the trace dual");
    dualc->add_option("file", file)->required();
    dualc->callback([&] { action = [&] { return cmd_dual(file); }; });

    auto *mw = app.add_subcommand("macwilliams", "weight distributions of a code and its dual");
    mw->add_option("file", file)->required();
    mw->callback([&] { action = [&] { return cmd_macwilliams(file); }; });

    auto *lp = app.add_subcommand("lp", "linear-programming feasibility of [[N,K,D]]");
    lp->add_option("N", n)->required();
    lp->add_option("K", k)->required();
    lp->add_option("D", d)->required();
    lp->add_flag("--pure", pure);
    lp->add_option("--K-override", K, "replace 2^k by a positive rational P/Q (enumerator form)");
    lp->callback([&] { action = [&] { return cmd_lp(n, k, d, pure, K); }; });

    auto *construct = app.add_subcommand("construct", "build a code; writes a code file");
    construct->require_subcommand(1);
    construct->add_flag("--params", params, "append [[n,k,d]] as a comment");
    construct->add_option("-o,--output", out, "output file (default stdout)");
    auto one_file = [&](const char *name, const char *help, std::function<AdditiveCode(const AdditiveCode &)> f) {
        auto *s = construct->add_subcommand(name, help);
        s->add_option("file", file)->required();
        s->callback([&, f, name] { action = [&, f, name] { return write_result(f(load(file)), name, params, out); }; });
    };
    one_file("lengthen", "[[n,k,d]] -> [[n+1,k,d]]", [](const AdditiveCode &c) { return lengthen(c); });
    one_file("shorten-pure", "pure [[n,k,d]] -> [[n-1,k+1,d-1]]",
             [](const AdditiveCode &c) { return shorten_pure(c, opt.budget()); });
    one_file("reduce-k", "[[n,k,d]] -> [[n,k-1,d]]", [](const AdditiveCode &c) { return reduce_k(c, opt.budget()); });
    one_file("puncture", "[[n,k,d]] -> [[n-1,k,d-1]]", [](const AdditiveCode &c) { return puncture(c); });
    one_file("drop-weight1", "remove a coordinate carrying a weight-1 word",
             [](const AdditiveCode &c) { return drop_weight1(c); });
    auto two_files = [&](const char *name, const char *help,
                         std::function<AdditiveCode(const AdditiveCode &, const AdditiveCode &)> f) {
        auto *s = construct->add_subcommand(name, help);
        s->add_option("first", file)->required();
        s->add_option("second", file2)->required();
        return s->callback([&, f, name] {
            action = [&, f, name] { return write_result(f(load(file), load(file2)), name, params, out); };
        });
    };
    two_files("direct-sum", "direct sum", [](const AdditiveCode &a, const AdditiveCode &b) { return direct_sum(a, b); });
    two_files("uuv", "(u|u+v) combination",
              [](const AdditiveCode &a, const AdditiveCode &b) { return uuv(a, b, opt.budget()); });
    two_files("concatenate", "outer blocks encoded by the inner code",
              [](const AdditiveCode &a, const AdditiveCode &b) { return concatenate(a, b, std::nullopt, false).code; });
    auto *ps = two_files("paste", "paste the second code into the first", [&](const AdditiveCode &a,
                                                                              const AdditiveCode &b) {
        return at_pos ? paste(a, b, at_pos - 1) : paste(a, b);
    });
    ps->add_option("--at", at_pos, "1-based first replaced coordinate (default: last k2)");
    {
        auto *s = construct->add_subcommand("shorten-support", "delete the support of a weight-m binary dual word");
        s->add_option("file", file)->required();
        s->add_option("m", m)->required();
        s->callback([&] {
            action = [&] {
                return write_result(shorten_by_support(load(file), m, opt.seed, opt.budget()), "shorten-support",
                                    params, out);
            };
        });
    }
    {
        auto *s = construct->add_subcommand("css", "w C1 + W C2-perp for binary C1 within C2 (0/1 row files)");
        s->add_option("c1", file)->required();
        s->add_option("c2", file2)->required();
        s->callback([&] {
            action = [&] { return write_result(css(load_binary(file), load_binary(file2)), "css", params, out); };
        });
    }
    auto by_int = [&](const char *name, const char *help, std::function<AdditiveCode(size_t)> f) {
        auto *s = construct->add_subcommand(name, help);
        s->add_option("m", m)->required();
        s->callback([&, f, name] { action = [&, f, name] { return write_result(f(m), name, params, out); }; });
        return s;
    };
    by_int("hamming", "quaternary Hamming [[(4^m-1)/3, n-2m, 3]]",
           [](size_t mm) { return quaternary_hamming_code(mm); });
    by_int("gottesman", "[[2^m, 2^m-m-2, 3]]", [](size_t mm) { return gottesman_code(mm); });
    by_int("extend-gottesman", "recursive [[n, n-m-2, 3]] family",
           [](size_t mm) { return extend_gottesman(mm); });
    auto *dn = by_int("dn", "self-dual d_n (or d_n^+ with --plus)", [&](size_t mm) {
        return flag ? dn_plus(mm) : dn_code(mm);
    });
    dn->add_flag("--plus", flag);
    {
        auto *s = construct->add_subcommand("trivial", "trivial [[N,K,D]] for D <= 2");
        s->add_option("N", n)->required();
        s->add_option("K", k)->required();
        s->add_option("D", d)->required();
        s->callback([&] { action = [&] { return write_result(trivial_code(n, k, d), "trivial", params, out); }; });
    }
    {
        auto *s = construct->add_subcommand("constacyclic", "linear constacyclic code generated by G (lowest first)");
        s->add_option("g", file)->required();
        s->add_option("N", n)->required();
        s->add_option("--kappa", kappa);
        s->callback([&] {
            action = [&] {
                return write_result(constacyclic_code(Gf4Poly::from_string(file), n, parse_kappa(kappa)),
                                    "constacyclic", params, out);
            };
        });
    }
    {
        auto *s = construct->add_subcommand("additive-cyclic",
                                            "additive cyclic code from binary polynomials p, q, r (0/1, lowest first)");
        static std::string p, q, r;
        s->add_option("p", p)->required();
        s->add_option("q", q)->required();
        s->add_option("r", r)->required();
        s->add_option("N", n)->required();
        s->callback([&] {
            action = [&] {
                return write_result(additive_cyclic(parse_f2poly(p), parse_f2poly(q), parse_f2poly(r), n),
                                    "additive-cyclic", params, out);
            };
        });
    }
    {
        static std::vector<std::string> gens;
        auto *s = construct->add_subcommand("cyclic-orbit", "span of all cyclic shifts of the given words");
        s->add_option("words", gens)->required();
        s->add_flag("--linear", flag, "also close under multiplication by w");
        s->callback([&] {
            action = [&] { return write_result(cyclic_orbit_code(gens, flag), "cyclic-orbit", params, out); };
        });
        static std::vector<std::string> blocks;
        auto *t = construct->add_subcommand("quasicyclic", "double-circulant style code from first-row blocks");
        t->add_option("blocks", blocks)->required();
        t->add_flag("--additive", flag, "do not close under multiplication by w");
        t->callback([&] {
            action = [&] { return write_result(quasicyclic_code(blocks, !flag), "quasicyclic", params, out); };
        });
    }
    {
        auto *s = construct->add_subcommand("conjucyclic", "conjucyclic code from a binary cyclic code file");
        s->add_option("file", file)->required();
        s->callback([&] {
            action = [&] { return write_result(binary_to_conjucyclic(load_binary(file)), "conjucyclic", params, out); };
        });
    }

    auto *bch = app.add_subcommand("bch", "self-orthogonal constacyclic codes of design distance D");
    bch->add_option("N", n)->required();
    bch->add_option("D", d)->required();
    bch->add_option("--kappa", kappa);
    bch->add_option("--max", max_results, "number of codes to list");
    bch->add_flag("--verify", flag, "compute the true distance (may exceed the budget)");
    bch->callback([&] { action = [&] { return cmd_bch(n, kappa, d, max_results, flag); }; });

    auto *sc = app.add_subcommand("search-cyclic", "exhaustive additive cyclic search at odd length N");
    sc->add_option("N", n)->required();
    sc->add_option("--min-d", d)->required();
    sc->add_option("--rank-lo", rank_lo);
    sc->add_option("--rank-hi", rank_hi, "default N");
    sc->callback([&] { action = [&] { return cmd_search_cyclic(n, d, rank_lo, rank_hi ? rank_hi : n); }; });

    auto *es = app.add_subcommand("enum-selfdual", "count (or classify, N <= 5) self-dual codes of length N");
    es->add_option("N", n)->required();
    es->add_flag("--classify", flag);
    es->callback([&] { action = [&] { return cmd_enum_selfdual(n, flag); }; });

    auto *cat = app.add_subcommand("catalog", "built-in codes");
    cat->require_subcommand(1);
    cat->add_subcommand("list")->callback([&] { action = cmd_catalog_list; });
    cat->add_subcommand("verify")->callback([&] { action = cmd_catalog_verify; });
    auto *show = cat->add_subcommand("show", "print one entry as a code file");
    show->add_option("name", file)->required();
    show->callback([&] {
        action = [&] {
            std::cout << catalog_get(file).file_text();
            return int(OK);
        };
    });
    auto *exp = cat->add_subcommand("export", "write every entry to DIR/<name>.code");
    exp->add_option("dir", file)->required();
    exp->callback([&] { action = [&] { return cmd_catalog_export(file); }; });

    auto *table = app.add_subcommand("table", "regenerate the bounds table and compare with stored values");
    table->add_option("--max-n", m)->required();
    table->callback([&] { action = [&] { return cmd_table(m); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return USAGE;
    }
    try {
        return action();
    } catch (const BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return BUDGET;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return USAGE;
    } catch (const UsageError &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return USAGE;
    } catch (const PreconditionError &e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return NEGATIVE;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    }
}

#pragma once

// Command-line front end. dispatch() parses argv-style arguments, runs one
// command and writes either plain text or a JSON envelope
// {command, result, version}.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include "isoring/io/json.hpp"
#include "isoring/isoring.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace isoring::cli {

using io::json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    json payload;
    std::string text;
};

struct Options {
    std::string format = "text";
    std::optional<long> n;
    std::optional<unsigned> k;
    std::optional<std::string> core;

    bool upto = false, closed = false, kterm = false, in_t = false;
    std::optional<std::string> weights, scheme, seq, with, input, rows, shape, group, perms, multiset, names, fn,
        values, file, primes;
    std::optional<unsigned> degree, r, colors;
    std::optional<unsigned long> prime, N;
};

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

inline unsigned max_n() {
    char const* env = std::getenv("ISORING_MAX_N");
    if (!env || !*env) return 64;
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(env, &used);
        if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
        return static_cast<unsigned>(v);
    } catch (std::exception const&) {
        throw usage_error(std::string("ISORING_MAX_N must be a positive integer, got '") + env + "'");
    }
}

inline void cap(long v, char const* what) {
    unsigned m = max_n();
    if (v > static_cast<long>(m) || v < -static_cast<long>(m))
        throw domain_error(std::string(what) + " = " + std::to_string(v) + " exceeds ISORING_MAX_N = " + std::to_string(m));
}

inline std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string const& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

inline std::vector<Rational> parse_rationals(std::string const& s) {
    std::vector<Rational> v;
    if (trim(s).empty()) return v;
    for (auto const& item : split(s, ',')) v.push_back(Rational::parse(item));
    return v;
}

inline std::vector<TPoly> parse_polys(std::string const& s) {
    std::vector<TPoly> v;
    for (auto const& item : split(s, ',')) v.push_back(TPoly::parse(item));
    return v;
}

inline std::pair<long, long> parse_range(std::string const& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw usage_error("row range must look like a..b, got '" + s + "'");
    try {
        long a = std::stol(s.substr(0, dots)), b = std::stol(s.substr(dots + 2));
        if (b < a) throw usage_error("empty row range '" + s + "'");
        return {a, b};
    } catch (std::invalid_argument const&) {
        throw usage_error("row range must look like a..b, got '" + s + "'");
    }
}

template <RingElement T>
std::string vec_text(std::vector<T> const& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_text(v[i]);
    return s + "]";
}

template <RingElement T>
std::string list_text(std::vector<T> const& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_text(v[i]);
    return s;
}

template <class F>
Output with_core(Options const& o, F&& f) {
    if (o.core) return f(evaluated_core(parse_rationals(*o.core)));
    if (o.k) {
        cap(*o.k, "k");
        return f(generic_core(*o.k));
    }
    throw usage_error("--k or --core is required");
}

/// The flag core as polynomials (constants for an evaluated core).
inline std::optional<Core<TPoly>> poly_core(Options const& o) {
    if (o.core) {
        std::vector<TPoly> t;
        for (auto const& x : parse_rationals(*o.core)) t.emplace_back(x);
        return Core<TPoly>::finite(std::move(t));
    }
    if (o.k) {
        cap(*o.k, "k");
        return generic_core(*o.k);
    }
    return std::nullopt;
}

inline std::string read_all(std::string const& path, std::istream& in) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f) throw domain_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
}

/// A value stream from text: a JSON sequence (optionally inside an envelope),
/// a JSON array, or one value per line.
inline std::vector<TPoly> parse_stream(std::string const& content) {
    json j = json::parse(content, nullptr, false);
    if (!j.is_discarded() && (j.is_object() || j.is_array())) {
        if (j.is_object() && j.contains("result")) j = j["result"];
        if (j.is_array()) return io::vector_from_json<TPoly>(j);
        return io::sequence_from_json<TPoly>(j).values;
    }
    std::vector<TPoly> v;
    std::istringstream is(content);
    std::string line;
    while (std::getline(is, line))
        if (!trim(line).empty()) v.push_back(TPoly::parse(trim(line)));
    return v;
}

inline std::optional<std::vector<TPoly>> input_sequence(Options const& o, std::istream& in) {
    if (o.seq) return parse_polys(*o.seq);
    if (o.input) return parse_stream(read_all(*o.input, in));
    return std::nullopt;
}

inline unsigned bound_for(Options const& o, std::size_t available) {
    if (available == 0) throw domain_error("empty sequence");
    long n = o.n ? *o.n : static_cast<long>(available) - 1;
    if (n < 0) throw usage_error("--n must be non-negative here");
    cap(n, "n");
    return static_cast<unsigned>(n);
}

inline unsigned required_n(Options const& o) {
    if (!o.n) throw usage_error("--n is required");
    if (*o.n < 0) throw usage_error("--n must be non-negative here");
    cap(*o.n, "n");
    return static_cast<unsigned>(*o.n);
}

inline Output sequence_output(std::vector<TPoly> const& v, json core, std::string const& kind, char sym) {
    std::string text;
    for (std::size_t i = 0; i < v.size(); ++i) text += std::string(1, sym) + "_" + std::to_string(i) + " = " + v[i].str() + "\n";
    return {io::sequence_to_json(v, std::move(core), kind), text};
}

// ---------------------------------------------------------------------------
// sequences
// ---------------------------------------------------------------------------

inline Weight weight_from(Options const& o) {
    if (o.weights && o.scheme) throw usage_error("give --weights or --scheme, not both");
    if (o.weights) return Weight::of(parse_rationals(*o.weights));
    if (!o.scheme) throw usage_error("--weights or --scheme is required");
    std::string s = *o.scheme;
    if (s == "ones") return Weight::all_ones();
    if (s == "ramp") return Weight::ramp();
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string fam = s.substr(0, colon);
        unsigned v;
        try {
            v = static_cast<unsigned>(std::stoul(s.substr(colon + 1)));
        } catch (std::exception const&) {
            throw usage_error("bad weight scheme '" + s + "'");
        }
        if (fam == "shifted") return Weight::shifted_ones(v);
        if (fam == "hook") return Weight::signed_hook(v);
    }
    throw usage_error("weight scheme must be ones, ramp, shifted:Z or hook:R");
}

inline Output sequence_cmd(Options const& o, Weight const& w, std::string const& kind, char sym) {
    if (!o.n) throw usage_error("--n is required");
    long n = *o.n;
    cap(n, "n");
    if (n < 0 && o.upto) throw usage_error("--upto needs a non-negative --n");
    return with_core(o, [&](auto const& core) -> Output {
        using T = std::decay_t<decltype(core.t(1))>;
        std::vector<T> vals;
        long first = o.upto ? 0 : n;
        if (o.closed) {
            if constexpr (std::is_same_v<T, TPoly>) {
                unsigned top = static_cast<unsigned>(n);
                if (n < 0) throw domain_error("the closed form is defined for n >= 0");
                for (unsigned m = o.upto ? 0 : top; m <= top; ++m) vals.push_back(weighted_closed(w, core.degree(), m));
            } else {
                throw usage_error("--closed needs a generic core (--k)");
            }
        } else if (n < 0) {
            vals.push_back(Seq<T>(core, w).at(n));
        } else {
            auto all = Seq<T>(core, w).values(static_cast<unsigned>(n));
            if (o.upto) vals = all;
            else vals.push_back(all.back());
        }
        std::string text;
        if (o.upto)
            for (std::size_t i = 0; i < vals.size(); ++i)
                text += std::string(1, sym) + "_" + std::to_string(i) + " = " + to_text(vals[i]) + "\n";
        else
            text = to_text(vals[0]) + "\n";
        return {io::sequence_to_json(vals, io::to_json(core), kind, first), text};
    });
}

// ---------------------------------------------------------------------------
// log / exp / convolution
// ---------------------------------------------------------------------------

inline Output log_cmd(Options const& o, std::istream& in) {
    auto seq = input_sequence(o, in);
    auto core = poly_core(o);
    std::vector<TPoly> p;
    unsigned n_max;
    if (seq) {
        n_max = bound_for(o, seq->size());
        p = *seq;
        if (!core) core = infer_finite_core(p, n_max);
    } else {
        if (!core) throw usage_error("give --seq/--input, or --k/--core for the GFP");
        n_max = required_n(o);
        p = gfp_sequence(*core, n_max);
    }
    auto g = o.kterm ? log_op_kterm(p, *core, n_max) : log_op(p, *core, n_max);
    return sequence_output(g, io::to_json(*core), "LOG", 'G');
}

inline Output exp_cmd(Options const& o, std::istream& in) {
    auto seq = input_sequence(o, in);
    std::vector<TPoly> g;
    unsigned n_max;
    json core = nullptr;
    if (seq) {
        n_max = bound_for(o, seq->size());
        g = *seq;
    } else {
        auto c = poly_core(o);
        if (!c) throw usage_error("give --seq/--input, or --k/--core for the GLP");
        n_max = required_n(o);
        g = glp_sequence(*c, n_max);
        core = io::to_json(*c);
    }
    return sequence_output(exp_op(g, n_max), core, "EXP", 'F');
}

inline Output conv_cmd(Options const& o, std::istream& in) {
    auto a = input_sequence(o, in);
    if (!a || !o.with) throw usage_error("conv needs --seq (or --input) and --with");
    auto b = parse_polys(*o.with);
    unsigned n_max = bound_for(o, std::min(a->size(), b.size()));
    return sequence_output(conv(*a, b, n_max), nullptr, "CONV", 'P');
}

inline Output conv_inverse_cmd(Options const& o, std::istream& in) {
    auto a = input_sequence(o, in);
    if (!a) throw usage_error("conv-inverse needs --seq or --input");
    unsigned n_max = bound_for(o, a->size());
    return sequence_output(conv_inverse(*a, n_max), nullptr, "INVERSE", 'P');
}

inline Output conv_power_cmd(Options const& o, std::istream& in) {
    auto a = input_sequence(o, in);
    if (!a) throw usage_error("conv-power needs --seq or --input");
    if (!o.r) throw usage_error("--r is required");
    cap(*o.r, "r");
    unsigned n_max = bound_for(o, a->size());
    return sequence_output(conv_power(*a, *o.r, n_max), nullptr, "POWER:" + std::to_string(*o.r), 'P');
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

template <RingElement T>
std::string rows_text(std::vector<std::vector<T>> const& rows) {
    std::string s;
    for (auto const& r : rows) s += vec_text(r) + "\n";
    return s;
}

template <RingElement T>
std::string window_text(MatrixWindow<T> const& w) {
    std::string s;
    for (long n = w.first_row(); n <= w.last_row(); ++n) s += std::to_string(n) + ": " + vec_text(w.row(n)) + "\n";
    return s;
}

inline std::pair<long, long> rows_for(Options const& o, std::size_t k) {
    std::pair<long, long> r = o.rows ? parse_range(*o.rows) : std::pair<long, long>{-static_cast<long>(k) + 1, static_cast<long>(k)};
    cap(r.first, "row");
    cap(r.second, "row");
    return r;
}

inline Output companion_cmd(Options const& o) {
    return with_core(o, [&](auto const& core) -> Output {
        auto a = companion(core);
        return {{{"core", io::to_json(core)}, {"matrix", io::to_json(a)}}, rows_text(a.to_rows())};
    });
}

inline Output inf_companion_cmd(Options const& o) {
    return with_core(o, [&](auto const& core) -> Output {
        auto [a, b] = rows_for(o, core.degree());
        auto w = infinite_companion(core, a, b);
        return {{{"core", io::to_json(core)}, {"window", io::to_json(w)}}, window_text(w)};
    });
}

inline Output different_cmd(Options const& o) {
    return with_core(o, [&](auto const& core) -> Output {
        json p = {{"core", io::to_json(core)}, {"vector", io::to_json(different_vector(core))}};
        if (o.rows) {
            auto [a, b] = rows_for(o, core.degree());
            auto w = infinite_different(core, a, b);
            p["window"] = io::to_json(w);
            return {p, window_text(w)};
        }
        auto d = different_matrix(core);
        p["matrix"] = io::to_json(d);
        return {p, rows_text(d.to_rows())};
    });
}

inline Output discriminant_cmd(Options const& o) {
    return with_core(o, [&](auto const& core) -> Output {
        auto det = determinant(different_matrix(core));
        auto disc = discriminant(core);
        return {{{"core", io::to_json(core)}, {"det_D", io::to_json(det)}, {"discriminant", io::to_json(disc)}},
                to_text(disc) + "\n"};
    });
}

// ---------------------------------------------------------------------------
// schur / characters
// ---------------------------------------------------------------------------

inline Partition shape_from(Options const& o) {
    if (!o.shape) throw usage_error("--shape is required");
    auto p = parse_partition(*o.shape);
    cap(p.size(), "|shape|");
    return p;
}

inline Output schur_cmd(Options const& o) {
    auto lambda = shape_from(o);
    auto core = poly_core(o);
    if (!core) core = generic_core(std::max(1u, lambda.size()));
    auto s = schur(lambda, *core);
    json p = io::to_json(s);
    p["core"] = io::to_json(*core);
    return {p, s.expanded.str() + "\n"};
}

inline Output char_cmd(Options const& o) {
    auto cv = character(shape_from(o));
    return {io::to_json(cv), list_text(std::vector<Rational>(cv.values.begin(), cv.values.end())) + "\n"};
}

inline std::string csv_quote(std::string const& s) { return "\"" + s + "\""; }

inline Output char_table_cmd(Options const& o) {
    unsigned n = required_n(o);
    auto t = character_table(n);
    std::string text;
    if (o.format == "csv") {
        text = "shape";
        for (auto const& a : t.classes) text += "," + csv_quote(a.str());
        text += "\n";
        for (std::size_t i = 0; i < t.shapes.size(); ++i) {
            text += csv_quote(t.shapes[i].str());
            for (auto v : t.values[i]) text += "," + std::to_string(v);
            text += "\n";
        }
    } else {
        std::size_t w = 5;
        for (auto const& p : t.shapes) w = std::max(w, p.str().size());
        auto pad = [](std::string s, std::size_t width) { return std::string(width - std::min(width, s.size()), ' ') + s; };
        std::vector<std::size_t> cw;
        for (std::size_t j = 0; j < t.classes.size(); ++j) {
            std::size_t c = t.classes[j].str().size();
            for (auto const& row : t.values) c = std::max(c, std::to_string(row[j]).size());
            cw.push_back(c);
        }
        text = pad("", w) + " |";
        for (std::size_t j = 0; j < t.classes.size(); ++j) text += " " + pad(t.classes[j].str(), cw[j]);
        text += "\n";
        for (std::size_t i = 0; i < t.shapes.size(); ++i) {
            text += pad(t.shapes[i].str(), w) + " |";
            for (std::size_t j = 0; j < t.classes.size(); ++j) text += " " + pad(std::to_string(t.values[i][j]), cw[j]);
            text += "\n";
        }
    }
    return {io::to_json(t), text};
}

// ---------------------------------------------------------------------------
// polya
// ---------------------------------------------------------------------------

inline PermGroup group_from(Options const& o) {
    if (o.group && o.perms) throw usage_error("give --group or --perms, not both");
    if (o.group) {
        auto g = PermGroup::named(*o.group);
        cap(g.degree(), "group degree");
        return g;
    }
    if (!o.perms) throw usage_error("--group or --perms is required");
    std::vector<std::vector<std::vector<unsigned>>> gens;
    unsigned deg = 0;
    for (auto const& item : split(*o.perms, ';')) {
        if (item.empty()) continue;
        gens.push_back(parse_cycles(item));
        deg = std::max(deg, max_point(gens.back()));
    }
    if (o.degree) {
        if (*o.degree < deg) throw domain_error("--degree is smaller than a point in --perms");
        deg = *o.degree;
    }
    if (deg == 0) throw domain_error("cannot infer the degree: give --degree");
    cap(deg, "group degree");
    std::vector<Permutation> ps;
    for (auto const& c : gens) ps.push_back(Permutation::from_cycles(deg, c));
    return PermGroup::generated_by(deg, ps, *o.perms);
}

inline json group_json(PermGroup const& g) { return {{"name", g.name()}, {"degree", g.degree()}, {"order", g.order()}}; }

inline Output polya_indicator_cmd(Options const& o) {
    auto g = group_from(o);
    auto c = cycle_indicator(g);
    json p = io::to_json(c);
    p["group"] = group_json(g);
    return {p, (o.in_t ? c.scaled_in_t().str() : c.poly.str()) + "\n"};
}

inline Output polya_count_cmd(Options const& o) {
    if (!o.colors) throw usage_error("--colors is required");
    auto g = group_from(o);
    auto n = count_colorings(g, *o.colors);
    return {{{"group", group_json(g)}, {"colors", *o.colors}, {"count", io::to_json(n)}}, n.get_str() + "\n"};
}

inline Output polya_pattern_cmd(Options const& o) {
    if (!o.multiset) throw usage_error("--multiset is required, e.g. x:2,y:2");
    auto g = group_from(o);
    std::vector<unsigned> counts;
    json ms = json::object();
    for (auto const& item : split(*o.multiset, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw usage_error("multiset entries look like name:count, got '" + item + "'");
        std::string name = trim(item.substr(0, colon));
        unsigned c;
        try {
            c = static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
        } catch (std::exception const&) {
            throw usage_error("bad count in '" + item + "'");
        }
        if (ms.contains(name)) throw usage_error("colour '" + name + "' listed twice");
        ms[name] = c;
        counts.push_back(c);
    }
    auto n = pattern_count(g, counts);
    return {{{"group", group_json(g)}, {"multiset", ms}, {"count", io::to_json(n)}}, n.get_str() + "\n"};
}

inline Output polya_inventory_cmd(Options const& o) {
    auto names = split(o.names ? *o.names : std::string("x,y"), ',');
    auto g = group_from(o);
    auto inv = pattern_inventory(g, names.size());
    auto s = inventory_str(inv, names);
    return {{{"group", group_json(g)}, {"names", names}, {"inventory", s}, {"inventory_x", inv.str()}}, s + "\n"};
}

// ---------------------------------------------------------------------------
// arith
// ---------------------------------------------------------------------------

inline ArithFn fn_from(Options const& o) {
    if (!o.fn) throw usage_error("--fn is required (one of zeta, mu, tau, sigma, phi, zeta_1, delta, catalan)");
    return builtin::lookup(*o.fn);
}

inline Representation rep_from(Options const& o, ArithFn const& f, unsigned n) {
    if (o.prime) return local_rep(f, *o.prime, n);
    return global_rep(f, n);
}

inline std::string core_description(InferredCore const& c, std::size_t m) {
    if (c.finite) return core_str(c.core);
    return core_str(c.core) + " (no finite core up to degree " + std::to_string(m) + "; generator-backed: " + c.core.label() + ")";
}

inline Output arith_rep_cmd(Options const& o) {
    auto f = fn_from(o);
    unsigned n = o.n ? required_n(o) : 10;
    auto r = rep_from(o, f, n);
    auto g = companion(r);
    json p = {{"function", f.name()}, {"representation", io::to_json(r)}, {"companion", io::to_json(g)},
              {"companion_g0_is_truncation", !r.finite()}};
    std::string text = "core: " + core_description(r.inferred, n) + "\n";
    text += "F: " + list_text(r.values) + "\n";
    text += "G: " + list_text(g) + "\n";
    return {p, text};
}

inline Output arith_core_cmd(Options const& o, std::istream& in) {
    std::vector<Rational> v;
    if (o.values) {
        v = parse_rationals(*o.values);
    } else {
        for (auto const& x : parse_stream(read_all(o.file ? *o.file : "-", in))) {
            if (!x.is_constant()) throw domain_error("value streams must be rational");
            v.push_back(x.constant_term());
        }
    }
    if (v.empty()) throw domain_error("no values to infer a core from");
    cap(static_cast<long>(v.size()) - 1, "n");
    auto c = infer_core(v);
    return {{{"core", io::to_json(c.core)}, {"finite", c.finite}, {"peeled", io::to_json(c.peeled)}},
            core_description(c, v.size() - 1) + "\n"};
}

inline Natural dirichlet_bound(Options const& o) {
    if (!o.N) throw usage_error("--N is required");
    if (*o.N == 0) throw usage_error("--N must be positive");
    if (*o.N > 100000) throw domain_error("N = " + std::to_string(*o.N) + " exceeds the limit 100000");
    return *o.N;
}

inline Output arith_dlog_cmd(Options const& o) {
    auto f = fn_from(o);
    Natural N = dirichlet_bound(o);
    auto l = rearick_log(f, N);
    json vals = json::array();
    std::string text;
    for (Natural n = 1; n <= N; ++n) {
        vals.push_back({{"n", n}, {"log", io::to_json(l[n])}});
        text += std::to_string(n) + ": " + l[n].str() + "\n";
    }
    return {{{"function", f.name()}, {"N", N}, {"values", vals}}, text};
}

inline Output arith_trig_cmd(Options const& o) {
    auto f = fn_from(o);
    unsigned n = o.n ? required_n(o) : 6;
    auto r = rep_from(o, f, n);
    auto t = trig(r);
    json p = io::to_json(t);
    p["function"] = f.name();
    p["prime"] = o.prime ? json(*o.prime) : json(nullptr);
    std::string text;
    for (unsigned i = 0; i <= n; ++i) text += std::to_string(i) + ": C = " + t.C[i].str() + ", S = " + t.S[i].str() + "\n";
    return {p, text};
}

inline Output arith_check_cmd(Options const& o) {
    auto f = fn_from(o);
    Natural N = dirichlet_bound(o);
    if (N > max_n()) throw domain_error("N = " + std::to_string(N) + " exceeds ISORING_MAX_N = " + std::to_string(max_n()));
    std::vector<Natural> primes{2, 3, 5, 7};
    if (o.primes) {
        primes.clear();
        for (auto const& s : split(*o.primes, ',')) primes.push_back(std::stoull(s));
    }
    auto rep = representability_check(f, N, primes);
    std::string text = "function: " + rep.function + "\n";
    text += std::string("multiplicative: ") + (rep.multiplicative ? "yes" : "no");
    if (rep.counterexample)
        text += " (f(" + std::to_string(rep.counterexample->first * rep.counterexample->second) + ") != f(" +
                std::to_string(rep.counterexample->first) + ") f(" + std::to_string(rep.counterexample->second) + "))";
    text += "\n";
    text += std::string("locally representable: ") + (rep.locally_representable ? "yes" : "no") + "\n";
    for (auto const& l : rep.local) text += "  p = " + std::to_string(l.p) + ": " + l.core + (l.finite ? "" : " (infinite)") + "\n";
    text += std::string("globally representable: ") + (rep.globally_representable ? "yes" : "no") + "\n";
    if (rep.globally_representable)
        text += "  global core: " + rep.global_core + (rep.global_core_finite ? "" : " (infinite)") + "\n";
    return {io::to_json(rep), text};
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

/// Run one command. `args` excludes the program name.
inline int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
    CLI::App app{"Exact computations in the isobaric ring of symmetric polynomials", "isoring"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--n", o.n, "Index or truncation bound");
    app.add_option("--k", o.k, "Degree of a generic core");
    app.add_option("--core", o.core, "Evaluated core, e.g. \"2,-1\"");

    std::vector<std::pair<CLI::App*, std::function<Output()>>> handlers;
    auto add = [&](CLI::App* parent, std::string const& name, std::string const& desc, std::function<Output()> h) {
        CLI::App* s = parent->add_subcommand(name, desc);
        handlers.emplace_back(s, std::move(h));
        return s;
    };

    auto* gfp_c = add(&app, "gfp", "Generalized Fibonacci polynomial F_n", [&] { return sequence_cmd(o, Weight::all_ones(), "GFP", 'F'); });
    auto* glp_c = add(&app, "glp", "Generalized Lucas polynomial G_n", [&] { return sequence_cmd(o, Weight::ramp(), "GLP", 'G'); });
    auto* wt_c = add(&app, "weighted", "Weighted isobaric polynomial P_n", [&] {
        auto w = weight_from(o);
        return sequence_cmd(o, w, w.name(), 'P');
    });
    for (auto* s : {gfp_c, glp_c, wt_c}) {
        s->add_flag("--upto", o.upto, "Print indices 0..n");
        s->add_flag("--closed", o.closed, "Use the multinomial closed form");
    }
    wt_c->add_option("--weights", o.weights, "Weight vector, e.g. \"0,1\"");
    wt_c->add_option("--scheme", o.scheme, "ones | ramp | shifted:Z | hook:R");

    auto seq_opts = [&](CLI::App* s) {
        s->add_option("--seq", o.seq, "Comma-separated values or polynomials");
        s->add_option("--input", o.input, "File with a sequence (JSON or one value per line); - for stdin");
    };
    auto* log_c = add(&app, "log", "LOG operator", [&] { return log_cmd(o, in); });
    seq_opts(log_c);
    log_c->add_flag("--kterm", o.kterm, "Use the k-term form for n >= k");
    seq_opts(add(&app, "exp", "EXP operator", [&] { return exp_cmd(o, in); }));
    auto* conv_c = add(&app, "conv", "Convolution product", [&] { return conv_cmd(o, in); });
    seq_opts(conv_c);
    conv_c->add_option("--with", o.with, "Second sequence");
    seq_opts(add(&app, "conv-inverse", "Convolution inverse", [&] { return conv_inverse_cmd(o, in); }));
    auto* pow_c = add(&app, "conv-power", "Convolution power", [&] { return conv_power_cmd(o, in); });
    seq_opts(pow_c);
    pow_c->add_option("--r", o.r, "Exponent r >= 1");

    add(&app, "companion", "Companion matrix", [&] { return companion_cmd(o); });
    add(&app, "inf-companion", "Rows of the infinite companion matrix", [&] { return inf_companion_cmd(o); })
        ->add_option("--rows", o.rows, "Row range a..b (use --rows=-2..1 for negative starts)");
    add(&app, "different", "Different matrix, or rows of the infinite different matrix", [&] { return different_cmd(o); })
        ->add_option("--rows", o.rows, "Row range a..b");
    add(&app, "discriminant", "Discriminant of the core polynomial", [&] { return discriminant_cmd(o); });

    add(&app, "schur", "Schur polynomial by Jacobi-Trudi", [&] { return schur_cmd(o); })->add_option("--shape", o.shape, "Partition, e.g. 3,2");
    add(&app, "char", "Irreducible character of S_n", [&] { return char_cmd(o); })->add_option("--shape", o.shape, "Partition, e.g. 3,1");
    add(&app, "char-table", "Character table of S_n", [&] { return char_table_cmd(o); });

    CLI::App* polya = app.add_subcommand("polya", "Cycle indicators and Polya counting");
    polya->require_subcommand(1);
    auto group_opts = [&](CLI::App* s) {
        s->add_option("--group", o.group, "cyclic:n | dihedral:n | symmetric:n | trivial:n");
        s->add_option("--perms", o.perms, "Generators in cycle notation, separated by ';'");
        s->add_option("--degree", o.degree, "Number of points for --perms");
    };
    auto* ind_c = add(polya, "indicator", "Cycle indicator", [&] { return polya_indicator_cmd(o); });
    group_opts(ind_c);
    ind_c->add_flag("--in-t", o.in_t, "Print |H| times the indicator in t-variables");
    auto* cnt_c = add(polya, "count", "Colourings up to symmetry", [&] { return polya_count_cmd(o); });
    group_opts(cnt_c);
    cnt_c->add_option("--colors", o.colors, "Number of colours");
    auto* pat_c = add(polya, "pattern", "Colourings with a given colour multiset", [&] { return polya_pattern_cmd(o); });
    group_opts(pat_c);
    pat_c->add_option("--multiset", o.multiset, "e.g. x:2,y:2");
    auto* inv_c = add(polya, "inventory", "Pattern inventory", [&] { return polya_inventory_cmd(o); });
    group_opts(inv_c);
    inv_c->add_option("--names", o.names, "Colour names, e.g. x,y");

    CLI::App* arith = app.add_subcommand("arith", "Arithmetic functions");
    arith->require_subcommand(1);
    auto fn_opt = [&](CLI::App* s) { s->add_option("--fn", o.fn, "zeta | mu | tau | sigma | phi | zeta_1 | delta | catalan"); };
    auto* rep_c = add(arith, "rep", "Local (--prime) or global representation", [&] { return arith_rep_cmd(o); });
    fn_opt(rep_c);
    rep_c->add_option("--prime", o.prime, "Prime for a local representation");
    auto* core_c = add(arith, "core", "Infer a core from values f(p^0), f(p^1), ...", [&] { return arith_core_cmd(o, in); });
    core_c->add_option("--values", o.values, "Comma-separated values");
    core_c->add_option("--file", o.file, "File with one value per line; - for stdin (the default)");
    auto* dlog_c = add(arith, "dlog", "Rearick logarithm on 1..N", [&] { return arith_dlog_cmd(o); });
    fn_opt(dlog_c);
    dlog_c->add_option("--N", o.N, "Upper bound");
    auto* trig_c = add(arith, "trig", "Hyperbolic cosine and sine", [&] { return arith_trig_cmd(o); });
    fn_opt(trig_c);
    trig_c->add_option("--prime", o.prime, "Prime for a local representation");
    auto* chk_c = add(arith, "check", "Representability report", [&] { return arith_check_cmd(o); });
    fn_opt(chk_c);
    chk_c->add_option("--N", o.N, "Upper bound");
    chk_c->add_option("--primes", o.primes, "Primes for local inference (default 2,3,5,7)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return 0;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (CLI::ParseError const& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::function<Output()> handler;
    std::string command;
    for (auto const& [sub, h] : handlers)
        if (sub->parsed()) {
            handler = h;
            command = sub->get_parent() == &app ? sub->get_name() : sub->get_parent()->get_name() + " " + sub->get_name();
        }
    if (!handler) {
        err << "usage error: no command given\n";
        return 2;
    }
    if (o.format == "csv" && command != "char-table") {
        err << "usage error: csv output is only available for char-table\n";
        return 2;
    }
    try {
        Output r = handler();
        if (o.format == "json") out << io::envelope(command, r.payload).dump(2) << "\n";
        else out << r.text;
        return 0;
    } catch (usage_error const& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace isoring::cli

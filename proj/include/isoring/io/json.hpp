#pragma once

/**
 * @file json.hpp
 * @brief JSON encoding of the library's values, and decoding back.
 *
 * Rationals and polynomials are strings in the text grammar ("-1/2",
 * "t1^2 + 2*t2"). Objects use nlohmann's default sorted keys, so the output is
 * byte-for-byte deterministic.
 */

#include "../arith.hpp"
#include "../matrices.hpp"
#include "../polya.hpp"
#include "../schur.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace isoring::io {

using nlohmann::json;

inline constexpr char const* format_version = "1";

inline json to_json(Rational const& r) { return r.str(); }
template <class Family>
json to_json(Poly<Family> const& p) { return p.str(); }

inline Rational rational_from_json(json const& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw domain_error("expected a rational, got " + j.dump());
}

template <class P>
P poly_from_json(json const& j) {
    if (j.is_string()) return P::parse(j.get<std::string>());
    return P(rational_from_json(j));
}

template <RingElement T>
T value_from_json(json const& j) {
    if constexpr (std::is_same_v<T, Rational>) return rational_from_json(j);
    else return poly_from_json<T>(j);
}

template <RingElement T>
json to_json(std::vector<T> const& v) {
    json a = json::array();
    for (auto const& x : v) a.push_back(to_json(x));
    return a;
}

template <RingElement T>
std::vector<T> vector_from_json(json const& j) {
    std::vector<T> v;
    for (auto const& x : j) v.push_back(value_from_json<T>(x));
    return v;
}

// ---------------------------------------------------------------------------
// Cores
// ---------------------------------------------------------------------------

template <RingElement T>
json to_json(Core<T> const& c, std::size_t preview = 8) {
    switch (c.kind()) {
    case Core<T>::Kind::generic: return {{"kind", "generic"}, {"k", c.degree()}};
    case Core<T>::Kind::values: return {{"kind", "values"}, {"t", to_json(c.values())}};
    case Core<T>::Kind::generator: return {{"kind", "generator"}, {"label", c.label()}, {"preview", to_json(leading_parameters(c, preview))}};
    }
    return nullptr;
}

/// Rebuild a finite core. Generator-backed cores cannot be rebuilt from their
/// preview and are rejected.
template <RingElement T>
Core<T> core_from_json(json const& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "generic") {
        if constexpr (std::is_same_v<T, TPoly>) return generic_core(j.at("k").get<std::size_t>());
        else throw domain_error("a generic core has no evaluated form");
    }
    if (kind == "values") return Core<T>::finite(vector_from_json<T>(j.at("t")));
    throw domain_error("core of kind '" + kind + "' cannot be rebuilt from JSON");
}

// ---------------------------------------------------------------------------
// Sequences: {core, kind, values: [{n, poly}]}
// ---------------------------------------------------------------------------

template <RingElement T>
json sequence_to_json(std::vector<T> const& values, json core, std::string const& kind, long first = 0) {
    json vals = json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
        vals.push_back({{"n", first + static_cast<long>(i)}, {"poly", to_json(values[i])}});
    return {{"core", std::move(core)}, {"kind", kind}, {"values", std::move(vals)}};
}

template <RingElement T>
struct SequenceRecord {
    json core;
    std::string kind;
    long first = 0;
    std::vector<T> values;
};

template <RingElement T>
SequenceRecord<T> sequence_from_json(json const& j) {
    SequenceRecord<T> r;
    r.core = j.value("core", json(nullptr));
    r.kind = j.value("kind", std::string("raw"));
    auto const& vals = j.at("values");
    long expect = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        long n = vals[i].at("n").get<long>();
        if (i == 0) r.first = expect = n;
        if (n != expect) throw domain_error("sequence indices must be consecutive");
        ++expect;
        r.values.push_back(value_from_json<T>(vals[i].at("poly")));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

template <RingElement T>
json rows_to_json(std::vector<std::vector<T>> const& rows) {
    json a = json::array();
    for (auto const& r : rows) a.push_back(to_json(r));
    return a;
}

template <RingElement T>
std::vector<std::vector<T>> rows_from_json(json const& j) {
    std::vector<std::vector<T>> rows;
    for (auto const& r : j) rows.push_back(vector_from_json<T>(r));
    return rows;
}

template <RingElement T>
json to_json(Matrix<T> const& m) { return rows_to_json(m.to_rows()); }

template <RingElement T>
Matrix<T> matrix_from_json(json const& j) { return Matrix<T>(rows_from_json<T>(j)); }

template <RingElement T>
json to_json(MatrixWindow<T> const& w) { return {{"first_row", w.first_row()}, {"rows", rows_to_json(w.rows())}}; }

template <RingElement T>
MatrixWindow<T> window_from_json(json const& j) {
    return MatrixWindow<T>(j.at("first_row").get<long>(), rows_from_json<T>(j.at("rows")));
}

// ---------------------------------------------------------------------------
// Schur and characters
// ---------------------------------------------------------------------------

inline json to_json(Partition const& p) { return p.str(); }

inline json partitions_to_json(std::vector<Partition> const& ps) {
    json a = json::array();
    for (auto const& p : ps) a.push_back(p.str());
    return a;
}

inline std::vector<Partition> partitions_from_json(json const& j) {
    std::vector<Partition> ps;
    for (auto const& x : j) ps.push_back(parse_partition(x.get<std::string>()));
    return ps;
}

inline json to_json(SchurResult const& s) {
    return {{"shape", s.lambda.str()},
            {"f_indices", s.f_indices},
            {"f_form", to_json(s.f_form)},
            {"expanded", to_json(s.expanded)},
            {"g_basis", to_json(s.g_basis)}};
}

inline SchurResult schur_from_json(json const& j) {
    SchurResult s;
    s.lambda = parse_partition(j.at("shape").get<std::string>());
    s.f_indices = j.at("f_indices").get<std::vector<std::vector<long>>>();
    s.f_form = FPoly::parse(j.at("f_form").get<std::string>());
    s.expanded = TPoly::parse(j.at("expanded").get<std::string>());
    s.g_basis = GPoly::parse(j.at("g_basis").get<std::string>());
    return s;
}

inline json to_json(CharacterVector const& c) {
    return {{"shape", c.lambda.str()}, {"classes", partitions_to_json(c.classes)}, {"values", c.values}};
}

inline CharacterVector character_from_json(json const& j) {
    return {parse_partition(j.at("shape").get<std::string>()), partitions_from_json(j.at("classes")),
            j.at("values").get<std::vector<std::int64_t>>()};
}

inline json to_json(CharacterTable const& t) {
    return {{"n", t.n}, {"shapes", partitions_to_json(t.shapes)}, {"classes", partitions_to_json(t.classes)}, {"values", t.values}};
}

inline CharacterTable character_table_from_json(json const& j) {
    return {j.at("n").get<unsigned>(), partitions_from_json(j.at("shapes")), partitions_from_json(j.at("classes")),
            j.at("values").get<std::vector<std::vector<std::int64_t>>>()};
}

// ---------------------------------------------------------------------------
// Polya
// ---------------------------------------------------------------------------

inline json to_json(CycleIndicator const& c) {
    return {{"order", c.order}, {"indicator", to_json(c.poly)}, {"scaled_t", to_json(c.scaled_in_t())}};
}

inline CycleIndicator cycle_indicator_from_json(json const& j) {
    return {j.at("order").get<std::size_t>(), GPoly::parse(j.at("indicator").get<std::string>())};
}

/// Integers as JSON numbers when they fit, strings otherwise.
inline json to_json(Integer const& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline Integer integer_from_json(json const& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    return Integer(j.get<std::string>());
}

// ---------------------------------------------------------------------------
// Arithmetic functions
// ---------------------------------------------------------------------------

inline json to_json(FormalLog const& l) {
    json o = json::object();
    for (auto const& [p, c] : l.components()) o[std::to_string(p)] = c.str();
    return o;
}

inline FormalLog formal_log_from_json(json const& j) {
    FormalLog l;
    for (auto const& [k, v] : j.items()) l = l + FormalLog::log_prime(std::stoull(k), rational_from_json(v));
    return l;
}

inline json to_json(Representation const& r) {
    return {{"prime", r.prime ? json(*r.prime) : json(nullptr)},
            {"core", to_json(r.core())},
            {"finite", r.finite()},
            {"peeled", to_json(r.inferred.peeled)},
            {"values", to_json(r.values)}};
}

template <RingElement T>
json to_json(TrigPair<T> const& t) { return {{"C", to_json(t.C)}, {"S", to_json(t.S)}}; }

template <RingElement T>
TrigPair<T> trig_from_json(json const& j) { return {vector_from_json<T>(j.at("C")), vector_from_json<T>(j.at("S"))}; }

inline json to_json(RepresentabilityReport const& r) {
    json local = json::array();
    for (auto const& l : r.local) local.push_back({{"prime", l.p}, {"finite", l.finite}, {"core", l.core}});
    return {{"function", r.function},
            {"N", r.N},
            {"multiplicative", r.multiplicative},
            {"counterexample", r.counterexample ? json({r.counterexample->first, r.counterexample->second}) : json(nullptr)},
            {"local", local},
            {"locally_representable", r.locally_representable},
            {"globally_representable", r.globally_representable},
            {"global_core_finite", r.global_core_finite},
            {"global_core", r.global_core}};
}

inline json envelope(std::string const& command, json result) {
    return {{"command", command}, {"result", std::move(result)}, {"version", format_version}};
}

} // namespace isoring::io

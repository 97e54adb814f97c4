#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with exact rational coefficients.
 *
 * Poly<Family> keys monomials by ExpVec. The Family tag fixes the variable
 * symbol (t, F, G, x) so polynomials over different symbol families cannot
 * be mixed by accident: TPoly + GPoly does not compile.
 *
 * Canonical text grammar (printed and parsed):
 *
 *   t1^4 + 3*t1^2*t2 + t2^2 + 2*t1*t3 + t4
 *   1/2*G1^2 - 1/3*G3
 *
 * Terms are sorted by the reverse-lexicographic ExpVec order, unit
 * coefficients and unit exponents are elided, the zero polynomial is "0".
 */

#include "partition.hpp"
#include "rational.hpp"

#include <cctype>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isoring {

struct TFamily { static constexpr std::string_view symbol = "t"; };
struct FFamily { static constexpr std::string_view symbol = "F"; };
struct GFamily { static constexpr std::string_view symbol = "G"; };
struct XFamily { static constexpr std::string_view symbol = "x"; };

/// Result of an isobaric-degree query.
struct IsobaricDegree {
    enum class Kind { any, homogeneous, mixed };
    Kind kind = Kind::any;
    unsigned value = 0;

    static IsobaricDegree any() { return {Kind::any, 0}; }
    static IsobaricDegree of(unsigned n) { return {Kind::homogeneous, n}; }
    static IsobaricDegree mixed() { return {Kind::mixed, 0}; }

    bool homogeneous() const { return kind != Kind::mixed; }
    bool operator==(IsobaricDegree const&) const = default;
};

template <class Family>
class Poly {
public:
    using family = Family;
    using term_map = std::map<ExpVec, Rational>;

    Poly() = default;
    Poly(Rational const& c) { add_term(ExpVec{}, c); }
    Poly(int c) : Poly(Rational(c)) {}

    /// The variable Family::symbol_j (1-based).
    static Poly var(std::size_t j) { return monomial(ExpVec::variable(j), Rational(1)); }
    static Poly monomial(ExpVec const& e, Rational const& c) {
        Poly p;
        p.add_term(e, c);
        return p;
    }

    term_map const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_term() const { return coefficient(ExpVec{}); }
    Rational coefficient(ExpVec const& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Highest variable index that occurs.
    std::size_t max_variable() const {
        std::size_t m = 0;
        for (auto const& [e, c] : terms_) m = std::max(m, e.size());
        return m;
    }

    /// n if every monomial has isobaric weight n; `any` for the zero polynomial.
    IsobaricDegree isobaric_degree() const {
        if (terms_.empty()) return IsobaricDegree::any();
        unsigned w = terms_.begin()->first.weight();
        for (auto const& [e, c] : terms_)
            if (e.weight() != w) return IsobaricDegree::mixed();
        return IsobaricDegree::of(w);
    }

    Poly& operator+=(Poly const& o) {
        for (auto const& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(Poly const& o) {
        for (auto const& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(Rational const& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator+(Poly a, Poly const& b) { return a += b; }
    friend Poly operator-(Poly a, Poly const& b) { return a -= b; }
    friend Poly operator*(Poly a, Rational const& s) { return a *= s; }
    friend Poly operator*(Rational const& s, Poly a) { return a *= s; }
    friend Poly operator*(Poly const& a, Poly const& b) {
        Poly r;
        for (auto const& [ea, ca] : a.terms_)
            for (auto const& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Poly& operator*=(Poly const& o) { return *this = *this * o; }

    bool operator==(Poly const&) const = default;

    Poly pow(unsigned e) const {
        Poly r(1), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    /// Formal partial derivative with respect to variable j (1-based).
    Poly derivative(std::size_t j) const {
        Poly r;
        for (auto const& [e, c] : terms_) {
            unsigned a = e[j];
            if (a == 0) continue;
            std::vector<unsigned> d = e.exponents();
            d[j - 1] -= 1;
            r.add_term(ExpVec(std::move(d)), c * Rational(a));
        }
        return r;
    }

    std::string str() const { return str([](std::size_t j) { return std::string(Family::symbol) + std::to_string(j); }); }

    /// Render with caller-supplied variable names (used for colour inventories).
    std::string str(std::function<std::string(std::size_t)> const& name) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto const& [e, c] : terms_) {
            bool neg = c.sign() < 0;
            Rational mag = neg ? -c : c;
            if (first) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t j = 1; j <= e.size(); ++j) {
                if (e[j] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += name(j);
                if (e[j] > 1) mono += '^' + std::to_string(e[j]);
            }
            if (mono.empty()) out += mag.str();
            else if (mag == Rational(1)) out += mono;
            else out += mag.str() + '*' + mono;
        }
        return out;
    }

    static Poly parse(std::string_view text);

private:
    void add_term(ExpVec const& e, Rational const& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    term_map terms_;
};

using TPoly = Poly<TFamily>;
using FPoly = Poly<FFamily>;
using GPoly = Poly<GFamily>;
using XPoly = Poly<XFamily>;

template <class Family>
Poly<Family> Poly<Family>::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            s += '-';
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s += text[i];
        }
    }
    auto fail = [&](std::string const& why) -> domain_error {
        return domain_error("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    if (s.empty()) throw fail("empty input");

    std::size_t pos = 0;
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw fail("expected a number at offset " + std::to_string(start));
        return s.substr(start, pos - start);
    };
    std::string const sym(Family::symbol);

    Poly result;
    bool first = true;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;
        Rational coeff(1);
        std::vector<unsigned> exps;
        bool any_factor = false;
        while (true) {
            if (pos >= s.size()) throw fail("dangling operator");
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::string num = digits(), den = "1";
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    den = digits();
                }
                coeff *= Rational(Integer(num), Integer(den));
            } else if (s.compare(pos, sym.size(), sym) == 0) {
                pos += sym.size();
                unsigned long j = std::stoul(digits());
                if (j == 0) throw fail("variable indices start at 1");
                unsigned long e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = std::stoul(digits());
                }
                if (exps.size() < j) exps.resize(j, 0);
                exps[j - 1] += static_cast<unsigned>(e);
            } else {
                throw fail("unexpected symbol at offset " + std::to_string(pos));
            }
            any_factor = true;
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any_factor) throw fail("empty term");
        result.add_term(ExpVec(std::move(exps)), neg ? -coeff : coeff);
    }
    return result;
}

/// Substitute variable j <- value(j) and expand in the target ring T.
template <class T, class Family>
T substitute(Poly<Family> const& p, std::function<T(std::size_t)> const& value) {
    T result(Rational(0));
    std::map<std::size_t, std::vector<T>> powers;
    auto power = [&](std::size_t j, unsigned e) -> T const& {
        auto& cache = powers[j];
        if (cache.empty()) {
            cache.push_back(T(Rational(1)));
            cache.push_back(value(j));
        }
        while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };
    for (auto const& [e, c] : p.terms()) {
        T term(c);
        for (std::size_t j = 1; j <= e.size(); ++j)
            if (e[j]) term = term * power(j, e[j]);
        result = result + term;
    }
    return result;
}

/// Ring element types the sequence machinery is generic over.
template <class T>
concept RingElement = requires(T a, T b, Rational r) {
    T(r);
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a * r } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Multiplicative inverse of a unit of the ring, if it is one. In a polynomial
/// ring the units are the nonzero constants.
inline std::optional<Rational> unit_inverse(Rational const& x) {
    if (x.is_zero()) return std::nullopt;
    return x.inverse();
}
template <class Family>
std::optional<Poly<Family>> unit_inverse(Poly<Family> const& x) {
    if (x.is_zero() || !x.is_constant()) return std::nullopt;
    return Poly<Family>(x.constant_term().inverse());
}

inline std::string to_text(Rational const& r) { return r.str(); }
template <class Family>
std::string to_text(Poly<Family> const& p) { return p.str(); }

} // namespace isoring

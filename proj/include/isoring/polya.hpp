#pragma once

/**
 * @file polya.hpp
 * @brief Cycle indicators of permutation groups and Polya counting.
 *
 *   C(H) = (1/|H|) sum_{sigma in H} G^{cycle type of sigma}
 *
 * Colourings with m colours up to H: set every G_j = m. Pattern inventory:
 * set G_j = x_1^j + ... + x_r^j and read off coefficients.
 */

#include "partition.hpp"
#include "poly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace isoring {

/// A permutation of {0..n-1}; image[i] is where i goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<unsigned> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (auto v : image_) {
            if (v >= image_.size() || seen[v]) throw domain_error("not a bijection on {1.." + std::to_string(image_.size()) + "}");
            seen[v] = true;
        }
    }

    static Permutation identity(unsigned n) {
        std::vector<unsigned> v(n);
        std::iota(v.begin(), v.end(), 0u);
        return Permutation(std::move(v));
    }

    /// Build from 1-based disjoint or overlapping cycles, applied right to left.
    static Permutation from_cycles(unsigned n, std::vector<std::vector<unsigned>> const& cycles) {
        Permutation p = identity(n);
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
            auto const& c = *it;
            std::set<unsigned> distinct(c.begin(), c.end());
            if (distinct.size() != c.size()) throw domain_error("repeated point inside a cycle");
            std::vector<unsigned> img(n);
            std::iota(img.begin(), img.end(), 0u);
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0 || c[i] > n) throw domain_error("cycle point " + std::to_string(c[i]) + " outside 1.." + std::to_string(n));
                img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
            }
            p = p * Permutation(std::move(img));
        }
        return p;
    }

    unsigned degree() const { return static_cast<unsigned>(image_.size()); }
    unsigned operator()(unsigned i) const { return image_.at(i); }
    std::vector<unsigned> const& image() const { return image_; }

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(Permutation const& a, Permutation const& b) {
        if (a.degree() != b.degree()) throw domain_error("composing permutations of different degrees");
        std::vector<unsigned> r(a.degree());
        for (unsigned i = 0; i < a.degree(); ++i) r[i] = a(b(i));
        return Permutation(std::move(r));
    }

    Permutation inverse() const {
        std::vector<unsigned> r(degree());
        for (unsigned i = 0; i < degree(); ++i) r[image_[i]] = i;
        return Permutation(std::move(r));
    }

    auto operator<=>(Permutation const&) const = default;

    /// Cycle notation with 1-based points, fixed points omitted; "()" for the identity.
    std::string str() const {
        std::string s;
        std::vector<bool> seen(degree(), false);
        for (unsigned i = 0; i < degree(); ++i) {
            if (seen[i] || image_[i] == i) continue;
            s += "(";
            for (unsigned j = i; !seen[j]; j = image_[j]) {
                if (j != i) s += " ";
                s += std::to_string(j + 1);
                seen[j] = true;
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

private:
    std::vector<unsigned> image_;
};

/// Cycle lengths of sigma as a partition of its degree.
inline Partition cycle_type(Permutation const& sigma) {
    std::vector<unsigned> lengths;
    std::vector<bool> seen(sigma.degree(), false);
    for (unsigned i = 0; i < sigma.degree(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (unsigned j = i; !seen[j]; j = sigma(j)) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

/// Cycle type of an arbitrary map given as 0-based images; rejects non-bijections.
inline Partition cycle_type(std::vector<unsigned> const& image) { return cycle_type(Permutation(image)); }

/// Parse "(1 2 3 4)(5 6)" into cycles. Commas are accepted as separators.
inline std::vector<std::vector<unsigned>> parse_cycles(std::string const& text) {
    std::vector<std::vector<unsigned>> cycles;
    std::vector<unsigned>* cur = nullptr;
    std::string num;
    auto flush = [&] {
        if (num.empty()) return;
        if (!cur) throw domain_error("point outside parentheses in '" + text + "'");
        cur->push_back(static_cast<unsigned>(std::stoul(num)));
        num.clear();
    };
    for (char ch : text) {
        if (ch == '(') {
            if (cur) throw domain_error("nested '(' in '" + text + "'");
            cycles.emplace_back();
            cur = &cycles.back();
        } else if (ch == ')') {
            flush();
            if (!cur) throw domain_error("unbalanced ')' in '" + text + "'");
            cur = nullptr;
        } else if (ch >= '0' && ch <= '9') {
            num += ch;
        } else if (ch == ' ' || ch == ',' || ch == '\t') {
            flush();
        } else {
            throw domain_error(std::string("unexpected character '") + ch + "' in cycle notation");
        }
    }
    if (cur) throw domain_error("unterminated cycle in '" + text + "'");
    return cycles;
}

/// Largest point mentioned in a list of cycles.
inline unsigned max_point(std::vector<std::vector<unsigned>> const& cycles) {
    unsigned m = 0;
    for (auto const& c : cycles)
        for (auto v : c) m = std::max(m, v);
    return m;
}

class PermGroup {
public:
    /// Explicit element list; rejected unless it contains the identity and is
    /// closed under composition.
    PermGroup(unsigned degree, std::vector<Permutation> elements, std::string name = "explicit")
        : degree_(degree), name_(std::move(name)) {
        std::set<Permutation> s;
        for (auto& p : elements) {
            if (p.degree() != degree) throw domain_error("element " + p.str() + " has the wrong degree");
            s.insert(std::move(p));
        }
        if (!s.count(Permutation::identity(degree))) throw domain_error("group must contain the identity");
        for (auto const& a : s)
            for (auto const& b : s)
                if (!s.count(a * b)) throw domain_error("not closed under composition: " + a.str() + " * " + b.str());
        elements_.assign(s.begin(), s.end());
    }

    /// The group generated by the given permutations.
    static PermGroup generated_by(unsigned degree, std::vector<Permutation> const& gens, std::string name = "generated") {
        std::set<Permutation> s{Permutation::identity(degree)};
        std::vector<Permutation> frontier{Permutation::identity(degree)};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (auto const& x : frontier)
                for (auto const& g : gens) {
                    if (g.degree() != degree) throw domain_error("generator " + g.str() + " has the wrong degree");
                    Permutation y = g * x;
                    if (s.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return PermGroup(Closed{}, degree, std::vector<Permutation>(s.begin(), s.end()), std::move(name));
    }

    static PermGroup trivial(unsigned n) { return PermGroup(Closed{}, n, {Permutation::identity(n)}, "trivial:" + std::to_string(n)); }

    /// Rotations of an n-cycle.
    static PermGroup cyclic(unsigned n) {
        check_degree(n);
        std::vector<Permutation> el;
        for (unsigned r = 0; r < n; ++r) el.push_back(rotation(n, r));
        return PermGroup(Closed{}, n, std::move(el), "cyclic:" + std::to_string(n));
    }

    /// Symmetries of a regular n-gon acting on its vertices (order 2n for n >= 3).
    static PermGroup dihedral(unsigned n) {
        check_degree(n);
        std::vector<Permutation> el;
        for (unsigned r = 0; r < n; ++r) {
            el.push_back(rotation(n, r));
            std::vector<unsigned> img(n);
            for (unsigned i = 0; i < n; ++i) img[i] = (r + n - i) % n;
            el.push_back(Permutation(std::move(img)));
        }
        return PermGroup(Closed{}, n, std::move(el), "dihedral:" + std::to_string(n));
    }

    static PermGroup symmetric(unsigned n) {
        check_degree(n);
        if (n > 8) throw domain_error("symmetric group enumeration limited to n <= 8");
        std::vector<unsigned> v(n);
        std::iota(v.begin(), v.end(), 0u);
        std::vector<Permutation> el;
        do el.push_back(Permutation(v));
        while (std::next_permutation(v.begin(), v.end()));
        return PermGroup(Closed{}, n, std::move(el), "symmetric:" + std::to_string(n));
    }

    /// "cyclic:4", "dihedral:4", "symmetric:3", "trivial:5".
    static PermGroup named(std::string const& spec) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) throw domain_error("group must be written family:n, got '" + spec + "'");
        std::string fam = spec.substr(0, colon);
        unsigned n;
        try {
            n = static_cast<unsigned>(std::stoul(spec.substr(colon + 1)));
        } catch (std::exception const&) {
            throw domain_error("bad group size in '" + spec + "'");
        }
        if (fam == "cyclic") return cyclic(n);
        if (fam == "dihedral") return dihedral(n);
        if (fam == "symmetric") return symmetric(n);
        if (fam == "trivial") return trivial(n);
        throw domain_error("unknown group family '" + fam + "'");
    }

    unsigned degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    std::vector<Permutation> const& elements() const { return elements_; }
    std::string const& name() const { return name_; }

private:
    struct Closed {};
    // for element lists that are groups by construction
    PermGroup(Closed, unsigned degree, std::vector<Permutation> elements, std::string name)
        : degree_(degree), elements_(std::move(elements)), name_(std::move(name)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    static void check_degree(unsigned n) {
        if (n == 0) throw domain_error("group degree must be at least 1");
    }
    static Permutation rotation(unsigned n, unsigned r) {
        std::vector<unsigned> img(n);
        for (unsigned i = 0; i < n; ++i) img[i] = (i + r) % n;
        return Permutation(std::move(img));
    }

    unsigned degree_;
    std::vector<Permutation> elements_;
    std::string name_;
};

struct CycleIndicator {
    std::size_t order;
    GPoly poly;  ///< (1/|H|) sum of G^{cycle type}

    /// |H| C(H) with G_j written as t_j, the form used for counting by hand.
    TPoly scaled_in_t() const {
        TPoly p;
        for (auto const& [e, c] : poly.terms()) p += TPoly::monomial(e, c * Rational(static_cast<unsigned long>(order)));
        return p;
    }
};

inline CycleIndicator cycle_indicator(PermGroup const& h) {
    std::map<Partition, std::size_t> classes;
    for (auto const& s : h.elements()) ++classes[cycle_type(s)];
    GPoly p;
    Rational inv(1, static_cast<unsigned long>(h.order()));
    for (auto const& [alpha, count] : classes)
        p += GPoly::monomial(alpha.multiplicities(), Rational(static_cast<unsigned long>(count)) * inv);
    return {h.order(), p};
}

/// Distinct colourings with m colours up to the action of H.
inline Integer count_colorings(CycleIndicator const& c, unsigned m) {
    Rational v = substitute<Rational>(c.poly, [m](std::size_t) { return Rational(m); });
    if (!v.is_integer()) throw domain_error("internal consistency: non-integer orbit count " + v.str());
    return v.numerator();
}
inline Integer count_colorings(PermGroup const& h, unsigned m) { return count_colorings(cycle_indicator(h), m); }

/// The pattern inventory in colour variables x_1..x_r.
inline XPoly pattern_inventory(CycleIndicator const& c, std::size_t colors) {
    if (colors == 0) throw domain_error("pattern inventory needs at least one colour");
    return substitute<XPoly>(c.poly, [colors](std::size_t j) {
        XPoly s;
        for (std::size_t i = 1; i <= colors; ++i) s += XPoly::monomial(ExpVec::variable(i, static_cast<unsigned>(j)), 1);
        return s;
    });
}
inline XPoly pattern_inventory(PermGroup const& h, std::size_t colors) { return pattern_inventory(cycle_indicator(h), colors); }

/// Number of inequivalent colourings using colour i exactly counts[i-1] times.
inline Integer pattern_count(PermGroup const& h, std::vector<unsigned> const& counts) {
    unsigned total = std::accumulate(counts.begin(), counts.end(), 0u);
    if (total != h.degree())
        throw domain_error("colour multiset has size " + std::to_string(total) + " but the group acts on " +
                           std::to_string(h.degree()) + " points");
    Rational c = pattern_inventory(h, counts.size()).coefficient(ExpVec(counts));
    if (!c.is_integer()) throw domain_error("internal consistency: non-integer pattern count " + c.str());
    return c.numerator();
}

/// Render an inventory with named colours ("x", "y", ...).
inline std::string inventory_str(XPoly const& p, std::vector<std::string> const& names) {
    return p.str([&](std::size_t j) { return j <= names.size() ? names[j - 1] : "x" + std::to_string(j); });
}

} // namespace isoring

#pragma once

/**
 * @file partition.hpp
 * @brief Exponent vectors, integer partitions and the constants indexed by them.
 *
 * A partition of n with largest part at most k has two faces:
 *   parts form         (3,1,1)        weakly decreasing positive parts
 *   multiplicity form  (2,0,1)        alpha_j = number of parts equal to j
 *
 * The multiplicity form doubles as the exponent vector of the monomial
 * t_1^{alpha_1} ... t_k^{alpha_k}, whose isobaric weight is sum j*alpha_j = n.
 */

#include "rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace isoring {

/// Exponent vector (alpha_1, ..., alpha_k), stored without trailing zeros.
class ExpVec {
public:
    ExpVec() = default;
    ExpVec(std::initializer_list<unsigned> e) : e_(e) { normalize(); }
    explicit ExpVec(std::vector<unsigned> e) : e_(std::move(e)) { normalize(); }

    /// Single variable x_j (1-based) raised to `power`.
    static ExpVec variable(std::size_t j, unsigned power = 1) {
        std::vector<unsigned> e(j, 0);
        e[j - 1] = power;
        return ExpVec(std::move(e));
    }

    /// Exponent of variable j (1-based); zero beyond the stored length.
    unsigned operator[](std::size_t j) const { return j >= 1 && j <= e_.size() ? e_[j - 1] : 0; }
    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    std::vector<unsigned> const& exponents() const { return e_; }

    /// Isobaric weight sum_j j*alpha_j.
    unsigned weight() const {
        unsigned w = 0;
        for (std::size_t j = 0; j < e_.size(); ++j) w += static_cast<unsigned>(j + 1) * e_[j];
        return w;
    }
    /// Total degree |alpha| = sum_j alpha_j.
    unsigned total() const {
        unsigned s = 0;
        for (auto a : e_) s += a;
        return s;
    }

    friend ExpVec operator+(ExpVec const& a, ExpVec const& b) {
        std::vector<unsigned> r(std::max(a.size(), b.size()), 0);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = a[j + 1] + b[j + 1];
        return ExpVec(std::move(r));
    }

    bool operator==(ExpVec const&) const = default;

    /// Reverse-lexicographic order: compare from the highest-index variable
    /// down, smaller exponent first. t1^4 < t1^2*t2 < t2^2 < t1*t3 < t4.
    friend std::strong_ordering operator<=>(ExpVec const& a, ExpVec const& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        for (std::size_t j = a.size(); j-- > 0;)
            if (a.e_[j] != b.e_[j]) return a.e_[j] <=> b.e_[j];
        return std::strong_ordering::equal;
    }

private:
    void normalize() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }

    std::vector<unsigned> e_;
};

/// Integer partition in parts form.
class Partition {
public:
    Partition() = default;
    /// Parts are sorted into weakly decreasing order; zero parts are dropped.
    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        std::erase(parts_, 0u);
        std::sort(parts_.begin(), parts_.end(), std::greater<>{});
    }

    static Partition from_multiplicities(ExpVec const& alpha) {
        std::vector<unsigned> parts;
        for (std::size_t j = alpha.size(); j >= 1; --j)
            parts.insert(parts.end(), alpha[j], static_cast<unsigned>(j));
        return Partition(std::move(parts));
    }

    ExpVec multiplicities() const {
        std::vector<unsigned> m(parts_.empty() ? 0 : parts_.front(), 0);
        for (auto p : parts_) ++m[p - 1];
        return ExpVec(std::move(m));
    }

    std::vector<unsigned> const& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }
    unsigned size() const {
        unsigned s = 0;
        for (auto p : parts_) s += p;
        return s;
    }

    /// "3,1,1"; the empty partition renders as "".
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    bool operator==(Partition const&) const = default;
    /// Lexicographic on the decreasing parts list; agrees with the
    /// reverse-lexicographic order of the multiplicity vectors.
    auto operator<=>(Partition const& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<unsigned> parts_;
};

/// Parse "3,2,1" (spaces allowed). Throws domain_error on malformed input.
inline Partition parse_partition(std::string const& text) {
    std::vector<unsigned> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw domain_error("malformed partition '" + text + "'");
        for (char c : cur)
            if (c < '0' || c > '9') throw domain_error("malformed partition '" + text + "'");
        unsigned long v = std::stoul(cur);
        if (v == 0) throw domain_error("partition parts must be positive");
        parts.push_back(static_cast<unsigned>(v));
        cur.clear();
    };
    for (char c : text) {
        if (c == ' ') continue;
        if (c == ',') flush();
        else cur += c;
    }
    if (!text.empty()) flush();
    return Partition(std::move(parts));
}

/// All partitions of n with every part at most max_part, in ascending order
/// (e.g. n = 4: 1111, 211, 22, 31, 4).
inline std::vector<Partition> partitions(unsigned n, unsigned max_part) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    std::reverse(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> partitions(unsigned n) { return partitions(n, n); }

/// z(alpha) = prod_i i^{alpha_i} * alpha_i!; n!/z(alpha) is the size of the
/// conjugacy class of cycle type alpha in S_n.
inline Integer z_alpha(Partition const& alpha) {
    ExpVec m = alpha.multiplicities();
    Integer z = 1;
    for (std::size_t i = 1; i <= m.size(); ++i) {
        Integer ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i), m[i]);
        z *= ip * factorial(m[i]);
    }
    return z;
}

/// Multinomial |alpha|! / (alpha_1! ... alpha_k!).
inline Integer multinomial(ExpVec const& alpha) {
    Integer r = factorial(alpha.total());
    for (auto a : alpha.exponents()) r /= factorial(a);
    return r;
}

} // namespace isoring

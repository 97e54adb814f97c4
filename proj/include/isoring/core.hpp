#pragma once

/**
 * @file core.hpp
 * @brief Core polynomials X^k - t_1 X^{k-1} - ... - t_k, written [t_1,...,t_k].
 *
 * A Core<T> carries the recursion parameters t_j as ring elements of T:
 *   - generic_core(k)          t_j = the indeterminate t_j          (T = TPoly)
 *   - Core<Rational>::finite   explicit values such as [2,-1]
 *   - Core<T>::infinite        a generator producing t_j on demand  (phi, Catalan)
 *
 * For finite cores t_j = 0 beyond the degree.
 */

#include "poly.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace isoring {

template <RingElement T>
class Core {
public:
    enum class Kind { generic, values, generator };
    using generator_fn = std::function<T(std::size_t)>;

    /// Finite core from explicit parameters t_1..t_k (k = t.size(), may be 0).
    static Core finite(std::vector<T> t) {
        Core c;
        c.kind_ = Kind::values;
        c.t_ = std::move(t);
        return c;
    }

    /// Infinite core; `t(j)` must be defined for every j >= 1.
    static Core infinite(generator_fn t, std::string label) {
        Core c;
        c.kind_ = Kind::generator;
        c.gen_ = std::make_shared<generator_fn const>(std::move(t));
        c.label_ = std::move(label);
        return c;
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ != Kind::generator; }
    bool is_generic() const { return kind_ == Kind::generic; }
    std::string const& label() const { return label_; }

    /// Degree k of a finite core.
    std::size_t degree() const {
        if (!is_finite()) throw domain_error("infinite core has no finite degree");
        return t_.size();
    }

    /// t_j for j >= 1.
    T t(std::size_t j) const {
        if (j == 0) throw domain_error("core parameters are indexed from 1");
        if (gen_) return (*gen_)(j);
        return j <= t_.size() ? t_[j - 1] : T(Rational(0));
    }

    /// t_1..t_n (finite cores: padded with zeros beyond the degree).
    std::vector<T> parameters(std::size_t n) const {
        std::vector<T> out;
        out.reserve(n);
        for (std::size_t j = 1; j <= n; ++j) out.push_back(t(j));
        return out;
    }

    /// Stored parameters of a finite core.
    std::vector<T> const& values() const { return t_; }

    /// The companion matrix is invertible iff t_k != 0.
    bool invertible() const { return is_finite() && !t_.empty() && !t_.back().is_zero(); }

    template <RingElement U>
    friend Core<U> make_generic_core(std::size_t k, std::size_t offset);

private:
    Kind kind_ = Kind::values;
    std::vector<T> t_;
    std::shared_ptr<generator_fn const> gen_;
    std::string label_;
};

template <RingElement U>
Core<U> make_generic_core(std::size_t k, std::size_t offset) {
    Core<U> c;
    c.kind_ = offset == 0 ? Core<U>::Kind::generic : Core<U>::Kind::values;
    for (std::size_t j = 1; j <= k; ++j) c.t_.push_back(U::var(offset + j));
    return c;
}

/// Generic core of degree k in the indeterminates t_1..t_k. With a nonzero
/// offset the parameters are t_{offset+1}..t_{offset+k}, which gives a second
/// core algebraically independent of the first.
inline Core<TPoly> generic_core(std::size_t k, std::size_t offset = 0) {
    if (k == 0) throw domain_error("generic core needs degree k >= 1");
    return make_generic_core<TPoly>(k, offset);
}

inline Core<Rational> evaluated_core(std::vector<Rational> t) { return Core<Rational>::finite(std::move(t)); }

/// Evaluate a generic core at explicit values: t_j <- values[j-1].
inline Core<Rational> evaluate_core(Core<TPoly> const& generic, std::vector<Rational> const& values) {
    std::vector<Rational> t;
    for (auto const& tj : generic.values())
        t.push_back(substitute<Rational>(tj, [&](std::size_t j) {
            return j <= values.size() ? values[j - 1] : Rational(0);
        }));
    return evaluated_core(std::move(t));
}

/// Up to n leading parameters; an infinite core whose generator runs out of
/// data yields fewer.
template <RingElement T>
std::vector<T> leading_parameters(Core<T> const& c, std::size_t n) {
    if (c.is_finite()) return c.parameters(std::min(n, c.degree()));
    std::vector<T> out;
    try {
        for (std::size_t j = 1; j <= n; ++j) out.push_back(c.t(j));
    } catch (domain_error const&) {
    }
    return out;
}

/// "[2, -1]" for finite cores; a few leading terms then "..." otherwise.
template <RingElement T>
std::string core_str(Core<T> const& c, std::size_t preview = 5) {
    std::string s = "[";
    auto t = c.is_finite() ? c.values() : leading_parameters(c, preview);
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (j > 0) s += ", ";
        s += to_text(t[j]);
    }
    if (!c.is_finite()) s += t.empty() ? "..." : ", ...";
    return s + "]";
}

} // namespace isoring

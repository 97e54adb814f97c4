#pragma once

/**
 * @file sequences.hpp
 * @brief Generalized Fibonacci (GFP), Lucas (GLP) and weighted isobaric sequences.
 *
 * Every weighted sequence P_{w,k,n} has two independent constructions:
 *
 *   closed form   sum over alpha |- n of  multinomial(alpha) * (sum_j alpha_j w_j / |alpha|) * t^alpha
 *   recursion     P_0 = w_k,  P_n = t_1 P_{n-1} + ... + t_{n-1} P_1 + w_n t_n       (1 <= n)
 *
 * For n >= k the recursion collapses to the degree-k linear recursion
 * P_n = t_1 P_{n-1} + ... + t_k P_{n-k}. The GFP has weights (1,1,...,1) and
 * the GLP has weights (1,2,...,k).
 */

#include "core.hpp"
#include "partition.hpp"
#include "poly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace isoring {

/// Weight vector of a weighted isobaric sequence.
class Weight {
public:
    enum class Scheme { all_ones, ramp, shifted_ones, signed_hook, explicit_values };

    /// (1,1,...): the GFP.
    static Weight all_ones() { return Weight(Scheme::all_ones, 0); }
    /// (1,2,...,k): the GLP.
    static Weight ramp() { return Weight(Scheme::ramp, 0); }
    /// (0,...,0,1,1,...) with `zeros` leading zeros: the columns of the
    /// infinite companion matrix.
    static Weight shifted_ones(unsigned zeros) { return Weight(Scheme::shifted_ones, zeros); }
    /// (0,...,0,(-1)^r,(-1)^r,...) with r leading zeros: the Schur hooks (n-r,1^r).
    static Weight signed_hook(unsigned r) { return Weight(Scheme::signed_hook, r); }
    static Weight of(std::vector<Rational> w) {
        Weight x(Scheme::explicit_values, 0);
        x.values_ = std::move(w);
        return x;
    }

    Scheme scheme() const { return scheme_; }
    unsigned parameter() const { return param_; }
    std::optional<std::size_t> fixed_length() const {
        if (scheme_ == Scheme::explicit_values) return values_.size();
        return std::nullopt;
    }

    /// w_j for j >= 1.
    Rational operator()(std::size_t j) const {
        switch (scheme_) {
        case Scheme::all_ones: return 1;
        case Scheme::ramp: return Rational(static_cast<unsigned long>(j));
        case Scheme::shifted_ones: return j > param_ ? 1 : 0;
        case Scheme::signed_hook: return j > param_ ? (param_ % 2 ? -1 : 1) : 0;
        case Scheme::explicit_values:
            if (j == 0 || j > values_.size()) throw domain_error("weight index out of range");
            return values_[j - 1];
        }
        return 0;
    }

    std::string name() const {
        switch (scheme_) {
        case Scheme::all_ones: return "GFP";
        case Scheme::ramp: return "GLP";
        case Scheme::shifted_ones: return "shifted-ones:" + std::to_string(param_);
        case Scheme::signed_hook: return "signed-hook:" + std::to_string(param_);
        case Scheme::explicit_values: {
            std::string s = "weights:";
            for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + values_[i].str();
            return s;
        }
        }
        return {};
    }

private:
    Weight(Scheme s, unsigned p) : scheme_(s), param_(p) {}

    Scheme scheme_;
    unsigned param_;
    std::vector<Rational> values_;
};

namespace detail {
inline void check_weight_length(Weight const& w, std::size_t k) {
    if (auto len = w.fixed_length(); len && *len != k)
        throw domain_error("weight vector has length " + std::to_string(*len) + " but the core has degree " +
                           std::to_string(k));
}
} // namespace detail

// ---------------------------------------------------------------------------
// Closed forms (symbolic, generic core of degree k)
// ---------------------------------------------------------------------------

/// P_{w,k,n} by the multinomial closed form.
inline TPoly weighted_closed(Weight const& w, std::size_t k, unsigned n) {
    detail::check_weight_length(w, k);
    if (n == 0) return TPoly(w(k));
    TPoly p;
    for (auto const& alpha : partitions(n, static_cast<unsigned>(k))) {
        ExpVec e = alpha.multiplicities();
        Rational weighted = 0;
        for (std::size_t j = 1; j <= e.size(); ++j) weighted += Rational(e[j]) * w(j);
        Rational c = Rational(multinomial(e)) * weighted / Rational(e.total());
        p += TPoly::monomial(e, c);
    }
    return p;
}

inline TPoly gfp_closed(std::size_t k, unsigned n) { return weighted_closed(Weight::all_ones(), k, n); }
inline TPoly glp_closed(std::size_t k, unsigned n) { return weighted_closed(Weight::ramp(), k, n); }

// ---------------------------------------------------------------------------
// Recursions (any coefficient ring)
// ---------------------------------------------------------------------------

/// P_0..P_{n_max} of the weighted sequence over `core` by recursion.
/// For an infinite core the value P_0 = w_k uses k = `infinite_k`.
template <RingElement T>
std::vector<T> weighted_sequence(Core<T> const& core, Weight const& w, unsigned n_max,
                                 std::size_t infinite_k = 0) {
    std::size_t k = core.is_finite() ? core.degree() : (infinite_k ? infinite_k : n_max);
    detail::check_weight_length(w, k);
    std::vector<T> t = core.parameters(n_max);
    std::vector<T> p;
    p.reserve(n_max + 1);
    p.push_back(k == 0 ? T(Rational(0)) : T(w(k)));
    for (unsigned n = 1; n <= n_max; ++n) {
        if (core.is_finite() && n >= k && k > 0) {
            T acc(Rational(0));
            for (std::size_t i = 1; i <= k; ++i) acc = acc + t[i - 1] * p[n - i];
            p.push_back(std::move(acc));
        } else {
            T acc(Rational(0));
            for (unsigned i = 1; i < n; ++i) acc = acc + t[i - 1] * p[n - i];
            if (!core.is_finite() || n <= k) acc = acc + t[n - 1] * w(n);
            p.push_back(std::move(acc));
        }
    }
    return p;
}

/// F_0..F_{n_max}: F_0 = 1, F_n = t_1 F_{n-1} + ... + t_k F_{n-k} with F_{<0} = 0.
template <RingElement T>
std::vector<T> gfp_sequence(Core<T> const& core, unsigned n_max) {
    std::vector<T> f;
    f.reserve(n_max + 1);
    f.push_back(T(Rational(1)));
    std::size_t k = core.is_finite() ? core.degree() : n_max;
    std::vector<T> t = core.parameters(std::min<std::size_t>(k, n_max));
    for (unsigned n = 1; n <= n_max; ++n) {
        T acc(Rational(0));
        for (std::size_t i = 1; i <= std::min<std::size_t>(k, n); ++i) acc = acc + t[i - 1] * f[n - i];
        f.push_back(std::move(acc));
    }
    return f;
}

/// G_0..G_{n_max}: G_0 = k, Newton's identities below k, the degree-k recursion above.
template <RingElement T>
std::vector<T> glp_sequence(Core<T> const& core, unsigned n_max, std::size_t infinite_k = 0) {
    return weighted_sequence(core, Weight::ramp(), n_max, infinite_k);
}

template <RingElement T>
T gfp(Core<T> const& core, unsigned n) { return gfp_sequence(core, n)[n]; }

template <RingElement T>
T glp(Core<T> const& core, unsigned n) { return glp_sequence(core, n)[n]; }

template <RingElement T>
T weighted(Core<T> const& core, Weight const& w, unsigned n) { return weighted_sequence(core, w, n)[n]; }

/// Formal partial derivative d/dt_j.
inline TPoly partial_derivative(TPoly const& p, std::size_t j) {
    if (j == 0) throw domain_error("variable indices start at 1");
    return p.derivative(j);
}

// ---------------------------------------------------------------------------
// Negative indices
// ---------------------------------------------------------------------------

/// Run the recursion backwards from `forward` = (P_0, ..., P_{k-1}) and
/// return (P_{-1}, ..., P_{-m}), using
///   P_{n-k} = (P_n - t_1 P_{n-1} - ... - t_{k-1} P_{n-k+1}) / t_k.
inline std::vector<Rational> extend_negative(Core<Rational> const& core, std::vector<Rational> const& forward,
                                             unsigned m) {
    if (!core.is_finite()) throw domain_error("negative extension needs a finite core");
    if (!core.invertible()) throw domain_error("non-invertible core: t_k = 0");
    std::size_t k = core.degree();
    if (forward.size() < k) throw domain_error("negative extension needs the values P_0..P_{k-1}");
    // window[i] holds P_{lo + i}; grows downward.
    std::map<long, Rational> v;
    for (std::size_t i = 0; i < k; ++i) v[static_cast<long>(i)] = forward[i];
    Rational inv_tk = core.t(k).inverse();
    std::vector<Rational> out;
    for (long target = -1; target >= -static_cast<long>(m); --target) {
        long n = target + static_cast<long>(k);
        Rational acc = v.at(n);
        for (std::size_t i = 1; i < k; ++i) acc -= core.t(i) * v.at(n - static_cast<long>(i));
        v[target] = acc * inv_tk;
        out.push_back(v[target]);
    }
    return out;
}

/// Symbolic cores have no negative extension (it would need Laurent
/// polynomials in t_k).
inline std::vector<TPoly> extend_negative(Core<TPoly> const&, std::vector<TPoly> const&, unsigned) {
    throw domain_error("symbolic negative extension unsupported");
}

// ---------------------------------------------------------------------------
// Cached sequence object
// ---------------------------------------------------------------------------

/// A weighted sequence over a core with a lazily filled, internally
/// synchronized cache. Negative indices are available for invertible
/// evaluated cores.
template <RingElement T>
class Seq {
public:
    Seq(Core<T> core, Weight w) : core_(std::move(core)), weight_(std::move(w)) {
        if (core_.is_finite()) detail::check_weight_length(weight_, core_.degree());
    }

    Core<T> const& core() const { return core_; }
    Weight const& weight() const { return weight_; }

    T at(long n) const {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(n); it != cache_.end()) return it->second;
        if (n >= 0) {
            long have = cache_.empty() ? -1 : std::max(-1L, cache_.rbegin()->first);
            if (n > have) {
                auto vals = values(static_cast<unsigned>(n));
                for (std::size_t i = 0; i < vals.size(); ++i) cache_[static_cast<long>(i)] = vals[i];
            }
            return cache_.at(n);
        }
        if constexpr (std::is_same_v<T, Rational>) {
            if (weight_.scheme() != Weight::Scheme::all_ones && weight_.scheme() != Weight::Scheme::ramp)
                throw domain_error("negative indices are available for the GFP and GLP only");
            std::size_t k = core_.degree();
            auto fwd = values(static_cast<unsigned>(k));
            fwd.resize(k);
            auto neg = extend_negative(core_, fwd, static_cast<unsigned>(-n));
            for (std::size_t i = 0; i < neg.size(); ++i) cache_[-static_cast<long>(i) - 1] = neg[i];
            return cache_.at(n);
        } else {
            throw domain_error("symbolic negative extension unsupported");
        }
    }

    /// P_0..P_{n_max}.
    std::vector<T> values(unsigned n_max) const {
        if (weight_.scheme() == Weight::Scheme::all_ones) return gfp_sequence(core_, n_max);
        return weighted_sequence(core_, weight_, n_max);
    }

private:
    Core<T> core_;
    Weight weight_;
    mutable std::mutex mu_;
    mutable std::map<long, T> cache_;
};

} // namespace isoring

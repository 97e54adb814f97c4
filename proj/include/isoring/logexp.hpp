#pragma once

/**
 * @file logexp.hpp
 * @brief Convolution of sequences and the LOG / EXP operators.
 *
 * Sequences are indexed from 0 and combined with the Cauchy product
 *     (P * Q)_n = sum_{j=0}^{n} P_j Q_{n-j},
 * whose identity is delta = (1, 0, 0, ...). For a GFP sequence over the core
 * [t_1,...,t_k] the convolution inverse is (1, -t_1, ..., -t_k, 0, ...).
 *
 * LOG maps the GFP to the GLP of the same core:
 *     L(P)_0 = k
 *     L(P)_n = n P_n - sum_{j=1}^{n-1} j t_{n-j} P_j                     (n >= 1)
 * and EXP is its inverse:
 *     E(G)_0 = 1
 *     E(G)_n = (1/n) (E_{n-1} G_1 + E_{n-2} G_2 + ... + E_0 G_n).
 */

#include "core.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "poly.hpp"
#include "sequences.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace isoring {

template <RingElement T>
using ConvSeq = std::vector<T>;

namespace detail {
template <RingElement T>
void require_length(ConvSeq<T> const& p, unsigned n_max, char const* what) {
    if (p.size() <= n_max)
        throw domain_error(std::string(what) + ": sequence has " + std::to_string(p.size()) +
                           " terms, needs indices 0.." + std::to_string(n_max));
}
} // namespace detail

/// delta = (1, 0, ..., 0) on 0..n_max.
template <RingElement T>
ConvSeq<T> delta_seq(unsigned n_max) {
    ConvSeq<T> d(n_max + 1, T(Rational(0)));
    d[0] = T(Rational(1));
    return d;
}

template <RingElement T>
ConvSeq<T> conv(ConvSeq<T> const& p, ConvSeq<T> const& q, unsigned n_max) {
    detail::require_length(p, n_max, "conv");
    detail::require_length(q, n_max, "conv");
    ConvSeq<T> r;
    r.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        T acc(Rational(0));
        for (unsigned j = 0; j <= n; ++j)
            if (!p[j].is_zero() && !q[n - j].is_zero()) acc = acc + p[j] * q[n - j];
        r.push_back(std::move(acc));
    }
    return r;
}

/// Q with P * Q = delta on 0..n_max. P_0 must be a unit.
template <RingElement T>
ConvSeq<T> conv_inverse(ConvSeq<T> const& p, unsigned n_max) {
    detail::require_length(p, n_max, "conv_inverse");
    auto inv0 = unit_inverse(p[0]);
    if (!inv0) throw domain_error("non-unit: the sequence value at index 0 is not invertible");
    ConvSeq<T> q;
    q.reserve(n_max + 1);
    q.push_back(T(*inv0));
    for (unsigned n = 1; n <= n_max; ++n) {
        T acc(Rational(0));
        for (unsigned j = 1; j <= n; ++j)
            if (!p[j].is_zero()) acc = acc + p[j] * q[n - j];
        q.push_back(-(acc * T(*inv0)));
    }
    return q;
}

/// r-fold convolution power, r >= 1.
template <RingElement T>
ConvSeq<T> conv_power(ConvSeq<T> const& p, unsigned r, unsigned n_max) {
    if (r == 0) throw domain_error("conv_power needs a positive exponent");
    detail::require_length(p, n_max, "conv_power");
    ConvSeq<T> acc(p.begin(), p.begin() + n_max + 1);
    for (unsigned i = 1; i < r; ++i) acc = conv(acc, p, n_max);
    return acc;
}

/// (lambda P)_n = n P_n.
template <RingElement T>
ConvSeq<T> lambda(ConvSeq<T> const& p) {
    ConvSeq<T> r;
    for (std::size_t n = 0; n < p.size(); ++n) r.push_back(p[n] * Rational(static_cast<unsigned long>(n)));
    return r;
}

/// Recursion parameters recovered from a sequence with P_0 = 1 by peeling:
///   t_1 = P_1,  t_j = P_j - (t_1 P_{j-1} + ... + t_{j-1} P_1).
/// Returns t_1..t_{n_max}.
template <RingElement T>
std::vector<T> peel_core(ConvSeq<T> const& p, unsigned n_max) {
    detail::require_length(p, n_max, "infer_core");
    if (!(p[0] == T(Rational(1)))) throw domain_error("not a unit at p^0: the value at index 0 must be 1");
    std::vector<T> t;
    for (unsigned j = 1; j <= n_max; ++j) {
        T tj = p[j];
        for (unsigned i = 1; i < j; ++i) tj = tj - t[i - 1] * p[j - i];
        t.push_back(std::move(tj));
    }
    return t;
}

/// The shortest finite core reproducing P_0..P_{n_max} (trailing zero
/// parameters trimmed).
template <RingElement T>
Core<T> infer_finite_core(ConvSeq<T> const& p, unsigned n_max) {
    auto t = peel_core(p, n_max);
    while (!t.empty() && t.back().is_zero()) t.pop_back();
    return Core<T>::finite(std::move(t));
}

/// LOG by its defining formula. Index 0 is k, the core degree; for an
/// infinite core k is taken as `infinite_k` (defaults to the truncation).
template <RingElement T>
ConvSeq<T> log_op(ConvSeq<T> const& p, Core<T> const& core, unsigned n_max, std::size_t infinite_k = 0) {
    detail::require_length(p, n_max, "log");
    std::size_t k = core.is_finite() ? core.degree() : (infinite_k ? infinite_k : n_max);
    std::vector<T> t = core.parameters(n_max);
    ConvSeq<T> g;
    g.reserve(n_max + 1);
    g.push_back(T(Rational(static_cast<unsigned long>(k))));
    for (unsigned n = 1; n <= n_max; ++n) {
        T acc = p[n] * Rational(n);
        for (unsigned j = 1; j < n; ++j)
            if (!t[n - j - 1].is_zero()) acc = acc - t[n - j - 1] * p[j] * Rational(j);
        g.push_back(std::move(acc));
    }
    return g;
}

/// LOG of a raw sequence: the core is inferred from the sequence itself.
template <RingElement T>
ConvSeq<T> log_op(ConvSeq<T> const& p, unsigned n_max) {
    return log_op(p, infer_finite_core(p, n_max), n_max);
}

/// LOG in the k-term form
///   L(P)_n = -t_{k-1} P_{n-k+1} - 2 t_{k-2} P_{n-k+2} - ... - (k-1) t_1 P_{n-1} + k P_n
/// for n >= k, falling back to the defining formula below k. Agrees with
/// log_op on sequences that satisfy the core's recursion.
template <RingElement T>
ConvSeq<T> log_op_kterm(ConvSeq<T> const& p, Core<T> const& core, unsigned n_max) {
    auto g = log_op(p, core, n_max);
    std::size_t k = core.degree();
    for (std::size_t n = std::max<std::size_t>(k, 1); n <= n_max; ++n) {
        T acc = p[n] * Rational(static_cast<unsigned long>(k));
        for (std::size_t s = 1; s < k; ++s)
            acc = acc - core.t(s) * p[n - s] * Rational(static_cast<unsigned long>(k - s));
        g[n] = std::move(acc);
    }
    return g;
}

/// LOG through the identity L(P) = inverse(P) * lambda(P), for n >= 1.
/// Index 0 carries k as in log_op.
template <RingElement T>
ConvSeq<T> log_via_inverse(ConvSeq<T> const& p, std::size_t k, unsigned n_max) {
    auto g = conv(conv_inverse(p, n_max), lambda(ConvSeq<T>(p.begin(), p.begin() + n_max + 1)), n_max);
    g[0] = T(Rational(static_cast<unsigned long>(k)));
    return g;
}

/// EXP. The value at index 0 of the input is ignored.
template <RingElement T>
ConvSeq<T> exp_op(ConvSeq<T> const& g, unsigned n_max) {
    detail::require_length(g, n_max, "exp");
    ConvSeq<T> f;
    f.reserve(n_max + 1);
    f.push_back(T(Rational(1)));
    for (unsigned n = 1; n <= n_max; ++n) {
        T acc(Rational(0));
        for (unsigned j = 1; j <= n; ++j)
            if (!g[j].is_zero()) acc = acc + f[n - j] * g[j];
        f.push_back(acc * Rational(1, n));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Matrix form
// ---------------------------------------------------------------------------

/// The lower-triangular matrices L_n (diagonal 1..n) and E_n = L_n^{-1}
/// (diagonal 1, 1/2, ..., 1/n), acting on the column (P_1, ..., P_n).
template <RingElement T>
struct TriangularOperator {
    enum class Variant { L, E };
    Variant variant;
    Matrix<T> entries;

    std::size_t size() const { return entries.rows(); }

    /// Apply to (P_1, ..., P_n) given as a sequence indexed from 0 (P_0 unused).
    std::vector<T> apply(ConvSeq<T> const& p) const {
        std::size_t n = size();
        if (p.size() <= n) throw domain_error("operator of size " + std::to_string(n) + " needs P_1..P_n");
        std::vector<T> out;
        for (std::size_t i = 0; i < n; ++i) {
            T acc(Rational(0));
            for (std::size_t j = 0; j <= i; ++j) acc = acc + entries(i, j) * p[j + 1];
            out.push_back(std::move(acc));
        }
        return out;
    }
};

/// L_n: entry (m, j) = -j t_{m-j} for j < m and m on the diagonal (1-based).
template <RingElement T>
TriangularOperator<T> build_L_matrix(unsigned n, Core<T> const& core) {
    if (n == 0) throw domain_error("L_n needs n >= 1");
    Matrix<T> m(n, n);
    for (unsigned r = 1; r <= n; ++r) {
        m(r - 1, r - 1) = T(Rational(r));
        for (unsigned j = 1; j < r; ++j) m(r - 1, j - 1) = -(core.t(r - j) * Rational(j));
    }
    return {TriangularOperator<T>::Variant::L, std::move(m)};
}

/// E_n: entry (m, j) = F_{m-j} / m for j <= m (1-based), F the GFP of the core.
template <RingElement T>
TriangularOperator<T> build_E_matrix(unsigned n, Core<T> const& core) {
    if (n == 0) throw domain_error("E_n needs n >= 1");
    auto f = gfp_sequence(core, n);
    Matrix<T> m(n, n);
    for (unsigned r = 1; r <= n; ++r)
        for (unsigned j = 1; j <= r; ++j) m(r - 1, j - 1) = f[r - j] * Rational(1, r);
    return {TriangularOperator<T>::Variant::E, std::move(m)};
}

// ---------------------------------------------------------------------------
// F <-> G basis change
// ---------------------------------------------------------------------------

/// G_n as a polynomial in the symbols F_1..F_n:
///   G_n = sum_{alpha |- n} n (-1)^{|alpha|+1} (|alpha|-1)! / (alpha_1! ... alpha_n!) F^alpha.
inline FPoly g_from_f(unsigned n) {
    if (n == 0) throw domain_error("g_from_f needs n >= 1");
    FPoly p;
    for (auto const& alpha : partitions(n)) {
        ExpVec e = alpha.multiplicities();
        Integer c = factorial(e.total() - 1) * n;
        for (auto a : e.exponents()) c /= factorial(a);
        Rational coeff(c);
        if (e.total() % 2 == 0) coeff = -coeff;
        p += FPoly::monomial(e, coeff);
    }
    return p;
}

/// F_n as a polynomial in the symbols G_1..G_n: sum_{alpha |- n} G^alpha / z(alpha).
inline GPoly f_from_g(unsigned n) {
    if (n == 0) return GPoly(1);
    GPoly p;
    for (auto const& alpha : partitions(n))
        p += GPoly::monomial(alpha.multiplicities(), Rational(Integer(1), z_alpha(alpha)));
    return p;
}

} // namespace isoring

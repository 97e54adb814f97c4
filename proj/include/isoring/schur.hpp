#pragma once

/**
 * @file schur.hpp
 * @brief Schur polynomials by Jacobi-Trudi and characters of the symmetric group.
 *
 *   S_lambda = det(F_{lambda_i - i + j})           F_0 = 1, F_m = 0 for m < 0
 *
 * Writing each F_m on the G basis, F_m = sum_{alpha |- m} G^alpha / z(alpha),
 * turns S_lambda into sum_alpha c(alpha) G^alpha, and the irreducible
 * character is chi^lambda(alpha) = c(alpha) z(alpha).
 */

#include "core.hpp"
#include "logexp.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "poly.hpp"
#include "sequences.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace isoring {

/// Default upper bound on n for character computations.
inline constexpr unsigned default_character_bound = 10;

/// Index matrix (lambda_i - i + j) of the Jacobi-Trudi determinant.
inline std::vector<std::vector<long>> jacobi_trudi_indices(Partition const& lambda) {
    std::size_t r = lambda.length();
    std::vector<std::vector<long>> idx(r, std::vector<long>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            idx[i][j] = static_cast<long>(lambda.parts()[i]) - static_cast<long>(i) + static_cast<long>(j);
    return idx;
}

/// S_lambda as a polynomial in the symbols F_1, F_2, ...
inline FPoly schur_in_f(Partition const& lambda) {
    auto idx = jacobi_trudi_indices(lambda);
    std::size_t r = idx.size();
    Matrix<FPoly> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            long e = idx[i][j];
            m(i, j) = e < 0 ? FPoly() : e == 0 ? FPoly(1) : FPoly::var(static_cast<std::size_t>(e));
        }
    return determinant(m);
}

/// Substitute F_m <- sum_{alpha |- m} G^alpha / z(alpha) and expand.
inline GPoly expand_f_to_g(FPoly const& p) {
    std::map<std::size_t, GPoly> cache;
    return substitute<GPoly>(p, [&](std::size_t m) {
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, f_from_g(static_cast<unsigned>(m))).first;
        return it->second;
    });
}

struct SchurResult {
    Partition lambda;
    std::vector<std::vector<long>> f_indices; ///< Jacobi-Trudi matrix of F-indices
    FPoly f_form;                             ///< determinant in the F symbols
    TPoly expanded;                           ///< F_m <- GFP of the core
    GPoly g_basis;                            ///< on the G basis
};

/// S_lambda over a generic core. Use k >= |lambda| for the full symmetric
/// function; smaller k truncates t_j = 0 for j > k.
inline SchurResult schur(Partition const& lambda, Core<TPoly> const& core) {
    if (lambda.length() == 0) throw domain_error("schur needs a non-empty partition");
    SchurResult r;
    r.lambda = lambda;
    r.f_indices = jacobi_trudi_indices(lambda);
    r.f_form = schur_in_f(lambda);
    unsigned top = lambda.largest() + static_cast<unsigned>(lambda.length());
    auto f = gfp_sequence(core, top);
    r.expanded = substitute<TPoly>(r.f_form, [&](std::size_t m) { return f.at(m); });
    r.g_basis = expand_f_to_g(r.f_form);
    return r;
}

inline SchurResult schur(Partition const& lambda) { return schur(lambda, generic_core(std::max(1u, lambda.size()))); }

struct CharacterVector {
    Partition lambda;
    std::vector<Partition> classes;    ///< cycle types, ascending order
    std::vector<std::int64_t> values;  ///< chi^lambda on each class

    std::int64_t operator()(Partition const& alpha) const {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == alpha) return values[i];
        throw domain_error("cycle type " + alpha.str() + " is not a partition of " + std::to_string(lambda.size()));
    }
    bool operator==(CharacterVector const&) const = default;
};

/// chi^lambda on every conjugacy class of S_n, n = |lambda|.
inline CharacterVector character(Partition const& lambda, unsigned bound = default_character_bound) {
    unsigned n = lambda.size();
    if (n == 0) throw domain_error("character needs a non-empty partition");
    if (n > bound)
        throw domain_error("n = " + std::to_string(n) + " exceeds the character bound " + std::to_string(bound));
    GPoly g = expand_f_to_g(schur_in_f(lambda));
    CharacterVector cv{lambda, partitions(n), {}};
    for (auto const& alpha : cv.classes) {
        Rational chi = g.coefficient(alpha.multiplicities()) * Rational(z_alpha(alpha));
        if (!chi.is_integer())
            throw domain_error("internal consistency: non-integer character value " + chi.str() + " at class " +
                               alpha.str());
        cv.values.push_back(chi.to_int64());
    }
    return cv;
}

struct CharacterTable {
    unsigned n;
    std::vector<Partition> shapes;   ///< rows lambda, descending: (n), (n-1,1), ..., (1^n)
    std::vector<Partition> classes;  ///< columns alpha, ascending: (1^n), ..., (n)
    std::vector<std::vector<std::int64_t>> values;
};

inline CharacterTable character_table(unsigned n, unsigned bound = default_character_bound) {
    if (n == 0) throw domain_error("character table needs n >= 1");
    CharacterTable t{n, partitions(n), partitions(n), {}};
    std::reverse(t.shapes.begin(), t.shapes.end());
    for (auto const& lambda : t.shapes) t.values.push_back(character(lambda, bound).values);
    return t;
}

} // namespace isoring

#pragma once

/**
 * @file matrices.hpp
 * @brief Companion matrix, infinite companion matrix A^inf, different matrix D^inf.
 *
 * Row convention: row n of A^inf is e_k A^n, with e_k = (0,...,0,1). Rows
 * -(k-1)..0 are the identity block A^0, rows m-k+1..m form the block A^m,
 * and the right-hand column at row n is the GFP value F_n. Row n of D^inf is
 * d_k A^n, whose right-hand column is the GLP value G_n.
 *
 * Rows above -(k-1) of A^inf, and negative rows of D^inf, need A^{-1}: they
 * exist only for evaluated cores with t_k != 0.
 */

#include "core.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

namespace isoring {

/// A contiguous band of rows n = first..last of a k-column infinite matrix.
template <RingElement T>
class MatrixWindow {
public:
    MatrixWindow(long first, std::vector<std::vector<T>> rows) : first_(first), rows_(std::move(rows)) {}

    long first_row() const { return first_; }
    long last_row() const { return first_ + static_cast<long>(rows_.size()) - 1; }
    std::size_t cols() const { return rows_.empty() ? 0 : rows_[0].size(); }
    bool contains(long n) const { return n >= first_ && n <= last_row(); }

    std::vector<T> const& row(long n) const {
        if (!contains(n)) throw domain_error("row " + std::to_string(n) + " outside the window");
        return rows_[static_cast<std::size_t>(n - first_)];
    }
    T const& at(long n, std::size_t j) const { return row(n).at(j); }

    std::vector<std::vector<T>> const& rows() const { return rows_; }

    /// Column j (0-based) as a sequence over the window's rows.
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c;
        for (auto const& r : rows_) c.push_back(r.at(j));
        return c;
    }

    /// The k x k block made of rows top..top+k-1.
    Matrix<T> block(long top) const {
        std::size_t k = cols();
        std::vector<std::vector<T>> b;
        for (std::size_t i = 0; i < k; ++i) b.push_back(row(top + static_cast<long>(i)));
        return Matrix<T>(b);
    }

    bool operator==(MatrixWindow const&) const = default;

private:
    long first_;
    std::vector<std::vector<T>> rows_;
};

/// The k x k companion matrix: ones on the superdiagonal, last row (t_k, ..., t_1).
template <RingElement T>
Matrix<T> companion(Core<T> const& core) {
    std::size_t k = core.degree();
    if (k == 0) throw domain_error("core of degree 0 has no companion matrix");
    Matrix<T> a(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = T(Rational(1));
    for (std::size_t j = 0; j < k; ++j) a(k - 1, j) = core.t(k - j);
    return a;
}

namespace detail {

/// v -> v A.
template <RingElement T>
std::vector<T> step_forward(std::vector<T> const& v, std::vector<T> const& t) {
    std::size_t k = v.size();
    std::vector<T> r(k, T(Rational(0)));
    T const& last = v[k - 1];
    for (std::size_t j = 0; j < k; ++j) {
        T x = last * t[k - j - 1];
        r[j] = j == 0 ? x : v[j - 1] + x;
    }
    return r;
}

/// w -> w A^{-1}.
inline std::vector<Rational> step_backward(std::vector<Rational> const& w, std::vector<Rational> const& t) {
    std::size_t k = w.size();
    std::vector<Rational> v(k);
    v[k - 1] = w[0] / t[k - 1];
    for (std::size_t j = 1; j < k; ++j) v[j - 1] = w[j] - v[k - 1] * t[k - j - 1];
    return v;
}

/// Rows n_min..n_max of the orbit v A^{n - seed_row}, v = seed.
template <RingElement T>
MatrixWindow<T> orbit(Core<T> const& core, std::vector<T> seed, long seed_row, long n_min, long n_max) {
    if (n_max < n_min) throw domain_error("empty row range");
    std::size_t k = core.degree();
    if (k == 0) throw domain_error("core of degree 0 has no companion matrix");
    std::vector<T> t = core.parameters(k);
    std::vector<std::vector<T>> rows;
    if (n_min < seed_row) {
        if constexpr (std::is_same_v<T, Rational>) {
            if (!core.invertible()) throw domain_error("non-invertible core: rows above the seed need t_k != 0");
            std::vector<std::vector<T>> up;
            std::vector<T> v = seed;
            for (long n = seed_row - 1; n >= n_min; --n) {
                v = step_backward(v, t);
                if (n <= n_max) up.push_back(v);
            }
            rows.assign(up.rbegin(), up.rend());
        } else {
            throw domain_error("symbolic negative window unsupported: use an evaluated invertible core");
        }
    }
    std::vector<T> v = seed;
    for (long n = seed_row; n <= n_max; ++n) {
        if (n >= n_min) rows.push_back(v);
        if (n < n_max) v = step_forward(v, t);
    }
    return MatrixWindow<T>(n_min, std::move(rows));
}

} // namespace detail

/// Rows n_min..n_max of A^inf.
template <RingElement T>
MatrixWindow<T> infinite_companion(Core<T> const& core, long n_min, long n_max) {
    std::size_t k = core.degree();
    if (k == 0) throw domain_error("core of degree 0 has no companion matrix");
    // Seed at the top of the identity block: row -(k-1) = e_1.
    std::vector<T> e1(k, T(Rational(0)));
    e1[0] = T(Rational(1));
    return detail::orbit(core, std::move(e1), -static_cast<long>(k) + 1, n_min, n_max);
}

/// d_k = (-t_{k-1}, -2 t_{k-2}, ..., -(k-1) t_1, k): the coefficients of the
/// derivative of the core polynomial.
template <RingElement T>
std::vector<T> different_vector(Core<T> const& core) {
    std::size_t k = core.degree();
    std::vector<T> d;
    for (std::size_t j = 1; j < k; ++j) d.push_back(-(core.t(k - j) * Rational(static_cast<unsigned long>(j))));
    if (k > 0) d.push_back(T(Rational(static_cast<unsigned long>(k))));
    return d;
}

/// Rows n_min..n_max of D^inf (row n = d_k A^n).
template <RingElement T>
MatrixWindow<T> infinite_different(Core<T> const& core, long n_min, long n_max) {
    return detail::orbit(core, different_vector(core), 0, n_min, n_max);
}

/// The different matrix D: rows d_k A^0, ..., d_k A^{k-1}.
template <RingElement T>
Matrix<T> different_matrix(Core<T> const& core) {
    std::size_t k = core.degree();
    auto w = infinite_different(core, 0, static_cast<long>(k) - 1);
    return Matrix<T>(w.rows());
}

/// Discriminant of the core polynomial: (-1)^{k(k-1)/2} det D.
template <RingElement T>
T discriminant(Core<T> const& core) {
    std::size_t k = core.degree();
    T det = determinant(different_matrix(core));
    return (k * (k - 1) / 2) % 2 ? -det : det;
}

/// LOG applied elementwise down the columns:
///   (L m)_{i,j} = -t_{k-1} m_{i-k+1,j} - ... - (k-1) t_1 m_{i-1,j} + k m_{i,j}.
/// Output rows are those of the input whose k-row stencil is inside the window.
template <RingElement T>
MatrixWindow<T> log_of_window(MatrixWindow<T> const& m, Core<T> const& core) {
    std::size_t k = core.degree();
    long first = m.first_row() + static_cast<long>(k) - 1;
    if (k == 0 || first > m.last_row())
        throw domain_error("insufficient rows: LOG needs " + std::to_string(k) + " consecutive rows");
    std::vector<std::vector<T>> out;
    for (long i = first; i <= m.last_row(); ++i) {
        std::vector<T> r;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            T acc = m.at(i, j) * Rational(static_cast<unsigned long>(k));
            for (std::size_t s = 1; s < k; ++s)
                acc = acc - core.t(s) * m.at(i - static_cast<long>(s), j) * Rational(static_cast<unsigned long>(k - s));
            r.push_back(std::move(acc));
        }
        out.push_back(std::move(r));
    }
    return MatrixWindow<T>(first, std::move(out));
}

} // namespace isoring

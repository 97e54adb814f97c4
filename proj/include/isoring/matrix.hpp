#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense matrices over a commutative ring.
 *
 * Only what the companion/different/L/E constructions and Jacobi-Trudi
 * determinants need: products, identity, and a division-free determinant.
 */

#include "poly.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace isoring {

template <RingElement T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(Rational(0))) {}
    explicit Matrix(std::vector<std::vector<T>> const& rows) : Matrix(rows.size(), rows.empty() ? 0 : rows[0].size()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (rows[i].size() != cols_) throw domain_error("ragged matrix rows");
            for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = rows[i][j];
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Rational(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    T const& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
        if (a.cols_ != b.rows_) throw domain_error("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }

    bool operator==(Matrix const&) const = default;

    T trace() const {
        T s(Rational(0));
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s = s + (*this)(i, i);
        return s;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/// Row vector times matrix.
template <RingElement T>
std::vector<T> row_times(std::vector<T> const& v, Matrix<T> const& m) {
    if (v.size() != m.rows()) throw domain_error("vector/matrix shape mismatch");
    std::vector<T> r(m.cols(), T(Rational(0)));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = r[j] + v[i] * m(i, j);
    }
    return r;
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns already used. Division free, so it works over polynomial rings;
/// O(n 2^n) ring operations.
template <RingElement T>
T determinant(Matrix<T> const& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw domain_error("determinant of a non-square matrix");
    if (n == 0) return T(Rational(1));
    if (n > 20) throw domain_error("determinant: matrix too large for subset expansion");
    // memo[mask] = minor on rows popcount(mask)..n-1 and the columns not in mask.
    std::unordered_map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::uint32_t mask, std::size_t row) -> T {
        if (row == n) return T(Rational(1));
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        T acc(Rational(0));
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) continue;
            // sign alternates over the columns that remain available
            if (!m(row, j).is_zero()) {
                T sub = self(self, mask | (1u << j), row + 1);
                acc = sign > 0 ? acc + m(row, j) * sub : acc - m(row, j) * sub;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0u, 0);
}

} // namespace isoring

#pragma once

#include "skewcfc/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace skewcfc {

/// Dense row-major matrix over the Gaussian rationals. 0xn, nx0 and 0x0
/// matrices are ordinary values.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Row-wise literal; every row must have the same length.
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static Matrix identity(std::size_t n);
    /// Column j is e_{perm[j]}, so (P^T M P)(i, j) = M(perm[i], perm[j]).
    /// Throws InvalidPermutation.
    static Matrix from_permutation(std::span<const std::size_t> perm);
    /// Block-diagonal assembly in the given order; empty input gives 0x0.
    static Matrix direct_sum(std::span<const Matrix> parts);
    static Matrix direct_sum(std::initializer_list<Matrix> parts);
    static Matrix diagonal(std::span<const GaussianRational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    /// Bounds-checked access; throws DimensionMismatch.
    const GaussianRational& at(std::size_t r, std::size_t c) const;

    std::span<const GaussianRational> entries() const { return data_; }

    Matrix transpose() const;
    Matrix scaled(const GaussianRational& s) const;
    /// Rows [r0, r0+nr) x columns [c0, c0+nc).
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Copies `m` into this matrix with its top-left corner at (r0, c0).
    void place(std::size_t r0, std::size_t c0, const Matrix& m);

    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix operator-() const { return scaled(GaussianRational(-1)); }
    /// Exact product; throws DimensionMismatch.
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Exact rank by Gaussian elimination, pivoting on the first nonzero entry.
std::size_t rank(const Matrix& m);

/// Exact inverse; throws DimensionMismatch for non-square, SingularMatrix.
Matrix inverse(const Matrix& m);

/// X^T A X, the congruence image of A under X.
Matrix congruence(const Matrix& a, const Matrix& x);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace skewcfc

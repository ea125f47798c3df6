#include "skewcfc/matrix.hpp"

#include "skewcfc/errors.hpp"

#include <algorithm>
#include <string>

namespace skewcfc {

namespace {

std::string shape(const Matrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_permutation(std::span<const std::size_t> perm)
{
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p])
            throw InvalidPermutation("not a permutation of 0.." + std::to_string(n == 0 ? 0 : n - 1));
        seen[p] = true;
    }
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        m(perm[j], j) = 1;
    return m;
}

Matrix Matrix::direct_sum(std::span<const Matrix> parts)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows();
        cols += p.cols();
    }
    Matrix m(rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        m.place(r, c, p);
        r += p.rows();
        c += p.cols();
    }
    return m;
}

Matrix Matrix::direct_sum(std::initializer_list<Matrix> parts)
{
    return direct_sum(std::span<const Matrix>(parts.begin(), parts.size()));
}

Matrix Matrix::diagonal(std::span<const GaussianRational> entries)
{
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

const GaussianRational& Matrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw DimensionMismatch("index (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                                shape(*this));
    return (*this)(r, c);
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::scaled(const GaussianRational& s) const
{
    Matrix m = *this;
    for (auto& e : m.data_)
        if (!e.is_zero())
            e *= s;
    return m;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionMismatch("submatrix outside " + shape(*this));
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

void Matrix::place(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw DimensionMismatch("cannot place " + shape(m) + " into " + shape(*this));
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            (*this)(r0 + r, c0 + c) = m(r, c);
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const GaussianRational& e) { return e.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("cannot add " + shape(*this) + " and " + shape(o));
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("cannot subtract " + shape(o) + " from " + shape(*this));
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
    Matrix m(a.rows_, b.cols_);
    // Witnesses and canonical blocks are very sparse; skip zero terms.
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const GaussianRational& bkj = b(k, j);
                if (!bkj.is_zero())
                    m(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

namespace {

// Row-reduces `m` in place to echelon form; returns the pivot count. When
// `companion` is given, the same row operations are applied to it.
std::size_t eliminate(Matrix& m, Matrix* companion, bool reduce_above)
{
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m(found, col).is_zero())
            ++found;
        if (found == m.rows())
            continue;
        auto swap_rows = [&](Matrix& t) {
            if (found == pivot_row)
                return;
            for (std::size_t c = 0; c < t.cols(); ++c)
                std::swap(t(found, c), t(pivot_row, c));
        };
        swap_rows(m);
        if (companion)
            swap_rows(*companion);

        const GaussianRational inv = m(pivot_row, col).inverse();
        auto scale_row = [&](Matrix& t) {
            for (std::size_t c = 0; c < t.cols(); ++c)
                if (!t(pivot_row, c).is_zero())
                    t(pivot_row, c) *= inv;
        };
        scale_row(m);
        if (companion)
            scale_row(*companion);

        for (std::size_t r = reduce_above ? 0 : pivot_row + 1; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col).is_zero())
                continue;
            const GaussianRational f = m(r, col);
            auto axpy = [&](Matrix& t) {
                for (std::size_t c = 0; c < t.cols(); ++c)
                    if (!t(pivot_row, c).is_zero())
                        t(r, c) -= f * t(pivot_row, c);
            };
            axpy(m);
            if (companion)
                axpy(*companion);
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

std::size_t rank(const Matrix& m)
{
    Matrix work = m;
    return eliminate(work, nullptr, false);
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw DimensionMismatch("cannot invert non-square " + shape(m));
    Matrix work = m;
    Matrix inv = Matrix::identity(m.rows());
    if (eliminate(work, &inv, true) != m.rows())
        throw SingularMatrix();
    return inv;
}

Matrix congruence(const Matrix& a, const Matrix& x)
{
    if (!a.is_square() || a.rows() != x.rows())
        throw DimensionMismatch("congruence needs square A with A.rows == X.rows, got A " + shape(a) + ", X " +
                                shape(x));
    return x.transpose() * (a * x);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
}

} // namespace skewcfc

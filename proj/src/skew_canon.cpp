#include "skewcfc/skew_canon.hpp"

#include "skewcfc/errors.hpp"

#include <utility>

namespace skewcfc {

bool is_skew(const Matrix& b)
{
    if (!b.is_square())
        throw DimensionMismatch("is_skew needs a square matrix");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i; j < b.cols(); ++j)
            if (b(i, j) != -b(j, i))
                return false;
    return true;
}

Matrix skew_canonical_form(std::size_t n, std::size_t m)
{
    Matrix c(n, n);
    for (std::size_t p = 0; p < m; ++p) {
        c(2 * p, 2 * p + 1) = 1;
        c(2 * p + 1, 2 * p) = -1;
    }
    return c;
}

namespace {

// Elementary congruences applied simultaneously to the working matrix
// (w <- E^T w E) and the accumulated transform (q <- q E).
class Congruence {
public:
    Congruence(Matrix w) : w_(std::move(w)), q_(Matrix::identity(w_.rows())) {}

    Matrix& w() { return w_; }
    Matrix& q() { return q_; }

    void swap(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        const std::size_t n = w_.rows();
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(w_(a, k), w_(b, k));
            std::swap(q_(k, a), q_(k, b));
        }
        for (std::size_t k = 0; k < n; ++k)
            std::swap(w_(k, a), w_(k, b));
    }

    void scale(std::size_t a, const GaussianRational& s)
    {
        const std::size_t n = w_.rows();
        for (std::size_t k = 0; k < n; ++k) {
            w_(a, k) *= s;
            q_(k, a) *= s;
        }
        for (std::size_t k = 0; k < n; ++k)
            w_(k, a) *= s;
    }

    /// Basis vector dst += f * src.
    void add(std::size_t src, std::size_t dst, const GaussianRational& f)
    {
        if (f.is_zero())
            return;
        const std::size_t n = w_.rows();
        for (std::size_t k = 0; k < n; ++k) {
            if (!w_(src, k).is_zero())
                w_(dst, k) += f * w_(src, k);
            if (!q_(k, src).is_zero())
                q_(k, dst) += f * q_(k, src);
        }
        for (std::size_t k = 0; k < n; ++k)
            if (!w_(k, src).is_zero())
                w_(k, dst) += f * w_(k, src);
    }

private:
    Matrix w_;
    Matrix q_;
};

} // namespace

SkewReduction skew_canonicalize(const Matrix& b)
{
    if (!is_skew(b))
        throw QueryError("skew_canonicalize needs a skew-symmetric matrix");
    const std::size_t n = b.rows();
    Congruence t(b);
    std::size_t p = 0;
    while (p + 1 < n) {
        std::size_t pi = n, pj = n;
        for (std::size_t i = p; i < n && pi == n; ++i)
            for (std::size_t j = p; j < n; ++j)
                if (!t.w()(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n)
            break;
        // Row-major first hit satisfies pi < pj for a skew matrix.
        t.swap(p, pi);
        if (pj == p)
            pj = pi;
        t.swap(p + 1, pj);
        t.scale(p + 1, t.w()(p, p + 1).inverse());
        // Now w(p, p+1) = 1, w(p+1, p) = -1. Clear the band of p and p+1.
        for (std::size_t r = p + 2; r < n; ++r) {
            const GaussianRational alpha = t.w()(p + 1, r);
            const GaussianRational beta = -t.w()(p, r);
            t.add(p, r, alpha);
            t.add(p + 1, r, beta);
        }
        p += 2;
    }
    SkewReduction out{t.q(), p / 2};
    if (congruence(b, out.q) != skew_canonical_form(n, out.m))
        throw InternalError("skew canonicalization failed to verify");
    return out;
}

} // namespace skewcfc

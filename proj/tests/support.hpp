#pragma once

// Seeded generators and independent oracles shared by the test binaries.

#include "skewcfc/cfc.hpp"
#include "skewcfc/matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace support {

using skewcfc::Block;
using skewcfc::CfcSpec;
using skewcfc::GaussianRational;
using skewcfc::Matrix;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// The fixed mu sample used across the suites.
inline std::vector<GaussianRational> mu_sample()
{
    return {GaussianRational(2), GaussianRational::fraction(1, 2), GaussianRational(3), GaussianRational(-2),
            GaussianRational(1, 1)};
}

/// Small random Gaussian rational, nonzero and not +-1.
inline GaussianRational random_mu(Rng& rng)
{
    for (;;) {
        GaussianRational z(skewcfc::Rational(rng.integer(-4, 4), rng.integer(1, 3)),
                           rng.coin() ? skewcfc::Rational(rng.integer(-3, 3), rng.integer(1, 2)) : skewcfc::Rational(0));
        if (!z.is_zero() && z != GaussianRational(1) && z != GaussianRational(-1))
            return z;
    }
}

/// A random admissible block of size <= max_size. Gamma_1/Gamma_2 only when
/// `small_gamma` is set.
inline Block random_block(Rng& rng, std::size_t max_size, bool small_gamma)
{
    for (;;) {
        const std::size_t kind = rng.uniform(0, 2);
        const std::size_t size = rng.uniform(1, max_size);
        if (kind == 0)
            return Block::jordan(size);
        if (kind == 1) {
            if (size <= 2 && !small_gamma)
                continue;
            return Block::gamma(size);
        }
        if (size % 2 != 0)
            continue;
        const std::size_t k = size / 2;
        switch (rng.uniform(0, 3)) {
        case 0:
            if (k % 2 == 1)
                return Block::h(size, GaussianRational(-1));
            continue;
        case 1:
            if (k % 2 == 0)
                return Block::h(size, GaussianRational(1));
            continue;
        default:
            return Block::h(size, random_mu(rng));
        }
    }
}

inline CfcSpec random_spec(Rng& rng, std::size_t max_blocks, std::size_t max_size, bool small_gamma)
{
    CfcSpec s;
    const std::size_t count = rng.uniform(1, max_blocks);
    for (std::size_t i = 0; i < count; ++i)
        s.blocks.push_back(random_block(rng, max_size, small_gamma));
    return s;
}

inline GaussianRational random_entry(Rng& rng, bool complex)
{
    return {skewcfc::Rational(rng.integer(-3, 3), rng.integer(1, 3)),
            complex ? skewcfc::Rational(rng.integer(-2, 2), rng.integer(1, 2)) : skewcfc::Rational(0)};
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool complex = true)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.uniform(0, 2) != 0)
                m(r, c) = random_entry(rng, complex);
    return m;
}

/// Random skew matrix of size n and rank at most 2k: M^T (H_2(-1)^k) M.
inline Matrix random_skew(Rng& rng, std::size_t n, std::size_t k)
{
    Matrix h(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        h(2 * i, 2 * i + 1) = 1;
        h(2 * i + 1, 2 * i) = -1;
    }
    const Matrix m = random_matrix(rng, 2 * k, n);
    return m.transpose() * (h * m);
}

/// Rank by column-oriented elimination with the pivot taken from the last
/// nonzero row; deliberately unlike the library routine.
inline std::size_t oracle_rank(Matrix m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<bool> used(rows, false);
    for (std::size_t c = cols; c-- > 0;) {
        std::size_t pivot = rows;
        for (std::size_t r = rows; r-- > 0;)
            if (!used[r] && !m(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        used[pivot] = true;
        ++rank;
        const GaussianRational inv = m(pivot, c).inverse();
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot || m(r, c).is_zero())
                continue;
            const GaussianRational f = m(r, c) * inv;
            for (std::size_t j = 0; j < cols; ++j)
                m(r, j) -= f * m(pivot, j);
        }
    }
    return rank;
}

/// rho in quarters from the per-block value table, independent of census.
inline std::uint64_t oracle_rho_quarters(const Block& b)
{
    const std::uint64_t n = b.size;
    switch (b.kind) {
    case skewcfc::BlockKind::Type0:
        if (n == 1)
            return 0;
        return n % 2 == 1 ? n + 1 : n;  // J_{2k-1}: k/2, J_{2k}: k/2
    case skewcfc::BlockKind::TypeI:
        return n % 2 == 1 ? n : n + 1;  // G_{2k-1}: (2k-1)/4, G_{2k}: (2k+1)/4
    case skewcfc::BlockKind::TypeII:
        if (b.mu == GaussianRational(-1))
            return n + 2;               // H_{4k-2}(-1): k
        return n;                       // H_{4k}(1): k, H_{2k}(mu): k/2
    }
    return 0;
}

inline std::uint64_t oracle_rho_quarters(const CfcSpec& s)
{
    std::uint64_t q = 0;
    for (const auto& b : s.blocks)
        q += oracle_rho_quarters(b);
    return q;
}

/// rank(A + A^T) per block from the closed forms, written out case by case.
inline std::size_t oracle_sym_rank(const Block& b)
{
    const std::size_t n = b.size;
    switch (b.kind) {
    case skewcfc::BlockKind::Type0: return n % 2 == 1 ? n - 1 : n;
    case skewcfc::BlockKind::TypeI: return n % 2 == 1 ? n : n - 1;
    case skewcfc::BlockKind::TypeII: return b.mu == GaussianRational(-1) ? n - 2 : n;
    }
    return 0;
}

} // namespace support

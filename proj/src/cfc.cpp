#include "skewcfc/cfc.hpp"

#include "skewcfc/errors.hpp"

#include <numeric>

namespace skewcfc {

std::string Block::to_string() const
{
    switch (kind) {
    case BlockKind::Type0: return "J" + std::to_string(size);
    case BlockKind::TypeI: return "G" + std::to_string(size);
    case BlockKind::TypeII: return "H" + std::to_string(size) + "(" + mu.to_literal() + ")";
    }
    return {};
}

std::size_t CfcSpec::size() const
{
    return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0},
                           [](std::size_t acc, const Block& b) { return acc + b.size; });
}

CfcSpec operator+(CfcSpec a, const CfcSpec& b)
{
    a.blocks.insert(a.blocks.end(), b.blocks.begin(), b.blocks.end());
    return a;
}

CfcSpec repeat(const Block& b, std::size_t count)
{
    return {std::vector<Block>(count, b)};
}

CfcSpec h2_minus1_power(std::size_t m)
{
    return repeat(Block::h2_minus1(), m);
}

GaussianRational normalize_mu(const GaussianRational& mu)
{
    if (mu.is_zero())
        throw InvalidBlock("mu must be nonzero");
    const int c = cmp(mu.norm2(), Rational(1));
    if (c > 0)
        return mu;
    GaussianRational inv = mu.inverse();
    if (c < 0)
        return inv;
    return lex_compare(mu, inv) >= 0 ? mu : inv;
}

Block validate(const Block& b)
{
    if (b.size == 0)
        throw InvalidBlock("block size must be positive");
    if (b.kind != BlockKind::TypeII)
        return {b.kind, b.size, {}};
    if (b.size % 2 != 0)
        throw InvalidBlock("H block size must be even, got " + std::to_string(b.size));
    if (b.mu.is_zero())
        throw InvalidBlock("H" + std::to_string(b.size) + "(0) is not canonical: mu must be nonzero");
    const std::size_t k = b.size / 2;
    const GaussianRational forbidden(k % 2 == 1 ? 1 : -1); // (-1)^(k+1)
    if (b.mu == forbidden)
        throw InvalidBlock("H" + std::to_string(b.size) + "(" + b.mu.to_literal() +
                           ") is not canonical: mu must differ from (-1)^(k+1) with 2k = size");
    return Block::h(b.size, normalize_mu(b.mu));
}

CfcSpec validate(const CfcSpec& spec)
{
    CfcSpec out;
    out.blocks.reserve(spec.blocks.size());
    for (const auto& b : spec.blocks)
        out.blocks.push_back(validate(b));
    return out;
}

BlockCensus census(const CfcSpec& spec)
{
    BlockCensus c;
    for (const auto& b : spec.blocks) {
        c.n += b.size;
        switch (b.kind) {
        case BlockKind::Type0:
            if (b.size == 1)
                ++c.j1;
            else if (b.size % 2 == 1)
                ++c.j_odd;
            else
                ++c.j_even;
            break;
        case BlockKind::TypeI:
            (b.size % 2 == 0 ? c.gamma_even : c.gamma_odd)++;
            break;
        case BlockKind::TypeII:
            if (b.mu == GaussianRational(-1))
                ++c.h_minus;
            else if (b.mu == GaussianRational(1))
                ++c.h_plus;
            else
                ++c.h2;
            break;
        }
    }
    return c;
}

std::string RhoValue::to_string() const
{
    const std::uint64_t g = std::gcd(quarters, std::uint64_t{4});
    const std::uint64_t num = quarters / (g == 0 ? 1 : g);
    const std::uint64_t den = 4 / (g == 0 ? 4 : g);
    if (quarters == 0)
        return "0";
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

RhoValue rho(const Block& b)
{
    return rho(CfcSpec{{b}});
}

RhoValue rho(const CfcSpec& spec)
{
    const BlockCensus c = census(spec);
    return {c.n - c.j1 + c.j_odd + c.gamma_even + 2 * c.h_minus};
}

CfcSpec SkewTarget::spec() const
{
    return h2_minus1_power(m) + repeat(Block::jordan(1), zero_pad);
}

Matrix materialize(const Block& b)
{
    const std::size_t n = b.size;
    Matrix m(n, n);
    switch (b.kind) {
    case BlockKind::Type0:
        for (std::size_t i = 0; i + 1 < n; ++i)
            m(i, i + 1) = 1;
        break;
    case BlockKind::TypeI:
        // Row r counted from the bottom as i = n-1-r carries (-1)^i in
        // columns i and i+1; Gamma_1 = [1].
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t i = n - 1 - r;
            const GaussianRational v(i % 2 == 0 ? 1 : -1);
            m(r, i) = v;
            if (i + 1 < n)
                m(r, i + 1) = v;
        }
        break;
    case BlockKind::TypeII: {
        const std::size_t k = n / 2;
        for (std::size_t i = 0; i < k; ++i) {
            m(i, k + i) = 1;
            m(k + i, i) = b.mu;
            if (i + 1 < k)
                m(k + i, i + 1) = 1;
        }
        break;
    }
    }
    return m;
}

Matrix materialize(const CfcSpec& spec)
{
    std::vector<Matrix> parts;
    parts.reserve(spec.blocks.size());
    for (const auto& b : spec.blocks)
        parts.push_back(materialize(b));
    return Matrix::direct_sum(parts);
}

std::size_t rank_a_plus_at_formula(const Block& b)
{
    const std::size_t n = b.size;
    switch (b.kind) {
    case BlockKind::Type0: return n % 2 == 1 ? n - 1 : n;
    case BlockKind::TypeI: return n % 2 == 1 ? n : n - 1;
    case BlockKind::TypeII:
        // Only H_{4k-2}(-1) has a singular symmetric part (corank 2).
        return b.mu == GaussianRational(-1) ? n - 2 : n;
    }
    return 0;
}

std::size_t rank_a_plus_at_formula(const CfcSpec& spec)
{
    std::size_t r = 0;
    for (const auto& b : spec.blocks)
        r += rank_a_plus_at_formula(b);
    return r;
}

std::pair<CfcSpec, std::size_t> strip_j1(const CfcSpec& spec)
{
    CfcSpec out;
    std::size_t removed = 0;
    for (const auto& b : spec.blocks) {
        if (b.is_j1())
            ++removed;
        else
            out.blocks.push_back(b);
    }
    return {out, removed};
}

} // namespace skewcfc

#include "skewcfc/catalog.hpp"

#include "skewcfc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace skewcfc {

namespace {

using G = GaussianRational;

const G I = G::i();

G half(long num) { return G::fraction(num, 2); }

Block J(std::size_t k) { return Block::jordan(k); }
Block Gm(std::size_t k) { return Block::gamma(k); }
Block H() { return Block::h2_minus1(); }

CfcSpec spec(std::initializer_list<Block> blocks) { return {std::vector<Block>(blocks)}; }

Rule primitive(CfcSpec lhs, CfcSpec rhs, Matrix w, const char* ref)
{
    return {std::move(lhs), std::move(rhs), std::move(w), Law::Primitive, ref};
}

void require(bool ok, const char* ref, const char* what)
{
    if (!ok)
        throw RuleError(std::string(ref) + ": " + what);
}

// I_n with the listed columns removed.
Matrix delete_columns(std::size_t n, std::initializer_list<std::size_t> dropped)
{
    Matrix z(n, n - dropped.size());
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (std::find(dropped.begin(), dropped.end(), j) != dropped.end())
            continue;
        z(j, col++) = 1;
    }
    return z;
}

} // namespace

Rule type0_even_drop(std::size_t k)
{
    require(k >= 1, "type0.even-drop", "k must be at least 1");
    Matrix w(2 * k, 2 * k - 1);
    w.place(1, 0, Matrix::identity(2 * k - 1));
    return primitive(spec({J(2 * k)}), spec({J(2 * k - 1)}), std::move(w), "type0.even-drop");
}

Rule type0_split_j3(std::size_t k)
{
    require(k >= 1, "type0.split-j3", "k must be at least 1");
    Matrix tail(4, 3);
    tail.place(1, 0, Matrix::identity(3));
    return primitive(spec({J(k + 4)}), spec({J(k), J(3)}), Matrix::direct_sum({Matrix::identity(k), tail}),
                     "type0.split-j3");
}

Rule type0_j2_pair()
{
    return primitive(spec({J(2), J(2)}), spec({H()}), Matrix{{1, 0}, {0, 1}, {0, 1}, {-1, 0}}, "type0.j2-pair");
}

Rule type0_j3()
{
    return primitive(spec({J(3)}), spec({H()}), Matrix{{1, 0}, {0, 1}, {-1, 0}}, "type0.j3");
}

Rule type0_j5()
{
    Matrix w{{0, 1, 1, 0}, {0, 0, 0, 1}, {0, -1, 0, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}};
    return primitive(spec({J(5)}), spec({H(), J(2)}), std::move(w), "type0.j5");
}

Rule typeII_peel(std::size_t k, const GaussianRational& mu)
{
    const char* ref = "typeII.peel";
    require(!mu.is_zero(), ref, "mu must be nonzero");
    require(mu != G(k % 2 == 0 ? -1 : 1), ref, "mu = (-1)^(k+1) is not an admissible block");
    const std::size_t n = 2 * k + 4;
    Matrix y = Matrix::identity(n);
    y(1, 0) = G(-1) - mu;
    Matrix z = delete_columns(n, {1, k + 3});
    std::vector<std::size_t> perm(2 * k + 2);
    std::iota(perm.begin(), perm.end(), 0);
    perm[1] = k + 1;
    for (std::size_t j = 0; j < k; ++j)
        perm[2 + j] = 1 + j;
    CfcSpec rhs = spec({H()});
    if (k > 0)
        rhs.blocks.push_back(Block::h(2 * k, mu));
    return primitive(spec({Block::h(n, mu)}), std::move(rhs), y * z * Matrix::from_permutation(perm), ref);
}

Rule typeII_cross_pair(const GaussianRational& mu, const GaussianRational& nu)
{
    const char* ref = "typeII.cross-pair";
    require(mu != nu, ref, "mu and nu must differ");
    require(mu != G(-1) && nu != G(-1), ref, "mu and nu must differ from -1");
    Matrix w{{1, 0}, {0, (nu + 1) / (nu - mu)}, {1, 0}, {0, (mu + 1) / (mu - nu)}};
    return primitive(spec({Block::h(2, mu), Block::h(2, nu)}), spec({H()}), std::move(w), ref);
}

Rule typeII_self_pair(const GaussianRational& mu)
{
    const char* ref = "typeII.self-pair";
    require(mu != G(1) && mu != G(-1), ref, "mu must differ from 1 and -1");
    Matrix w{{0, 1}, {(mu - 1).inverse(), 0}, {1, 0}, {0, (G(1) - mu).inverse()}};
    return primitive(spec({Block::h(2, mu), Block::h(2, mu)}), spec({H()}), std::move(w), ref);
}

Rule typeII_with_j2(const GaussianRational& mu)
{
    const char* ref = "typeII.with-j2";
    require(!mu.is_zero() && mu != G(-1), ref, "mu must differ from 0 and -1");
    Matrix w{{1, 0}, {0, -mu.inverse()}, {1, 0}, {0, (mu + 1) / mu}};
    return primitive(spec({Block::h(2, mu), J(2)}), spec({H()}), std::move(w), ref);
}

Rule typeI_odd_drop(std::size_t k)
{
    require(k >= 1, "typeI.odd-drop", "k must be at least 1");
    Matrix w(2 * k + 1, 2 * k);
    for (std::size_t j = 0; j < 2 * k; ++j)
        w(2 * k - j, j) = I;
    return primitive(spec({Gm(2 * k + 1)}), spec({Gm(2 * k)}), std::move(w), "typeI.odd-drop");
}

Rule typeI_peel(std::size_t k)
{
    require(k >= 1, "typeI.peel", "k must be at least 1");
    const std::size_t n = 2 * k + 4;
    Matrix z = delete_columns(n, {1, n - 2});
    std::vector<std::size_t> perm(2 * k + 2);
    perm[0] = 0;
    perm[1] = 2 * k + 1;
    for (std::size_t j = 0; j < 2 * k; ++j)
        perm[2 + j] = 1 + j;
    Matrix p = Matrix::from_permutation(perm);
    p(0, 0) = -1;
    return primitive(spec({Gm(n)}), spec({H(), Gm(2 * k)}), z * p, "typeI.peel");
}

Rule typeI_g4()
{
    Matrix w{{I, 0, 0}, {0, 0, 0}, {0, 0, I}, {0, I, 0}};
    return primitive(spec({Gm(4)}), spec({H(), Gm(1)}), std::move(w), "typeI.g4");
}

Rule gamma_j2_g1()
{
    return primitive(spec({J(2), Gm(1)}), spec({Gm(2)}), Matrix{{-1, 1}, {1, 1}, {1, 0}}, "gamma.j2-g1");
}

Rule gamma_g2_g1()
{
    return primitive(spec({Gm(2), Gm(1)}), spec({H()}), Matrix{{0, 1}, {1, 0}, {I, 0}}, "gamma.g2-g1");
}

Rule gamma_j2_g1_g1()
{
    Matrix w{{2, 0}, {0, 1}, {I, I * half(1)}, {1, half(-1)}};
    return primitive(spec({J(2), Gm(1), Gm(1)}), spec({H()}), std::move(w), "gamma.j2-g1-g1");
}

Rule gamma_g2_j2()
{
    Matrix w{{-1, 0, -1}, {0, 1, 0}, {0, 1, 1}, {0, -1, 1}};
    return primitive(spec({Gm(2), J(2)}), spec({H(), Gm(1)}), std::move(w), "gamma.g2-j2");
}

Rule gamma_g3_g2()
{
    Matrix w{{0, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, half(1), half(1)}, {0, 1, half(1), half(-1)}, {1, 0, 0, 0}};
    return primitive(spec({Gm(3), Gm(2)}), spec({H(), J(2)}), std::move(w), "gamma.g3-g2");
}

Rule gamma_g6_g2()
{
    const G hi = I * half(1);
    Matrix w{{-1, 0, 0, 0, 0, 0},     {0, 0, 0, 0, 0, 0},   {0, 0, 0, -I, half(-1), half(1)},
             {0, 0, 0, -I, 0, 1},     {0, 0, 0, 0, 0, 1},   {0, 1, 0, 0, 0, 0},
             {0, 0, -1, 0, -hi, -hi}, {0, 0, 0, 1, 0, 0}};
    return primitive(spec({Gm(6), Gm(2)}), spec({H(), H(), J(2)}), std::move(w), "gamma.g6-g2");
}

Rule gamma_g4_g4()
{
    const G hi = I * half(1);
    const G q = G::fraction(1, 4);
    Matrix w{{-1, 0, 0, 0, 0, 0},          {0, 0, 0, 0, 0, 0},
             {0, 0, 0, I, -hi, -hi},       {0, 1, 0, 0, 0, 0},
             {0, 0, -1, 0, -q, q},         {0, 0, 0, half(-1), half(1), half(1)},
             {0, 0, 0, 0, half(-1), half(1)}, {0, 0, 0, 1, 0, 0}};
    return primitive(spec({Gm(4), Gm(4)}), spec({H(), H(), J(2)}), std::move(w), "gamma.g4-g4");
}

Rule mixed_h2_g1_g1(const GaussianRational& mu)
{
    const char* ref = "mixed.h2-g1-g1";
    require(mu != G(1) && mu != G(-1), ref, "mu must differ from 1 and -1");
    const G d = (mu - 1).inverse();
    Matrix w{{1, 0}, {G(-1) - mu, G(-2) * d}, {G(1) + mu, d}, {0, I * d}};
    return primitive(spec({Block::h(2, mu), Gm(1), Gm(1)}), spec({H()}), std::move(w), ref);
}

Rule mixed_h2_g2(const GaussianRational& mu)
{
    const char* ref = "mixed.h2-g2";
    require(mu != G(1) && mu != G(-1), ref, "mu must differ from 1 and -1");
    const G d = (mu + 1).inverse();
    Matrix w{{1, 0, 1}, {-d, 0, d}, {0, 1, (mu - 1) * d}, {1, 0, 0}};
    return primitive(spec({Block::h(2, mu), Gm(2)}), spec({H(), Gm(1)}), std::move(w), ref);
}

Rule gamma2_pair()
{
    return primitive(spec({Gm(2), Gm(2)}), spec({H()}), Matrix{{0, 1}, {1, 0}, {0, 0}, {I, 0}}, "gamma2.pair");
}

Rule gamma2_reduce(std::size_t k)
{
    const CfcSpec all = repeat(Gm(2), k);
    const CfcSpec even = repeat(Gm(2), k - k % 2);
    std::vector<Rule> pairs(k / 2, gamma2_pair());
    Rule paired = combine_addition(pairs);
    if (k % 2 == 0)
        return paired;
    return combine_transitivity(apply_elimination(all, even), paired);
}

} // namespace skewcfc

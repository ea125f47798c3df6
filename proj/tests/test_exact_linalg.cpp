#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewcfc/errors.hpp"
#include "skewcfc/matrix.hpp"
#include "skewcfc/matrix_json.hpp"
#include "support.hpp"

#include <numeric>
#include <sstream>

using namespace skewcfc;
using G = GaussianRational;

namespace {

const G I = G::i();

// rank by brute force over all square minors (cofactor determinant).
G det(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    G total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero())
            continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c)
                    minor(r - 1, k++) = m(r, j);
        const G term = m(0, c) * det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

std::size_t minor_rank(const Matrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                Matrix sub(k, k);
                for (std::size_t r = 0, i = 0; r < rows; ++r) {
                    if (!rsel[r])
                        continue;
                    for (std::size_t c = 0, j = 0; c < cols; ++c)
                        if (csel[c])
                            sub(i, j++) = m(r, c);
                    ++i;
                }
                if (!det(sub).is_zero())
                    return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

Matrix h2m1() { return Matrix{{0, 1}, {-1, 0}}; }

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(rational_to_fraction(parse_rational("4/2")) == "2/1");
    CHECK(rational_to_fraction(Rational(-3, 4)) == "-3/4");
    CHECK(rational_to_short(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("gaussian rational field operations")
{
    CHECK(G(1, 1) * G(1, -1) == G(2));
    CHECK(I * I == G(-1));
    CHECK(G(2, 3) / G(2, 3) == G(1));
    CHECK(G(1, 2).inverse() == G(Rational(1, 5), Rational(-2, 5)));
    CHECK(G(3, 4).norm2() == 25);
    CHECK(G(3, 4).conj() == G(3, -4));
    CHECK_THROWS_AS(G().inverse(), DivisionByZero);
    CHECK_THROWS_AS(G(1) / G(), DivisionByZero);

    support::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const G a = support::random_entry(rng, true), b = support::random_entry(rng, true),
                c = support::random_entry(rng, true);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a - a == G());
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("gaussian literals round trip")
{
    CHECK(parse_gaussian("i") == I);
    CHECK(parse_gaussian("-i") == -I);
    CHECK(parse_gaussian("3/4i") == G(0, Rational(3, 4)));
    CHECK(parse_gaussian("1/2+3/4i") == G(Rational(1, 2), Rational(3, 4)));
    CHECK(parse_gaussian("1-i") == G(1, -1));
    CHECK(parse_gaussian("-2") == G(-2));
    CHECK_THROWS_AS(parse_gaussian("1+"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("2j"), ParseError);
    support::Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const G z = support::random_entry(rng, true);
        CHECK(parse_gaussian(z.to_literal()) == z);
    }
}

TEST_CASE("matrix product")
{
    const Matrix m{{1, 2}, {3, I}, {0, -1}};
    CHECK(Matrix::identity(3) * m == m);
    CHECK(h2m1() * h2m1() == -Matrix::identity(2));
    CHECK_THROWS_AS(m * m, DimensionMismatch);
    const Matrix x{{1, 0}, {0, 1}, {-1, 0}};
    const Matrix j3{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(congruence(j3, x) == h2m1());

    support::Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = support::random_matrix(rng, 3, 4), b = support::random_matrix(rng, 4, 2),
                     c = support::random_matrix(rng, 2, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
}

TEST_CASE("transpose, empty shapes and direct sums")
{
    CHECK(h2m1().transpose() == -h2m1());
    const Matrix e(0, 3);
    CHECK(e.transpose().rows() == 3);
    CHECK(e.transpose().cols() == 0);
    CHECK(Matrix::direct_sum(std::span<const Matrix>{}) == Matrix(0, 0));
    const Matrix j2{{0, 1}, {0, 0}};
    const Matrix jj = Matrix::direct_sum({j2, j2});
    CHECK(jj == Matrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    const Matrix a{{1, 2}, {3, 4}}, b{{I}};
    CHECK(Matrix::direct_sum({a, Matrix(0, 0), b}) == Matrix::direct_sum({a, b}));
    CHECK_THROWS_AS(a.at(2, 0), DimensionMismatch);
}

TEST_CASE("rank")
{
    const Matrix j2{{0, 1}, {0, 0}}, j3{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(rank(j2 + j2.transpose()) == 2);
    CHECK(rank(j3 + j3.transpose()) == 2);
    CHECK(rank(Matrix(4, 3)) == 0);
    CHECK(rank(Matrix(0, 0)) == 0);

    support::Rng rng(14);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = rng.uniform(1, 4), c = rng.uniform(1, 4), k = rng.uniform(1, 3);
        const Matrix m = support::random_matrix(rng, r, k) * support::random_matrix(rng, k, c);
        const std::size_t got = rank(m);
        CHECK(got == minor_rank(m));
        CHECK(got == support::oracle_rank(m));
        CHECK(got == rank(m.transpose()));
    }
    for (int t = 0; t < 40; ++t) {
        const Matrix m = support::random_matrix(rng, rng.uniform(5, 9), rng.uniform(5, 9));
        CHECK(rank(m) == support::oracle_rank(m));
    }
}

TEST_CASE("inverse")
{
    CHECK(inverse(Matrix::identity(4)) == Matrix::identity(4));
    CHECK(inverse(h2m1()) == Matrix{{0, -1}, {1, 0}});
    const G d[] = {2, I};
    const G dinv[] = {G::fraction(1, 2), -I};
    CHECK(inverse(Matrix::diagonal(d)) == Matrix::diagonal(dinv));
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrix);
    CHECK_THROWS_AS(inverse(Matrix(2, 3)), DimensionMismatch);

    support::Rng rng(15);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = rng.uniform(1, 6);
        const Matrix m = support::random_matrix(rng, n, n);
        if (rank(m) < n) {
            CHECK_THROWS_AS(inverse(m), SingularMatrix);
            continue;
        }
        CHECK(m * inverse(m) == Matrix::identity(n));
        CHECK(inverse(m) * m == Matrix::identity(n));
    }
}

TEST_CASE("permutation matrices")
{
    const std::size_t id[] = {0, 1, 2};
    CHECK(Matrix::from_permutation(id) == Matrix::identity(3));
    const Matrix a{{1, 2}, {3, 4}}, b{{5, 6}, {7, I}};
    const std::size_t swap[] = {2, 3, 0, 1};
    CHECK(congruence(Matrix::direct_sum({a, b}), Matrix::from_permutation(swap)) == Matrix::direct_sum({b, a}));
    // Cyclic (2 3 ... k+2) on 1-based indices, here k = 3.
    const std::size_t cyc[] = {0, 4, 1, 2, 3, 5};
    const Matrix p = Matrix::from_permutation(cyc);
    CHECK(p(4, 1) == G(1));
    CHECK(p(1, 2) == G(1));
    CHECK(p(0, 0) == G(1));
    CHECK(p.transpose() * p == Matrix::identity(6));
    const std::size_t dup[] = {0, 0};
    const std::size_t big[] = {0, 2};
    CHECK_THROWS_AS(Matrix::from_permutation(dup), InvalidPermutation);
    CHECK_THROWS_AS(Matrix::from_permutation(big), InvalidPermutation);
}

TEST_CASE("matrix json round trip")
{
    const Matrix m{{1, G::fraction(-3, 4)}, {I, G(Rational(1, 2), Rational(5))}};
    const auto j = matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["entries"][1][0] == "-3/4");
    CHECK(j["entries"][1][1] == "0/1");
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_from_json(matrix_to_json(Matrix(0, 3))) == Matrix(0, 3));
    auto bad = j;
    bad["rows"] = 3;
    CHECK_THROWS_AS(matrix_from_json(bad), DimensionMismatch);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"entries":[["x","0"]]})")),
                    ParseError);
    CHECK(matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"entries":[["2","-1"]]})")) ==
          Matrix{{G(2, -1)}});
}

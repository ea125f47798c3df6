// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the pinned tolerance is zero throughout.

#include "skewcfc/catalog.hpp"
#include "skewcfc/errors.hpp"
#include "skewcfc/planner.hpp"
#include "skewcfc/spec_dsl.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace skewcfc;
using G = GaussianRational;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what)
    {
        if (ok)
            return;
        pass = false;
        if (failures++ == 0)
            first_failure = what;
    }
};

Block J(std::size_t k) { return Block::jordan(k); }
Block Gm(std::size_t k) { return Block::gamma(k); }

bool holds(const Rule& r)
{
    const Matrix& x = r.witness();
    return x.rows() == r.lhs().size() && x.cols() == r.rhs().size() &&
           x.transpose() * materialize(r.lhs()) * x == materialize(r.rhs());
}

bool solves(const CfcSpec& spec, const Matrix& x, const Matrix& b)
{
    return x.rows() == spec.size() && x.cols() == b.rows() && x.transpose() * materialize(spec) * x == b;
}

std::string show(const CfcSpec& s) { return s.empty() ? "0" : format_spec(s); }

// ---------------------------------------------------------------- 1

Outcome witnesses()
{
    Outcome o;
    int count = 0;
    auto take = [&](const Rule& r) {
        ++count;
        o.check(holds(r), r.ref() + " on " + show(r.lhs()));
    };
    const auto mus = support::mu_sample();
    for (std::size_t k = 1; k <= 6; ++k) {
        take(type0_even_drop(k));
        take(type0_split_j3(k));
        take(typeI_odd_drop(k));
        take(typeI_peel(k));
    }
    take(type0_j2_pair());
    take(type0_j3());
    take(type0_j5());
    for (const G& mu : mus) {
        for (std::size_t k = 0; k <= 6; ++k)
            take(typeII_peel(k, mu));
        take(typeII_self_pair(mu));
        take(typeII_with_j2(mu));
        for (const G& nu : mus)
            if (nu != mu)
                take(typeII_cross_pair(mu, nu));
        take(mixed_h2_g1_g1(mu));
        take(mixed_h2_g2(mu));
    }
    for (std::size_t k = 1; k <= 6; ++k) {
        if (k % 2 == 0)
            take(typeII_peel(k, G(1)));
        else
            take(typeII_peel(k, G(-1)));
    }
    take(typeI_g4());
    for (const Rule& r : {gamma_j2_g1(), gamma_g2_g1(), gamma_j2_g1_g1(), gamma_g2_j2(), gamma_g3_g2(), gamma_g6_g2(),
                          gamma_g4_g4(), gamma2_pair()})
        take(r);

    const Matrix unsigned_pair{{0, -1}, {1, 0}, {0, 0}, {G::i(), 0}};
    o.check(congruence(materialize(repeat(Gm(2), 2)), unsigned_pair) == -materialize(Block::h2_minus1()),
            "unsigned G2-pair witness should give -H2(-1)");
    o.detail = std::to_string(count) + " witnesses exact; unsigned G2-pair variant gives -H2(-1)";
    return o;
}

// ---------------------------------------------------------------- 2

std::vector<Block> single_blocks(std::size_t max_size)
{
    std::vector<Block> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
        out.push_back(J(n));
        out.push_back(Gm(n));
        if (n % 2 != 0)
            continue;
        const std::size_t k = n / 2;
        for (const G& mu : support::mu_sample())
            out.push_back(Block::h(n, mu));
        out.push_back(Block::h(n, k % 2 == 0 ? G(1) : G(-1)));
    }
    return out;
}

Outcome rank_identities()
{
    Outcome o;
    const auto blocks = single_blocks(12);
    for (const Block& b : blocks) {
        const Matrix a = materialize(b);
        const std::size_t r = support::oracle_rank(a + a.transpose());
        o.check(rank_a_plus_at_formula(b) == r, "closed form for " + show(CfcSpec{{b}}));
        o.check(support::oracle_sym_rank(b) == r, "oracle table for " + show(CfcSpec{{b}}));
    }
    support::Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        const CfcSpec s = support::random_spec(rng, 5, 8, true);
        const Matrix a = materialize(s);
        const std::size_t r = support::oracle_rank(a + a.transpose());
        const BlockCensus c = census(s);
        o.check(s.size() - r == c.j1 + c.j_odd + c.gamma_even + 2 * c.h_minus, "deficiency identity on " + show(s));
        o.check(rho(s).quarters == 2 * s.size() - r - 2 * c.j1, "rho from the rank on " + show(s));
    }
    o.detail = std::to_string(blocks.size()) + " single blocks, 200 random specs";
    return o;
}

// ---------------------------------------------------------------- 3

// The eight per-block values, in quarters, written out as listed.
std::uint64_t table_quarters(const Block& b)
{
    const std::uint64_t n = b.size;
    switch (b.kind) {
    case BlockKind::Type0:
        if (n == 1)
            return 0;                  // J_1: 0
        if (n % 2 == 1)
            return 4 * ((n + 1) / 2) / 2; // J_{2k-1}: k/2
        return 4 * (n / 2) / 2;         // J_{2k}: k/2
    case BlockKind::TypeI:
        if (n % 2 == 1)
            return n;                  // G_{2k-1}: (2k-1)/4
        return n + 1;                  // G_{2k}: (2k+1)/4
    case BlockKind::TypeII:
        if (b.mu == G(-1))
            return 4 * ((n + 2) / 4);  // H_{4k-2}(-1): k
        if (b.mu == G(1))
            return 4 * (n / 4);        // H_{4k}(1): k
        return 4 * (n / 2) / 2;        // H_{2k}(mu): k/2
    }
    return 0;
}

Outcome rho_table()
{
    Outcome o;
    const auto blocks = single_blocks(12);
    for (const Block& b : blocks)
        o.check(rho(b).quarters == table_quarters(b), "rho of " + show(CfcSpec{{b}}));
    support::Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        const CfcSpec a = support::random_spec(rng, 5, 12, true);
        const CfcSpec b = support::random_spec(rng, 5, 12, true);
        o.check(rho(a + b) == rho(a) + rho(b), "additivity on " + show(a) + " + " + show(b));
        o.check(rho(a).quarters == support::oracle_rho_quarters(a), "oracle table on " + show(a));
    }
    o.detail = std::to_string(blocks.size()) + " single blocks, 200 concatenations";
    return o;
}

// ---------------------------------------------------------------- 4-6

std::vector<Certificate> chains;

void keep(const Verdict& v)
{
    if (v.certificate)
        chains.push_back(*v.certificate);
}

Outcome completeness()
{
    Outcome o;
    support::Rng rng(4242);
    std::size_t largest = 0;
    for (int t = 0; t < 300; ++t) {
        const CfcSpec s = support::random_spec(rng, 4, 14, false);
        largest = std::max(largest, s.size());
        const std::size_t m = rho(s).floor();
        const Verdict at = decide(s, m);
        keep(at);
        o.check(at.kind == VerdictKind::Consistent, show(s) + " at floor(rho)");
        if (at.kind == VerdictKind::Consistent) {
            const Solution sol = solve(s, m);
            o.check(solves(s, sol.x, materialize(h2_minus1_power(m))), "solution for " + show(s));
        }
        o.check(decide(s, m + 1).kind == VerdictKind::Inconsistent, show(s) + " above floor(rho)");
    }
    o.detail = "300 specs, n <= " + std::to_string(largest);
    return o;
}

Outcome gamma2_obstruction()
{
    Outcome o;
    for (std::size_t k = 1; k <= 12; ++k) {
        const CfcSpec s = repeat(Gm(2), k);
        for (std::size_t m = 0; m <= k; ++m) {
            const Verdict v = decide(s, m);
            keep(v);
            const VerdictKind want = m <= k / 2 ? VerdictKind::Consistent : VerdictKind::Inconsistent;
            o.check(v.kind == want, "G2^" + std::to_string(k) + " at m = " + std::to_string(m));
            if (v.kind == VerdictKind::Consistent && m > 0) {
                const Solution sol = solve(s, m);
                o.check(solves(s, sol.x, materialize(h2_minus1_power(m))), "solution for G2^" + std::to_string(k));
            }
        }
    }
    const Verdict four = decide(repeat(Gm(2), 4), 3);
    o.check(four.kind == VerdictKind::Inconsistent && four.necessity_bound == 3, "G2^4 at m = 3");
    o.detail = "k = 1..12, all m <= k; G2^4 at m = 3 Inconsistent with floor(rho) = 3";
    return o;
}

Outcome generic_case()
{
    Outcome o;
    support::Rng rng(99);
    for (std::size_t k = 1; k <= 8; ++k) {
        std::vector<G> mus;
        while (mus.size() < k) {
            const G mu = normalize_mu(support::random_mu(rng));
            if (std::find(mus.begin(), mus.end(), mu) == mus.end())
                mus.push_back(mu);
        }
        CfcSpec even;
        for (const G& mu : mus)
            even.blocks.push_back(Block::h(2, mu));
        for (std::size_t m = 0; m <= k; ++m) {
            const Verdict v = decide(even, m);
            keep(v);
            const VerdictKind want = 2 * m <= k ? VerdictKind::Consistent : VerdictKind::Inconsistent;
            o.check(v.kind == want, "n = " + std::to_string(2 * k) + " at m = " + std::to_string(m));
            if (v.kind == VerdictKind::Consistent)
                o.check(solves(even, solve(even, m).x, materialize(h2_minus1_power(m))),
                        "solution for n = " + std::to_string(2 * k));
        }
        const CfcSpec odd = even + CfcSpec{{Gm(1)}};
        const std::size_t half = k / 2;
        const Verdict v = decide(odd, half);
        keep(v);
        o.check(v.kind == VerdictKind::Consistent, "n = " + std::to_string(2 * k + 1) + " at m = floor(k/2)");
        if (half > 0)
            o.check(v.reason == Reason::EliminationPath, "n = " + std::to_string(2 * k + 1) + " via elimination");
        if (v.kind == VerdictKind::Consistent)
            o.check(solves(odd, solve(odd, half).x, materialize(h2_minus1_power(half))),
                    "solution for n = " + std::to_string(2 * k + 1));
        o.check(decide(odd, half + 1).kind == VerdictKind::Inconsistent,
                "n = " + std::to_string(2 * k + 1) + " above n/2");
    }
    o.detail = "k = 1..8, distinct random mu; odd case via elimination";
    return o;
}

// ---------------------------------------------------------------- 7

Outcome invariances()
{
    Outcome o;
    support::Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        CfcSpec s = support::random_spec(rng, 5, 8, true);
        const std::size_t m = rng.uniform(0, rho(s).floor() + 1);
        const VerdictKind base = decide(s, m).kind;
        std::shuffle(s.blocks.begin(), s.blocks.end(), rng.engine());
        o.check(decide(s, m).kind == base, "permutation of " + show(s));
    }
    for (int t = 0; t < 100; ++t) {
        const CfcSpec s = support::random_spec(rng, 5, 8, true);
        const std::size_t m = rng.uniform(0, rho(s).floor() + 1);
        const VerdictKind base = decide(s, m).kind;
        CfcSpec padded = s + repeat(J(1), rng.uniform(1, 5));
        std::shuffle(padded.blocks.begin(), padded.blocks.end(), rng.engine());
        o.check(decide(padded, m).kind == base, "J1 padding of " + show(s));
    }
    o.detail = "100 permuted specs, 100 J1-padded specs";
    return o;
}

// ---------------------------------------------------------------- 8

Outcome general_targets()
{
    Outcome o;
    support::Rng rng(8);
    int solved = 0, refused = 0;
    while (solved < 100) {
        const CfcSpec s = support::random_spec(rng, 4, 10, false);
        const std::size_t bound = rho(s).floor();
        if (bound == 0)
            continue;
        const std::size_t n = rng.uniform(2, 10);
        const std::size_t k = rng.uniform(1, std::min(bound, n / 2));
        const Matrix b = support::random_skew(rng, n, k);
        const Matrix x = solve_general(s, b);
        o.check(solves(s, x, b), "general B for " + show(s));
        ++solved;

        const std::size_t over = bound + 1;
        if (2 * over <= 10) {
            const Matrix high = support::random_skew(rng, 2 * over, over);
            const std::size_t r = support::oracle_rank(high);
            if (r > 2 * bound) {
                o.check(decide(s, r / 2).kind == VerdictKind::Inconsistent, "rank above 2 rho for " + show(s));
                bool threw = false;
                try {
                    solve_general(s, high);
                } catch (const QueryError&) {
                    threw = true;
                }
                o.check(threw, "solve_general refuses " + show(s));
                ++refused;
            }
        }
    }
    o.detail = std::to_string(solved) + " solved exactly, " + std::to_string(refused) + " over-rank targets refused";
    return o;
}

// ---------------------------------------------------------------- 9

Outcome rho_invariance()
{
    Outcome o;
    std::size_t steps = 0;
    std::map<std::string, int> offenders;
    for (const Certificate& c : chains)
        for (const Rule& s : c.steps) {
            ++steps;
            if (s.law() == Law::Elimination || rho(s.lhs()) == rho(s.rhs()))
                continue;
            ++offenders[s.ref()];
            o.check(false, s.ref() + ": " + show(s.lhs()) + " ~> " + show(s.rhs()));
        }
    std::ostringstream d;
    d << chains.size() << " certificates, " << steps << " steps";
    if (!offenders.empty()) {
        d << "; rho drops outside elimination:";
        for (const auto& [ref, n] : offenders)
            d << ' ' << ref << " x" << n;
    }
    o.detail = d.str();
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"witness fidelity", witnesses},
        {"rank identities", rank_identities},
        {"rho table and additivity", rho_table},
        {"completeness without G1/G2", completeness},
        {"G2 obstruction", gamma2_obstruction},
        {"generic case", generic_case},
        {"law invariances", invariances},
        {"general skew B", general_targets},
        {"rho-invariance of chains", rho_invariance},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, run] = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << name << " (" << o.detail;
        if (o.failures > 0)
            std::cout << "; " << o.failures << " failed, first: " << o.first_failure;
        std::cout << "; " << static_cast<int>(secs * 1000) << " ms)\n";
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

#include "skewcfc/planner.hpp"

#include "skewcfc/catalog.hpp"
#include "skewcfc/errors.hpp"
#include "skewcfc/skew_canon.hpp"
#include "skewcfc/spec_dsl.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace skewcfc {

std::string_view verdict_name(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::Consistent: return "Consistent";
    case VerdictKind::Inconsistent: return "Inconsistent";
    case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view reason_label(Reason reason)
{
    switch (reason) {
    case Reason::TrivialTarget: return "trivial-target";
    case Reason::Sufficiency: return "sufficiency";
    case Reason::Gamma2Sufficiency: return "gamma2-sufficiency";
    case Reason::EliminationPath: return "elimination-path";
    case Reason::NecessityBound: return "necessity-bound";
    case Reason::Gamma2Bound: return "gamma2-bound";
    case Reason::SymmetricSource: return "symmetric-source";
    case Reason::OpenMixedCase: return "open-mixed-case";
    }
    return "?";
}

std::string_view reason_text(Reason reason)
{
    switch (reason) {
    case Reason::TrivialTarget: return "m = 0: every A reaches the empty form by elimination";
    case Reason::Sufficiency: return "no G1/G2 blocks: consistent exactly when m <= floor(rho(A))";
    case Reason::Gamma2Sufficiency: return "A = G2^k (+ J1s): consistent since m <= floor(k/2)";
    case Reason::EliminationPath:
        return "G1/G2 blocks paired (G2+G1, G2+G2) or eliminated; the remaining blocks reach m";
    case Reason::NecessityBound: return "rank B = 2m exceeds 2 rho(A)";
    case Reason::Gamma2Bound: return "A = G2^k (+ J1s): m exceeds floor(k/2)";
    case Reason::SymmetricSource: return "A is congruent to a symmetric matrix, so X^T A X is symmetric and a skew B must be 0";
    case Reason::OpenMixedCase:
        return "G1/G2 mixed with other blocks: m is within the rho bound but beyond the constructive bound";
    }
    return "?";
}

namespace {

const Block kJ2 = Block::jordan(2);
const Block kG1 = Block::gamma(1);
const Block kG2 = Block::gamma(2);

// Incrementally builds a chain, applying rules to block ranges of the
// current spec.
class ChainBuilder {
public:
    explicit ChainBuilder(CfcSpec source) : source_(source), current_(std::move(source)) {}

    const std::vector<Block>& blocks() const { return current_.blocks; }

    void push(Rule rule)
    {
        if (rule.lhs() != current_)
            throw InternalError("chain step does not start at '" + format_spec(current_) + "'");
        current_ = rule.rhs();
        steps_.push_back(std::move(rule));
    }

    void apply_at(std::size_t pos, const Rule& rule)
    {
        const auto& b = current_.blocks;
        const auto& lhs = rule.lhs().blocks;
        if (pos + lhs.size() > b.size() || !std::equal(lhs.begin(), lhs.end(), b.begin() + pos))
            throw InternalError("rule " + rule.ref() + " does not apply at block " + std::to_string(pos) + " of '" +
                                format_spec(current_) + "'");
        CfcSpec prefix{{b.begin(), b.begin() + pos}};
        CfcSpec suffix{{b.begin() + pos + lhs.size(), b.end()}};
        push(lift(rule, prefix, suffix));
    }

    void append(const Certificate& cert, std::size_t pos)
    {
        for (const auto& step : cert.steps)
            apply_at(pos, step);
    }

    void permute(const std::vector<std::size_t>& sigma)
    {
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (sigma[i] != i) {
                push(apply_permutation(current_, sigma));
                return;
            }
    }

    /// H_2(-1) blocks first, then `chosen` in the given order, then the rest.
    void arrange(const std::vector<std::size_t>& chosen)
    {
        const auto& b = current_.blocks;
        std::vector<bool> used(b.size(), false);
        std::vector<std::size_t> sigma;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i].is_h2_minus1()) {
                sigma.push_back(i);
                used[i] = true;
            }
        for (std::size_t i : chosen)
            if (!used[i]) {
                sigma.push_back(i);
                used[i] = true;
            }
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!used[i])
                sigma.push_back(i);
        permute(sigma);
    }

    void gather_h() { arrange({}); }

    std::size_t leading_h() const
    {
        const auto& b = current_.blocks;
        return std::find_if(b.begin(), b.end(), [](const Block& x) { return !x.is_h2_minus1(); }) - b.begin();
    }

    /// Indices of non-H_2(-1) blocks equal to `which`.
    std::vector<std::size_t> find(const Block& which) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < current_.blocks.size(); ++i)
            if (current_.blocks[i] == which && !which.is_h2_minus1())
                out.push_back(i);
        return out;
    }

    void eliminate_to(std::size_t keep_blocks)
    {
        const auto& b = current_.blocks;
        if (keep_blocks >= b.size())
            return;
        push(apply_elimination(current_, CfcSpec{{b.begin(), b.begin() + keep_blocks}}));
    }

    void strip_j1()
    {
        if (std::any_of(blocks().begin(), blocks().end(), [](const Block& b) { return b.is_j1(); }))
            push(apply_j1_law(current_));
    }

    Certificate finish() &&
    {
        return {std::move(source_), std::move(current_), std::move(steps_)};
    }

private:
    CfcSpec source_;
    CfcSpec current_;
    std::vector<Rule> steps_;
};

void require_kind(const CfcSpec& spec, BlockKind kind, const char* who)
{
    for (const auto& b : spec.blocks)
        if (b.kind != kind)
            throw QueryError(std::string(who) + ": unexpected block " + b.to_string());
}

} // namespace

Certificate reduce_type0(const CfcSpec& spec)
{
    require_kind(spec, BlockKind::Type0, "reduce_type0");
    ChainBuilder c(spec);
    c.strip_j1();
    std::size_t pos = 0;
    while (pos < c.blocks().size()) {
        std::size_t n = c.blocks()[pos].size;
        if (n == 2) {
            ++pos;
            continue;
        }
        if (n % 2 == 0) {
            c.apply_at(pos, type0_even_drop(n / 2));
            --n;
        }
        const std::size_t threes = (n % 4 == 3) ? (n + 1) / 4 : (n - 5) / 4;
        const std::size_t head = (n % 4 == 3) ? 3 : 5;
        for (; n > head; n -= 4)
            c.apply_at(pos, type0_split_j3(n - 4));
        if (head == 5) {
            c.apply_at(pos, type0_j5());
            pos += 2;
        }
        for (std::size_t i = 0; i < threes; ++i)
            c.apply_at(pos + i, type0_j3());
        pos += threes;
    }
    c.gather_h();
    const std::size_t h = c.leading_h();
    const std::size_t pairs = (c.blocks().size() - h) / 2;
    for (std::size_t p = 0; p < pairs; ++p)
        c.apply_at(h + p, type0_j2_pair());
    return std::move(c).finish();
}

Certificate reduce_typeII(const CfcSpec& spec)
{
    require_kind(spec, BlockKind::TypeII, "reduce_typeII");
    ChainBuilder c(spec);
    for (std::size_t pos = 0; pos < c.blocks().size();) {
        const Block& b = c.blocks()[pos];
        if (b.size >= 4)
            c.apply_at(pos, typeII_peel((b.size - 4) / 2, b.mu));
        ++pos;
    }
    c.gather_h();
    const std::size_t h = c.leading_h();
    const std::size_t pairs = (c.blocks().size() - h) / 2;
    for (std::size_t p = 0; p < pairs; ++p) {
        const auto& mu = c.blocks()[h + p].mu;
        const auto& nu = c.blocks()[h + p + 1].mu;
        c.apply_at(h + p, mu == nu ? typeII_self_pair(mu) : typeII_cross_pair(mu, nu));
    }
    return std::move(c).finish();
}

namespace {

// What a gamma block of size >= 3 is first reduced to.
enum class GammaRole {
    Quad,    ///< G_{4k}, G_{4k+1} -> H^{k-1} + G_4
    Keep3,   ///< G_3 paired with G_3, left alone
    Drop3,   ///< G_3 paired with G_3, -> G_2
    Big,     ///< G_{4u+2+e}, u >= 1, paired -> H^{u-1} + G_6
    Small,   ///< G_{4u+2+e} -> H^u + G_2
};

std::vector<GammaRole> gamma_roles(const CfcSpec& spec)
{
    std::vector<GammaRole> roles(spec.blocks.size(), GammaRole::Quad);
    std::vector<std::size_t> odd_class;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
        if (spec.blocks[i].size % 4 >= 2)
            odd_class.push_back(i);
    for (std::size_t p = 0; p + 1 < odd_class.size(); p += 2) {
        const std::size_t x = odd_class[p], y = odd_class[p + 1];
        if (spec.blocks[x].size == 3 && spec.blocks[y].size == 3) {
            roles[x] = GammaRole::Keep3;
            roles[y] = GammaRole::Drop3;
        } else if (spec.blocks[x].size > 3) {
            roles[x] = GammaRole::Big;
            roles[y] = GammaRole::Small;
        } else {
            roles[x] = GammaRole::Small;
            roles[y] = GammaRole::Big;
        }
    }
    if (odd_class.size() % 2 == 1)
        roles[odd_class.back()] = GammaRole::Small;
    return roles;
}

} // namespace

Certificate reduce_typeI(const CfcSpec& spec)
{
    require_kind(spec, BlockKind::TypeI, "reduce_typeI");
    for (const auto& b : spec.blocks)
        if (b.size < 3)
            throw QueryError("reduce_typeI: " + b.to_string() + " is below size 3");
    const auto roles = gamma_roles(spec);
    ChainBuilder c(spec);

    // Each block becomes H^a + residue, residues in the original order.
    std::size_t pos = 0;
    for (std::size_t i = 0; i < roles.size(); ++i) {
        std::size_t n = spec.blocks[i].size;
        if (roles[i] == GammaRole::Keep3) {
            ++pos;
            continue;
        }
        if (n % 2 == 1) {
            c.apply_at(pos, typeI_odd_drop(n / 2));
            --n;
        }
        const std::size_t stop = roles[i] == GammaRole::Quad ? 4 : roles[i] == GammaRole::Big ? 6 : 2;
        for (; n > stop; n -= 4)
            c.apply_at(pos++, typeI_peel((n - 4) / 2));
        ++pos;
    }

    // Residue i sits at the i-th non-H position. Line up the combinations.
    std::vector<std::size_t> residue;
    for (std::size_t k = 0; k < c.blocks().size(); ++k)
        if (!c.blocks()[k].is_h2_minus1())
            residue.push_back(k);
    if (residue.size() != roles.size())
        throw InternalError("reduce_typeI: residue count mismatch");
    std::vector<std::size_t> chosen;
    std::vector<Rule> rules;
    std::vector<std::size_t> quads;
    for (std::size_t i = 0; i < roles.size(); ++i)
        if (roles[i] == GammaRole::Quad)
            quads.push_back(residue[i]);
    for (std::size_t q = 0; q < quads.size(); q += 2) {
        chosen.push_back(quads[q]);
        if (q + 1 < quads.size()) {
            chosen.push_back(quads[q + 1]);
            rules.push_back(gamma_g4_g4());
        } else {
            rules.push_back(typeI_g4());
        }
    }
    // Non-quad residues pair up in order, as gamma_roles paired them.
    std::optional<std::size_t> lead;
    GammaRole lead_role = GammaRole::Quad;
    for (std::size_t i = 0; i < roles.size(); ++i) {
        const GammaRole r = roles[i];
        if (r == GammaRole::Quad)
            continue;
        if (!lead) {
            lead = residue[i];
            lead_role = r;
            continue;
        }
        std::size_t first = *lead, second = residue[i];
        if (lead_role == GammaRole::Keep3) {
            rules.push_back(gamma_g3_g2());
        } else {
            if (lead_role == GammaRole::Small)
                std::swap(first, second);
            rules.push_back(gamma_g6_g2());
        }
        chosen.push_back(first);
        chosen.push_back(second);
        lead.reset();
    }
    c.arrange(chosen);
    pos = c.leading_h();
    for (const auto& rule : rules) {
        c.apply_at(pos, rule);
        pos += rule.rhs().blocks.size();
    }

    // Pair every J_2, then settle what is left of {J_2, G_1, G_2}.
    auto j2s = c.find(kJ2);
    c.arrange(j2s);
    std::size_t h = c.leading_h();
    for (std::size_t p = 0; p < j2s.size() / 2; ++p)
        c.apply_at(h + p, type0_j2_pair());
    const bool has_j2 = j2s.size() % 2 == 1;
    const bool has_g1 = !c.find(kG1).empty();
    const bool has_g2 = !c.find(kG2).empty();
    auto first_of = [&](const Block& b) { return c.find(b).front(); };
    if (has_g2 && has_g1) {
        c.arrange({first_of(kG2), first_of(kG1)});
        c.apply_at(c.leading_h(), gamma_g2_g1());
    } else if (has_g2 && has_j2) {
        c.arrange({first_of(kG2), first_of(kJ2)});
        c.apply_at(c.leading_h(), gamma_g2_j2());
    } else if (has_j2 && has_g1) {
        c.arrange({first_of(kJ2), first_of(kG1)});
        c.apply_at(c.leading_h(), gamma_j2_g1());
    }
    c.gather_h();
    return std::move(c).finish();
}

Certificate combine_leftovers(const Certificate& type0, const Certificate& typeI, const Certificate& typeII)
{
    ChainBuilder c(type0.source + typeI.source + typeII.source);
    c.append(type0, 0);
    c.append(typeI, type0.target.blocks.size());
    c.append(typeII, type0.target.blocks.size() + typeI.target.blocks.size());
    c.gather_h();

    const std::size_t h = c.leading_h();
    const CfcSpec rest{{c.blocks().begin() + h, c.blocks().end()}};
    if (rho(rest).quarters >= 4) {
        std::optional<std::size_t> h2;
        for (std::size_t i = h; i < c.blocks().size(); ++i)
            if (c.blocks()[i].kind == BlockKind::TypeII)
                h2 = i;
        const auto j2 = c.find(kJ2), g1 = c.find(kG1), g2 = c.find(kG2);
        if (h2 && !j2.empty()) {
            const auto mu = c.blocks()[*h2].mu;
            c.arrange({*h2, j2.front()});
            c.apply_at(h, typeII_with_j2(mu));
        } else if (h2 && !g2.empty()) {
            const auto mu = c.blocks()[*h2].mu;
            c.arrange({*h2, g2.front()});
            c.apply_at(h, mixed_h2_g2(mu));
        } else if (h2 && g1.size() >= 2) {
            const auto mu = c.blocks()[*h2].mu;
            c.arrange({*h2, g1[0], g1[1]});
            c.apply_at(h, mixed_h2_g1_g1(mu));
        } else if (j2.size() >= 2) {
            c.arrange({j2[0], j2[1]});
            c.apply_at(h, type0_j2_pair());
        } else if (!j2.empty() && !g2.empty()) {
            c.arrange({g2.front(), j2.front()});
            c.apply_at(h, gamma_g2_j2());
        } else if (!j2.empty() && g1.size() >= 2) {
            c.arrange({j2.front(), g1[0], g1[1]});
            c.apply_at(h, gamma_j2_g1_g1());
        } else {
            throw InternalError("combine_leftovers: no rule for leftovers '" + format_spec(rest) + "'");
        }
        c.gather_h();
    }
    c.eliminate_to(c.leading_h());
    Certificate cert = std::move(c).finish();
    if (cert.target != h2_minus1_power(rho(cert.source).floor()))
        throw InternalError("combine_leftovers ended at '" + format_spec(cert.target) + "'");
    return cert;
}

namespace {

// Certificate spec ~> H_2(-1)^floor(rho) for a spec without G_1/G_2.
Certificate sufficiency_certificate(const CfcSpec& spec)
{
    ChainBuilder c(spec);
    c.strip_j1();
    std::vector<std::size_t> sigma;
    CfcSpec parts[3];
    for (BlockKind kind : {BlockKind::Type0, BlockKind::TypeI, BlockKind::TypeII}) {
        for (std::size_t i = 0; i < c.blocks().size(); ++i)
            if (c.blocks()[i].kind == kind) {
                sigma.push_back(i);
                parts[static_cast<int>(kind)].blocks.push_back(c.blocks()[i]);
            }
    }
    c.permute(sigma);
    c.append(combine_leftovers(reduce_type0(parts[0]), reduce_typeI(parts[1]), reduce_typeII(parts[2])), 0);
    return std::move(c).finish();
}

struct MixedPlan {
    std::vector<std::size_t> rest;   ///< blocks other than J_1, G_1, G_2
    std::vector<std::size_t> g1, g2;
    std::size_t g2_g1_pairs = 0;
    std::size_t g2_pairs = 0;
    std::uint64_t reachable = 0;     ///< floor(rho(rest)) + pairs
};

MixedPlan plan_mixed(const CfcSpec& spec)
{
    MixedPlan p;
    CfcSpec rest;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        const Block& b = spec.blocks[i];
        if (b.is_j1())
            continue;
        if (b.is_gamma(1)) {
            p.g1.push_back(i);
        } else if (b.is_gamma(2)) {
            p.g2.push_back(i);
        } else {
            p.rest.push_back(i);
            rest.blocks.push_back(b);
        }
    }
    p.g2_g1_pairs = std::min(p.g1.size(), p.g2.size());
    p.g2_pairs = (p.g2.size() - p.g2_g1_pairs) / 2;
    p.reachable = rho(rest).floor() + p.g2_g1_pairs + p.g2_pairs;
    return p;
}

// Reduce the non-gamma blocks, pair G_2 + G_1 then G_2 + G_2, eliminate the
// remaining G_1/G_2, and finally eliminate down to m.
Certificate mixed_certificate(const CfcSpec& spec, const MixedPlan& p, std::size_t m)
{
    ChainBuilder c(spec);
    std::vector<std::size_t> sigma;
    std::vector<bool> used(spec.blocks.size(), false);
    auto take = [&](std::size_t i) {
        sigma.push_back(i);
        used[i] = true;
    };
    for (std::size_t i : p.rest)
        take(i);
    for (std::size_t k = 0; k < p.g2_g1_pairs; ++k) {
        take(p.g2[k]);
        take(p.g1[k]);
    }
    for (std::size_t k = 0; k < 2 * p.g2_pairs; ++k)
        take(p.g2[p.g2_g1_pairs + k]);
    const std::size_t kept = sigma.size();
    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
        if (!used[i])
            sigma.push_back(i);
    c.permute(sigma);
    c.eliminate_to(kept);

    const std::size_t r = p.rest.size();
    for (std::size_t k = 0; k < p.g2_g1_pairs; ++k)
        c.apply_at(r + k, gamma_g2_g1());
    for (std::size_t k = 0; k < p.g2_pairs; ++k)
        c.apply_at(r + p.g2_g1_pairs + k, gamma2_pair());
    if (r > 0)
        c.append(sufficiency_certificate(CfcSpec{{c.blocks().begin(), c.blocks().begin() + r}}), 0);
    c.eliminate_to(m);
    return std::move(c).finish();
}

struct GammaShape {
    bool any_small = false;   ///< some G_1 or G_2
    bool only_g2 = false;     ///< non-J_1 part is G_2^k, k >= 1
    bool only_g1 = false;     ///< non-J_1 part is G_1^k, k >= 1
    std::size_t g2 = 0;
};

GammaShape gamma_shape(const CfcSpec& spec)
{
    GammaShape s;
    std::size_t g1 = 0, other = 0;
    for (const auto& b : spec.blocks) {
        if (b.is_j1())
            continue;
        if (b.is_gamma(1))
            ++g1;
        else if (b.is_gamma(2))
            ++s.g2;
        else
            ++other;
    }
    s.any_small = g1 + s.g2 > 0;
    s.only_g2 = s.g2 > 0 && g1 == 0 && other == 0;
    s.only_g1 = g1 > 0 && s.g2 == 0 && other == 0;
    return s;
}

} // namespace

Verdict decide(const CfcSpec& spec, std::size_t m)
{
    validate(spec);
    Verdict v;
    v.m = m;
    v.necessity_bound = rho(spec).floor();
    const GammaShape shape = gamma_shape(spec);

    auto consistent = [&](Reason reason, Certificate cert) {
        if (!cert.verify())
            throw InternalError("certificate for '" + format_spec(spec) + "' failed verification");
        v.kind = VerdictKind::Consistent;
        v.reason = reason;
        v.certificate = std::move(cert);
    };
    auto reject = [&](VerdictKind kind, Reason reason) {
        v.kind = kind;
        v.reason = reason;
    };

    if (m == 0) {
        consistent(Reason::TrivialTarget, Certificate{spec, {}, {apply_elimination(spec, {})}});
    } else if (m > v.necessity_bound) {
        reject(VerdictKind::Inconsistent, Reason::NecessityBound);
    } else if (!shape.any_small) {
        ChainBuilder c(spec);
        c.append(sufficiency_certificate(spec), 0);
        c.eliminate_to(m);
        consistent(Reason::Sufficiency, std::move(c).finish());
    } else if (shape.only_g2) {
        if (m <= shape.g2 / 2)
            consistent(Reason::Gamma2Sufficiency, mixed_certificate(spec, plan_mixed(spec), m));
        else
            reject(VerdictKind::Inconsistent, Reason::Gamma2Bound);
    } else if (shape.only_g1) {
        reject(VerdictKind::Inconsistent, Reason::SymmetricSource);
    } else {
        const MixedPlan plan = plan_mixed(spec);
        if (m <= plan.reachable)
            consistent(Reason::EliminationPath, mixed_certificate(spec, plan, m));
        else
            reject(VerdictKind::Unknown, Reason::OpenMixedCase);
    }
    return v;
}

Solution solve(const CfcSpec& spec, std::size_t m)
{
    Verdict v = decide(spec, m);
    if (v.kind != VerdictKind::Consistent)
        throw QueryError("'" + format_spec(spec) + "' with m = " + std::to_string(m) + " is " +
                         std::string(verdict_name(v.kind)) + " (" + std::string(reason_label(v.reason)) + ")");
    Matrix x = v.certificate->composed_witness();
    return {std::move(x), std::move(*v.certificate)};
}

Matrix solve_general(const CfcSpec& spec, const Matrix& b)
{
    if (!is_skew(b))
        throw QueryError("right-hand side is not skew-symmetric");
    const SkewReduction red = skew_canonicalize(b);
    const Solution sol = solve(spec, red.m);
    Matrix x1(spec.size(), b.rows());
    x1.place(0, 0, sol.x);
    Matrix x = x1 * inverse(red.q);
    if (!verify(spec, x, b))
        throw InternalError("solve_general produced a non-verifying X");
    return x;
}

MaxSkewRank max_skew_rank(const CfcSpec& spec)
{
    validate(spec);
    MaxSkewRank r;
    const std::uint64_t bound = rho(spec).floor();
    r.upper_bound = 2 * bound;
    const GammaShape shape = gamma_shape(spec);
    std::uint64_t best = bound;
    bool known = true;
    if (shape.only_g2) {
        best = shape.g2 / 2;
    } else if (shape.only_g1) {
        best = 0;
    } else if (shape.any_small) {
        best = plan_mixed(spec).reachable;
        known = best == bound;
    }
    r.lower_bound = 2 * best;
    if (known)
        r.value = 2 * best;
    return r;
}

bool verify(const Matrix& a, const Matrix& x, const Matrix& b)
{
    if (!a.is_square() || !b.is_square() || x.rows() != a.rows() || x.cols() != b.rows())
        throw DimensionMismatch("verify: A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                ", X is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + ", B is " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    return congruence(a, x) == b;
}

bool verify(const CfcSpec& spec, const Matrix& x, const Matrix& b)
{
    return verify(materialize(spec), x, b);
}

} // namespace skewcfc

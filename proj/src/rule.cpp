#include "skewcfc/rule.hpp"

#include "skewcfc/errors.hpp"
#include "skewcfc/spec_dsl.hpp"

#include <vector>

namespace skewcfc {

std::string_view law_name(Law law)
{
    switch (law) {
    case Law::Primitive: return "primitive";
    case Law::Identity: return "identity";
    case Law::Addition: return "addition";
    case Law::Transitivity: return "transitivity";
    case Law::Permutation: return "permutation";
    case Law::Elimination: return "elimination";
    case Law::J1Law: return "j1-law";
    }
    return "?";
}

Rule::Rule(CfcSpec lhs, CfcSpec rhs, Matrix witness, Law law, std::string ref)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), witness_(std::move(witness)), law_(law), ref_(std::move(ref))
{
    const std::size_t n = lhs_.size(), m = rhs_.size();
    if (witness_.rows() != n || witness_.cols() != m)
        throw RuleError("witness for " + ref_ + " is " + std::to_string(witness_.rows()) + "x" +
                        std::to_string(witness_.cols()) + ", expected " + std::to_string(n) + "x" +
                        std::to_string(m));
    if (congruence(materialize(lhs_), witness_) != materialize(rhs_))
        throw RuleError("witness for " + ref_ + " does not verify: " + format_spec(lhs_) + " ~> " +
                        format_spec(rhs_));
}

Rule identity_rule(const CfcSpec& spec)
{
    return {spec, spec, Matrix::identity(spec.size()), Law::Identity, "identity"};
}

Rule combine_addition(std::span<const Rule> rules)
{
    CfcSpec lhs, rhs;
    std::vector<Matrix> parts;
    parts.reserve(rules.size());
    for (const auto& r : rules) {
        lhs = std::move(lhs) + r.lhs();
        rhs = std::move(rhs) + r.rhs();
        parts.push_back(r.witness());
    }
    return {std::move(lhs), std::move(rhs), Matrix::direct_sum(parts), Law::Addition, "addition"};
}

Rule combine_transitivity(const Rule& first, const Rule& second)
{
    if (first.rhs() != second.lhs())
        throw RuleError("cannot compose: middle specs differ (" + format_spec(first.rhs()) + " vs " +
                        format_spec(second.lhs()) + ")");
    return {first.lhs(), second.rhs(), first.witness() * second.witness(), Law::Transitivity, "transitivity"};
}

namespace {

// Scalar index permutation realizing a block permutation.
std::vector<std::size_t> expand_block_permutation(const CfcSpec& lhs, std::span<const std::size_t> sigma)
{
    const std::size_t count = lhs.blocks.size();
    std::vector<bool> seen(count, false);
    if (sigma.size() != count)
        throw InvalidPermutation("permutation has " + std::to_string(sigma.size()) + " entries for " +
                                 std::to_string(count) + " blocks");
    for (std::size_t s : sigma) {
        if (s >= count || seen[s])
            throw InvalidPermutation("not a permutation of the blocks");
        seen[s] = true;
    }
    std::vector<std::size_t> offset(count + 1, 0);
    for (std::size_t b = 0; b < count; ++b)
        offset[b + 1] = offset[b] + lhs.blocks[b].size;
    std::vector<std::size_t> perm;
    perm.reserve(offset.back());
    for (std::size_t s : sigma)
        for (std::size_t k = offset[s]; k < offset[s + 1]; ++k)
            perm.push_back(k);
    return perm;
}

} // namespace

Rule apply_permutation(const CfcSpec& lhs, std::span<const std::size_t> sigma)
{
    const auto perm = expand_block_permutation(lhs, sigma);
    CfcSpec rhs;
    for (std::size_t s : sigma)
        rhs.blocks.push_back(lhs.blocks[s]);
    return {lhs, std::move(rhs), Matrix::from_permutation(perm), Law::Permutation, "permutation"};
}

Rule apply_elimination(const CfcSpec& lhs, const CfcSpec& keep_prefix)
{
    const auto& keep = keep_prefix.blocks;
    if (keep.size() > lhs.blocks.size() || !std::equal(keep.begin(), keep.end(), lhs.blocks.begin()))
        throw RuleError("'" + format_spec(keep_prefix) + "' is not a prefix of '" + format_spec(lhs) + "'");
    const std::size_t n = lhs.size(), k = keep_prefix.size();
    Matrix w(n, k);
    w.place(0, 0, Matrix::identity(k));
    return {lhs, keep_prefix, std::move(w), Law::Elimination, "elimination"};
}

Rule apply_j1_law(const CfcSpec& lhs)
{
    auto [rhs, removed] = strip_j1(lhs);
    Matrix w(lhs.size(), rhs.size());
    std::size_t row = 0, col = 0;
    for (const auto& b : lhs.blocks) {
        if (!b.is_j1()) {
            w.place(row, col, Matrix::identity(b.size));
            col += b.size;
        }
        row += b.size;
    }
    return {lhs, std::move(rhs), std::move(w), Law::J1Law, "j1-law"};
}

Rule lift(const Rule& rule, const CfcSpec& prefix, const CfcSpec& suffix)
{
    if (prefix.empty() && suffix.empty())
        return rule;
    Matrix w = Matrix::direct_sum({Matrix::identity(prefix.size()), rule.witness(), Matrix::identity(suffix.size())});
    return {prefix + rule.lhs() + suffix, prefix + rule.rhs() + suffix, std::move(w), rule.law(), rule.ref()};
}

} // namespace skewcfc

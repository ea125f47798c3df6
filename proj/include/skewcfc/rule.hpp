#pragma once

#include "skewcfc/cfc.hpp"
#include "skewcfc/matrix.hpp"

#include <span>
#include <string>
#include <string_view>

namespace skewcfc {

/// The consistency law a rule was obtained by.
enum class Law {
    Primitive,    ///< an explicit witness from the catalog
    Identity,
    Addition,     ///< direct sum of rules, witness = direct sum of witnesses
    Transitivity, ///< composition, witness = product of witnesses
    Permutation,  ///< reordering of direct summands
    Elimination,  ///< A + B ~> A via [I; 0]
    J1Law,        ///< dropping J_1(0) summands
};

std::string_view law_name(Law law);

/// A verified relation lhs ~>^W rhs, i.e. W^T materialize(lhs) W =
/// materialize(rhs). The constructor performs the exact check, so an
/// unverified Rule cannot exist.
class Rule {
public:
    /// Throws RuleError when shapes or the congruence identity fail.
    Rule(CfcSpec lhs, CfcSpec rhs, Matrix witness, Law law, std::string ref);

    const CfcSpec& lhs() const { return lhs_; }
    const CfcSpec& rhs() const { return rhs_; }
    const Matrix& witness() const { return witness_; }
    Law law() const { return law_; }
    /// Stable identifier of the relation, e.g. "type0.j3".
    const std::string& ref() const { return ref_; }

private:
    CfcSpec lhs_;
    CfcSpec rhs_;
    Matrix witness_;
    Law law_;
    std::string ref_;
};

Rule identity_rule(const CfcSpec& spec);

/// Addition law. Zero rules give the empty rule.
Rule combine_addition(std::span<const Rule> rules);

/// Transitivity law; throws RuleError unless first.rhs == second.lhs.
Rule combine_transitivity(const Rule& first, const Rule& second);

/// Permutation law: rhs block i is lhs block sigma[i]. Throws
/// InvalidPermutation.
Rule apply_permutation(const CfcSpec& lhs, std::span<const std::size_t> sigma);

/// Elimination law: drops the summands after `keep_prefix`. Throws
/// RuleError when keep_prefix is not a block prefix of lhs.
Rule apply_elimination(const CfcSpec& lhs, const CfcSpec& keep_prefix);

/// J_1(0)-law: removes every J_1(0) summand, wherever it sits.
Rule apply_j1_law(const CfcSpec& lhs);

/// `rule` applied in context prefix + lhs + suffix. Keeps the rule's law and
/// reference so certificate steps read as the relation actually used.
Rule lift(const Rule& rule, const CfcSpec& prefix, const CfcSpec& suffix);

} // namespace skewcfc

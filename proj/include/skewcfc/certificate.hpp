#pragma once

#include "skewcfc/rule.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <vector>

namespace skewcfc {

/// A chain source ~> ... ~> target of verified rules.
struct Certificate {
    CfcSpec source;
    CfcSpec target;
    std::vector<Rule> steps;

    /// Product of the step witnesses; the identity for an empty chain.
    Matrix composed_witness() const;
    /// Chain linkage plus exact check of the composed witness.
    bool verify() const;
};

/// {"source", "target", "steps": [{"law", "paper_ref", "lhs", "rhs",
/// "witness"}], "solution"}; "solution" is omitted when not given.
nlohmann::json certificate_to_json(const Certificate& cert, const std::optional<Matrix>& solution = std::nullopt);

/// One relation per line: "  J7 ~> J3 + J3   [primitive type0.split-j3]".
void print_chain(std::ostream& os, const Certificate& cert);

} // namespace skewcfc

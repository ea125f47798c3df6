#pragma once

#include "skewcfc/cfc.hpp"

#include <string>
#include <string_view>

namespace skewcfc {

/// Parses the block-sum language
///
///     spec := "" | term ("+" term)*
///     term := ("J" | "G" | "H") size ["(" mu ")"] ["*" count]
///
/// e.g. "J3 + J2*2", "G4*2 + H6(2)", "H4(1/2+3/4i)". Whitespace is
/// ignored. H terms require mu; J and G terms reject it. The result is
/// validated (and mu normalized). Throws ParseError (with the offset into
/// `text`) or InvalidBlock.
CfcSpec parse_spec(std::string_view text);

/// Canonical spelling; runs of equal adjacent blocks collapse to "B*count".
/// The empty spec formats as "".
std::string format_spec(const CfcSpec& spec);

} // namespace skewcfc

#pragma once

#include "skewcfc/certificate.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace skewcfc {

enum class VerdictKind { Consistent, Inconsistent, Unknown };

enum class Reason {
    TrivialTarget,     ///< m = 0
    Sufficiency,       ///< no G_1/G_2 blocks and m <= floor(rho)
    Gamma2Sufficiency, ///< G_2^k with m <= floor(k/2)
    EliminationPath,   ///< G_1/G_2 dropped, the rest suffices
    NecessityBound,    ///< m > floor(rho)
    Gamma2Bound,       ///< G_2^k with m > floor(k/2)
    SymmetricSource,   ///< only G_1 blocks: A symmetric forces B = 0
    OpenMixedCase,     ///< G_1/G_2 mixed with other blocks, undecided
};

std::string_view verdict_name(VerdictKind kind);
std::string_view reason_label(Reason reason);
std::string_view reason_text(Reason reason);

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    Reason reason = Reason::OpenMixedCase;
    std::size_t m = 0;
    /// floor(rho(A)); m above it is never consistent.
    std::uint64_t necessity_bound = 0;
    /// Present exactly when kind == Consistent.
    std::optional<Certificate> certificate;
};

// The reducers take specs of a single block type and return a certificate
// ending in H_2(-1)^floor(rho) + C, C the leftover of fractional rho.

/// J blocks (J_1 allowed). C is empty or J_2.
Certificate reduce_type0(const CfcSpec& spec);
/// H blocks. C is empty or a single H_2(mu).
Certificate reduce_typeII(const CfcSpec& spec);
/// Gamma blocks of size >= 3. C is empty, G_1, J_2 or G_2.
Certificate reduce_typeI(const CfcSpec& spec);

/// Runs the three certificates side by side on type0 + typeI + typeII and
/// absorbs their leftovers, ending in H_2(-1)^floor(rho) of the whole.
/// Throws InternalError on a leftover combination outside the table.
Certificate combine_leftovers(const Certificate& type0, const Certificate& typeI, const Certificate& typeII);

/// Decides A ~> H_2(-1)^m. Consistent verdicts carry a certificate whose
/// composed witness has been verified exactly. Throws InvalidBlock.
Verdict decide(const CfcSpec& spec, std::size_t m);

struct Solution {
    Matrix x;
    Certificate certificate;
};

/// X (n x 2m) with X^T A X = H_2(-1)^m. Throws QueryError unless the query
/// is Consistent.
Solution solve(const CfcSpec& spec, std::size_t m);

/// X with X^T A X = b for skew b. Throws QueryError when b is not skew or
/// the query for rank(b)/2 is not Consistent, DimensionMismatch for
/// non-square b.
Matrix solve_general(const CfcSpec& spec, const Matrix& b);

struct MaxSkewRank {
    /// Set when the maximum is determined.
    std::optional<std::size_t> value;
    /// 2 floor(rho(A)).
    std::size_t upper_bound = 0;
    /// Best rank reached constructively.
    std::size_t lower_bound = 0;
};

/// Largest rank of a skew B with A ~> B.
MaxSkewRank max_skew_rank(const CfcSpec& spec);

/// x^T a x == b exactly. Throws DimensionMismatch on incompatible shapes.
bool verify(const Matrix& a, const Matrix& x, const Matrix& b);
bool verify(const CfcSpec& spec, const Matrix& x, const Matrix& b);

} // namespace skewcfc

#pragma once

#include "skewcfc/matrix.hpp"

namespace skewcfc {

/// Congruence reduction of a skew-symmetric B:
/// q^T B q = H_2(-1)^m + 0_{n-2m}, q invertible, 2m = rank(B).
struct SkewReduction {
    Matrix q;
    std::size_t m = 0;
};

/// transpose(b) == -b exactly. Throws DimensionMismatch for non-square.
bool is_skew(const Matrix& b);

/// The canonical form H_2(-1)^m + 0_{n-2m} as a dense matrix.
Matrix skew_canonical_form(std::size_t n, std::size_t m);

/// Symplectic elimination: pick the first nonzero entry in row-major order
/// of the trailing principal block, move it to the leading 2x2, scale it to
/// [0 1; -1 0], clear its band by congruence and recurse. The result is
/// re-verified exactly before returning. Throws DimensionMismatch for
/// non-square and QueryError for non-skew input.
SkewReduction skew_canonicalize(const Matrix& b);

} // namespace skewcfc

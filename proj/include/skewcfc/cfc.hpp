#pragma once

#include "skewcfc/matrix.hpp"
#include "skewcfc/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skewcfc {

enum class BlockKind {
    Type0,  ///< J_k(0), nilpotent Jordan block
    TypeI,  ///< Gamma_k
    TypeII, ///< H_2k(mu)
};

/// One canonical congruence block. `size` is the matrix dimension, so an
/// H block of size 2k is H_2k(mu). `mu` is meaningful for TypeII only and
/// kept at zero otherwise, which makes defaulted equality syntactic.
struct Block {
    BlockKind kind = BlockKind::Type0;
    std::size_t size = 1;
    GaussianRational mu{};

    static Block jordan(std::size_t k) { return {BlockKind::Type0, k, {}}; }
    static Block gamma(std::size_t k) { return {BlockKind::TypeI, k, {}}; }
    static Block h(std::size_t size, GaussianRational mu) { return {BlockKind::TypeII, size, std::move(mu)}; }
    static Block h2_minus1() { return h(2, GaussianRational(-1)); }

    bool is_j1() const { return kind == BlockKind::Type0 && size == 1; }
    bool is_h2_minus1() const { return kind == BlockKind::TypeII && size == 2 && mu == GaussianRational(-1); }
    bool is_gamma(std::size_t k) const { return kind == BlockKind::TypeI && size == k; }

    /// DSL spelling: "J3", "G4", "H4(1/2+3/4i)".
    std::string to_string() const;

    friend bool operator==(const Block&, const Block&) = default;
};

/// Ordered direct sum of blocks. Order is significant for materialization
/// and equality; census and rho are order-free.
struct CfcSpec {
    std::vector<Block> blocks;

    std::size_t size() const;
    bool empty() const { return blocks.empty(); }

    friend bool operator==(const CfcSpec&, const CfcSpec&) = default;
};

/// Concatenation (direct sum) of two specs.
CfcSpec operator+(CfcSpec a, const CfcSpec& b);

/// `count` copies of `b`.
CfcSpec repeat(const Block& b, std::size_t count);

/// H_2(-1)^m.
CfcSpec h2_minus1_power(std::size_t m);

/// Replaces mu by its representative among {mu, 1/mu}: the one with
/// |mu|^2 >= 1; on the unit circle the lexicographically larger (re, im).
GaussianRational normalize_mu(const GaussianRational& mu);

/// Checks block admissibility and normalizes mu. Throws InvalidBlock.
Block validate(const Block& b);
CfcSpec validate(const CfcSpec& spec);

/// Block counts by the classes that enter rho and the rank identities.
struct BlockCensus {
    std::size_t j1 = 0;        ///< J_1(0)
    std::size_t j_odd = 0;     ///< J_k(0), k odd >= 3
    std::size_t j_even = 0;    ///< J_k(0), k even
    std::size_t gamma_even = 0;
    std::size_t gamma_odd = 0;
    std::size_t h2 = 0;        ///< H_2k(mu), mu != +-1
    std::size_t h_plus = 0;    ///< H_4k(1)
    std::size_t h_minus = 0;   ///< H_{4k-2}(-1)
    std::size_t n = 0;

    friend bool operator==(const BlockCensus&, const BlockCensus&) = default;
};

BlockCensus census(const CfcSpec& spec);

/// rho(A) as an exact count of quarters.
struct RhoValue {
    std::uint64_t quarters = 0;

    std::uint64_t floor() const { return quarters / 4; }
    bool is_integer() const { return quarters % 4 == 0; }
    /// Reduced fraction: "0", "3/4", "1/2", "3/2", "2".
    std::string to_string() const;

    friend RhoValue operator+(RhoValue a, RhoValue b) { return {a.quarters + b.quarters}; }
    friend RhoValue operator-(RhoValue a, RhoValue b) { return {a.quarters - b.quarters}; }
    friend auto operator<=>(const RhoValue&, const RhoValue&) = default;
};

RhoValue rho(const Block& b);
RhoValue rho(const CfcSpec& spec);

/// Canonical right-hand side H_2(-1)^m + 0_zero_pad.
struct SkewTarget {
    std::size_t m = 0;
    std::size_t zero_pad = 0;

    CfcSpec spec() const;
    std::size_t rank() const { return 2 * m; }
};

Matrix materialize(const Block& b);
Matrix materialize(const CfcSpec& spec);

/// rank(A + A^T) from the per-block closed forms.
std::size_t rank_a_plus_at_formula(const Block& b);
std::size_t rank_a_plus_at_formula(const CfcSpec& spec);

/// Removes every J_1(0) block; returns the remainder and the removed count.
std::pair<CfcSpec, std::size_t> strip_j1(const CfcSpec& spec);

} // namespace skewcfc

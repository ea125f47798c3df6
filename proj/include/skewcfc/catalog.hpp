#pragma once

#include "skewcfc/rule.hpp"

#include <cstddef>

namespace skewcfc {

// Explicit primitive relations. Each returns a verified Rule; a parameter
// outside the relation's hypothesis throws RuleError. TypeII generators take
// mu exactly as given, without normalizing it.

// Nilpotent blocks.
Rule type0_even_drop(std::size_t k);  ///< J_2k ~> J_{2k-1}, k >= 1
Rule type0_split_j3(std::size_t k);   ///< J_{k+4} ~> J_k + J_3, k >= 1
Rule type0_j2_pair();                 ///< J_2 + J_2 ~> H_2(-1)
Rule type0_j3();                      ///< J_3 ~> H_2(-1)
Rule type0_j5();                      ///< J_5 ~> H_2(-1) + J_2

// H_2k(mu) blocks.
Rule typeII_peel(std::size_t k, const GaussianRational& mu);  ///< H_{2k+4}(mu) ~> H_2(-1) + H_2k(mu)
Rule typeII_cross_pair(const GaussianRational& mu, const GaussianRational& nu); ///< H_2(mu) + H_2(nu) ~> H_2(-1)
Rule typeII_self_pair(const GaussianRational& mu);            ///< H_2(mu) + H_2(mu) ~> H_2(-1)
Rule typeII_with_j2(const GaussianRational& mu);              ///< H_2(mu) + J_2 ~> H_2(-1)

// Gamma blocks.
Rule typeI_odd_drop(std::size_t k); ///< G_{2k+1} ~> G_2k, k >= 1
Rule typeI_peel(std::size_t k);     ///< G_{2k+4} ~> H_2(-1) + G_2k, k >= 1
Rule typeI_g4();                    ///< G_4 ~> H_2(-1) + G_1

// Small gamma combinations.
Rule gamma_j2_g1();    ///< J_2 + G_1 ~> G_2
Rule gamma_g2_g1();    ///< G_2 + G_1 ~> H_2(-1)
Rule gamma_j2_g1_g1(); ///< J_2 + G_1 + G_1 ~> H_2(-1)
Rule gamma_g2_j2();    ///< G_2 + J_2 ~> H_2(-1) + G_1
Rule gamma_g3_g2();    ///< G_3 + G_2 ~> H_2(-1) + J_2
Rule gamma_g6_g2();    ///< G_6 + G_2 ~> H_2(-1)^2 + J_2
Rule gamma_g4_g4();    ///< G_4 + G_4 ~> H_2(-1)^2 + J_2

// H_2(mu) against gamma blocks, mu != +-1.
Rule mixed_h2_g1_g1(const GaussianRational& mu); ///< H_2(mu) + G_1 + G_1 ~> H_2(-1)
Rule mixed_h2_g2(const GaussianRational& mu);    ///< H_2(mu) + G_2 ~> H_2(-1) + G_1

/// G_2 + G_2 ~> H_2(-1).
Rule gamma2_pair();
/// G_2^k ~> H_2(-1)^floor(k/2), dropping one G_2 first when k is odd.
Rule gamma2_reduce(std::size_t k);

} // namespace skewcfc

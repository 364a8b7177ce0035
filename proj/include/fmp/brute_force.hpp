#pragma once

#include "fmp/index.hpp"
#include "fmp/mod_poly.hpp"
#include "fmp/prime_field.hpp"

namespace fmp {

// Literal nested-loop evaluators used as independent oracles for the DP kernels.
// Cost is O(p^depth); each throws DomainError when the total depth exceeds
// kBruteForceMaxDepth or p exceeds kBruteForceMaxPrime.

inline constexpr int kBruteForceMaxDepth = 4;
inline constexpr std::uint32_t kBruteForceMaxPrime = 31;

ModPoly brute_force_fmp(const Index& k, const PrimeField& field);
ModPoly brute_force_fmp_triple(const Index& lambda, const Index& mu, const Index& nu, const PrimeField& field);
Residue brute_force_zeta(const Index& k, const PrimeField& field);
Residue brute_force_zeta_variant(int i, const Index& k, const PrimeField& field);

}  // namespace fmp

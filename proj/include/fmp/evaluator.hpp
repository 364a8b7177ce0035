#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fmp/index.hpp"
#include "fmp/mod_poly.hpp"
#include "fmp/prime_field.hpp"

namespace fmp {

// Stage j of the partial-sum dynamic programme: at(n) is the F_p-weighted count
// of tuples 0 < l_1..l_j < p with L_j = n exactly, every partial sum L_i
// satisfying offset + L_i != 0 (mod p), each contributing prod (offset + L_i)^{-k_i}.
// Support lies in [j, j(p-1)].
class PartialSumTable {
public:
    PartialSumTable(std::uint32_t p, int stage, std::vector<Residue> values)
        : p_(p), stage_(stage), values_(std::move(values)) {}

    std::uint32_t prime() const noexcept { return p_; }
    int stage() const noexcept { return stage_; }
    long lo() const noexcept { return stage_; }
    long hi() const noexcept { return static_cast<long>(stage_) * (p_ - 1); }
    Residue at(long n) const noexcept {
        return (n < 0 || n >= static_cast<long>(values_.size())) ? 0 : values_[static_cast<std::size_t>(n)];
    }
    /// Indexed by n from 0; entries below lo() are zero.
    std::span<const Residue> values() const noexcept { return values_; }

private:
    std::uint32_t p_;
    int stage_;
    std::vector<Residue> values_;
};

/// Tables for stages 0..dep(k). Stage 0 is the point mass at n = 0.
/// Denominators are (offset + L_i); zero residues are skipped, never inverted.
std::vector<PartialSumTable> partial_sum_tables(const Index& k, const PrimeField& field, Residue offset = 0);

/// zeta_A(k) at p: sum over 0 < A_1 < ... < A_r < p of prod A_i^{-k_i}; 1 for the empty index.
Residue eval_zeta(const Index& k, const PrimeField& field);

/// The variant with the last partial sum in ((i-1)p, ip). Throws DomainError unless 1 <= i <= dep(k).
Residue eval_zeta_variant(int i, const Index& k, const PrimeField& field);

/// li_k(T) at p; the constant 1 for the empty index.
ModPoly eval_fmp(const Index& k, const PrimeField& field);

/// li(lambda, mu, nu; T) at p. L_a + M_b itself is not restricted; the nu-block
/// denominators are L_a + M_b + N_z.
ModPoly eval_fmp_triple(const Index& lambda, const Index& mu, const Index& nu, const PrimeField& field);

}  // namespace fmp

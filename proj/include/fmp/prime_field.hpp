#pragma once

#include <cstdint>
#include <vector>

namespace fmp {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

// Prime field F_p for p < 2^31. Residues are kept in [0, p-1]; products go
// through 64-bit intermediates.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Residue reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    Residue inv(Residue a) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// Inverse of a modulo p by the extended Euclidean algorithm.
/// Throws ArithmeticError("non-invertible residue") when a == 0 (mod p).
Residue mod_inverse(Residue a, const PrimeField& field);

/// (-1)^e in F_p.
inline Residue sign_residue(const PrimeField& field, std::uint64_t e) {
    return (e % 2 == 0) ? 1 : field.neg(1);
}

// Table of n^{-k} mod p for n in [1, p-1] and k up to a fixed maximum.
// Row k holds inverse k-th powers; entry 0 of every row is 0 (the excluded residue).
class InversePowers {
public:
    InversePowers(const PrimeField& field, int max_exponent);

    Residue operator()(Residue n, int k) const { return rows_[k][n]; }
    int max_exponent() const noexcept { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<Residue>> rows_;
};

}  // namespace fmp

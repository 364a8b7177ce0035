#include "fmp/prime_field.hpp"

#include <string>

#include "fmp/error.hpp"

namespace fmp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31)) throw DomainError("modulus must be below 2^31: " + std::to_string(p));
    if (!is_prime(p)) throw DomainError("modulus is not prime: " + std::to_string(p));
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % p_;
    std::uint64_t base = a % p_;
    while (e > 0) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Residue>(result);
}

Residue PrimeField::inv(Residue a) const { return mod_inverse(a, *this); }

Residue mod_inverse(Residue a, const PrimeField& field) {
    const std::int64_t p = field.modulus();
    std::int64_t r0 = p, r1 = a % p;
    std::int64_t s0 = 0, s1 = 1;
    if (r1 == 0) throw ArithmeticError("non-invertible residue");
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    // r0 == gcd == 1 since p is prime and a != 0.
    return field.reduce(s0);
}

InversePowers::InversePowers(const PrimeField& field, int max_exponent) {
    const std::uint32_t p = field.modulus();
    rows_.assign(static_cast<std::size_t>(max_exponent) + 1, std::vector<Residue>(p, 0));
    for (std::uint32_t n = 1; n < p; ++n) rows_[0][n] = 1;
    if (max_exponent == 0) return;
    for (std::uint32_t n = 1; n < p; ++n) rows_[1][n] = mod_inverse(n, field);
    for (int k = 2; k <= max_exponent; ++k) {
        for (std::uint32_t n = 1; n < p; ++n) rows_[k][n] = field.mul(rows_[k - 1][n], rows_[1][n]);
    }
}

}  // namespace fmp

#include "fmp/brute_force.hpp"

#include <string>
#include <vector>

#include "fmp/error.hpp"

namespace fmp {

namespace {

void check_domain(int depth, const PrimeField& field) {
    if (depth > kBruteForceMaxDepth || field.modulus() > kBruteForceMaxPrime) {
        throw DomainError("brute-force oracle capped at depth " + std::to_string(kBruteForceMaxDepth) + " and p <= " +
                          std::to_string(kBruteForceMaxPrime));
    }
}

// Visits every tuple in [1, p-1]^n in odometer order.
template <typename Visit>
void for_each_tuple(int n, std::uint32_t p, Visit&& visit) {
    std::vector<std::uint32_t> t(static_cast<std::size_t>(n), 1);
    if (p < 2) return;
    while (true) {
        visit(t);
        int pos = n - 1;
        while (pos >= 0 && t[pos] == p - 1) t[pos--] = 1;
        if (pos < 0) return;
        ++t[pos];
    }
}

// x^{-e} mod p, or nullopt-equivalent false when p | x.
bool inverse_power(std::uint64_t x, int e, const PrimeField& field, Residue& out) {
    const auto r = static_cast<Residue>(x % field.modulus());
    if (r == 0) return false;
    out = field.pow(mod_inverse(r, field), static_cast<std::uint64_t>(e));
    return true;
}

}  // namespace

ModPoly brute_force_fmp(const Index& k, const PrimeField& field) {
    return brute_force_fmp_triple(k, Index{}, Index{}, field);
}

ModPoly brute_force_fmp_triple(const Index& lambda, const Index& mu, const Index& nu, const PrimeField& field) {
    const int a = lambda.depth(), b = mu.depth(), c = nu.depth();
    check_domain(a + b + c, field);
    const std::uint32_t p = field.modulus();
    std::vector<Residue> coeffs(static_cast<std::size_t>(a + b + c) * p + 1, 0);
    for_each_tuple(a + b + c, p, [&](const std::vector<std::uint32_t>& t) {
        Residue term = 1;
        Residue factor = 0;
        std::uint64_t big_l = 0, big_m = 0, big_n = 0;
        for (int x = 0; x < a; ++x) {
            big_l += t[x];
            if (!inverse_power(big_l, lambda[x], field, factor)) return;
            term = field.mul(term, factor);
        }
        for (int y = 0; y < b; ++y) {
            big_m += t[a + y];
            if (!inverse_power(big_m, mu[y], field, factor)) return;
            term = field.mul(term, factor);
        }
        for (int z = 0; z < c; ++z) {
            big_n += t[a + b + z];
            if (!inverse_power(big_l + big_m + big_n, nu[z], field, factor)) return;
            term = field.mul(term, factor);
        }
        const std::uint64_t e = big_l + big_m + big_n;
        coeffs[e] = field.add(coeffs[e], term);
    });
    if (a + b + c == 0) return ModPoly::constant(field, 1);
    return ModPoly(field, std::move(coeffs));
}

Residue brute_force_zeta(const Index& k, const PrimeField& field) {
    check_domain(k.depth(), field);
    if (k.empty()) return 1;
    Residue total = 0;
    for_each_tuple(k.depth(), field.modulus(), [&](const std::vector<std::uint32_t>& t) {
        std::uint64_t partial = 0;
        Residue term = 1, factor = 0;
        for (int j = 0; j < k.depth(); ++j) {
            partial += t[j];
            if (partial >= field.modulus()) return;
            inverse_power(partial, k[j], field, factor);
            term = field.mul(term, factor);
        }
        total = field.add(total, term);
    });
    return total;
}

Residue brute_force_zeta_variant(int i, const Index& k, const PrimeField& field) {
    const int r = k.depth();
    if (r < 1 || i < 1 || i > r) throw DomainError("variant index out of range");
    check_domain(r, field);
    const std::uint64_t p = field.modulus();
    Residue total = 0;
    for_each_tuple(r, field.modulus(), [&](const std::vector<std::uint32_t>& t) {
        std::uint64_t partial = 0;
        for (std::uint32_t l : t) partial += l;
        if (partial <= (i - 1) * p || partial >= i * p) return;
        partial = 0;
        Residue term = 1, factor = 0;
        for (int j = 0; j < r; ++j) {
            partial += t[j];
            if (!inverse_power(partial, k[j], field, factor)) return;
            term = field.mul(term, factor);
        }
        total = field.add(total, term);
    });
    return total;
}

}  // namespace fmp

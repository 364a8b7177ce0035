#include "fmp/evaluator.hpp"

#include <algorithm>
#include <string>

#include "fmp/error.hpp"

namespace fmp {

namespace {

int max_part(const Index& k) {
    int m = 0;
    for (int part : k.parts()) m = std::max(m, part);
    return m;
}

// One DP step: next(n) = weight(n) * sum_{0 < n - n' < p} prev(n').
std::vector<Residue> advance(std::span<const Residue> prev, int stage, int exponent, Residue offset,
                             const PrimeField& field, const InversePowers& inv) {
    const std::uint32_t p = field.modulus();
    const std::size_t size = static_cast<std::size_t>(stage) * (p - 1) + 1;
    std::vector<Residue> next(size, 0);

    // prefix[n] = sum of prev[0..n-1]
    std::vector<Residue> prefix(prev.size() + 1, 0);
    for (std::size_t n = 0; n < prev.size(); ++n) prefix[n + 1] = field.add(prefix[n], prev[n]);
    auto prefix_at = [&](long n) -> Residue {  // sum of prev[0..n-1], clamped
        if (n <= 0) return 0;
        return prefix[std::min<std::size_t>(static_cast<std::size_t>(n), prev.size())];
    };

    for (std::size_t n = static_cast<std::size_t>(stage); n < size; ++n) {
        const auto rho = static_cast<Residue>((offset + n) % p);
        if (rho == 0) continue;
        const long upper = static_cast<long>(n);               // exclusive: n' <= n - 1
        const long lower = static_cast<long>(n) - static_cast<long>(p) + 1;  // inclusive
        const Residue window = field.sub(prefix_at(upper), prefix_at(lower));
        if (window == 0) continue;
        next[n] = field.mul(window, inv(rho, exponent));
    }
    return next;
}

std::vector<PartialSumTable> build_tables(const Index& k, const PrimeField& field, const InversePowers& inv,
                                          Residue offset) {
    std::vector<PartialSumTable> tables;
    tables.reserve(static_cast<std::size_t>(k.depth()) + 1);
    tables.emplace_back(field.modulus(), 0, std::vector<Residue>{1});
    for (int j = 1; j <= k.depth(); ++j) {
        auto values = advance(tables.back().values(), j, k[j - 1], offset, field, inv);
        tables.emplace_back(field.modulus(), j, std::move(values));
    }
    return tables;
}

PartialSumTable final_table(const Index& k, const PrimeField& field, const InversePowers& inv, Residue offset) {
    auto tables = build_tables(k, field, inv, offset);
    return std::move(tables.back());
}

}  // namespace

std::vector<PartialSumTable> partial_sum_tables(const Index& k, const PrimeField& field, Residue offset) {
    const InversePowers inv(field, max_part(k));
    return build_tables(k, field, inv, offset % field.modulus());
}

Residue eval_zeta(const Index& k, const PrimeField& field) {
    if (k.empty()) return 1 % field.modulus();
    const std::uint32_t p = field.modulus();
    const InversePowers inv(field, max_part(k));
    // acc[A] = sum over A_1 < ... < A_j = A of prod A_i^{-k_i}
    std::vector<Residue> acc(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) acc[a] = inv(a, k[0]);
    for (int j = 1; j < k.depth(); ++j) {
        std::vector<Residue> next(p, 0);
        Residue below = 0;
        for (std::uint32_t a = 1; a < p; ++a) {
            next[a] = field.mul(below, inv(a, k[j]));
            below = field.add(below, acc[a]);
        }
        acc = std::move(next);
    }
    Residue total = 0;
    for (Residue v : acc) total = field.add(total, v);
    return total;
}

Residue eval_zeta_variant(int i, const Index& k, const PrimeField& field) {
    const int r = k.depth();
    if (r < 1 || i < 1 || i > r) {
        throw DomainError("variant index i=" + std::to_string(i) + " out of range for depth " + std::to_string(r));
    }
    const InversePowers inv(field, max_part(k));
    const PartialSumTable last = final_table(k, field, inv, 0);
    const long p = field.modulus();
    Residue total = 0;
    for (long n = (i - 1) * p + 1; n < i * p; ++n) total = field.add(total, last.at(n));
    return total;
}

ModPoly eval_fmp(const Index& k, const PrimeField& field) {
    if (k.empty()) return ModPoly::constant(field, 1);
    const InversePowers inv(field, max_part(k));
    const PartialSumTable last = final_table(k, field, inv, 0);
    return ModPoly(field, std::vector<Residue>(last.values().begin(), last.values().end()));
}

ModPoly eval_fmp_triple(const Index& lambda, const Index& mu, const Index& nu, const PrimeField& field) {
    const std::uint32_t p = field.modulus();
    const InversePowers inv(field, std::max({max_part(lambda), max_part(mu), max_part(nu)}));

    const PartialSumTable lam = final_table(lambda, field, inv, 0);
    const PartialSumTable mut = final_table(mu, field, inv, 0);
    // weight[s] = sum over L_a + M_b = s of the lambda- and mu-block weights
    const ModPoly weight = poly_mul(ModPoly(field, {lam.values().begin(), lam.values().end()}),
                                    ModPoly(field, {mut.values().begin(), mut.values().end()}));
    if (nu.empty()) return weight;

    // The nu-block denominators see s only through s mod p; the exponent needs s exactly.
    // Each residue class holds at most dep(lambda) + dep(mu) values of s.
    std::vector<std::vector<std::pair<std::size_t, Residue>>> by_residue(p);
    const auto w = weight.coeffs();
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (w[s] != 0) by_residue[s % p].emplace_back(s, w[s]);
    }
    const std::size_t tail_len = static_cast<std::size_t>(nu.depth()) * (p - 1) + 1;
    std::vector<Residue> acc(w.size() + tail_len, 0);
    for (std::uint32_t rho = 0; rho < p; ++rho) {
        if (by_residue[rho].empty()) continue;
        const PartialSumTable tail = final_table(nu, field, inv, rho);
        const auto t = tail.values();
        for (const auto& [s, ws] : by_residue[rho]) {
            for (std::size_t n = static_cast<std::size_t>(tail.lo()); n < t.size(); ++n) {
                if (t[n] != 0) acc[s + n] = field.add(acc[s + n], field.mul(ws, t[n]));
            }
        }
    }
    ModPoly out(field, std::move(acc));
    return out;
}

}  // namespace fmp

#include "fmp/surjection.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

#include "fmp/error.hpp"

namespace fmp {

namespace {

void extend(int r, int s, std::vector<int>& prefix, std::vector<int>& used, int distinct,
            std::vector<Surjection>& out) {
    const int pos = static_cast<int>(prefix.size());
    if (pos == r) {
        if (distinct == s) out.push_back(Surjection::from_values(prefix));
        return;
    }
    // Every value not yet used needs a slot of its own.
    if (s - distinct > r - pos) return;
    for (int v = 1; v <= s; ++v) {
        if (pos > 0 && prefix.back() == v) continue;
        const bool fresh = used[v] == 0;
        ++used[v];
        prefix.push_back(v);
        extend(r, s, prefix, used, distinct + (fresh ? 1 : 0), out);
        prefix.pop_back();
        --used[v];
    }
}

std::vector<Surjection> build_phi(int r) {
    std::vector<Surjection> out;
    for (int s = 1; s <= r; ++s) {
        std::vector<int> prefix;
        std::vector<int> used(static_cast<std::size_t>(s) + 1, 0);
        extend(r, s, prefix, used, 0, out);
    }
    return out;
}

}  // namespace

Surjection Surjection::from_values(std::vector<int> values) {
    if (values.empty()) throw DomainError("surjection needs r >= 1");
    const int s = *std::max_element(values.begin(), values.end());
    std::vector<bool> hit(static_cast<std::size_t>(s) + 1, false);
    for (int v : values) {
        if (v < 1) throw DomainError("surjection values must be positive");
        hit[v] = true;
    }
    for (int v = 1; v <= s; ++v) {
        if (!hit[v]) throw DomainError("map is not surjective onto [" + std::to_string(s) + "]");
    }
    std::vector<int> delta(values.size(), 0);
    for (std::size_t a = 1; a < values.size(); ++a) {
        if (values[a - 1] == values[a]) throw DomainError("equal adjacent values");
        delta[a] = delta[a - 1] + (values[a - 1] > values[a] ? 1 : 0);
    }
    return Surjection(std::move(values), s, std::move(delta));
}

const std::vector<Surjection>& enumerate_phi(int r) {
    if (r < 1 || r > kMaxSurjectionDomain) {
        throw DomainError("surjection domain size must be in [1, " + std::to_string(kMaxSurjectionDomain) +
                          "], got " + std::to_string(r));
    }
    static std::array<std::once_flag, kMaxSurjectionDomain + 1> flags;
    static std::array<std::vector<Surjection>, kMaxSurjectionDomain + 1> cache;
    std::call_once(flags[r], [r] { cache[r] = build_phi(r); });
    return cache[r];
}

std::map<std::pair<int, int>, std::vector<Surjection>> group_phi(int r) {
    std::map<std::pair<int, int>, std::vector<Surjection>> out;
    for (const auto& phi : enumerate_phi(r)) out[{phi.codomain(), phi.beta()}].push_back(phi);
    return out;
}

ResidueTuple::ResidueTuple(std::uint32_t p, std::vector<std::uint32_t> values) : p_(p), values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0 || values_[i] >= p_ || (i > 0 && values_[i - 1] >= values_[i])) {
            throw DomainError("residue tuple must satisfy 0 < A_1 < ... < A_s < p");
        }
    }
}

std::pair<Surjection, ResidueTuple> f_map(std::span<const std::uint32_t> l, std::uint32_t p) {
    if (l.empty()) throw DomainError("f_map needs r >= 1");
    std::vector<std::uint32_t> residues;
    residues.reserve(l.size());
    std::uint64_t partial = 0;
    for (std::uint32_t li : l) {
        if (li == 0 || li >= p) throw DomainError("not in X_r");
        partial += li;
        const auto rho = static_cast<std::uint32_t>(partial % p);
        if (rho == 0) throw DomainError("not in X_r");
        residues.push_back(rho);
    }
    std::vector<std::uint32_t> sorted = residues;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> values;
    values.reserve(residues.size());
    for (std::uint32_t rho : residues) {
        values.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), rho) - sorted.begin()) + 1);
    }
    return {Surjection::from_values(std::move(values)), ResidueTuple(p, std::move(sorted))};
}

std::vector<std::uint32_t> g_map(const Surjection& phi, const ResidueTuple& a) {
    if (static_cast<int>(a.size()) != phi.codomain()) throw DomainError("residue tuple length must equal s");
    const std::int64_t p = a.prime();
    auto lifted = [&](int i) { return static_cast<std::int64_t>(a(phi(i))) + phi.delta(i) * p; };
    std::vector<std::uint32_t> l;
    l.reserve(static_cast<std::size_t>(phi.domain()));
    l.push_back(a(phi(1)));
    for (int i = 2; i <= phi.domain(); ++i) l.push_back(static_cast<std::uint32_t>(lifted(i) - lifted(i - 1)));
    return l;
}

FormalSum variant_expansion(int i, const Index& k) {
    const int r = k.depth();
    if (r < 1 || i < 1 || i > r) {
        throw DomainError("variant index i=" + std::to_string(i) + " out of range for depth " + std::to_string(r));
    }
    FormalSum out;
    for (const auto& phi : enumerate_phi(r)) {
        if (phi.beta() != i) continue;
        std::vector<int> grouped(static_cast<std::size_t>(phi.codomain()), 0);
        for (int j = 1; j <= r; ++j) grouped[phi(j) - 1] += k[j - 1];
        out.add(Index(std::move(grouped)), 1);
    }
    return out;
}

}  // namespace fmp

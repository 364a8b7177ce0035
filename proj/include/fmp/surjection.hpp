#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fmp/formal_sum.hpp"
#include "fmp/index.hpp"

namespace fmp {

inline constexpr int kMaxSurjectionDomain = 8;

// A surjection [r] -> [s] with no two equal adjacent values, stored with its
// descent table. values()[a] is phi(a+1), in 1..s; delta()[i-1] counts the
// descents phi(a) > phi(a+1) with a < i.
class Surjection {
public:
    /// Throws DomainError unless the values form a member of Phi_{r,s}.
    static Surjection from_values(std::vector<int> values);

    int domain() const noexcept { return static_cast<int>(values_.size()); }
    int codomain() const noexcept { return s_; }
    std::span<const int> values() const noexcept { return values_; }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> delta() const noexcept { return delta_; }
    int delta(int i) const { return delta_[static_cast<std::size_t>(i - 1)]; }
    /// Descent class delta(r) + 1.
    int beta() const noexcept { return delta_.back() + 1; }

    friend bool operator==(const Surjection& a, const Surjection& b) { return a.values_ == b.values_; }

private:
    Surjection(std::vector<int> values, int s, std::vector<int> delta)
        : values_(std::move(values)), s_(s), delta_(std::move(delta)) {}

    std::vector<int> values_;
    int s_ = 0;
    std::vector<int> delta_;
};

/// Phi_r ordered by codomain size, then lexicographically. Throws DomainError
/// unless 1 <= r <= 8. Results are cached and safe to share across threads.
const std::vector<Surjection>& enumerate_phi(int r);

/// enumerate_phi(r) grouped by (s, beta), each group in enumeration order.
std::map<std::pair<int, int>, std::vector<Surjection>> group_phi(int r);

// 0 < A_1 < ... < A_s < p.
class ResidueTuple {
public:
    ResidueTuple(std::uint32_t p, std::vector<std::uint32_t> values);

    std::uint32_t prime() const noexcept { return p_; }
    std::span<const std::uint32_t> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    /// 1-based access, A_i.
    std::uint32_t operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const ResidueTuple&, const ResidueTuple&) = default;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> values_;
};

/// The map f: X_r -> Phi_{r,s} x Y_s. Throws DomainError("not in X_r") if some
/// partial sum is divisible by p or some l_i is outside (0, p).
std::pair<Surjection, ResidueTuple> f_map(std::span<const std::uint32_t> l, std::uint32_t p);

/// The inverse g of f_map, by the descent-table formula for l_i.
std::vector<std::uint32_t> g_map(const Surjection& phi, const ResidueTuple& a);

/// Right-hand side of the variant expansion: the sum over phi with beta(phi) = i
/// of the index (sum_{phi(j)=1} k_j, ..., sum_{phi(j)=s} k_j).
/// Throws DomainError unless 1 <= i <= dep(k).
FormalSum variant_expansion(int i, const Index& k);

}  // namespace fmp

#pragma once

#include <map>
#include <string>

#include "fmp/big_rational.hpp"
#include "fmp/index.hpp"

namespace fmp {

// Q-linear combination of indices. Zero coefficients are never stored and the
// terms iterate in lexicographic order of the index parts.
class FormalSum {
public:
    using Terms = std::map<Index, BigRational>;

    FormalSum() = default;
    FormalSum(const Index& k, BigRational coef = 1) { add(k, std::move(coef)); }

    void add(const Index& k, const BigRational& coef);
    FormalSum& operator+=(const FormalSum& other);
    FormalSum& operator-=(const FormalSum& other);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    FormalSum scaled(const BigRational& c) const;

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigRational coefficient(const Index& k) const;
    BigRational coefficient_sum() const;

    /// All indices share one weight (vacuously true for zero).
    bool is_homogeneous() const;

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    /// "(2,3) + 3*(3,2) + 6*(4,1)"; "0" for the zero sum.
    std::string to_string() const;

private:
    Terms terms_;
};

/// Reverses every index of the sum.
FormalSum reversed(const FormalSum& s);

}  // namespace fmp

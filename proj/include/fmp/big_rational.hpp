#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fmp/prime_field.hpp"

namespace fmp {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in lowest terms with positive denominator; zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& n) : value_(n) {}
    BigRational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    BigRational operator-() const { return BigRational(Raw(-value_)); }
    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    /// Image in F_p. Throws ExceptionalPrime when p divides the denominator.
    Residue mod_p(const PrimeField& field) const;

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

private:
    using Raw = boost::multiprecision::cpp_rational;
    explicit BigRational(Raw v) : value_(std::move(v)) {}
    Raw value_{0};
};

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace fmp

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fmp/prime_field.hpp"

namespace fmp {

// Dense polynomial over F_p; coeffs()[n] is the coefficient of T^n.
// The stored array never ends in a zero, so the zero polynomial is empty.
class ModPoly {
public:
    explicit ModPoly(const PrimeField& field) : field_(field) {}
    ModPoly(const PrimeField& field, std::vector<Residue> coeffs);

    static ModPoly constant(const PrimeField& field, Residue c);
    static ModPoly monomial(const PrimeField& field, Residue c, std::size_t exponent);

    const PrimeField& field() const noexcept { return field_; }
    std::span<const Residue> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient; -1 for zero.
    long order() const noexcept;
    Residue coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : 0; }

    ModPoly& operator+=(const ModPoly& other);
    ModPoly& operator-=(const ModPoly& other);
    friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
    friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }

    ModPoly scaled(Residue c) const;
    /// Multiply by T^n.
    ModPoly shifted(std::size_t n) const;

    /// Accumulate c * T^shift * other into this polynomial.
    void add_scaled_shifted(const ModPoly& other, Residue c, std::size_t shift);

    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// Canonical ascending form "c0 + c1*T + c2*T^2"; unit coefficients are elided, "0" for zero.
    std::string to_string() const;

private:
    void trim();
    void check_same_field(const ModPoly& other) const;

    PrimeField field_;
    std::vector<Residue> coeffs_;
};

/// Exact product in F_p[T]. Throws ArithmeticError on modulus mismatch.
ModPoly poly_mul(const ModPoly& f, const ModPoly& g);

/// Horner evaluation at t.
Residue poly_eval(const ModPoly& f, Residue t);

/// Lowest exponent where a and b differ, or nullopt if equal.
std::optional<std::size_t> first_difference(const ModPoly& a, const ModPoly& b);

}  // namespace fmp

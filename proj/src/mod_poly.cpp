#include "fmp/mod_poly.hpp"

#include <algorithm>

#include "fmp/error.hpp"

namespace fmp {

ModPoly::ModPoly(const PrimeField& field, std::vector<Residue> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= field_.modulus();
    trim();
}

ModPoly ModPoly::constant(const PrimeField& field, Residue c) { return ModPoly(field, {c}); }

ModPoly ModPoly::monomial(const PrimeField& field, Residue c, std::size_t exponent) {
    std::vector<Residue> v(exponent + 1, 0);
    v[exponent] = c;
    return ModPoly(field, std::move(v));
}

long ModPoly::order() const noexcept {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n] != 0) return static_cast<long>(n);
    }
    return -1;
}

void ModPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void ModPoly::check_same_field(const ModPoly& other) const {
    if (!(field_ == other.field_)) throw ArithmeticError("modulus mismatch");
}

ModPoly& ModPoly::operator+=(const ModPoly& other) {
    add_scaled_shifted(other, 1, 0);
    return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& other) {
    add_scaled_shifted(other, field_.neg(1), 0);
    return *this;
}

ModPoly ModPoly::scaled(Residue c) const {
    ModPoly out(field_);
    out.add_scaled_shifted(*this, c, 0);
    return out;
}

ModPoly ModPoly::shifted(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<Residue> v(n, 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return ModPoly(field_, std::move(v));
}

void ModPoly::add_scaled_shifted(const ModPoly& other, Residue c, std::size_t shift) {
    check_same_field(other);
    if (other.is_zero() || c % field_.modulus() == 0) return;
    const std::size_t need = other.coeffs_.size() + shift;
    if (coeffs_.size() < need) coeffs_.resize(need, 0);
    for (std::size_t n = 0; n < other.coeffs_.size(); ++n) {
        coeffs_[n + shift] = field_.add(coeffs_[n + shift], field_.mul(other.coeffs_[n], c));
    }
    trim();
}

std::string ModPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const Residue c = coeffs_[n];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (n == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += "T";
        if (n > 1) out += "^" + std::to_string(n);
    }
    return out;
}

ModPoly poly_mul(const ModPoly& f, const ModPoly& g) {
    if (!(f.field() == g.field())) throw ArithmeticError("modulus mismatch");
    if (f.is_zero() || g.is_zero()) return ModPoly(f.field());
    const std::uint64_t p = f.field().modulus();
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    // acc < p and each product < 2^62, so the running sum stays below 2^63.
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + ai * b[j]) % p;
        }
    }
    std::vector<Residue> out(acc.size());
    std::transform(acc.begin(), acc.end(), out.begin(), [](std::uint64_t x) { return static_cast<Residue>(x); });
    return ModPoly(f.field(), std::move(out));
}

Residue poly_eval(const ModPoly& f, Residue t) {
    const auto& field = f.field();
    t %= field.modulus();
    Residue acc = 0;
    const auto c = f.coeffs();
    for (std::size_t n = c.size(); n-- > 0;) acc = field.add(field.mul(acc, t), c[n]);
    return acc;
}

std::optional<std::size_t> first_difference(const ModPoly& a, const ModPoly& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff(i) != b.coeff(i)) return i;
    }
    return std::nullopt;
}

}  // namespace fmp

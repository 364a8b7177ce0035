#include "fmp/formal_sum.hpp"

namespace fmp {

void FormalSum::add(const Index& k, const BigRational& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
}

FormalSum FormalSum::scaled(const BigRational& c) const {
    FormalSum out;
    if (c.is_zero()) return out;
    for (const auto& [k, coef] : terms_) out.terms_.emplace(k, coef * c);
    return out;
}

BigRational FormalSum::coefficient(const Index& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational FormalSum::coefficient_sum() const {
    BigRational total;
    for (const auto& [k, c] : terms_) total += c;
    return total;
}

bool FormalSum::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int w = terms_.begin()->first.weight();
    for (const auto& [k, c] : terms_) {
        if (k.weight() != w) return false;
    }
    return true;
}

std::string FormalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const BigRational mag = c.abs();
        if (mag != 1) out += mag.to_string() + "*";
        out += k.to_string();
    }
    return out;
}

FormalSum reversed(const FormalSum& s) {
    FormalSum out;
    for (const auto& [k, c] : s.terms()) out.add(reversed(k), c);
    return out;
}

}  // namespace fmp

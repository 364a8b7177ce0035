#include "fmp/correction.hpp"

namespace fmp {

namespace {

std::string generator_text(const Generator& g) {
    return "zeta" + g.zeta_index.to_string() + "*Tp^" + std::to_string(g.tpow) + "*li" + g.li_index.to_string();
}

}  // namespace

void CorrectionExpression::add(const Generator& g, const BigRational& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CorrectionExpression& CorrectionExpression::operator+=(const CorrectionExpression& other) {
    for (const auto& [g, c] : other.terms_) add(g, c);
    return *this;
}

CorrectionExpression CorrectionExpression::scaled(const BigRational& c) const {
    CorrectionExpression out;
    for (const auto& [g, coef] : terms_) out.add(g, coef * c);
    return out;
}

std::vector<CorrectionTerm> CorrectionExpression::term_list() const {
    std::vector<CorrectionTerm> out;
    out.reserve(terms_.size());
    for (const auto& [g, c] : terms_) out.push_back({c, g});
    return out;
}

FormalSum CorrectionExpression::pure_part() const {
    FormalSum out;
    for (const auto& [g, c] : terms_) {
        if (g.is_pure()) out.add(g.li_index, c);
    }
    return out;
}

CorrectionExpression CorrectionExpression::impure_part() const {
    CorrectionExpression out;
    for (const auto& [g, c] : terms_) {
        if (!g.is_pure()) out.add(g, c);
    }
    return out;
}

bool CorrectionExpression::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int a = terms_.begin()->first.level();
    for (const auto& [g, c] : terms_) {
        if (g.level() != a) return false;
    }
    return true;
}

std::string term_to_string(const BigRational& coef, const Generator& g) {
    return coef.to_string() + "*" + generator_text(g);
}

std::string CorrectionExpression::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
        if (out.empty()) {
            out += term_to_string(c, g);
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += term_to_string(c.abs(), g);
        }
    }
    return out;
}

}  // namespace fmp

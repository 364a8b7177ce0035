#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fmp/big_rational.hpp"
#include "fmp/formal_sum.hpp"
#include "fmp/index.hpp"

namespace fmp {

// Generator zeta_A(zeta_index) * (T^p)^tpow * li_{li_index}(T). An empty
// zeta_index stands for the scalar 1, an empty li_index for the constant 1.
struct Generator {
    Index zeta_index;
    int tpow = 0;
    Index li_index;

    /// Filtration level a = wt(zeta_index) + wt(li_index).
    int level() const { return zeta_index.weight() + li_index.weight(); }
    /// Sub-level b = wt(li_index).
    int sublevel() const { return li_index.weight(); }
    bool is_pure() const { return zeta_index.empty() && tpow == 0; }

    friend auto operator<=>(const Generator&, const Generator&) = default;
    friend bool operator==(const Generator&, const Generator&) = default;
};

struct CorrectionTerm {
    BigRational coef;
    Generator gen;
};

// Finite Q-combination of generators, canonical (sorted, merged, zero-free).
class CorrectionExpression {
public:
    using Terms = std::map<Generator, BigRational>;

    CorrectionExpression() = default;

    void add(const Generator& g, const BigRational& coef);
    void add_li(const Index& li, const BigRational& coef) { add(Generator{{}, 0, li}, coef); }
    CorrectionExpression& operator+=(const CorrectionExpression& other);
    CorrectionExpression scaled(const BigRational& c) const;

    const Terms& terms() const noexcept { return terms_; }
    std::vector<CorrectionTerm> term_list() const;
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Terms with no zeta factor and no T^p power, as a formal sum of li-indices.
    FormalSum pure_part() const;
    CorrectionExpression impure_part() const;

    /// Every term has the same level a (vacuously true when empty).
    bool is_homogeneous() const;

    friend bool operator==(const CorrectionExpression&, const CorrectionExpression&) = default;

    /// "2*zeta()*Tp^0*li(1,1) - 1*zeta(2)*Tp^1*li()"; "0" when empty.
    std::string to_string() const;

private:
    Terms terms_;
};

/// Text for a single generator with its signed coefficient, e.g. "-1*zeta(2)*Tp^1*li()".
std::string term_to_string(const BigRational& coef, const Generator& g);

}  // namespace fmp

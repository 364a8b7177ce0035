#pragma once

#include <cstdint>
#include <string>

#include "fmp/correction.hpp"
#include "fmp/index.hpp"
#include "fmp/mod_poly.hpp"
#include "fmp/prime_field.hpp"

namespace fmp {

enum class Status { pass, fail, skip };

const char* to_string(Status s);

struct CheckOutcome {
    Status status = Status::pass;
    std::string detail;

    static CheckOutcome pass(std::string detail = {}) { return {Status::pass, std::move(detail)}; }
    static CheckOutcome fail(std::string detail) { return {Status::fail, std::move(detail)}; }
    static CheckOutcome skip(std::string reason) { return {Status::skip, std::move(reason)}; }
    bool passed() const { return status == Status::pass; }
};

/// Exhaustive check of
///   1/(X^a Y^b) = sum_{t<b} C(a-1+t,t)/((X+Y)^{a+t} Y^{b-t}) + sum_{t<a} C(b-1+t,t)/((X+Y)^{b+t} X^{a-t})
/// over all X, Y in F_p^x with X + Y != 0. Fails with the first offending pair.
CheckOutcome pfd_check(int alpha, int beta, const PrimeField& field);

/// Explicit correction expression E with sum E = li(lambda, mu, nu; T), obtained by
/// applying the partial-fraction recursion until lambda or mu is empty. Variant
/// zeta atoms are expanded into ordinary zeta_A atoms.
CorrectionExpression expand_triple(const Index& lambda, const Index& mu, const Index& nu);

/// expand_triple(k, k', ()): the explicit form of li_k * li_k'. Its pure part is k sh k'.
CorrectionExpression shuffle_correction(const Index& k, const Index& kp);

/// Product of two correction expressions: zeta factors multiply by stuffle,
/// T^p powers add, li factors multiply through shuffle_correction.
CorrectionExpression multiply(const CorrectionExpression& a, const CorrectionExpression& b);

/// sum of coef * zeta_A(zeta_index) * T^{p tpow} * li_{li_index}(T) at p.
/// Throws ExceptionalPrime when p divides a coefficient denominator.
ModPoly eval_expression(const CorrectionExpression& e, const PrimeField& field);

/// Evaluates the sum of zeta_A over a formal sum of indices.
Residue eval_zeta_sum(const FormalSum& s, const PrimeField& field);

// Per-prime verifiers. Each compares two independently computed exact values and
// reports the first difference on failure.

/// li(lambda, mu, nu) against one step of the recursion, with variant zetas
/// evaluated directly (not through variant_expansion). lambda and mu must be nonempty.
CheckOutcome verify_eq7(const Index& lambda, const Index& mu, const Index& nu, const PrimeField& field);
/// li_k * li_k' against eval_expression(shuffle_correction(k, k')).
CheckOutcome verify_main(const Index& k, const Index& kp, const PrimeField& field);
/// eval_zeta_variant(i, k) against the zeta_A sum over variant_expansion(i, k).
CheckOutcome verify_prop24(int i, const Index& k, const PrimeField& field);
/// zeta_A(k) zeta_A(k') against the zeta_A sum over k * k'.
CheckOutcome verify_stuffle(const Index& k, const Index& kp, const PrimeField& field);
/// Variant with i = dep(k) against (-1)^wt(k) zeta_A(k).
CheckOutcome verify_reversal(const Index& k, const PrimeField& field);
/// li_k(1) = 0; skipped when p <= wt(k) + dep(k).
CheckOutcome verify_li_at_one(const Index& k, const PrimeField& field);
/// f_map and g_map mutually inverse on X_r and on the union of Phi_{r,s} x Y_s,
/// plus the cardinality count. The detail always carries the cardinality line.
CheckOutcome verify_bijection(int r, const PrimeField& field);

}  // namespace fmp

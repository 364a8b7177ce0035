#include "fmp/identities.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "fmp/error.hpp"
#include "fmp/evaluator.hpp"
#include "fmp/products.hpp"
#include "fmp/surjection.hpp"

namespace fmp {

namespace {

BigRational binom(int n, int k) { return BigRational(binomial(n, k)); }

BigRational sign_of_weight(const Index& k) { return k.weight() % 2 == 0 ? 1 : -1; }

// (mu_1, ..., mu_{b-1}, lambda_a + mu_b) followed by nu
Index merged_tail(const Index& keep, int merged, const Index& nu) {
    return concat(concat(keep, Index{merged}), nu);
}

class TripleExpander {
public:
    const CorrectionExpression& run(const Index& lambda, const Index& mu, const Index& nu) {
        const auto key = std::make_tuple(lambda, mu, nu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        CorrectionExpression out = expand(lambda, mu, nu);
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    CorrectionExpression expand(const Index& lambda, const Index& mu, const Index& nu) {
        CorrectionExpression out;
        if (lambda.empty()) {
            out.add_li(concat(mu, nu), 1);
            return out;
        }
        if (mu.empty()) {
            out.add_li(concat(lambda, nu), 1);
            return out;
        }
        const int a = lambda.depth(), b = mu.depth();
        const int la = lambda.back(), mb = mu.back();

        for (int tau = 0; tau < mb; ++tau) {
            const auto& sub = run(lambda.drop_back(), mu.with_back(mb - tau), concat(Index{la + tau}, nu));
            out += sub.scaled(binom(la - 1 + tau, tau));
        }
        for (int tau = 0; tau < la; ++tau) {
            const auto& sub = run(lambda.with_back(la - tau), mu.drop_back(), concat(Index{mb + tau}, nu));
            out += sub.scaled(binom(mb - 1 + tau, tau));
        }

        // p | L_a + M_b
        const Index joined = star(lambda, mu);
        const BigRational sign = sign_of_weight(mu);
        for (int i = 1; i <= a + b - 1; ++i) add_variant(out, i, joined, i, nu, sign);

        // p | L_a, and symmetrically p | M_b
        if (a >= 2) {
            const Index li = merged_tail(mu.drop_back(), la + mb, nu);
            const BigRational c = -binom(la + mb - 1, la);
            for (int j = 1; j <= a - 1; ++j) add_variant(out, j, lambda.drop_back(), j, li, c);
        }
        if (b >= 2) {
            const Index li = merged_tail(lambda.drop_back(), la + mb, nu);
            const BigRational c = -binom(la + mb - 1, mb);
            for (int j = 1; j <= b - 1; ++j) add_variant(out, j, mu.drop_back(), j, li, c);
        }
        return out;
    }

    static void add_variant(CorrectionExpression& out, int i, const Index& k, int tpow, const Index& li,
                            const BigRational& coef) {
        const FormalSum expansion = variant_expansion(i, k);
        for (const auto& [idx, c] : expansion.terms()) out.add(Generator{idx, tpow, li}, coef * c);
    }

    std::map<std::tuple<Index, Index, Index>, CorrectionExpression> memo_;
};

std::string poly_diff(const ModPoly& lhs, const ModPoly& rhs) {
    const auto n = first_difference(lhs, rhs);
    if (!n) return {};
    return "first difference at T^" + std::to_string(*n) + ": lhs=" + std::to_string(lhs.coeff(*n)) +
           " rhs=" + std::to_string(rhs.coeff(*n));
}

CheckOutcome compare(const ModPoly& lhs, const ModPoly& rhs) {
    if (lhs == rhs) return CheckOutcome::pass();
    return CheckOutcome::fail(poly_diff(lhs, rhs));
}

CheckOutcome compare(Residue lhs, Residue rhs) {
    if (lhs == rhs) return CheckOutcome::pass();
    return CheckOutcome::fail("lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs));
}

}  // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "?";
}

CheckOutcome pfd_check(int alpha, int beta, const PrimeField& field) {
    if (alpha < 1 || beta < 1) throw DomainError("pfd_check needs alpha, beta >= 1");
    const std::uint32_t p = field.modulus();
    std::vector<Residue> left(static_cast<std::size_t>(beta)), right(static_cast<std::size_t>(alpha));
    for (int t = 0; t < beta; ++t) left[t] = BigRational(binomial(alpha - 1 + t, t)).mod_p(field);
    for (int t = 0; t < alpha; ++t) right[t] = BigRational(binomial(beta - 1 + t, t)).mod_p(field);
    for (std::uint32_t x = 1; x < p; ++x) {
        const Residue ix = mod_inverse(x, field);
        for (std::uint32_t y = 1; y < p; ++y) {
            const Residue sum = field.add(x, y);
            if (sum == 0) continue;
            const Residue iy = mod_inverse(y, field);
            const Residue is = mod_inverse(sum, field);
            const Residue lhs = field.mul(field.pow(ix, alpha), field.pow(iy, beta));
            Residue rhs = 0;
            for (int t = 0; t < beta; ++t) {
                rhs = field.add(rhs, field.mul(left[t], field.mul(field.pow(is, alpha + t), field.pow(iy, beta - t))));
            }
            for (int t = 0; t < alpha; ++t) {
                rhs = field.add(rhs, field.mul(right[t], field.mul(field.pow(is, beta + t), field.pow(ix, alpha - t))));
            }
            if (lhs != rhs) {
                return CheckOutcome::fail("X=" + std::to_string(x) + " Y=" + std::to_string(y) +
                                          ": lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs));
            }
        }
    }
    return CheckOutcome::pass();
}

CorrectionExpression expand_triple(const Index& lambda, const Index& mu, const Index& nu) {
    TripleExpander expander;
    return expander.run(lambda, mu, nu);
}

CorrectionExpression shuffle_correction(const Index& k, const Index& kp) { return expand_triple(k, kp, Index{}); }

CorrectionExpression multiply(const CorrectionExpression& a, const CorrectionExpression& b) {
    CorrectionExpression out;
    TripleExpander expander;
    for (const auto& [ga, ca] : a.terms()) {
        for (const auto& [gb, cb] : b.terms()) {
            const FormalSum zetas = stuffle(ga.zeta_index, gb.zeta_index);
            const CorrectionExpression& lis = expander.run(ga.li_index, gb.li_index, Index{});
            for (const auto& [gl, cl] : lis.terms()) {
                const FormalSum combined = stuffle(zetas, FormalSum(gl.zeta_index));
                for (const auto& [z, cz] : combined.terms()) {
                    out.add(Generator{z, ga.tpow + gb.tpow + gl.tpow, gl.li_index}, ca * cb * cl * cz);
                }
            }
        }
    }
    return out;
}

Residue eval_zeta_sum(const FormalSum& s, const PrimeField& field) {
    Residue total = 0;
    for (const auto& [k, c] : s.terms()) total = field.add(total, field.mul(c.mod_p(field), eval_zeta(k, field)));
    return total;
}

ModPoly eval_expression(const CorrectionExpression& e, const PrimeField& field) {
    std::map<Index, ModPoly> li_cache;
    std::map<Index, Residue> zeta_cache;
    ModPoly out(field);
    for (const auto& [g, c] : e.terms()) {
        const Residue coef = c.mod_p(field);
        auto z = zeta_cache.find(g.zeta_index);
        if (z == zeta_cache.end()) z = zeta_cache.emplace(g.zeta_index, eval_zeta(g.zeta_index, field)).first;
        auto li = li_cache.find(g.li_index);
        if (li == li_cache.end()) li = li_cache.emplace(g.li_index, eval_fmp(g.li_index, field)).first;
        out.add_scaled_shifted(li->second, field.mul(coef, z->second),
                               static_cast<std::size_t>(field.modulus()) * static_cast<std::size_t>(g.tpow));
    }
    return out;
}

CheckOutcome verify_eq7(const Index& lambda, const Index& mu, const Index& nu, const PrimeField& field) {
    if (lambda.empty() || mu.empty()) throw DomainError("verify_eq7 needs nonempty lambda and mu");
    const int a = lambda.depth(), b = mu.depth();
    const int la = lambda.back(), mb = mu.back();
    const std::size_t p = field.modulus();
    auto coef = [&](int n, int k) { return BigRational(binomial(n, k)).mod_p(field); };

    const ModPoly lhs = eval_fmp_triple(lambda, mu, nu, field);
    ModPoly rhs(field);
    for (int tau = 0; tau < mb; ++tau) {
        rhs.add_scaled_shifted(eval_fmp_triple(lambda.drop_back(), mu.with_back(mb - tau), concat(Index{la + tau}, nu), field),
                               coef(la - 1 + tau, tau), 0);
    }
    for (int tau = 0; tau < la; ++tau) {
        rhs.add_scaled_shifted(eval_fmp_triple(lambda.with_back(la - tau), mu.drop_back(), concat(Index{mb + tau}, nu), field),
                               coef(mb - 1 + tau, tau), 0);
    }
    const ModPoly li_nu = eval_fmp(nu, field);
    const Index joined = star(lambda, mu);
    const Residue sign = sign_residue(field, static_cast<std::uint64_t>(mu.weight()));
    for (int i = 1; i <= a + b - 1; ++i) {
        rhs.add_scaled_shifted(li_nu, field.mul(sign, eval_zeta_variant(i, joined, field)), p * i);
    }
    if (a >= 2) {
        const ModPoly li = eval_fmp(merged_tail(mu.drop_back(), la + mb, nu), field);
        const Residue c = field.neg(coef(la + mb - 1, la));
        for (int j = 1; j <= a - 1; ++j) {
            rhs.add_scaled_shifted(li, field.mul(c, eval_zeta_variant(j, lambda.drop_back(), field)), p * j);
        }
    }
    if (b >= 2) {
        const ModPoly li = eval_fmp(merged_tail(lambda.drop_back(), la + mb, nu), field);
        const Residue c = field.neg(coef(la + mb - 1, mb));
        for (int j = 1; j <= b - 1; ++j) {
            rhs.add_scaled_shifted(li, field.mul(c, eval_zeta_variant(j, mu.drop_back(), field)), p * j);
        }
    }
    return compare(lhs, rhs);
}

CheckOutcome verify_main(const Index& k, const Index& kp, const PrimeField& field) {
    const ModPoly lhs = poly_mul(eval_fmp(k, field), eval_fmp(kp, field));
    try {
        return compare(lhs, eval_expression(shuffle_correction(k, kp), field));
    } catch (const ExceptionalPrime& e) {
        return CheckOutcome::skip(e.what());
    }
}

CheckOutcome verify_prop24(int i, const Index& k, const PrimeField& field) {
    return compare(eval_zeta_variant(i, k, field), eval_zeta_sum(variant_expansion(i, k), field));
}

CheckOutcome verify_stuffle(const Index& k, const Index& kp, const PrimeField& field) {
    return compare(field.mul(eval_zeta(k, field), eval_zeta(kp, field)), eval_zeta_sum(stuffle(k, kp), field));
}

CheckOutcome verify_reversal(const Index& k, const PrimeField& field) {
    if (k.empty()) throw DomainError("verify_reversal needs a nonempty index");
    const Residue lhs = eval_zeta_variant(k.depth(), k, field);
    const Residue rhs = field.mul(sign_residue(field, static_cast<std::uint64_t>(k.weight())), eval_zeta(k, field));
    return compare(lhs, rhs);
}

CheckOutcome verify_li_at_one(const Index& k, const PrimeField& field) {
    if (k.empty()) throw DomainError("verify_li_at_one needs a nonempty index");
    if (field.modulus() <= static_cast<std::uint32_t>(k.weight() + k.depth())) {
        return CheckOutcome::skip("p <= wt(k)+dep(k)");
    }
    const Residue v = poly_eval(eval_fmp(k, field), 1);
    if (v == 0) return CheckOutcome::pass();
    return CheckOutcome::fail("li_k(1)=" + std::to_string(v));
}

CheckOutcome verify_bijection(int r, const PrimeField& field) {
    const std::uint32_t p = field.modulus();
    const auto& phis = enumerate_phi(r);
    double volume = 1;
    for (int i = 0; i < r; ++i) volume *= static_cast<double>(p - 1);
    if (volume > 5e7) throw DomainError("bijection check limited to (p-1)^r <= 5e7");

    // X_r -> Phi x Y -> X_r
    std::uint64_t x_count = 0;
    std::vector<std::uint32_t> l(static_cast<std::size_t>(r), 1);
    if (p > 2) {
        while (true) {
            std::uint64_t partial = 0;
            bool member = true;
            for (auto li : l) {
                partial += li;
                if (partial % p == 0) { member = false; break; }
            }
            if (member) {
                ++x_count;
                const auto [phi, a] = f_map(l, p);
                if (g_map(phi, a) != l) return CheckOutcome::fail("g(f(x)) != x at x=" + Index(std::vector<int>(l.begin(), l.end())).to_string());
            }
            int pos = r - 1;
            while (pos >= 0 && l[pos] == p - 1) l[pos--] = 1;
            if (pos < 0) break;
            ++l[pos];
        }
    }

    // Phi x Y -> X_r -> Phi x Y
    std::vector<std::uint64_t> per_s(static_cast<std::size_t>(r) + 1, 0);
    for (const auto& phi : phis) {
        const int s = phi.codomain();
        ++per_s[s];
        if (static_cast<std::uint32_t>(s) > p - 1) continue;
        std::vector<std::uint32_t> comb(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) comb[i] = static_cast<std::uint32_t>(i + 1);
        while (true) {
            const ResidueTuple a(p, comb);
            const auto l2 = g_map(phi, a);
            const auto [phi2, a2] = f_map(l2, p);
            if (!(phi2 == phi) || !(a2 == a)) return CheckOutcome::fail("f(g(phi,A)) != (phi,A)");
            int pos = s - 1;
            while (pos >= 0 && comb[pos] == p - 1 - static_cast<std::uint32_t>(s - 1 - pos)) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (int i = pos + 1; i < s; ++i) comb[i] = comb[i - 1] + 1;
        }
    }

    std::uint64_t expected = 0;
    std::string names, values;
    for (int s = 1; s <= r; ++s) {
        const auto c = static_cast<std::uint64_t>(binomial(static_cast<int>(p) - 1, s));
        expected += per_s[s] * c;
        if (s > 1) { names += " + "; values += " + "; }
        names += "|Φ_{" + std::to_string(r) + "," + std::to_string(s) + "}|*C(" + std::to_string(p - 1) + "," +
                 std::to_string(s) + ")";
        values += std::to_string(per_s[s]) + "*" + std::to_string(c);
    }
    std::string line = "|X_" + std::to_string(r) + "| = " + std::to_string(x_count) + " = " + names + " = " + values;
    if (x_count != expected) return CheckOutcome::fail(line + " = " + std::to_string(expected));
    return CheckOutcome::pass(line);
}

}  // namespace fmp

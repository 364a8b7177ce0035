#include <doctest.h>

#include <random>

#include "fmp/big_rational.hpp"
#include "fmp/error.hpp"
#include "fmp/mod_poly.hpp"
#include "fmp/prime_field.hpp"

using namespace fmp;

namespace {

ModPoly random_poly(const PrimeField& f, std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::uint32_t> coef(0, f.modulus() - 1);
    std::vector<Residue> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coef(rng);
    return ModPoly(f, std::move(c));
}

}  // namespace

TEST_CASE("prime field construction") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(2147483647u));
    CHECK_THROWS_AS(PrimeField(1), DomainError);
    CHECK_THROWS_AS(PrimeField(91), DomainError);
    CHECK(is_prime(499));
    CHECK_FALSE(is_prime(497));
}

TEST_CASE("mod_inverse examples") {
    CHECK(mod_inverse(1, PrimeField(7)) == 1);
    CHECK(mod_inverse(2, PrimeField(5)) == 3);
    CHECK(mod_inverse(4, PrimeField(7)) == 2);
    CHECK_THROWS_WITH_AS(mod_inverse(0, PrimeField(7)), "non-invertible residue", ArithmeticError);
    CHECK_THROWS_AS(mod_inverse(14, PrimeField(7)), ArithmeticError);
}

TEST_CASE("mod_inverse is an involution and really inverts") {
    for (std::uint32_t p : {2u, 3u, 5u, 101u, 499u, 65521u}) {
        const PrimeField f(p);
        for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 600); ++a) {
            const Residue b = mod_inverse(a, f);
            REQUIRE(f.mul(a, b) == 1);
            REQUIRE(mod_inverse(b, f) == a);
        }
    }
    const PrimeField big(2147483647u);
    CHECK(big.mul(123456789, mod_inverse(123456789, big)) == 1);
}

TEST_CASE("inverse power table") {
    const PrimeField f(13);
    const InversePowers inv(f, 4);
    for (Residue n = 1; n < 13; ++n) {
        for (int k = 0; k <= 4; ++k) CHECK(f.mul(inv(n, k), f.pow(n, k)) == 1);
    }
    CHECK(inv(0, 3) == 0);
}

TEST_CASE("big rational canonical form") {
    const BigRational half(BigInt(2), BigInt(-4));
    CHECK(half.numerator() == -1);
    CHECK(half.denominator() == 2);
    CHECK(half.to_string() == "-1/2");
    CHECK(BigRational(BigInt(0), BigInt(7)).denominator() == 1);
    CHECK((half + half) == BigRational(-1));
    CHECK(BigRational(6).to_string() == "6");
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), ArithmeticError);

    const PrimeField f(7);
    CHECK(BigRational(BigInt(1), BigInt(2)).mod_p(f) == 4);
    CHECK(BigRational(-1).mod_p(f) == 6);
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(14)).mod_p(f), ExceptionalPrime);
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("poly_mul examples") {
    const PrimeField f3(3);
    const ModPoly g(f3, {0, 1, 2});
    CHECK(poly_mul(ModPoly(f3), g).is_zero());
    CHECK(poly_mul(ModPoly::constant(f3, 1), g) == g);
    // (T + 2T^2)^2 = T^2 + 4T^3 + 4T^4, reduced mod 3
    CHECK(poly_mul(g, g) == ModPoly(f3, {0, 0, 1, 1, 1}));
    CHECK(poly_mul(g, g).to_string() == "T^2 + T^3 + T^4");
    CHECK_THROWS_AS(poly_mul(g, ModPoly::constant(PrimeField(5), 1)), ArithmeticError);
}

TEST_CASE("poly_eval examples") {
    const PrimeField f3(3);
    const ModPoly g(f3, {0, 1, 2});
    CHECK(poly_eval(ModPoly(f3), 2) == 0);
    CHECK(poly_eval(g, 1) == 0);
    CHECK(poly_eval(g, 2) == 1);
}

TEST_CASE("poly representation") {
    const PrimeField f(5);
    const ModPoly h(f, {0, 3, 0, 0});
    CHECK(h.degree() == 1);
    CHECK(h.order() == 1);
    CHECK(h.to_string() == "3*T");
    CHECK(ModPoly(f, {5, 10}).is_zero());
    CHECK(ModPoly(f).to_string() == "0");
    CHECK(ModPoly(f, {2, 1, 1}).to_string() == "2 + T + T^2");
    CHECK(h.shifted(3) == ModPoly::monomial(f, 3, 4));
}

TEST_CASE("poly_mul ring properties on random inputs") {
    std::mt19937 rng(20240601);
    for (std::uint32_t p : {2u, 7u, 101u, 2147483647u}) {
        const PrimeField f(p);
        std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const ModPoly a = random_poly(f, rng, 12), b = random_poly(f, rng, 12), c = random_poly(f, rng, 12);
            REQUIRE(poly_mul(a, b) == poly_mul(b, a));
            REQUIRE(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
            const Residue t = coef(rng);
            REQUIRE(poly_eval(poly_mul(a, b), t) == f.mul(poly_eval(a, t), poly_eval(b, t)));
            if (!a.is_zero() && !b.is_zero()) REQUIRE(poly_mul(a, b).degree() == a.degree() + b.degree());
        }
    }
}
